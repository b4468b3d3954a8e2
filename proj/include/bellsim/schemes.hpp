#ifndef BELLSIM_SCHEMES_HPP
#define BELLSIM_SCHEMES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bellsim/discrimination.hpp"

namespace bellsim {

inline constexpr int kMaxAncillaLevel = 2;

inline const std::string kPsiPlus = "psi+";
inline const std::string kPsiMinus = "psi-";
inline const std::string kPhiPlus = "phi+";
inline const std::string kPhiMinus = "phi-";

inline const std::vector<std::string>& bell_labels() {
  static const std::vector<std::string> v{kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus};
  return v;
}

// ---------------------------------------------------------------------------
// input states (monomial convention throughout)

// Dual-rail pair on 4 modes: photon one in modes 1,2; photon two in modes 3,4.
inline SparseState bell_state(const std::string& label) {
  SparseState s(4, Convention::Monomial);
  Amplitude r = Amplitude::inv_sqrt2();
  if (label == kPsiPlus) {
    s.add_term({1, 0, 0, 1}, r);
    s.add_term({0, 1, 1, 0}, r);
  } else if (label == kPsiMinus) {
    s.add_term({1, 0, 0, 1}, r);
    s.add_term({0, 1, 1, 0}, -r);
  } else if (label == kPhiPlus) {
    s.add_term({1, 0, 1, 0}, r);
    s.add_term({0, 1, 0, 1}, r);
  } else if (label == kPhiMinus) {
    s.add_term({1, 0, 1, 0}, r);
    s.add_term({0, 1, 0, 1}, -r);
  } else {
    throw std::invalid_argument("bell_state: unknown label " + label);
  }
  return s;
}

// Two-mode classes the first mixing stage reduces the problem to.
inline SparseState alpha_state() {
  return SparseState::single_term(2, {1, 1}, Amplitude::one());
}

inline SparseState beta_state(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("beta_state: sign");
  SparseState s(2, Convention::Monomial);
  Amplitude h = Amplitude::rational(frac(1, 2));
  s.add_term({2, 0}, h);
  s.add_term({0, 2}, sign > 0 ? h : -h);
  return s;
}

/*
 * Level-k ancilla on 2^k modes, 2^k photons, pairs doubly occupied:
 *   level 1: coefficient 1/2      on (2,0) and (0,2)
 *   level 2: coefficient 1/(2&#183;sqrt2) on (2,0,2,0) and (0,2,0,2)
 * Unit norm each.  Levels above 2 are outside the supported range.
 */
inline SparseState ancilla_state(int level) {
  if (level < 1) throw std::invalid_argument("ancilla_state: level must be >= 1");
  if (level > kMaxAncillaLevel) throw resource_limit_error("ancilla_state: level above 2");
  int m = 1 << level;
  SparseState s(m, Convention::Monomial);
  std::vector<int> a(static_cast<size_t>(m), 0), b(static_cast<size_t>(m), 0);
  for (int k = 0; k < m; k += 2) {
    a[static_cast<size_t>(k)] = 2;
    b[static_cast<size_t>(k) + 1] = 2;
  }
  // |coeff|^2 * (2!)^(m/2) = 1/2 per branch
  Amplitude c = Amplitude::inv_sqrt2_pow(level + 1);
  s.add_term(Occupation(std::move(a)), c);
  s.add_term(Occupation(std::move(b)), c);
  return s;
}

// Levels 1..depth tensored in order; 2^(depth+1) - 2 modes.
inline SparseState ancilla_product(int depth) {
  if (depth < 0) throw std::invalid_argument("ancilla_product: negative depth");
  if (depth > kMaxAncillaLevel) throw resource_limit_error("ancilla_product: depth above 2");
  SparseState s = SparseState::vacuum(0);
  for (int l = 1; l <= depth; ++l) s = tensor(s, ancilla_state(l));
  return s;
}

// Three copies of the level-1 ancilla (the cheap replacement for the
// level-1 + level-2 product; same mode and photon count).
inline SparseState boosted_ancilla() {
  return tensor(ancilla_state(1), ancilla_state(1), ancilla_state(1));
}

inline const std::vector<std::string>& arm_labels() {
  static const std::vector<std::string> v{kLabelAlpha, kLabelBetaPlus, kLabelBetaMinus};
  return v;
}

inline SparseState arm_signal(const std::string& label) {
  if (label == kLabelAlpha) return alpha_state();
  if (label == kLabelBetaPlus) return beta_state(+1);
  if (label == kLabelBetaMinus) return beta_state(-1);
  throw std::invalid_argument("arm_signal: unknown label " + label);
}

// Signal class plus the ancilla ladder, ready for the depth-N cascade.
inline SparseState arm_input(const std::string& label, int depth) {
  return tensor(arm_signal(label), ancilla_product(depth));
}

inline SparseState boosted_arm_input(const std::string& label) {
  return tensor(arm_signal(label), boosted_ancilla());
}

// ---------------------------------------------------------------------------
// component states of the beta decomposition

/*
 * resolvable_component(j, sign): the part of the level-j remainder that the
 * next cascade stage turns into a readable signature.  Lives on 2^(j+1)
 * modes; squared norm 2^-j.
 * ambiguous_remainder(j, sign): the part that stays unreadable at level j;
 * squared norm 2^-j.
 */
inline SparseState resolvable_component(int j, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("resolvable_component: sign");
  if (j < 1 || j > kMaxAncillaLevel) throw std::invalid_argument("resolvable_component: level");
  int m = 1 << (j + 1);
  SparseState s(m, Convention::Monomial);
  // first pattern: pairs in odd modes on the first half, even modes on the
  // second half; partner pattern is the mirror image
  std::vector<int> a(static_cast<size_t>(m), 0), b(static_cast<size_t>(m), 0);
  for (int k = 0; k < m / 2; k += 2) {
    a[static_cast<size_t>(k)] = 2;              // odd modes, first half
    a[static_cast<size_t>(m / 2 + k + 1)] = 2;  // even modes, second half
    b[static_cast<size_t>(k + 1)] = 2;
    b[static_cast<size_t>(m / 2 + k)] = 2;
  }
  // squared norm 2^-j: |c|^2 * (2!)^(2^j) * 2 with c = (1/sqrt2)^(3j+1)
  Amplitude c = Amplitude::inv_sqrt2_pow(3 * j + 1);
  s.add_term(Occupation(std::move(a)), c);
  s.add_term(Occupation(std::move(b)), sign > 0 ? c : -c);
  return s;
}

inline SparseState ambiguous_remainder(int j, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("ambiguous_remainder: sign");
  if (j < 1 || j > kMaxAncillaLevel) throw std::invalid_argument("ambiguous_remainder: level");
  int m = 1 << (j + 1);
  SparseState s(m, Convention::Monomial);
  std::vector<int> a(static_cast<size_t>(m), 0), b(static_cast<size_t>(m), 0);
  for (int k = 0; k < m; k += 2) {
    a[static_cast<size_t>(k)] = 2;  // all pairs in odd modes
    b[static_cast<size_t>(k) + 1] = 2;
  }
  Amplitude c = Amplitude::inv_sqrt2_pow(3 * j + 1);
  s.add_term(Occupation(std::move(a)), c);
  s.add_term(Occupation(std::move(b)), sign > 0 ? c : -c);
  return s;
}

/*
 * Exact identity behind the arm success rate: the beta signal with the full
 * ancilla ladder splits into per-level resolvable parts plus one final
 * remainder,
 *   beta(sign) (x) anc(1) ... anc(N)
 *     = sum_{j=1..N} resolvable(j, sign) (x) anc(j+1) ... anc(N)
 *       + remainder(N, sign).
 */
inline std::vector<std::pair<std::string, SparseState>> decomposition_components(int depth,
                                                                                 int sign) {
  if (depth < 1 || depth > kMaxAncillaLevel)
    throw std::invalid_argument("decomposition_components: depth");
  std::string sgn = sign > 0 ? "+" : "-";
  std::vector<std::pair<std::string, SparseState>> out;
  for (int j = 1; j <= depth; ++j) {
    SparseState comp = resolvable_component(j, sign);
    std::string name = "resolvable(" + std::to_string(j) + "," + sgn + ")";
    for (int l = j + 1; l <= depth; ++l) {
      comp = tensor(comp, ancilla_state(l));
      name += "(x)anc(" + std::to_string(l) + ")";
    }
    out.emplace_back(std::move(name), std::move(comp));
  }
  out.emplace_back("remainder(" + std::to_string(depth) + "," + sgn + ")",
                   ambiguous_remainder(depth, sign));
  return out;
}

inline bool verify_decomposition(int depth, int sign) {
  SparseState sum(1 << (depth + 1), Convention::Monomial);
  for (const auto& [name, comp] : decomposition_components(depth, sign)) {
    (void)name;
    sum = sum + comp;
  }
  return sum == arm_input(sign > 0 ? kLabelBetaPlus : kLabelBetaMinus, depth);
}

/*
 * Five-term split of the cheap-ancilla arm input (note the level-1 ancilla
 * IS the beta+ class, so the input reads beta(s) (x) anc1 (x) beta+ (x) anc1):
 *   = resolvable(1,s) (x) [resolvable(1,+) + remainder(1,+)]
 *     + remainder(1,s) (x) resolvable(1,+)
 *     + (1/sqrt2) resolvable(2,s) + (1/sqrt2) remainder(2,s),
 * the last line being remainder(1,s) (x) remainder(1,+) re-split one level up.
 */
inline std::vector<std::pair<std::string, SparseState>> boosted_components(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("boosted_components: sign");
  std::string sgn = sign > 0 ? "+" : "-";
  Amplitude r = Amplitude::inv_sqrt2();
  std::vector<std::pair<std::string, SparseState>> out;
  out.emplace_back("resolvable(1," + sgn + ")(x)resolvable(1,+)",
                   tensor(resolvable_component(1, sign), resolvable_component(1, +1)));
  out.emplace_back("resolvable(1," + sgn + ")(x)remainder(1,+)",
                   tensor(resolvable_component(1, sign), ambiguous_remainder(1, +1)));
  out.emplace_back("remainder(1," + sgn + ")(x)resolvable(1,+)",
                   tensor(ambiguous_remainder(1, sign), resolvable_component(1, +1)));
  out.emplace_back("resolvable(2," + sgn + ")/sqrt2", resolvable_component(2, sign).scaled(r));
  out.emplace_back("remainder(2," + sgn + ")/sqrt2", ambiguous_remainder(2, sign).scaled(r));
  return out;
}

inline bool verify_boosted_decomposition(int sign) {
  SparseState sum(8, Convention::Monomial);
  for (const auto& [name, comp] : boosted_components(sign)) {
    (void)name;
    sum = sum + comp;
  }
  return sum == boosted_arm_input(sign > 0 ? kLabelBetaPlus : kLabelBetaMinus);
}

// ---------------------------------------------------------------------------
// networks

// The initial pairwise mixing of the two dual-rail photons.
inline Interferometer core_stage() {
  return Interferometer::beam_splitter(4, 1, 3).then(Interferometer::beam_splitter(4, 2, 4));
}

inline std::vector<int> arm_positions(int depth, int arm) {
  if (arm != 1 && arm != 2) throw std::invalid_argument("arm_positions: arm is 1 or 2");
  int k = (1 << (depth + 1)) - 2;  // ancilla modes per arm
  std::vector<int> pos;
  pos.push_back(arm == 1 ? 1 : 3);
  pos.push_back(arm == 1 ? 2 : 4);
  int base = arm == 1 ? 4 : 4 + k;
  for (int t = 1; t <= k; ++t) pos.push_back(base + t);
  return pos;
}

// Core mixing followed by one cascade per arm (disjoint mode sets).
inline Interferometer full_network(int depth) {
  if (depth < 0 || depth > kMaxAncillaLevel) throw std::invalid_argument("full_network: depth");
  int total = 2 * (1 << (depth + 1));
  Interferometer core = embed(total, {1, 2, 3, 4}, core_stage());
  Interferometer s = splitter_cascade(depth);
  return core.then(embed(total, arm_positions(depth, 1), s))
      .then(embed(total, arm_positions(depth, 2), s));
}

// Bell pair on the four signal modes, ancilla ladder behind each arm.
inline SparseState full_input(const std::string& bell, int depth) {
  return tensor(bell_state(bell), ancilla_product(depth), ancilla_product(depth));
}

// ---------------------------------------------------------------------------
// classifiers and success rates

inline const Classifier& arm_classifier(int depth) {
  if (depth < 0 || depth > kMaxAncillaLevel) throw std::invalid_argument("arm_classifier: depth");
  static std::map<int, Classifier> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) {
    Interferometer s = splitter_cascade(depth);
    std::vector<std::pair<std::string, SparseState>> ev;
    for (const auto& label : arm_labels()) ev.emplace_back(label, evolve(arm_input(label, depth), s));
    it = cache.emplace(depth, build_classifier(ev)).first;
  }
  return it->second;
}

inline const Classifier& boosted_arm_classifier() {
  static const Classifier c = [] {
    Interferometer s = splitter_cascade(2);
    std::vector<std::pair<std::string, SparseState>> ev;
    for (const auto& label : arm_labels()) ev.emplace_back(label, evolve(boosted_arm_input(label), s));
    return build_classifier(ev);
  }();
  return c;
}

// Table verdicts match the closed-form parity readout on every pattern the
// arm can actually produce.
inline bool classifier_equivalence(int depth) {
  const Classifier& c = arm_classifier(depth);
  for (const auto& [label, state] : c.evolved) {
    (void)label;
    for (const auto& [occ, amp] : state.terms) {
      (void)amp;
      if (!(c.classify(occ) == parity_classify(depth, occ))) return false;
    }
  }
  return true;
}

/*
 * Combined verdict for the two-arm scheme from one detected pattern:
 *   - both arm photon totals odd            -> the antisymmetric pair state
 *   - exactly one arm at full photon count  -> that arm's class verdict,
 *     lifted (alpha -> psi+, beta+/- -> phi+/-)
 *   - anything else                         -> inconclusive
 */
inline Verdict lift_arm_verdict(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Unique:
      if (v.labels.front() == kLabelAlpha) return Verdict::unique(kPsiPlus);
      if (v.labels.front() == kLabelBetaPlus) return Verdict::unique(kPhiPlus);
      if (v.labels.front() == kLabelBetaMinus) return Verdict::unique(kPhiMinus);
      return Verdict::inconclusive();
    case Verdict::Kind::Ambiguous: {
      std::vector<std::string> lifted;
      for (const auto& l : v.labels) {
        if (l == kLabelBetaPlus)
          lifted.push_back(kPhiPlus);
        else if (l == kLabelBetaMinus)
          lifted.push_back(kPhiMinus);
        else
          return Verdict::inconclusive();
      }
      return Verdict::ambiguous(std::move(lifted));
    }
    default:
      return Verdict::inconclusive();
  }
}

template <typename ArmClassify>
Verdict combine_arm_patterns(int depth, const Occupation& occ, ArmClassify&& arm_classify) {
  const int full = 1 << (depth + 1);
  std::vector<int> pos1 = arm_positions(depth, 1), pos2 = arm_positions(depth, 2);
  int s1 = occ.in_modes(pos1), s2 = occ.in_modes(pos2);
  if (s1 % 2 == 1 && s2 % 2 == 1) return Verdict::unique(kPsiMinus);
  bool f1 = s1 == full, f2 = s2 == full;
  if (f1 == f2) return Verdict::inconclusive();
  const std::vector<int>& pos = f1 ? pos1 : pos2;
  std::vector<int> local;
  local.reserve(pos.size());
  for (int m : pos) local.push_back(occ.mode(m));
  return lift_arm_verdict(arm_classify(Occupation(std::move(local))));
}

inline Verdict full_classify(int depth, const Occupation& occ) {
  return combine_arm_patterns(depth, occ,
                              [&](const Occupation& o) { return arm_classifier(depth).classify(o); });
}

inline Verdict boosted_full_classify(const Occupation& occ) {
  return combine_arm_patterns(2, occ,
                              [&](const Occupation& o) { return boosted_arm_classifier().classify(o); });
}

/*
 * Core-stage branch split: each pair state maps to two branches, one arm
 * carrying a two-photon class and the other arm's signal modes empty (or one
 * photon each for the antisymmetric state).  Exact identity against
 * evolve(bell, core_stage()).
 */
struct CoreBranch {
  Amplitude amp;
  std::string arm1_name;  // signal entering arm 1 ("alpha", "beta+", "beta-",
  SparseState arm1;       //   "vac", "one-1", "one-2")
  std::string arm2_name;
  SparseState arm2;
};

inline std::vector<CoreBranch> core_branches(const std::string& bell) {
  Amplitude ir = Amplitude::inv_sqrt2().times_i();
  Amplitude r = Amplitude::inv_sqrt2();
  SparseState vac = SparseState::vacuum(2);
  SparseState k10 = SparseState::single_term(2, {1, 0}, Amplitude::one());
  SparseState k01 = SparseState::single_term(2, {0, 1}, Amplitude::one());
  if (bell == kPsiPlus)
    return {{ir, kLabelAlpha, alpha_state(), "vac", vac}, {ir, "vac", vac, kLabelAlpha, alpha_state()}};
  if (bell == kPsiMinus)
    return {{r, "one-1", k10, "one-2", k01}, {-r, "one-2", k01, "one-1", k10}};
  if (bell == kPhiPlus)
    return {{ir, kLabelBetaPlus, beta_state(+1), "vac", vac},
            {ir, "vac", vac, kLabelBetaPlus, beta_state(+1)}};
  if (bell == kPhiMinus)
    return {{ir, kLabelBetaMinus, beta_state(-1), "vac", vac},
            {ir, "vac", vac, kLabelBetaMinus, beta_state(-1)}};
  throw std::invalid_argument("core_branches: unknown label " + bell);
}

inline bool verify_core_branches(const std::string& bell) {
  SparseState sum(4, Convention::Monomial);
  for (const auto& b : core_branches(bell)) {
    // interleave arm1 (modes 1,2) and arm2 (modes 3,4)
    SparseState t = tensor(b.arm1, b.arm2).scaled(b.amp);
    sum = sum + t;
  }
  return sum == evolve(bell_state(bell), core_stage());
}

/*
 * Success rates of the two-arm scheme without simulating the joint system:
 * the network is blockwise per arm behind the core stage, the two branches of
 * each pair state land on disjoint photon-count signatures, and patterns with
 * one arm at full count are unique exactly when the full arm's pattern is
 * unique among the three arm classes.  The antisymmetric state is the only
 * source of odd/odd totals, hence always identified.
 */
inline std::map<std::string, Rational> full_success_from_arm(
    const std::map<std::string, Rational>& arm_success) {
  return {{kPsiPlus, arm_success.at(kLabelAlpha)},
          {kPsiMinus, 1},
          {kPhiPlus, arm_success.at(kLabelBetaPlus)},
          {kPhiMinus, arm_success.at(kLabelBetaMinus)}};
}

inline std::map<std::string, Rational> full_success(int depth) {
  return full_success_from_arm(arm_classifier(depth).success_probabilities());
}

inline std::map<std::string, Rational> boosted_full_success() {
  return full_success_from_arm(boosted_arm_classifier().success_probabilities());
}

inline Rational average_success(const std::map<std::string, Rational>& per_bell) {
  Rational t = 0;
  for (const auto& label : bell_labels()) t += per_bell.at(label);
  return t / 4;
}

// 1 - 2^-(N+1): mean success of the depth-N two-arm scheme.
inline Rational ladder_success_formula(int depth) {
  return 1 - pow_rational(frac(1, 2), depth + 1);
}

// 1 - (7/8) * 2^-(N+1): mean success when every ancilla level is replaced by
// pair copies (value 25/32 at N = 1; the N = 2 member is out of range here).
inline Rational boosted_success_formula(int depth) {
  return 1 - frac(7, 8) * pow_rational(frac(1, 2), depth + 1);
}

// Joint (non-factorized) evolution of pair state plus both ancilla ladders;
// tractable through depth 1.
inline const Classifier& full_joint_classifier(int depth) {
  if (depth < 0 || depth > 1)
    throw resource_limit_error("full_joint_classifier: joint expansion above depth 1");
  static std::map<int, Classifier> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) {
    Interferometer net = full_network(depth);
    std::vector<std::pair<std::string, SparseState>> ev;
    for (const auto& label : bell_labels()) ev.emplace_back(label, evolve(full_input(label, depth), net));
    it = cache.emplace(depth, build_classifier(ev)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// parity bookkeeping used by the discrimination argument

/*
 * The cascade recursion sends block-count parities forward: if the evolved
 * state of theta after the depth-(M-1) cascade has definite photon-count
 * parity on BlockSet(p, M), then theta with the level-M ancilla appended,
 * evolved through the depth-M cascade, has the same definite parity on
 * BlockSet(p, M+1).  Mixed inputs are reported as-is (nothing to preserve).
 */
struct ParityPreservationReport {
  int p = 0;
  int m = 0;
  std::pair<Rational, Rational> before;  // (even mass, odd mass), depth M-1
  std::pair<Rational, Rational> after;   // depth M, ancilla appended
  bool applicable = false;               // before is definite
  bool holds = true;                     // vacuous when not applicable
};

inline ParityPreservationReport parity_preservation_report(int p, int m, const SparseState& theta) {
  if (m < 1 || m > kMaxAncillaLevel) throw std::invalid_argument("parity_preservation_report: m");
  if (p < 0 || p >= m) throw std::invalid_argument("parity_preservation_report: need 0 <= p < m");
  if (theta.mode_count != (1 << m))
    throw std::invalid_argument("parity_preservation_report: theta needs 2^m modes");
  ParityPreservationReport rep;
  rep.p = p;
  rep.m = m;
  rep.before = parity_spectrum(evolve(theta, splitter_cascade(m - 1)), BlockSet(p, m));
  rep.after =
      parity_spectrum(evolve(tensor(theta, ancilla_state(m)), splitter_cascade(m)), BlockSet(p, m + 1));
  ParityClass cb = parity_class_of(rep.before);
  rep.applicable = cb == ParityClass::Even || cb == ParityClass::Odd;
  if (rep.applicable) {
    Rational total_after = rep.after.first + rep.after.second;
    rep.holds = (cb == ParityClass::Even) ? rep.after.second == 0
                                          : rep.after.first == 0;
    rep.holds = rep.holds && total_after != 0;
  }
  return rep;
}

/*
 * Parity signature table for the five-term split evolved through the depth-2
 * cascade: photon-count parity over BlockSet(1,3) = {1,2,5,6} and
 * BlockSet(2,3) = {1,2,3,4}.  Two extra rows give the coherent sums of the
 * cross terms, whose interference sharpens the signature for the + sign.
 */
struct ParityTableRow {
  std::string component;
  Rational mass;              // squared norm of the component
  ParityClass n13;
  ParityClass n23;
};

inline std::vector<ParityTableRow> output_parity_table() {
  Interferometer s2 = splitter_cascade(2);
  BlockSet b13(1, 3), b23(2, 3);
  std::vector<ParityTableRow> rows;
  auto add = [&](const std::string& name, const SparseState& comp) {
    SparseState ev = evolve(comp, s2);
    Rational mass = total_probability(ev);
    auto sp13 = parity_spectrum(ev, b13);
    auto sp23 = parity_spectrum(ev, b23);
    rows.push_back({name, mass, parity_class_of(sp13), parity_class_of(sp23)});
  };
  for (int sign : {+1, -1}) {
    std::string sgn = sign > 0 ? "+" : "-";
    auto comps = boosted_components(sign);
    for (const auto& [name, comp] : comps) add(name, comp);
    // coherent sum of the two cross terms
    add("resolvable(1," + sgn + ")(x)remainder(1,+) + remainder(1," + sgn + ")(x)resolvable(1,+)",
        comps[1].second + comps[2].second);
  }
  return rows;
}

/*
 * Packaged description of one measurement setup: the labeled candidate inputs
 * (ancillae already attached), the network, and which classification route the
 * tooling should exercise.  Candidate construction is cheap even at depth 2;
 * only joint evolution of the 16-mode setup is gated elsewhere.
 */
enum class ClassifierPolicy { BruteForce, Parity, Both };

inline std::string classifier_policy_str(ClassifierPolicy p) {
  switch (p) {
    case ClassifierPolicy::BruteForce: return "brute-force";
    case ClassifierPolicy::Parity: return "parity";
    default: return "both";
  }
}

struct SchemeSpec {
  std::string name;
  int mode_count = 0;
  int photon_budget = 0;  // constant across candidates, ancillae included
  std::string ancilla_desc;
  ClassifierPolicy policy = ClassifierPolicy::BruteForce;
  Interferometer network;
  std::vector<std::pair<std::string, SparseState>> candidates;
};

inline SchemeSpec simple_bm() {
  SchemeSpec s{"simple", 4, 2, "none", ClassifierPolicy::BruteForce, core_stage(), {}};
  for (const auto& label : bell_labels()) s.candidates.emplace_back(label, bell_state(label));
  return s;
}

inline SchemeSpec arm_scheme(int depth) {
  if (depth < 1 || depth > kMaxAncillaLevel)
    throw std::invalid_argument("arm_scheme: depth out of range");
  SchemeSpec s;
  s.name = "arm-n" + std::to_string(depth);
  s.mode_count = 1 << (depth + 1);
  s.photon_budget = s.mode_count;
  s.ancilla_desc = "pair ancillae, levels 1.." + std::to_string(depth);
  s.policy = ClassifierPolicy::Both;
  s.network = splitter_cascade(depth);
  for (const auto& label : arm_labels()) s.candidates.emplace_back(label, arm_input(label, depth));
  return s;
}

inline SchemeSpec full_bm(int depth) {
  if (depth < 0 || depth > kMaxAncillaLevel)
    throw std::invalid_argument("full_bm: depth out of range");
  SchemeSpec s;
  s.name = "full-n" + std::to_string(depth);
  s.mode_count = 4 + 2 * ((2 << depth) - 2);
  s.photon_budget = 2 + 2 * ((2 << depth) - 2);
  s.ancilla_desc = depth == 0 ? "none"
                              : "per output arm: pair ancillae, levels 1.." + std::to_string(depth);
  s.policy = depth <= 1 ? ClassifierPolicy::Both : ClassifierPolicy::Parity;
  s.network = full_network(depth);
  for (const auto& label : bell_labels()) s.candidates.emplace_back(label, full_input(label, depth));
  return s;
}

inline SchemeSpec scheme_25_32() {
  SchemeSpec s{"scheme-25-32", 8,          8, "three level-1 pair ancillae",
               ClassifierPolicy::BruteForce, splitter_cascade(2),
               {}};
  for (const auto& label : arm_labels())
    s.candidates.emplace_back(label, boosted_arm_input(label));
  return s;
}

inline std::vector<std::string> scheme_names() {
  return {"simple", "arm-n1", "arm-n2", "full-n1", "full-n2", "scheme-25-32"};
}

inline SchemeSpec scheme_by_name(const std::string& name) {
  if (name == "simple") return simple_bm();
  if (name == "arm-n1") return arm_scheme(1);
  if (name == "arm-n2") return arm_scheme(2);
  if (name == "full-n1") return full_bm(1);
  if (name == "full-n2") return full_bm(2);
  if (name == "scheme-25-32") return scheme_25_32();
  throw std::invalid_argument("unknown scheme: " + name);
}

}  // namespace bellsim

#endif
