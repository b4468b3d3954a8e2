#ifndef BELLSIM_IMPERFECTIONS_HPP
#define BELLSIM_IMPERFECTIONS_HPP

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bellsim/schemes.hpp"

namespace bellsim {

// ---------------------------------------------------------------------------
// small exact polynomial types

// Univariate polynomial over the rationals; coeffs[k] multiplies x^k.
struct RatPoly {
  std::vector<Rational> coeffs;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }
  static RatPoly constant(const Rational& c) { return RatPoly({c}); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(k)] : Rational(0);
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const Rational& s) {
    RatPoly out = a;
    for (auto& c : out.coeffs) c *= s;
    out.trim();
    return out;
  }
  RatPoly& operator+=(const RatPoly& b) { return *this = *this + b; }

  Rational eval(const Rational& x) const {
    Rational v = 0;
    for (size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
  }
  bool operator==(const RatPoly&) const = default;
};

// Polynomial in the two efficiencies; key (i, j) holds the coefficient of
// (source efficiency)^i (detector efficiency)^j.
struct BiPoly {
  std::map<std::pair<int, int>, Rational> terms;

  void add(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms[key] = c;
      return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [k, c] : b.terms) out.add(k.first, k.second, c);
    return out;
  }
  BiPoly& operator+=(const BiPoly& b) {
    for (const auto& [k, c] : b.terms) add(k.first, k.second, c);
    return *this;
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const BiPoly&) const = default;

  Rational eval(const Rational& s, const Rational& d) const {
    Rational v = 0;
    for (const auto& [k, c] : terms)
      v += c * pow_rational(s, k.first) * pow_rational(d, k.second);
    return v;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
      if (!first) out += " + ";
      first = false;
      out += rational_str(c);
      if (k.first) out += "*s^" + std::to_string(k.first);
      if (k.second) out += "*d^" + std::to_string(k.second);
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// imperfection parameters and building blocks

struct ImperfectionParams {
  Rational source_efficiency;    // probability per ancilla pair emission
  Rational detector_efficiency;  // probability per photon detection

  ImperfectionParams(Rational s, Rational d)
      : source_efficiency(std::move(s)), detector_efficiency(std::move(d)) {
    if (source_efficiency < 0 || source_efficiency > 1 || detector_efficiency < 0 ||
        detector_efficiency > 1)
      throw std::invalid_argument("ImperfectionParams: efficiencies must lie in [0,1]");
  }
};

/*
 * Imperfect pair source: with probability eta_s^2 the full two-photon ancilla
 * comes out; with probability (1-eta_s)^2 nothing; otherwise a lone photon in
 * one of the two modes, eta_s(1-eta_s) each.  Weights sum to one identically.
 */
struct SourceBranch {
  std::string name;
  RatPoly weight;     // polynomial in the source efficiency
  SparseState state;  // 2-mode output, monomial convention
};

inline const std::vector<SourceBranch>& source_ensemble() {
  static const std::vector<SourceBranch> v = [] {
    RatPoly x({0, 1}), one_minus_x({1, -1});
    std::vector<SourceBranch> out;
    out.push_back({"pair", x * x, ancilla_state(1)});
    out.push_back({"empty", one_minus_x * one_minus_x, SparseState::vacuum(2)});
    out.push_back({"single-1", x * one_minus_x,
                   SparseState::single_term(2, {1, 0}, Amplitude::one())});
    out.push_back({"single-2", x * one_minus_x,
                   SparseState::single_term(2, {0, 1}, Amplitude::one())});
    return out;
  }();
  return v;
}

// prod_m C(n_m, k_m): number of ways the detectors keep exactly k out of n.
inline Int thinning_factor(const Occupation& produced, const Occupation& detected) {
  if (produced.size() != detected.size()) throw std::invalid_argument("thinning_factor: lengths");
  Int f = 1;
  for (int m = 1; m <= produced.size(); ++m) {
    if (detected.mode(m) > produced.mode(m)) return 0;
    f *= binomial(produced.mode(m), detected.mode(m));
  }
  return f;
}

// Independent per-photon detection with probability eta: binomial thinning of
// an exact outcome distribution.
inline std::map<Occupation, Rational> detector_thinning(const std::map<Occupation, Rational>& produced,
                                                        const Rational& eta) {
  if (eta < 0 || eta > 1) throw std::invalid_argument("detector_thinning: eta in [0,1]");
  std::map<Occupation, Rational> out;
  for (const auto& [n, p] : produced) {
    // enumerate k <= n componentwise
    Occupation k(std::vector<int>(static_cast<size_t>(n.size()), 0));
    while (true) {
      int total_n = n.total(), total_k = k.total();
      Rational w = Rational(thinning_factor(n, k)) * pow_rational(eta, total_k) *
                   pow_rational(1 - eta, total_n - total_k);
      if (w != 0) out[k] += p * w;
      int m = 0;
      while (m < n.size() && k.counts[static_cast<size_t>(m)] == n.counts[static_cast<size_t>(m)]) {
        k.counts[static_cast<size_t>(m)] = 0;
        ++m;
      }
      if (m == n.size()) break;
      ++k.counts[static_cast<size_t>(m)];
    }
  }
  return out;
}

// Born-rule outcome distribution of a monomial state.
inline std::map<Occupation, Rational> outcome_distribution(const SparseState& state) {
  std::map<Occupation, Rational> out;
  for (const auto& [occ, amp] : state.terms) {
    (void)amp;
    out[occ] = probability_of(state, occ);
  }
  return out;
}

// ---------------------------------------------------------------------------
// detected-pattern readout for the depth-1 two-arm scheme under loss

/*
 * Loss-aware verdict from detected photon counts (depth-1 arms, 3 photons
 * per side when everything works):
 *   - 3 and 3 detected         -> the antisymmetric pair state (nothing else
 *                                 can deliver 3 to both sides)
 *   - exactly one arm detects the full 4 -> that arm ran lossless, so the
 *     parity readout applies; its ambiguous case is dropped to inconclusive
 *   - anything else            -> inconclusive
 * No pattern can fire for the wrong input class.
 */
inline Verdict classify_detected(const Occupation& arm1, const Occupation& arm2) {
  if (arm1.size() != 4 || arm2.size() != 4)
    throw std::invalid_argument("classify_detected: arm patterns have 4 modes");
  int s1 = arm1.total(), s2 = arm2.total();
  if (s1 == 3 && s2 == 3) return Verdict::unique(kPsiMinus);
  bool f1 = s1 == 4, f2 = s2 == 4;
  if (f1 == f2) return Verdict::inconclusive();
  Verdict v = parity_classify(1, f1 ? arm1 : arm2);
  Verdict lifted = lift_arm_verdict(v);
  if (lifted.kind != Verdict::Kind::Unique) return Verdict::inconclusive();
  return lifted;
}

// ---------------------------------------------------------------------------
// the exact model: success / misidentification / inconclusive as polynomials

struct ImperfectModel {
  std::map<std::string, BiPoly> success;        // keyed by pair-state label
  std::map<std::string, BiPoly> misidentified;  // unique verdict for a different label
  std::map<std::string, BiPoly> inconclusive;

  BiPoly average_success() const {
    BiPoly avg;
    for (const auto& label : bell_labels())
      for (const auto& [k, c] : success.at(label).terms) avg.add(k.first, k.second, c / 4);
    return avg;
  }
};

namespace detail {

// Detected-pattern distribution of one arm for a given 2-mode signal and one
// source branch: pattern -> list of (kept count K, lost count L, rational
// weight); the detector polynomial d^K (1-d)^L is attached later.
struct DetectedArm {
  // (pattern, lost photons) -> weight
  std::map<std::pair<Occupation, int>, Rational> entries;
};

inline const DetectedArm& detected_arm(const std::string& signal_name, const SparseState& signal,
                                       size_t branch_index) {
  static std::map<std::pair<std::string, size_t>, DetectedArm> cache;
  auto key = std::make_pair(signal_name, branch_index);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const SourceBranch& br = source_ensemble()[branch_index];
  SparseState input = tensor(signal, br.state);
  SparseState evolved = evolve(input, splitter_cascade(1));
  DetectedArm out;
  for (const auto& [n, p] : outcome_distribution(evolved)) {
    Occupation k(std::vector<int>(4, 0));
    while (true) {
      Int ways = thinning_factor(n, k);
      out.entries[{k, n.total() - k.total()}] += p * Rational(ways);
      int m = 0;
      while (m < 4 && k.counts[static_cast<size_t>(m)] == n.counts[static_cast<size_t>(m)]) {
        k.counts[static_cast<size_t>(m)] = 0;
        ++m;
      }
      if (m == 4) break;
      ++k.counts[static_cast<size_t>(m)];
    }
  }
  it = cache.emplace(std::move(key), std::move(out)).first;
  return it->second;
}

}  // namespace detail

/*
 * Builds the exact polynomials once.  The joint network is blockwise per arm
 * behind the core stage, and for any fixed pair of source branches the core
 * branches of one pair state land on arm patterns of different odd-mode
 * parity or different photon count, so probabilities factor and add; the
 * whole model reduces to weighted products of per-arm detected
 * distributions.
 */
inline const ImperfectModel& imperfect_model() {
  static const ImperfectModel model = [] {
    ImperfectModel m;
    const auto& branches = source_ensemble();
    for (const auto& bell : bell_labels()) {
      // aggregate: (class 0=success 1=misid 2=inconclusive, K, L) -> poly in s
      std::map<std::tuple<int, int, int>, RatPoly> agg;
      for (const auto& cb : core_branches(bell)) {
        RootTwoValue ns = cb.amp.norm_sq();
        if (ns.sqrt2_part != 0)
          throw non_rational_probability_error("imperfect_model: branch weight leaves Q");
        Rational rho = ns.rational_part;
        for (size_t b1 = 0; b1 < branches.size(); ++b1) {
          for (size_t b2 = 0; b2 < branches.size(); ++b2) {
            RatPoly w = branches[b1].weight * branches[b2].weight * rho;
            const auto& d1 = detail::detected_arm(cb.arm1_name, cb.arm1, b1);
            const auto& d2 = detail::detected_arm(cb.arm2_name, cb.arm2, b2);
            for (const auto& [e1, p1] : d1.entries) {
              for (const auto& [e2, p2] : d2.entries) {
                Verdict v = classify_detected(e1.first, e2.first);
                int cls;
                if (v.kind == Verdict::Kind::Unique)
                  cls = v.labels.front() == bell ? 0 : 1;
                else
                  cls = 2;
                int kept = e1.first.total() + e2.first.total();
                int lost = e1.second + e2.second;
                agg[{cls, kept, lost}] += w * (p1 * p2);
              }
            }
          }
        }
      }
      BiPoly out[3];
      for (const auto& [key, poly] : agg) {
        auto [cls, kept, lost] = key;
        for (int i = 0; i <= poly.degree(); ++i) {
          Rational ci = poly.coeff(i);
          if (ci == 0) continue;
          for (int t = 0; t <= lost; ++t) {
            Rational c = ci * Rational(binomial(lost, t));
            if (t % 2 == 1) c = -c;
            out[cls].add(i, kept + t, c);
          }
        }
      }
      m.success[bell] = out[0];
      m.misidentified[bell] = out[1];
      m.inconclusive[bell] = out[2];
    }
    return m;
  }();
  return model;
}

// Evaluated report at one parameter point.
struct ImperfectionReport {
  std::map<std::string, Rational> success;
  std::map<std::string, Rational> misidentified;
  std::map<std::string, Rational> inconclusive;
  Rational average;   // mean success over the four pair states
  Rational baseline;  // ancilla-free scheme under the same detectors
};

inline Rational simple_baseline(const Rational& eta_d) {
  return eta_d * eta_d / 2;
}

inline ImperfectionReport imperfect_bm(const ImperfectionParams& params) {
  const ImperfectModel& model = imperfect_model();
  ImperfectionReport rep;
  const Rational& s = params.source_efficiency;
  const Rational& d = params.detector_efficiency;
  Rational sum = 0;
  for (const auto& bell : bell_labels()) {
    rep.success[bell] = model.success.at(bell).eval(s, d);
    rep.misidentified[bell] = model.misidentified.at(bell).eval(s, d);
    rep.inconclusive[bell] = model.inconclusive.at(bell).eval(s, d);
    sum += rep.success[bell];
  }
  rep.average = sum / 4;
  rep.baseline = simple_baseline(d);
  return rep;
}

// Whole-model closed form of the mean success rate.
inline Rational closed_form_success(const Rational& s, const Rational& d) {
  return frac(1, 2) * pow_rational(s, 2) * pow_rational(d, 4) +
         frac(1, 4) * pow_rational(s, 4) * pow_rational(d, 6);
}

// The scheme beats the ancilla-free baseline exactly when
// (eta_s * eta_d)^2 >= sqrt(3) - 1, i.e. above u* = sqrt(sqrt(3) - 1).
inline double break_even_product() { return std::sqrt(std::sqrt(3.0) - 1.0); }

// True when misidentification is exactly zero for every pair state — checked
// symbolically on the polynomials, not pointwise.
inline bool misidentification_impossible() {
  for (const auto& bell : bell_labels())
    if (!imperfect_model().misidentified.at(bell).is_zero()) return false;
  return true;
}

// Result of the pointwise grid audit.  max_error is the largest evaluated
// misidentification probability over the grid (expected: exactly 0, because
// full-count gating rejects every lossy branch before classification).
// alpha_info_retained records a structural fact that the success formulas do
// not exploit: even when ancilla generation fails entirely (vacuum ancillae),
// the two-photon patterns reachable from |11> never overlap those reachable
// from (|20>+-|02>)/sqrt2, so that input remains identifiable in principle.
struct MisidentificationAudit {
  Rational max_error = Rational(0);
  bool conservation_ok = true;
  bool alpha_info_retained = false;
};

inline std::vector<Rational> default_audit_axis() {
  return {Rational(0), frac(1, 2), frac(9, 10), Rational(1)};
}

inline MisidentificationAudit misidentification_audit(
    const std::vector<Rational>& axis = default_audit_axis()) {
  MisidentificationAudit audit;
  for (const auto& s : axis) {
    for (const auto& d : axis) {
      ImperfectionReport rep = imperfect_bm(ImperfectionParams(s, d));
      for (const auto& bell : bell_labels()) {
        if (rep.misidentified.at(bell) > audit.max_error)
          audit.max_error = rep.misidentified.at(bell);
        Rational total =
            rep.success.at(bell) + rep.misidentified.at(bell) + rep.inconclusive.at(bell);
        if (total != 1) audit.conservation_ok = false;
      }
    }
  }
  // Vacuum-ancilla branch: evolve each arm signal with no ancilla photons and
  // check the supports stay pairwise disjoint.
  Interferometer net = splitter_cascade(1);
  std::map<std::string, SparseState> bare;
  for (const auto& arm : arm_labels())
    bare.emplace(arm, evolve(tensor(arm_signal(arm), SparseState::vacuum(2)), net));
  audit.alpha_info_retained = true;
  for (const auto& [pattern, amp] : bare.at(kLabelAlpha).terms) {
    (void)amp;
    for (const auto& arm : arm_labels()) {
      if (arm == kLabelAlpha) continue;
      if (!bare.at(arm).coeff(pattern).is_zero()) audit.alpha_info_retained = false;
    }
  }
  return audit;
}

// ---------------------------------------------------------------------------
// parameter sweeps

// "a:b:step" inclusive, or a single value; decimal literals parsed exactly.
inline Rational parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_decimal: empty");
  size_t pos = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    pos = 1;
  }
  Int num = 0, den = 1;
  bool digits = false, dot = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (dot) throw std::invalid_argument("parse_decimal: two dots in " + text);
      dot = true;
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (dot) den *= 10;
      digits = true;
    } else {
      throw std::invalid_argument("parse_decimal: bad character in " + text);
    }
  }
  if (!digits) throw std::invalid_argument("parse_decimal: no digits in " + text);
  Rational r(num, den);
  return neg ? -r : r;
}

inline std::vector<Rational> parse_range(const std::string& text) {
  size_t c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_decimal(text)};
  size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("parse_range: expected start:stop:step, got " + text);
  Rational a = parse_decimal(text.substr(0, c1));
  Rational b = parse_decimal(text.substr(c1 + 1, c2 - c1 - 1));
  Rational step = parse_decimal(text.substr(c2 + 1));
  if (a == b) return {a};
  if (step <= 0) throw std::invalid_argument("parse_range: step must be positive");
  if (b < a) throw std::invalid_argument("parse_range: stop below start");
  std::vector<Rational> out;
  for (Rational v = a; v <= b; v += step) out.push_back(v);
  return out;
}

struct SweepRow {
  Rational eta_s;
  Rational eta_d;
  std::map<std::string, Rational> success;  // per pair state
  Rational total;
  Rational baseline;
  bool above_baseline;
};

inline std::vector<SweepRow> sweep_rows(const std::vector<Rational>& source_values,
                                        const std::vector<Rational>& detector_values) {
  std::vector<SweepRow> rows;
  for (const auto& s : source_values) {
    for (const auto& d : detector_values) {
      ImperfectionReport rep = imperfect_bm(ImperfectionParams(s, d));
      rows.push_back({s, d, rep.success, rep.average, rep.baseline, rep.average >= rep.baseline});
    }
  }
  return rows;
}

}  // namespace bellsim

#endif
