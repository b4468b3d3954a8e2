#ifndef BELLSIM_DISCRIMINATION_HPP
#define BELLSIM_DISCRIMINATION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bellsim/interferometer.hpp"

namespace bellsim {

inline const std::string kLabelAlpha = "alpha";
inline const std::string kLabelBetaPlus = "beta+";
inline const std::string kLabelBetaMinus = "beta-";

// Outcome of reading a detection pattern.
//   Unique       -> exactly one input class fits
//   Ambiguous    -> several fit (labels carried, sorted)
//   Inconclusive -> the pattern occurs but pins down nothing usable
//   Impossible   -> the pattern cannot occur at all
struct Verdict {
  enum class Kind { Unique, Ambiguous, Inconclusive, Impossible };
  Kind kind = Kind::Impossible;
  std::vector<std::string> labels;  // sorted; size 1 for Unique, >=2 for Ambiguous

  static Verdict unique(std::string label) { return {Kind::Unique, {std::move(label)}}; }
  static Verdict ambiguous(std::vector<std::string> ls) {
    std::sort(ls.begin(), ls.end());
    return {Kind::Ambiguous, std::move(ls)};
  }
  static Verdict inconclusive() { return {Kind::Inconclusive, {}}; }
  static Verdict impossible() { return {Kind::Impossible, {}}; }

  bool operator==(const Verdict&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::Unique:
        return labels.front();
      case Kind::Ambiguous: {
        std::string s = "ambiguous{";
        for (size_t k = 0; k < labels.size(); ++k) {
          if (k) s += ",";
          s += labels[k];
        }
        return s + "}";
      }
      case Kind::Inconclusive:
        return "inconclusive";
      case Kind::Impossible:
        return "impossible";
    }
    return "?";
  }
};

/*
 * Mode subset picked out by block structure: split modes 1..2^M into
 * contiguous blocks of size 2^p and keep the even-numbered blocks (counting
 * from block 0).  Examples: (p=1, M=2) -> {1,2}; (p=2, M=3) -> {1,2,3,4};
 * (p=1, M=3) -> {1,2,5,6}.
 */
struct BlockSet {
  int p = 0;
  int m = 0;
  std::vector<int> modes;  // 1-based, ascending

  BlockSet(int p_, int m_) : p(p_), m(m_) {
    if (p_ < 0 || m_ < 1 || p_ >= m_) throw std::invalid_argument("BlockSet: need 0 <= p < m");
    if (m_ > 4) throw resource_limit_error("BlockSet: more than 16 modes");
    for (int mode = 1; mode <= (1 << m_); ++mode)
      if ((((mode - 1) >> p_) & 1) == 0) modes.push_back(mode);
  }

  bool contains(int mode) const { return (((mode - 1) >> p) & 1) == 0; }
  int count_in(const Occupation& occ) const { return occ.in_modes(modes); }
};

// Born mass of a state split by parity of the photon count in `modes`:
// (even-count mass, odd-count mass).
inline std::pair<Rational, Rational> parity_spectrum(const SparseState& state,
                                                     const std::vector<int>& modes) {
  Rational even = 0, odd = 0;
  for (const auto& [occ, amp] : state.terms) {
    (void)amp;
    Rational pr = probability_of(state, occ);
    if (occ.in_modes(modes) % 2 == 0)
      even += pr;
    else
      odd += pr;
  }
  return {even, odd};
}

inline std::pair<Rational, Rational> parity_spectrum(const SparseState& state, const BlockSet& bs) {
  return parity_spectrum(state, bs.modes);
}

enum class ParityClass { Even, Odd, Half, Mixed };

inline ParityClass parity_class_of(const std::pair<Rational, Rational>& spectrum) {
  const auto& [even, odd] = spectrum;
  if (odd == 0) return ParityClass::Even;
  if (even == 0) return ParityClass::Odd;
  if (even == odd) return ParityClass::Half;
  return ParityClass::Mixed;
}

inline std::string parity_class_str(ParityClass c) {
  switch (c) {
    case ParityClass::Even:
      return "even";
    case ParityClass::Odd:
      return "odd";
    case ParityClass::Half:
      return "50/50";
    case ParityClass::Mixed:
      return "mixed";
  }
  return "?";
}

/*
 * Table-driven discriminator: record, for each detection pattern, which
 * input classes reach it with nonzero amplitude.  Patterns reached by one
 * class read out that class; by several, the ambiguous set; by none, the
 * pattern is impossible.
 */
struct Classifier {
  std::vector<std::string> labels;
  std::map<std::string, SparseState> evolved;
  std::map<Occupation, std::set<std::string>> table;

  Verdict classify(const Occupation& occ) const {
    auto it = table.find(occ);
    if (it == table.end()) return Verdict::impossible();
    if (it->second.size() == 1) return Verdict::unique(*it->second.begin());
    return Verdict::ambiguous({it->second.begin(), it->second.end()});
  }

  // Per label: total Born mass landing on patterns unique to that label.
  std::map<std::string, Rational> success_probabilities() const {
    std::map<std::string, Rational> out;
    for (const auto& label : labels) {
      Rational mass = 0;
      const SparseState& st = evolved.at(label);
      for (const auto& [occ, amp] : st.terms) {
        (void)amp;
        if (classify(occ) == Verdict::unique(label)) mass += probability_of(st, occ);
      }
      out[label] = mass;
    }
    return out;
  }
};

inline Classifier build_classifier(const std::vector<std::pair<std::string, SparseState>>& evolved) {
  Classifier c;
  for (const auto& [label, state] : evolved) {
    c.labels.push_back(label);
    c.evolved.emplace(label, state);
    for (const auto& [occ, amp] : state.terms) {
      (void)amp;
      c.table[occ].insert(label);
    }
  }
  return c;
}

/*
 * Closed-form readout for the depth-N cascade arm, no table needed.
 * For a full-count pattern (2^(N+1) photons on 2^(N+1) modes):
 *   - odd photon count in odd modes      -> "alpha"
 *   - imbalance D = n_odd - n_even:
 *       |D| = 2^(N+1)                    -> ambiguous{beta+, beta-}
 *       otherwise level j = N when D = 0, else (index of lowest set bit
 *       of |D|) - 1; the photon-count parity over BlockSet(j, N+1) is even
 *       for "beta+" and odd for "beta-".
 * Anything short of full count cannot arise in the lossless arm.
 */
inline Verdict parity_classify(int depth, const Occupation& occ) {
  if (depth < 0 || depth > kMaxCascadeDepth)
    throw std::invalid_argument("parity_classify: depth out of range");
  const int modes = 1 << (depth + 1);
  if (occ.size() != modes) throw std::invalid_argument("parity_classify: occupation length");
  if (occ.total() != modes) return Verdict::impossible();
  if (occ.in_odd_modes() % 2 != 0) return Verdict::unique(kLabelAlpha);
  const int d = occ.imbalance();
  const int ad = d < 0 ? -d : d;
  if (ad == modes) return Verdict::ambiguous({kLabelBetaPlus, kLabelBetaMinus});
  int j;
  if (d == 0)
    j = depth;
  else
    j = std::countr_zero(static_cast<unsigned>(ad)) - 1;
  if (j < 0 || j > depth) return Verdict::impossible();
  BlockSet bs(j, depth + 1);
  if (bs.count_in(occ) % 2 == 0) return Verdict::unique(kLabelBetaPlus);
  return Verdict::unique(kLabelBetaMinus);
}

}  // namespace bellsim

#endif
