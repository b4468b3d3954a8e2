#ifndef BELLSIM_FOCK_HPP
#define BELLSIM_FOCK_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellsim/amplitude.hpp"

namespace bellsim {

// Raised when a probability would leave Q, i.e. |coeff|^2 has a nonzero
// sqrt2 part.  Cannot happen for states produced by the schemes here (their
// coefficients stay in a single coset of Q(i) vs Q(i)*sqrt2), but the check
// is made on every Born-rule evaluation.
struct non_rational_probability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a requested computation exceeds the desk-scale caps
// (mode count, photon count, cascade depth, ancilla level).
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a convention conversion needs a sqrt(n!) factor outside
// Q(i, sqrt2), e.g. sqrt6 for a triply occupied mode.
struct field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxModes = 16;
inline constexpr int kMaxPhotons = 16;

// Photon counts per mode.  Modes are addressed 1-based throughout ("mode 1"
// is the first optical port); parity vocabulary (odd/even modes) refers to
// the 1-based label.
struct Occupation {
  std::vector<int> counts;

  Occupation() = default;
  explicit Occupation(std::vector<int> c) : counts(std::move(c)) {}
  Occupation(std::initializer_list<int> c) : counts(c) {}

  int size() const { return static_cast<int>(counts.size()); }
  int mode(int one_based) const {
    if (one_based < 1 || one_based > size()) throw std::out_of_range("Occupation: mode index");
    return counts[static_cast<size_t>(one_based - 1)];
  }
  int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
  int in_odd_modes() const {
    int s = 0;
    for (size_t k = 0; k < counts.size(); k += 2) s += counts[k];
    return s;
  }
  int in_even_modes() const { return total() - in_odd_modes(); }
  // n_odd - n_even.
  int imbalance() const { return 2 * in_odd_modes() - total(); }
  int in_modes(const std::vector<int>& one_based) const {
    int s = 0;
    for (int m : one_based) s += mode(m);
    return s;
  }

  auto operator<=>(const Occupation&) const = default;

  std::string str() const {
    std::string s;
    for (size_t k = 0; k < counts.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(counts[k]);
    }
    return s;
  }
};

enum class Convention { Monomial, NormalizedFock };

/*
 * Sparse superposition over occupation patterns.
 *
 * Monomial convention: the stored coefficient c_n multiplies the raw
 * creation-operator product prod_m (a_m^dag)^(n_m) acting on vacuum.  The
 * physical probability of pattern n is |c_n|^2 * prod_m n_m!.  All internal
 * computation uses this convention; sqrt(n!) factors only ever appear at
 * probability time or in an explicit convention conversion.
 */
struct SparseState {
  int mode_count = 0;
  Convention convention = Convention::Monomial;
  std::map<Occupation, Amplitude> terms;

  SparseState() = default;
  SparseState(int modes, Convention conv) : mode_count(modes), convention(conv) {}

  static SparseState vacuum(int modes, Convention conv = Convention::Monomial) {
    SparseState s(modes, conv);
    s.terms[Occupation(std::vector<int>(static_cast<size_t>(modes), 0))] = Amplitude::one();
    return s;
  }

  static SparseState single_term(int modes, const Occupation& occ, const Amplitude& amp,
                                 Convention conv = Convention::Monomial) {
    if (occ.size() != modes) throw std::invalid_argument("SparseState: occupation length");
    SparseState s(modes, conv);
    if (!amp.is_zero()) s.terms[occ] = amp;
    return s;
  }

  // Merge in one term; exact zeros are never stored.
  void add_term(const Occupation& occ, const Amplitude& amp) {
    if (occ.size() != mode_count) throw std::invalid_argument("SparseState: occupation length");
    auto it = terms.find(occ);
    if (it == terms.end()) {
      if (!amp.is_zero()) terms[occ] = amp;
      return;
    }
    it->second += amp;
    if (it->second.is_zero()) terms.erase(it);
  }

  Amplitude coeff(const Occupation& occ) const {
    auto it = terms.find(occ);
    return it == terms.end() ? Amplitude::zero() : it->second;
  }

  size_t support_size() const { return terms.size(); }

  SparseState scaled(const Amplitude& s) const {
    SparseState out(mode_count, convention);
    if (s.is_zero()) return out;
    for (const auto& [occ, amp] : terms) out.terms[occ] = amp * s;
    return out;
  }

  friend SparseState operator+(const SparseState& x, const SparseState& y) {
    if (x.mode_count != y.mode_count || x.convention != y.convention)
      throw std::invalid_argument("SparseState: incompatible operands");
    SparseState out = x;
    for (const auto& [occ, amp] : y.terms) out.add_term(occ, amp);
    return out;
  }

  friend bool operator==(const SparseState& x, const SparseState& y) {
    return x.mode_count == y.mode_count && x.convention == y.convention && x.terms == y.terms;
  }
};

// Concatenates mode registers: y's mode 1 becomes mode x.mode_count + 1.
inline SparseState tensor(const SparseState& x, const SparseState& y) {
  if (x.convention != y.convention) throw std::invalid_argument("tensor: mixed conventions");
  SparseState out(x.mode_count + y.mode_count, x.convention);
  for (const auto& [ox, ax] : x.terms) {
    for (const auto& [oy, ay] : y.terms) {
      std::vector<int> c = ox.counts;
      c.insert(c.end(), oy.counts.begin(), oy.counts.end());
      out.add_term(Occupation(std::move(c)), ax * ay);
    }
  }
  return out;
}

inline SparseState tensor(const SparseState& x, const SparseState& y, const SparseState& z) {
  return tensor(tensor(x, y), z);
}

// prod_m n_m! as an exact integer.
inline Int occupancy_factorial(const Occupation& occ) {
  Int f = 1;
  for (int n : occ.counts) f *= factorial(n);
  return f;
}

// Born rule in monomial convention: |c_n|^2 * prod n_m!.
inline Rational probability_of(const SparseState& state, const Occupation& occ) {
  if (state.convention != Convention::Monomial)
    throw std::invalid_argument("probability_of: state must be in monomial convention");
  if (occ.size() != state.mode_count) throw std::invalid_argument("probability_of: occupation length");
  Amplitude c = state.coeff(occ);
  if (c.is_zero()) return 0;
  RootTwoValue n = c.norm_sq();
  if (n.sqrt2_part != 0)
    throw non_rational_probability_error("probability_of: |amplitude|^2 leaves Q for pattern " + occ.str());
  return n.rational_part * Rational(occupancy_factorial(occ));
}

inline Rational total_probability(const SparseState& state) {
  Rational t = 0;
  for (const auto& [occ, amp] : state.terms) {
    (void)amp;
    t += probability_of(state, occ);
  }
  return t;
}

namespace detail {
// sqrt(prod n_m!) as an exact field element, when representable: the odd part
// of the integer must be a perfect square (sqrt2 itself is in the field).
inline Amplitude sqrt_occupancy_factorial(const Occupation& occ) {
  Int f = occupancy_factorial(occ);
  int twos = 0;
  while (f % 2 == 0) {
    f /= 2;
    ++twos;
  }
  auto root = exact_sqrt(f);
  if (!root)
    throw field_error("convention conversion: sqrt(" + occupancy_factorial(occ).str() +
                      ") is not in Q(i, sqrt2) for pattern " + occ.str());
  Rational odd_root(*root);
  // sqrt(2^twos): 2^(twos/2), times sqrt2 if twos is odd.
  Rational pow2 = pow_rational(Rational(2), twos / 2);
  if (twos % 2 == 0) return Amplitude::rational(odd_root * pow2);
  return Amplitude::sqrt2() * (odd_root * pow2);
}
}  // namespace detail

// Monomial coefficient c_n maps to normalized-Fock amplitude c_n * sqrt(prod n_m!).
inline SparseState to_normalized_fock(const SparseState& state) {
  if (state.convention == Convention::NormalizedFock) return state;
  SparseState out(state.mode_count, Convention::NormalizedFock);
  for (const auto& [occ, amp] : state.terms)
    out.terms[occ] = amp * detail::sqrt_occupancy_factorial(occ);
  return out;
}

inline SparseState to_monomial(const SparseState& state) {
  if (state.convention == Convention::Monomial) return state;
  SparseState out(state.mode_count, Convention::Monomial);
  for (const auto& [occ, amp] : state.terms)
    out.terms[occ] = amp * detail::sqrt_occupancy_factorial(occ).inverse();
  return out;
}

// Equality modulo one overall unit-modulus phase in the field.
inline bool equal_up_to_phase(const SparseState& x, const SparseState& y) {
  if (x.mode_count != y.mode_count || x.convention != y.convention) return false;
  if (x.terms.size() != y.terms.size()) return false;
  if (x.terms.empty()) return true;
  const auto& [occ0, ax0] = *x.terms.begin();
  Amplitude ay0 = y.coeff(occ0);
  if (ay0.is_zero()) return false;
  Amplitude phase = ay0 / ax0;
  if (!(phase.norm_sq() == RootTwoValue{1, 0})) return false;
  for (const auto& [occ, ax] : x.terms) {
    if (!(y.coeff(occ) == ax * phase)) return false;
  }
  return true;
}

}  // namespace bellsim

#endif
