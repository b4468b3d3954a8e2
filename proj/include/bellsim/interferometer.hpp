#ifndef BELLSIM_INTERFEROMETER_HPP
#define BELLSIM_INTERFEROMETER_HPP

#include <stdexcept>
#include <vector>

#include "bellsim/fock.hpp"

namespace bellsim {

inline constexpr int kMaxCascadeDepth = 3;  // 2^(3+1) = 16 modes = kMaxModes

/*
 * Passive linear network as an exact matrix over Q(i, sqrt2).
 *
 * Convention: the network maps creation operators forward,
 *   a_j^dag -> sum_k u[j][k] a_k^dag,
 * so rows index input modes and columns output modes, and composing
 * "A then B" is the ordinary product A*B in that row order.
 */
struct Interferometer {
  int modes = 0;
  std::vector<std::vector<Amplitude>> u;

  Interferometer() = default;
  explicit Interferometer(int m) : modes(m) {
    if (m < 1) throw std::invalid_argument("Interferometer: mode count");
    if (m > kMaxModes) throw resource_limit_error("Interferometer: more than 16 modes");
    u.assign(static_cast<size_t>(m), std::vector<Amplitude>(static_cast<size_t>(m), Amplitude::zero()));
  }

  const Amplitude& entry(int j, int k) const {
    if (j < 1 || j > modes || k < 1 || k > modes) throw std::out_of_range("Interferometer: entry index");
    return u[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
  }
  Amplitude& entry(int j, int k) {
    if (j < 1 || j > modes || k < 1 || k > modes) throw std::out_of_range("Interferometer: entry index");
    return u[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)];
  }

  static Interferometer identity(int m) {
    Interferometer out(m);
    for (int j = 0; j < m; ++j) out.u[static_cast<size_t>(j)][static_cast<size_t>(j)] = Amplitude::one();
    return out;
  }

  // Balanced splitter on modes i, j (order irrelevant by symmetry):
  //   a_i -> (a_i + i a_j)/sqrt2,  a_j -> (i a_i + a_j)/sqrt2.
  static Interferometer beam_splitter(int m, int i, int j) {
    if (i == j) throw std::invalid_argument("beam_splitter: need two distinct modes");
    Interferometer out = identity(m);
    out.entry(i, i) = Amplitude::inv_sqrt2();
    out.entry(j, j) = Amplitude::inv_sqrt2();
    out.entry(i, j) = Amplitude::inv_sqrt2().times_i();
    out.entry(j, i) = Amplitude::inv_sqrt2().times_i();
    return out;
  }

  // Apply this network first, then `next`.
  Interferometer then(const Interferometer& next) const {
    if (modes != next.modes) throw std::invalid_argument("then: mode counts differ");
    Interferometer out(modes);
    for (int j = 0; j < modes; ++j) {
      for (int k = 0; k < modes; ++k) {
        const Amplitude& x = u[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (x.is_zero()) continue;
        for (int l = 0; l < modes; ++l) {
          const Amplitude& y = next.u[static_cast<size_t>(k)][static_cast<size_t>(l)];
          if (y.is_zero()) continue;
          out.u[static_cast<size_t>(j)][static_cast<size_t>(l)] += x * y;
        }
      }
    }
    return out;
  }

  // Exact check of U U^dag = I.
  bool is_unitary() const {
    for (int j = 0; j < modes; ++j) {
      for (int k = 0; k < modes; ++k) {
        Amplitude s = Amplitude::zero();
        for (int l = 0; l < modes; ++l)
          s += u[static_cast<size_t>(j)][static_cast<size_t>(l)] *
               u[static_cast<size_t>(k)][static_cast<size_t>(l)].conj();
        Amplitude want = (j == k) ? Amplitude::one() : Amplitude::zero();
        if (!(s == want)) return false;
      }
    }
    return true;
  }
};

// Places `sub` on the listed global modes (1-based, distinct); identity elsewhere.
inline Interferometer embed(int total_modes, const std::vector<int>& positions, const Interferometer& sub) {
  if (static_cast<int>(positions.size()) != sub.modes)
    throw std::invalid_argument("embed: position list length");
  Interferometer out = Interferometer::identity(total_modes);
  std::vector<bool> seen(static_cast<size_t>(total_modes) + 1, false);
  for (int p : positions) {
    if (p < 1 || p > total_modes) throw std::invalid_argument("embed: position out of range");
    if (seen[static_cast<size_t>(p)]) throw std::invalid_argument("embed: duplicate position");
    seen[static_cast<size_t>(p)] = true;
  }
  for (int t = 1; t <= sub.modes; ++t) {
    for (int s = 1; s <= sub.modes; ++s)
      out.entry(positions[static_cast<size_t>(t - 1)], positions[static_cast<size_t>(s - 1)]) = sub.entry(t, s);
    // wipe the identity entry when the sub-network has no diagonal there
    int g = positions[static_cast<size_t>(t - 1)];
    if (sub.entry(t, t).is_zero()) out.entry(g, g) = Amplitude::zero();
  }
  return out;
}

/*
 * Depth-N recursive cascade on 2^(N+1) modes:
 *   S_0 = identity on 2 modes,
 *   S_N = (1/sqrt2) [ S_{N-1}   i S_{N-1} ]
 *                   [ i S_{N-1}   S_{N-1} ],
 * halves being contiguous mode ranges.  The off-diagonal blocks couple mode j
 * to mode j + 2^N only, so modes of different parity never mix (for N >= 1
 * the offset is even, and S_0 is diagonal).
 */
inline Interferometer splitter_cascade(int depth) {
  if (depth < 0) throw std::invalid_argument("splitter_cascade: negative depth");
  if (depth > kMaxCascadeDepth) throw resource_limit_error("splitter_cascade: depth above 3");
  Interferometer s = Interferometer::identity(2);
  for (int n = 1; n <= depth; ++n) {
    int half = s.modes;
    Interferometer next(2 * half);
    Amplitude r = Amplitude::inv_sqrt2();
    Amplitude ir = r.times_i();
    for (int j = 0; j < half; ++j) {
      for (int k = 0; k < half; ++k) {
        const Amplitude& e = s.u[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (e.is_zero()) continue;
        next.u[static_cast<size_t>(j)][static_cast<size_t>(k)] = e * r;
        next.u[static_cast<size_t>(j)][static_cast<size_t>(k + half)] = e * ir;
        next.u[static_cast<size_t>(j + half)][static_cast<size_t>(k)] = e * ir;
        next.u[static_cast<size_t>(j + half)][static_cast<size_t>(k + half)] = e * r;
      }
    }
    s = next;
  }
  return s;
}

// Exact evolution of a monomial-convention state: substitute
// a_j^dag -> sum_k u[j][k] a_k^dag photon by photon, merging like monomials.
inline SparseState evolve(const SparseState& state, const Interferometer& interf) {
  if (state.convention != Convention::Monomial)
    throw std::invalid_argument("evolve: state must be in monomial convention");
  if (state.mode_count != interf.modes) throw std::invalid_argument("evolve: mode counts differ");
  SparseState out(state.mode_count, Convention::Monomial);
  const int m = state.mode_count;
  for (const auto& [occ, amp] : state.terms) {
    if (occ.total() > kMaxPhotons) throw resource_limit_error("evolve: more than 16 photons");
    std::map<Occupation, Amplitude> acc;
    acc[Occupation(std::vector<int>(static_cast<size_t>(m), 0))] = amp;
    for (int j = 1; j <= m; ++j) {
      for (int rep = 0; rep < occ.mode(j); ++rep) {
        std::map<Occupation, Amplitude> next;
        for (const auto& [o, a] : acc) {
          for (int k = 1; k <= m; ++k) {
            const Amplitude& ujk = interf.entry(j, k);
            if (ujk.is_zero()) continue;
            Occupation o2 = o;
            o2.counts[static_cast<size_t>(k - 1)] += 1;
            Amplitude contrib = a * ujk;
            auto it = next.find(o2);
            if (it == next.end()) {
              next.emplace(std::move(o2), contrib);
            } else {
              it->second += contrib;
              if (it->second.is_zero()) next.erase(it);
            }
          }
        }
        acc = std::move(next);
      }
    }
    for (const auto& [o, a] : acc) out.add_term(o, a);
  }
  return out;
}

namespace detail {
// Ryser inclusion-exclusion permanent over the field, Gray-code row sums.
inline Amplitude permanent(const std::vector<std::vector<Amplitude>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Amplitude::one();
  std::vector<Amplitude> rowsum(static_cast<size_t>(n), Amplitude::zero());
  Amplitude total = Amplitude::zero();
  unsigned long long full = 1ull << n;
  unsigned long long prev_gray = 0;
  for (unsigned long long s = 1; s < full; ++s) {
    unsigned long long gray = s ^ (s >> 1);
    unsigned long long diff = gray ^ prev_gray;
    int col = 0;
    while (!((diff >> col) & 1ull)) ++col;
    bool added = (gray >> col) & 1ull;
    for (int i = 0; i < n; ++i) {
      const Amplitude& e = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (added)
        rowsum[static_cast<size_t>(i)] += e;
      else
        rowsum[static_cast<size_t>(i)] += -e;
    }
    prev_gray = gray;
    int bits = 0;
    for (unsigned long long g = gray; g; g >>= 1) bits += static_cast<int>(g & 1ull);
    Amplitude prod = Amplitude::one();
    bool zero = false;
    for (int i = 0; i < n; ++i) {
      if (rowsum[static_cast<size_t>(i)].is_zero()) {
        zero = true;
        break;
      }
      prod *= rowsum[static_cast<size_t>(i)];
    }
    if (zero) continue;
    if ((n - bits) % 2 == 0)
      total += prod;
    else
      total += -prod;
  }
  return total;
}
}  // namespace detail

/*
 * Independent oracle for a single transition amplitude, in the monomial
 * convention: the coefficient of the output monomial when the input monomial
 * (coefficient 1) is pushed through the network.  Equal to the permanent of
 * the matrix whose rows repeat input mode j n_j times and whose columns
 * repeat output mode k s_k times, divided by prod_k s_k! (the permanent runs
 * over bijections photon -> output slot, and the s_k slots of one output
 * mode are indistinguishable).
 */
inline Amplitude permanent_amplitude(const Interferometer& interf, const Occupation& input,
                                     const Occupation& output) {
  if (input.size() != interf.modes || output.size() != interf.modes)
    throw std::invalid_argument("permanent_amplitude: occupation length");
  if (input.total() != output.total()) return Amplitude::zero();
  const int n = input.total();
  if (n > kMaxPhotons) throw resource_limit_error("permanent_amplitude: more than 16 photons");
  std::vector<int> rows, cols;
  for (int j = 1; j <= interf.modes; ++j)
    for (int r = 0; r < input.mode(j); ++r) rows.push_back(j);
  for (int k = 1; k <= interf.modes; ++k)
    for (int r = 0; r < output.mode(k); ++r) cols.push_back(k);
  std::vector<std::vector<Amplitude>> a(static_cast<size_t>(n),
                                        std::vector<Amplitude>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          interf.entry(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
  Amplitude perm = detail::permanent(a);
  return perm * Amplitude::rational(Rational(1) / Rational(occupancy_factorial(output)));
}

}  // namespace bellsim

#endif
