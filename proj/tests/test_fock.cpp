#include <catch2/catch_amalgamated.hpp>

#include "bellsim/fock.hpp"

using namespace bellsim;

TEST_CASE("occupation accessors") {
  Occupation occ{3, 1, 0, 2};
  REQUIRE(occ.size() == 4);
  REQUIRE(occ.total() == 6);
  REQUIRE(occ.mode(1) == 3);
  REQUIRE(occ.mode(4) == 2);
  REQUIRE_THROWS_AS(occ.mode(0), std::out_of_range);
  REQUIRE_THROWS_AS(occ.mode(5), std::out_of_range);
  // odd-numbered modes are 1 and 3 (1-based labels)
  REQUIRE(occ.in_odd_modes() == 3);
  REQUIRE(occ.in_even_modes() == 3);
  REQUIRE(occ.imbalance() == 0);
  REQUIRE(occ.in_modes({1, 2}) == 4);
  REQUIRE(occ.str() == "3,1,0,2");
  REQUIRE(Occupation{1, 1} < Occupation{2, 0});
}

TEST_CASE("factorial weight of a pattern") {
  REQUIRE(occupancy_factorial(Occupation{0, 0}) == Int(1));
  REQUIRE(occupancy_factorial(Occupation{2, 0}) == Int(2));
  REQUIRE(occupancy_factorial(Occupation{3, 1, 0, 2}) == Int(12));
}

TEST_CASE("sparse state term management") {
  SparseState s(2, Convention::Monomial);
  s.add_term(Occupation{1, 0}, Amplitude::inv_sqrt2());
  s.add_term(Occupation{0, 1}, Amplitude::i() * Amplitude::inv_sqrt2());
  REQUIRE(s.support_size() == 2);

  // merging an opposite term prunes the entry entirely
  s.add_term(Occupation{1, 0}, -Amplitude::inv_sqrt2());
  REQUIRE(s.support_size() == 1);
  REQUIRE(s.coeff(Occupation{1, 0}).is_zero());
  REQUIRE(s.coeff(Occupation{0, 1}) == Amplitude::i() * Amplitude::inv_sqrt2());

  REQUIRE_THROWS_AS(s.add_term(Occupation{1, 0, 0}, Amplitude::one()), std::invalid_argument);
  REQUIRE(SparseState::single_term(2, Occupation{1, 1}, Amplitude::zero()).support_size() == 0);

  SparseState v = SparseState::vacuum(3);
  REQUIRE(v.support_size() == 1);
  REQUIRE(v.coeff(Occupation{0, 0, 0}) == Amplitude::one());

  SparseState scaled = s.scaled(Amplitude::rational(2));
  REQUIRE(scaled.coeff(Occupation{0, 1}) == Amplitude::i() * Amplitude::sqrt2());
}

TEST_CASE("tensor concatenates mode registers") {
  SparseState x = SparseState::single_term(2, Occupation{1, 0}, Amplitude::one());
  SparseState y(2, Convention::Monomial);
  y.add_term(Occupation{2, 0}, Amplitude::inv_sqrt2());
  y.add_term(Occupation{0, 2}, Amplitude::inv_sqrt2());

  SparseState xy = tensor(x, y);
  REQUIRE(xy.mode_count == 4);
  REQUIRE(xy.support_size() == 2);
  REQUIRE(xy.coeff(Occupation{1, 0, 2, 0}) == Amplitude::inv_sqrt2());
  REQUIRE(xy.coeff(Occupation{1, 0, 0, 2}) == Amplitude::inv_sqrt2());

  SparseState xyv = tensor(x, y, SparseState::vacuum(1));
  REQUIRE(xyv.mode_count == 5);
  REQUIRE(xyv.coeff(Occupation{1, 0, 2, 0, 0}) == Amplitude::inv_sqrt2());

  SparseState fock_state = SparseState::vacuum(1, Convention::NormalizedFock);
  REQUIRE_THROWS_AS(tensor(x, fock_state), std::invalid_argument);
}

TEST_CASE("probabilities carry the factorial weight") {
  // c = 1/2 on a doubly occupied mode: p = |c|^2 * 2! = 1/2
  SparseState s(2, Convention::Monomial);
  s.add_term(Occupation{2, 0}, Amplitude::rational(frac(1, 2)));
  s.add_term(Occupation{0, 2}, Amplitude::imag_rational(frac(1, 2)));
  REQUIRE(probability_of(s, Occupation{2, 0}) == frac(1, 2));
  REQUIRE(probability_of(s, Occupation{0, 2}) == frac(1, 2));
  REQUIRE(probability_of(s, Occupation{1, 1}) == 0);
  REQUIRE(total_probability(s) == 1);

  REQUIRE_THROWS_AS(probability_of(s, Occupation{2, 0, 0}), std::invalid_argument);

  SparseState fock_state = SparseState::vacuum(2, Convention::NormalizedFock);
  REQUIRE_THROWS_AS(probability_of(fock_state, Occupation{0, 0}), std::invalid_argument);
}

TEST_CASE("probability outside Q is reported, not approximated") {
  // coefficient 1 + sqrt2 has |c|^2 = 3 + 2*sqrt2, which no rational equals
  SparseState s = SparseState::single_term(1, Occupation{1},
                                           Amplitude::one() + Amplitude::sqrt2());
  REQUIRE_THROWS_AS(probability_of(s, Occupation{1}), non_rational_probability_error);
  REQUIRE_THROWS_AS(total_probability(s), non_rational_probability_error);
}

TEST_CASE("convention conversion round trip") {
  SparseState hom(2, Convention::Monomial);
  hom.add_term(Occupation{2, 0}, Amplitude::i() * Amplitude::rational(frac(1, 2)));
  hom.add_term(Occupation{0, 2}, Amplitude::i() * Amplitude::rational(frac(1, 2)));

  SparseState fock = to_normalized_fock(hom);
  REQUIRE(fock.convention == Convention::NormalizedFock);
  // sqrt(2!) * 1/2 = 1/sqrt2 per branch: normalized coefficients
  REQUIRE(fock.coeff(Occupation{2, 0}) == Amplitude::i() * Amplitude::inv_sqrt2());
  Rational norm = 0;
  for (const auto& [occ, amp] : fock.terms) {
    (void)occ;
    RootTwoValue ns = amp.norm_sq();
    REQUIRE(ns.sqrt2_part == 0);
    norm += ns.rational_part;
  }
  REQUIRE(norm == 1);

  REQUIRE(to_monomial(fock) == hom);
}

TEST_CASE("conversion rejects patterns whose weight has no square root in the field") {
  // 3! = 6 : sqrt6 is outside Q(i, sqrt2), so the conversion must refuse
  SparseState s = SparseState::single_term(1, Occupation{3}, Amplitude::one());
  REQUIRE_THROWS_AS(to_normalized_fock(s), field_error);
  // 4! = 24 = 2^3 * 3 fails for the same reason
  SparseState s4 = SparseState::single_term(1, Occupation{4}, Amplitude::one());
  REQUIRE_THROWS_AS(to_normalized_fock(s4), field_error);
  // 2! * 2! = 4 is a perfect square and converts fine
  SparseState s22 = SparseState::single_term(2, Occupation{2, 2}, Amplitude::rational(frac(1, 2)));
  REQUIRE(to_normalized_fock(s22).coeff(Occupation{2, 2}) == Amplitude::one());
}

TEST_CASE("equality up to a global phase") {
  SparseState a(2, Convention::Monomial);
  a.add_term(Occupation{2, 0}, Amplitude::imag_rational(frac(1, 2)));
  a.add_term(Occupation{0, 2}, Amplitude::imag_rational(frac(1, 2)));

  SparseState b(2, Convention::Monomial);
  b.add_term(Occupation{2, 0}, Amplitude::rational(frac(1, 2)));
  b.add_term(Occupation{0, 2}, Amplitude::rational(frac(1, 2)));

  REQUIRE(equal_up_to_phase(a, b));
  REQUIRE(equal_up_to_phase(a, b.scaled(-Amplitude::one())));
  REQUIRE_FALSE(equal_up_to_phase(a, b.scaled(Amplitude::rational(2))));

  SparseState c = b;
  c.add_term(Occupation{1, 1}, Amplitude::one());
  REQUIRE_FALSE(equal_up_to_phase(a, c));
}
