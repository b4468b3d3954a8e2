#include <catch2/catch_amalgamated.hpp>

#include "bellsim/discrimination.hpp"

using namespace bellsim;

TEST_CASE("verdict factories and rendering") {
  REQUIRE(Verdict::unique("alpha").str() == "alpha");
  REQUIRE(Verdict::unique("alpha").kind == Verdict::Kind::Unique);
  // ambiguous label sets are canonically sorted
  Verdict amb = Verdict::ambiguous({"beta-", "beta+"});
  REQUIRE(amb.labels == std::vector<std::string>{"beta+", "beta-"});
  REQUIRE(amb.str() == "ambiguous{beta+,beta-}");
  REQUIRE(amb == Verdict::ambiguous({"beta+", "beta-"}));
  REQUIRE(Verdict::inconclusive().str() == "inconclusive");
  REQUIRE(Verdict::impossible().str() == "impossible");
  REQUIRE_FALSE(Verdict::unique("a") == Verdict::unique("b"));
}

TEST_CASE("block structure of mode subsets") {
  REQUIRE(BlockSet(1, 2).modes == std::vector<int>{1, 2});
  REQUIRE(BlockSet(2, 3).modes == std::vector<int>{1, 2, 3, 4});
  REQUIRE(BlockSet(1, 3).modes == std::vector<int>{1, 2, 5, 6});
  // block size 1 keeps every other mode: the odd-labeled ones
  REQUIRE(BlockSet(0, 2).modes == std::vector<int>{1, 3});
  REQUIRE(BlockSet(0, 1).modes == std::vector<int>{1});

  BlockSet bs(1, 3);
  REQUIRE(bs.contains(1));
  REQUIRE(bs.contains(6));
  REQUIRE_FALSE(bs.contains(3));
  REQUIRE(bs.count_in(Occupation{1, 2, 3, 0, 1, 1, 0, 0}) == 5);

  REQUIRE_THROWS_AS(BlockSet(-1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockSet(2, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockSet(1, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(BlockSet(1, 5), resource_limit_error);
}

TEST_CASE("parity spectrum of a state") {
  SparseState bunched(2, Convention::Monomial);
  bunched.add_term(Occupation{2, 0}, Amplitude::rational(frac(1, 2)));
  bunched.add_term(Occupation{0, 2}, Amplitude::imag_rational(frac(1, 2)));
  auto sp = parity_spectrum(bunched, std::vector<int>{1});
  REQUIRE(sp.first == 1);
  REQUIRE(sp.second == 0);
  REQUIRE(parity_class_of(sp) == ParityClass::Even);

  SparseState single = SparseState::single_term(2, Occupation{1, 0}, Amplitude::one());
  auto sp_odd = parity_spectrum(single, std::vector<int>{1});
  REQUIRE(parity_class_of(sp_odd) == ParityClass::Odd);

  SparseState split(2, Convention::Monomial);
  split.add_term(Occupation{1, 0}, Amplitude::inv_sqrt2());
  split.add_term(Occupation{0, 1}, Amplitude::inv_sqrt2());
  auto sp_half = parity_spectrum(split, std::vector<int>{1});
  REQUIRE(sp_half == std::pair<Rational, Rational>{frac(1, 2), frac(1, 2)});
  REQUIRE(parity_class_of(sp_half) == ParityClass::Half);

  SparseState skew(2, Convention::Monomial);
  skew.add_term(Occupation{1, 0}, Amplitude::rational(frac(1, 2)));
  skew.add_term(Occupation{0, 1}, Amplitude::inv_sqrt2());
  REQUIRE(parity_class_of(parity_spectrum(skew, std::vector<int>{1})) == ParityClass::Mixed);

  REQUIRE(parity_class_str(ParityClass::Even) == "even");
  REQUIRE(parity_class_str(ParityClass::Odd) == "odd");
  REQUIRE(parity_class_str(ParityClass::Half) == "50/50");
  REQUIRE(parity_class_str(ParityClass::Mixed) == "mixed");
}

TEST_CASE("table classifier on a toy pair of candidates") {
  // A spreads over both patterns, B sits on the shared one: only A's
  // private pattern discriminates
  SparseState a(2, Convention::Monomial);
  a.add_term(Occupation{1, 0}, Amplitude::inv_sqrt2());
  a.add_term(Occupation{0, 1}, Amplitude::i() * Amplitude::inv_sqrt2());
  SparseState b = SparseState::single_term(2, Occupation{0, 1}, Amplitude::one());

  Classifier c = build_classifier({{"A", a}, {"B", b}});
  REQUIRE(c.classify(Occupation{1, 0}) == Verdict::unique("A"));
  REQUIRE(c.classify(Occupation{0, 1}) == Verdict::ambiguous({"A", "B"}));
  REQUIRE(c.classify(Occupation{2, 0}) == Verdict::impossible());
  REQUIRE(c.classify(Occupation{1, 1}) == Verdict::impossible());

  auto succ = c.success_probabilities();
  REQUIRE(succ.at("A") == frac(1, 2));
  REQUIRE(succ.at("B") == 0);
}

TEST_CASE("parity readout at depth 0") {
  REQUIRE(parity_classify(0, Occupation{1, 1}) == Verdict::unique(kLabelAlpha));
  Verdict both = Verdict::ambiguous({kLabelBetaPlus, kLabelBetaMinus});
  REQUIRE(parity_classify(0, Occupation{2, 0}) == both);
  REQUIRE(parity_classify(0, Occupation{0, 2}) == both);
  REQUIRE(parity_classify(0, Occupation{1, 0}) == Verdict::impossible());
  REQUIRE(parity_classify(0, Occupation{2, 2}) == Verdict::impossible());
}

TEST_CASE("parity readout at depth 1") {
  // odd photon count on odd-labeled modes pins the pair state
  REQUIRE(parity_classify(1, Occupation{3, 1, 0, 0}) == Verdict::unique(kLabelAlpha));
  REQUIRE(parity_classify(1, Occupation{2, 1, 1, 0}) == Verdict::unique(kLabelAlpha));
  REQUIRE(parity_classify(1, Occupation{0, 2, 1, 1}) == Verdict::unique(kLabelAlpha));
  // maximal imbalance keeps the two symmetric classes entangled
  Verdict both = Verdict::ambiguous({kLabelBetaPlus, kLabelBetaMinus});
  REQUIRE(parity_classify(1, Occupation{4, 0, 0, 0}) == both);
  REQUIRE(parity_classify(1, Occupation{0, 0, 4, 0}) == both);
  // balanced even patterns resolve the sign through block parity
  REQUIRE(parity_classify(1, Occupation{2, 2, 0, 0}) == Verdict::unique(kLabelBetaPlus));
  REQUIRE(parity_classify(1, Occupation{1, 1, 1, 1}) == Verdict::unique(kLabelBetaPlus));
  REQUIRE(parity_classify(1, Occupation{2, 1, 0, 1}) == Verdict::unique(kLabelBetaMinus));
  REQUIRE(parity_classify(1, Occupation{1, 2, 1, 0}) == Verdict::unique(kLabelBetaMinus));
  REQUIRE(parity_classify(1, Occupation{1, 1, 1, 0}) == Verdict::impossible());
  REQUIRE(parity_classify(1, Occupation{4, 4, 0, 0}) == Verdict::impossible());
}

TEST_CASE("parity readout at depth 2") {
  REQUIRE(parity_classify(2, Occupation{3, 1, 1, 1, 1, 1, 0, 0}) == Verdict::unique(kLabelAlpha));
  Verdict both = Verdict::ambiguous({kLabelBetaPlus, kLabelBetaMinus});
  REQUIRE(parity_classify(2, Occupation{8, 0, 0, 0, 0, 0, 0, 0}) == both);
  REQUIRE(parity_classify(2, Occupation{0, 0, 0, 0, 0, 0, 0, 8}) == both);
  REQUIRE(parity_classify(2, Occupation{1, 1, 1, 1, 1, 1, 1, 0}) == Verdict::impossible());
}

TEST_CASE("parity readout argument validation") {
  REQUIRE_THROWS_AS(parity_classify(4, Occupation{1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(parity_classify(-1, Occupation{1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(parity_classify(1, Occupation{1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(parity_classify(0, Occupation{1, 1, 0, 0}), std::invalid_argument);
}
