#include <catch2/catch_amalgamated.hpp>

#include "bellsim/schemes.hpp"

using namespace bellsim;

namespace {

Amplitude re(long long num, long long den) { return Amplitude::rational(frac(num, den)); }
Amplitude im(long long num, long long den) { return Amplitude::imag_rational(frac(num, den)); }

SparseState state_of(int modes, std::vector<std::pair<Occupation, Amplitude>> rows) {
  SparseState s(modes, Convention::Monomial);
  for (auto& [occ, amp] : rows) s.add_term(occ, amp);
  return s;
}

}  // namespace

TEST_CASE("building blocks are normalized") {
  for (const auto& label : bell_labels()) REQUIRE(total_probability(bell_state(label)) == 1);
  REQUIRE(total_probability(alpha_state()) == 1);
  REQUIRE(total_probability(beta_state(+1)) == 1);
  REQUIRE(total_probability(beta_state(-1)) == 1);
  REQUIRE(total_probability(ancilla_state(1)) == 1);
  REQUIRE(total_probability(ancilla_state(2)) == 1);
  REQUIRE(total_probability(boosted_ancilla()) == 1);
  for (const auto& label : arm_labels()) {
    REQUIRE(total_probability(arm_input(label, 1)) == 1);
    REQUIRE(total_probability(arm_input(label, 2)) == 1);
    REQUIRE(total_probability(boosted_arm_input(label)) == 1);
  }
  for (const auto& bell : bell_labels()) {
    REQUIRE(total_probability(full_input(bell, 1)) == 1);
    REQUIRE(total_probability(full_input(bell, 2)) == 1);
  }

  REQUIRE_THROWS_AS(bell_state("chi"), std::invalid_argument);
  REQUIRE_THROWS_AS(beta_state(0), std::invalid_argument);
  REQUIRE_THROWS_AS(arm_signal("gamma"), std::invalid_argument);
  REQUIRE_THROWS_AS(ancilla_state(0), std::invalid_argument);
  REQUIRE_THROWS_AS(ancilla_state(3), resource_limit_error);
}

TEST_CASE("mixed pair class through the depth-1 cascade") {
  SparseState out = evolve(arm_input(kLabelAlpha, 1), splitter_cascade(1));
  SparseState expected = state_of(
      4, {{{3, 1, 0, 0}, re(-1, 8)}, {{2, 1, 1, 0}, im(1, 8)},  {{1, 1, 2, 0}, re(-1, 8)},
          {{0, 1, 3, 0}, im(1, 8)},  {{3, 0, 0, 1}, im(-1, 8)}, {{2, 0, 1, 1}, re(-1, 8)},
          {{1, 0, 2, 1}, im(-1, 8)}, {{0, 0, 3, 1}, re(-1, 8)}, {{1, 3, 0, 0}, re(-1, 8)},
          {{1, 2, 0, 1}, im(1, 8)},  {{1, 1, 0, 2}, re(-1, 8)}, {{1, 0, 0, 3}, im(1, 8)},
          {{0, 3, 1, 0}, im(-1, 8)}, {{0, 2, 1, 1}, re(-1, 8)}, {{0, 1, 1, 2}, im(-1, 8)},
          {{0, 0, 1, 3}, re(-1, 8)}});
  REQUIRE(out.support_size() == 16);
  REQUIRE(out == expected);
  REQUIRE(probability_of(out, Occupation{3, 1, 0, 0}) == frac(3, 32));
  REQUIRE(probability_of(out, Occupation{2, 1, 1, 0}) == frac(1, 32));
  REQUIRE(total_probability(out) == 1);
}

TEST_CASE("symmetric pair class through the depth-1 cascade") {
  SparseState out = evolve(arm_input(kLabelBetaPlus, 1), splitter_cascade(1));
  SparseState expected = state_of(
      4, {{{4, 0, 0, 0}, re(-1, 16)}, {{0, 4, 0, 0}, re(-1, 16)}, {{0, 0, 4, 0}, re(-1, 16)},
          {{0, 0, 0, 4}, re(-1, 16)}, {{2, 0, 2, 0}, re(-1, 8)},  {{0, 2, 0, 2}, re(-1, 8)},
          {{2, 2, 0, 0}, re(-1, 8)},  {{0, 0, 2, 2}, re(-1, 8)},  {{2, 0, 0, 2}, re(1, 8)},
          {{0, 2, 2, 0}, re(1, 8)},   {{1, 1, 1, 1}, re(-1, 2)}});
  REQUIRE(out.support_size() == 11);
  REQUIRE(out == expected);
  REQUIRE(probability_of(out, Occupation{4, 0, 0, 0}) == frac(3, 32));
  REQUIRE(probability_of(out, Occupation{1, 1, 1, 1}) == frac(1, 4));
  REQUIRE(total_probability(out) == 1);
}

TEST_CASE("antisymmetric pair class through the depth-1 cascade") {
  SparseState out = evolve(arm_input(kLabelBetaMinus, 1), splitter_cascade(1));
  SparseState expected = state_of(
      4, {{{4, 0, 0, 0}, re(-1, 16)}, {{0, 0, 4, 0}, re(-1, 16)}, {{0, 4, 0, 0}, re(1, 16)},
          {{0, 0, 0, 4}, re(1, 16)},  {{2, 0, 2, 0}, re(-1, 8)},  {{0, 2, 0, 2}, re(1, 8)},
          {{2, 1, 0, 1}, im(1, 4)},   {{1, 2, 1, 0}, im(-1, 4)},  {{1, 0, 1, 2}, im(1, 4)},
          {{0, 1, 2, 1}, im(-1, 4)}});
  REQUIRE(out.support_size() == 10);
  REQUIRE(out == expected);
  REQUIRE(probability_of(out, Occupation{2, 1, 0, 1}) == frac(1, 8));
  REQUIRE(total_probability(out) == 1);
}

TEST_CASE("first mixing stage separates the four entangled pairs") {
  Interferometer core = core_stage();
  Amplitude ir = Amplitude::i() * Amplitude::inv_sqrt2();
  Amplitude r = Amplitude::inv_sqrt2();
  Amplitude iq = Amplitude::i() * Amplitude::inv_sqrt2_pow(3);

  REQUIRE(evolve(bell_state(kPsiPlus), core) ==
          state_of(4, {{{1, 1, 0, 0}, ir}, {{0, 0, 1, 1}, ir}}));
  REQUIRE(evolve(bell_state(kPsiMinus), core) ==
          state_of(4, {{{1, 0, 0, 1}, r}, {{0, 1, 1, 0}, -r}}));
  REQUIRE(evolve(bell_state(kPhiPlus), core) ==
          state_of(4, {{{2, 0, 0, 0}, iq}, {{0, 0, 2, 0}, iq}, {{0, 2, 0, 0}, iq}, {{0, 0, 0, 2}, iq}}));
  REQUIRE(evolve(bell_state(kPhiMinus), core) ==
          state_of(4, {{{2, 0, 0, 0}, iq}, {{0, 0, 2, 0}, iq}, {{0, 2, 0, 0}, -iq}, {{0, 0, 0, 2}, -iq}}));

  for (const auto& bell : bell_labels()) REQUIRE(verify_core_branches(bell));
  REQUIRE_THROWS_AS(core_branches("chi"), std::invalid_argument);
}

TEST_CASE("splitting the symmetric classes into readable and stuck parts") {
  for (int depth : {1, 2}) {
    for (int sign : {+1, -1}) {
      REQUIRE(verify_decomposition(depth, sign));
      Rational mass = frac(1, 1 << depth);
      REQUIRE(total_probability(resolvable_component(depth, sign)) == mass);
      REQUIRE(total_probability(ambiguous_remainder(depth, sign)) == mass);
    }
  }
  REQUIRE(verify_boosted_decomposition(+1));
  REQUIRE(verify_boosted_decomposition(-1));

  // the level-1 stuck part is the level-2 ancilla, scaled down by one branch
  REQUIRE(ambiguous_remainder(1, +1) == ancilla_state(2).scaled(Amplitude::inv_sqrt2()));

  REQUIRE_THROWS_AS(resolvable_component(0, +1), std::invalid_argument);
  REQUIRE_THROWS_AS(resolvable_component(3, +1), std::invalid_argument);
  REQUIRE_THROWS_AS(resolvable_component(1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(ambiguous_remainder(3, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(decomposition_components(0, +1), std::invalid_argument);
}

TEST_CASE("single-arm discrimination rates climb the ladder") {
  auto expect_rates = [](const Classifier& c, Rational alpha, Rational beta) {
    auto succ = c.success_probabilities();
    REQUIRE(succ.at(kLabelAlpha) == alpha);
    REQUIRE(succ.at(kLabelBetaPlus) == beta);
    REQUIRE(succ.at(kLabelBetaMinus) == beta);
  };
  expect_rates(arm_classifier(0), 1, 0);
  expect_rates(arm_classifier(1), 1, frac(1, 2));
  expect_rates(arm_classifier(2), 1, frac(3, 4));

  // the cheap-ancilla variant trades symmetry for photon count: the
  // symmetric class drops to 3/8 while the antisymmetric one reaches 3/4
  auto boosted = boosted_arm_classifier().success_probabilities();
  REQUIRE(boosted.at(kLabelAlpha) == 1);
  REQUIRE(boosted.at(kLabelBetaPlus) == frac(3, 8));
  REQUIRE(boosted.at(kLabelBetaMinus) == frac(3, 4));

  REQUIRE_THROWS_AS(arm_classifier(3), std::invalid_argument);
}

TEST_CASE("table and closed-form readouts agree everywhere") {
  for (int depth : {0, 1, 2}) REQUIRE(classifier_equivalence(depth));
}

TEST_CASE("photon parity on odd-labeled modes survives the cascade") {
  for (int depth : {1, 2}) {
    const Classifier& c = arm_classifier(depth);
    for (const auto& [label, state] : c.evolved) {
      int want = label == kLabelAlpha ? 1 : 0;
      Rational ambiguous_mass = 0;
      for (const auto& [occ, amp] : state.terms) {
        (void)amp;
        REQUIRE(occ.in_odd_modes() % 2 == want);
        if (c.classify(occ).kind == Verdict::Kind::Ambiguous)
          ambiguous_mass += probability_of(state, occ);
      }
      // the stuck mass halves with every level
      Rational expected = label == kLabelAlpha ? Rational(0) : frac(1, 1 << depth);
      REQUIRE(ambiguous_mass == expected);
    }
  }
}

TEST_CASE("whole-scheme success rates") {
  auto avg = [](const std::map<std::string, Rational>& m) -> Rational {
    Rational s = 0;
    for (const auto& [label, p] : m) {
      (void)label;
      s += p;
    }
    return s / 4;
  };

  auto f0 = full_success(0);
  REQUIRE(f0.at(kPsiPlus) == 1);
  REQUIRE(f0.at(kPsiMinus) == 1);
  REQUIRE(f0.at(kPhiPlus) == 0);
  REQUIRE(f0.at(kPhiMinus) == 0);
  REQUIRE(avg(f0) == frac(1, 2));

  auto f1 = full_success(1);
  REQUIRE(f1.at(kPhiPlus) == frac(1, 2));
  REQUIRE(f1.at(kPhiMinus) == frac(1, 2));
  REQUIRE(avg(f1) == frac(3, 4));

  auto f2 = full_success(2);
  REQUIRE(f2.at(kPhiPlus) == frac(3, 4));
  REQUIRE(avg(f2) == frac(7, 8));

  auto fb = boosted_full_success();
  REQUIRE(fb.at(kPsiPlus) == 1);
  REQUIRE(fb.at(kPsiMinus) == 1);
  REQUIRE(fb.at(kPhiPlus) == frac(3, 8));
  REQUIRE(fb.at(kPhiMinus) == frac(3, 4));
  REQUIRE(avg(fb) == frac(25, 32));

  for (int depth : {0, 1, 2})
    REQUIRE(ladder_success_formula(depth) == avg(full_success(depth)));
  REQUIRE(ladder_success_formula(2) == frac(7, 8));
  REQUIRE(boosted_success_formula(1) == frac(25, 32));
  REQUIRE(boosted_success_formula(2) == frac(57, 64));
}

TEST_CASE("joint evolution confirms the factorized account") {
  for (int depth : {0, 1}) {
    const Classifier& joint = full_joint_classifier(depth);
    auto factorized = full_success(depth);
    for (const auto& [bell, state] : joint.evolved) {
      REQUIRE(total_probability(state) == 1);
      Rational mass = 0;
      for (const auto& [occ, amp] : state.terms) {
        (void)amp;
        Verdict by_rule = full_classify(depth, occ);
        Verdict by_table = joint.classify(occ);
        // the joint table can only refine: wherever it answers uniquely,
        // the two-stage rule must give the same answer
        if (by_table.kind == Verdict::Kind::Unique) {
          if (by_rule.kind == Verdict::Kind::Unique) REQUIRE(by_rule == by_table);
        }
        if (by_rule == Verdict::unique(bell)) mass += probability_of(state, occ);
      }
      REQUIRE(mass == factorized.at(bell));
    }
  }
  REQUIRE_THROWS_AS(full_joint_classifier(2), resource_limit_error);
}

TEST_CASE("parity signature table for the cheap-ancilla arm") {
  auto rows = output_parity_table();
  REQUIRE(rows.size() == 12);

  struct Expected {
    std::string component;
    Rational mass;
    ParityClass n13;
    ParityClass n23;
  };
  const Rational q = frac(1, 4), e = frac(1, 8), h = frac(1, 2);
  using PC = ParityClass;
  std::vector<Expected> expected = {
      {"resolvable(1,+)(x)resolvable(1,+)", q, PC::Even, PC::Even},
      {"resolvable(1,+)(x)remainder(1,+)", q, PC::Even, PC::Half},
      {"remainder(1,+)(x)resolvable(1,+)", q, PC::Even, PC::Half},
      {"resolvable(2,+)/sqrt2", e, PC::Even, PC::Even},
      {"remainder(2,+)/sqrt2", e, PC::Even, PC::Even},
      {"resolvable(1,+)(x)remainder(1,+) + remainder(1,+)(x)resolvable(1,+)", h, PC::Even, PC::Even},
      {"resolvable(1,-)(x)resolvable(1,+)", q, PC::Odd, PC::Half},
      {"resolvable(1,-)(x)remainder(1,+)", q, PC::Odd, PC::Half},
      {"remainder(1,-)(x)resolvable(1,+)", q, PC::Even, PC::Half},
      {"resolvable(2,-)/sqrt2", e, PC::Even, PC::Odd},
      {"remainder(2,-)/sqrt2", e, PC::Even, PC::Even},
      {"resolvable(1,-)(x)remainder(1,+) + remainder(1,-)(x)resolvable(1,+)", h, PC::Half, PC::Half},
  };
  for (size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k, rows[k].component);
    REQUIRE(rows[k].component == expected[k].component);
    REQUIRE(rows[k].mass == expected[k].mass);
    REQUIRE(rows[k].n13 == expected[k].n13);
    REQUIRE(rows[k].n23 == expected[k].n23);
  }
}

TEST_CASE("parity preservation through one more stage") {
  SparseState plus = tensor(beta_state(+1), ancilla_state(1));
  auto rep_plus = parity_preservation_report(1, 2, plus);
  REQUIRE(rep_plus.applicable);
  REQUIRE(rep_plus.holds);

  SparseState minus = tensor(beta_state(-1), ancilla_state(1));
  auto rep_minus = parity_preservation_report(1, 2, minus);
  REQUIRE_FALSE(rep_minus.applicable);

  REQUIRE_THROWS_AS(parity_preservation_report(2, 2, plus), std::invalid_argument);
  REQUIRE_THROWS_AS(parity_preservation_report(1, 0, plus), std::invalid_argument);
}

TEST_CASE("scheme catalog") {
  auto names = scheme_names();
  REQUIRE(names == std::vector<std::string>{"simple", "arm-n1", "arm-n2", "full-n1", "full-n2",
                                            "scheme-25-32"});
  for (const auto& name : names) {
    SchemeSpec s = scheme_by_name(name);
    REQUIRE(s.name == name);
    REQUIRE(s.network.modes == s.mode_count);
    REQUIRE(s.network.is_unitary());
    REQUIRE_FALSE(s.candidates.empty());
    for (const auto& [label, state] : s.candidates) {
      CAPTURE(name, label);
      REQUIRE(state.mode_count == s.mode_count);
      REQUIRE(total_probability(state) == 1);
      for (const auto& [occ, amp] : state.terms) {
        (void)amp;
        REQUIRE(occ.total() == s.photon_budget);
      }
    }
  }
  REQUIRE(scheme_by_name("simple").candidates.size() == 4);
  REQUIRE(scheme_by_name("arm-n1").candidates.size() == 3);
  REQUIRE(scheme_by_name("scheme-25-32").photon_budget == 8);
  REQUIRE(classifier_policy_str(scheme_by_name("full-n2").policy) == "parity");
  REQUIRE(classifier_policy_str(scheme_by_name("simple").policy) == "brute-force");
  REQUIRE_THROWS_AS(scheme_by_name("bogus"), std::invalid_argument);
  REQUIRE_THROWS_AS(arm_scheme(0), std::invalid_argument);
  REQUIRE_THROWS_AS(arm_scheme(3), std::invalid_argument);
}
