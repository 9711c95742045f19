#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermat4/obstruction.hpp"

using namespace fermat4;
using namespace fermat4::obstruction;
using newforms::CmField;
using two_squares::TwoSquaresRep;

TEST_CASE("cartan_type") {
  CHECK(cartan_type(CmField::QI, 5) == CartanType::Split);
  CHECK(cartan_type(CmField::QI, 13) == CartanType::Split);
  CHECK(cartan_type(CmField::QI, 29) == CartanType::Split);
  CHECK(cartan_type(CmField::QI, 7) == CartanType::NonSplit);
  CHECK(cartan_type(CmField::QI, 19) == CartanType::NonSplit);
  CHECK(cartan_type(CmField::QI, 2) == CartanType::Ramified);

  CHECK(cartan_type(CmField::QSqrtMinus2, 3) == CartanType::Split);
  CHECK(cartan_type(CmField::QSqrtMinus2, 17) == CartanType::Split);
  CHECK(cartan_type(CmField::QSqrtMinus2, 19) == CartanType::Split);
  CHECK(cartan_type(CmField::QSqrtMinus2, 5) == CartanType::NonSplit);
  CHECK(cartan_type(CmField::QSqrtMinus2, 23) == CartanType::NonSplit);
  CHECK(cartan_type(CmField::QSqrtMinus2, 2) == CartanType::Ramified);

  CHECK_THROWS_AS(cartan_type(CmField::QI, 9), DomainError);
  CHECK(to_string(CartanType::Split) == "Split");
  CHECK(to_string(CartanType::NonSplit) == "NonSplit");
  CHECK(to_string(CartanType::Ramified) == "Ramified");
}

TEST_CASE("newform eliminations") {
  CHECK_FALSE(eliminate_f3_f4(2));
  CHECK_FALSE(eliminate_f5_f6(2));
  for (uint64_t p : primes_up_to(200)) {
    if (p == 2) continue;
    CHECK(eliminate_f3_f4(Int(p)));
    CHECK(eliminate_f5_f6(Int(p)));
  }
  CHECK_THROWS_AS(eliminate_f3_f4(4), DomainError);
  CHECK_THROWS_AS(eliminate_f5_f6(15), DomainError);
}

TEST_CASE("level_raising_rhs") {
  CHECK(level_raising_rhs(5, 19) == 9);
  CHECK(level_raising_rhs(3, 7) == 6);
  CHECK(level_raising_rhs(197, 7) == 4);
  CHECK_THROWS_AS(level_raising_rhs(7, 7), DomainError);
  CHECK_THROWS_AS(level_raising_rhs(4, 7), DomainError);
  CHECK_THROWS_AS(level_raising_rhs(5, 21), DomainError);
}

TEST_CASE("first_case_constraint branches") {
  QAnalysis a = first_case_constraint(5, 19);
  CHECK(a.branch == QBranch::ExcludedBy33);
  CHECK(a.decomposition == TwoSquaresRep{1, 2, 5});
  CHECK(a.alpha_sq_is_1);
  CHECK_FALSE(a.p_divides_beta);

  QAnalysis b = first_case_constraint(13, 7);
  CHECK(b.branch == QBranch::MinusOneBranchContradiction);
  CHECK(b.decomposition == TwoSquaresRep{3, 2, 13});

  QAnalysis c = first_case_constraint(197, 7);
  CHECK(c.branch == QBranch::PlusOneBranchShape);
  CHECK(c.decomposition == TwoSquaresRep{1, 14, 197});
  CHECK(c.alpha_sq_is_1);
  CHECK(c.p_divides_beta);

  // 113 = 7^2 + 8^2 carries the mirrored shape: alpha^2 = 0, beta^2 = 1.
  QAnalysis d = first_case_constraint(113, 7);
  CHECK(d.branch == QBranch::PlusOneBranchShape);
  CHECK(d.decomposition == TwoSquaresRep{7, 8, 113});
  CHECK_FALSE(d.alpha_sq_is_1);
  CHECK_FALSE(d.p_divides_beta);

  QAnalysis e = first_case_constraint(761, 19);
  CHECK(e.branch == QBranch::PlusOneBranchShape);
  CHECK(e.decomposition == TwoSquaresRep{19, 20, 761});

  QAnalysis f = first_case_constraint(29, 7);
  CHECK(f.branch == QBranch::ShapeViolated);
  CHECK_FALSE(f.alpha_sq_is_1);
  CHECK_FALSE(f.p_divides_beta);

  CHECK_THROWS_AS(first_case_constraint(7, 7), DomainError);
  CHECK_THROWS_AS(first_case_constraint(13, 13), DomainError);
  CHECK_THROWS_AS(first_case_constraint(13, 5), DomainError);
  CHECK_THROWS_AS(first_case_constraint(4, 7), DomainError);
  CHECK(to_string(QBranch::ExcludedBy33) == "ExcludedBy33");
  CHECK(to_string(QBranch::ShapeViolated) == "ShapeViolated");
}

TEST_CASE("product_formula_conclusion") {
  CHECK(product_formula_conclusion({}, 7));
  CHECK(product_formula_conclusion({TwoSquaresRep{1, 14, 197}}, 7));
  CHECK(product_formula_conclusion({TwoSquaresRep{7, 8, 113}}, 7));
  CHECK(product_formula_conclusion(
      {TwoSquaresRep{1, 14, 197}, TwoSquaresRep{15, 14, 421}}, 7));
  CHECK(product_formula_conclusion(
      {TwoSquaresRep{7, 8, 113}, TwoSquaresRep{1, 14, 197}}, 7));

  // 29 = (5, 2) does not carry the forced shape mod 7; 5 = (1, 2) fails mod 19.
  CHECK_THROWS_AS(product_formula_conclusion({TwoSquaresRep{5, 2, 29}}, 7), DomainError);
  CHECK_THROWS_AS(product_formula_conclusion({TwoSquaresRep{1, 2, 5}}, 19), DomainError);
  CHECK_THROWS_AS(product_formula_conclusion(
                      {TwoSquaresRep{1, 14, 197}, TwoSquaresRep{1, 14, 197}}, 7),
                  DomainError);
  CHECK_THROWS_AS(product_formula_conclusion({TwoSquaresRep{1, 2, 9}}, 7), DomainError);
  CHECK_THROWS_AS(product_formula_conclusion({}, 17), DomainError);
  CHECK_THROWS_AS(product_formula_conclusion({}, 15), DomainError);
}

TEST_CASE("theorem1 verdicts and step counts") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    VerdictReport r = theorem1_verdict(p);
    CHECK(r.verdict == Verdict::NotCovered);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].label == "coverage_check");
    CHECK(r.steps[0].kind == StepKind::Computed);
    CHECK(r.steps[0].outputs.at("covered") == json(false));
  }

  VerdictReport r17 = theorem1_verdict(17);
  CHECK(r17.verdict == Verdict::Eliminated);
  CHECK(r17.steps.size() == 5);
  CHECK(r17.steps[0].label == "Modularity");
  CHECK(r17.steps[0].kind == StepKind::Axiom);
  CHECK(r17.steps[3].label == "cartan_type");
  CHECK(r17.steps[3].outputs.at("type") == json("Split"));
  CHECK(r17.steps[4].label == "SplitCartanImpossible");

  VerdictReport r19 = theorem1_verdict(19);
  CHECK(r19.verdict == Verdict::Eliminated);
  CHECK(r19.steps.size() == 12);
  CHECK(r19.steps[4].label == "a3_forced_zero");
  CHECK(r19.steps[10].outputs.at("type") == json("Split"));
  CHECK(r19.steps[11].label == "SplitCartanImpossible");

  VerdictReport r23 = theorem1_verdict(23);
  CHECK(r23.verdict == Verdict::NotCovered);
  CHECK(r23.steps.size() == 6);
  CHECK(r23.steps[5].label == "coverage_check");
  CHECK(r23.steps[5].outputs.at("covered") == json(false));

  CHECK(theorem1_verdict(29).verdict == Verdict::Eliminated);
  CHECK(theorem1_verdict(29).steps.size() == 5);

  CHECK_THROWS_AS(theorem1_verdict(1), DomainError);
  CHECK_THROWS_AS(theorem1_verdict(4), DomainError);
}

TEST_CASE("theorem1 sweep to 200") {
  for (uint64_t p : primes_up_to(200)) {
    Verdict v = theorem1_verdict(Int(p)).verdict;
    if (p > 13 && p % 8 != 7)
      CHECK(v == Verdict::Eliminated);
    else
      CHECK(v == Verdict::NotCovered);
  }
}

TEST_CASE("theorem2 verdicts and step counts") {
  VerdictReport r7 = theorem2_verdict(7);
  CHECK(r7.verdict == Verdict::NotCovered);
  REQUIRE(r7.steps.size() == 1);
  CHECK(r7.steps[0].label == "coverage_check");

  for (int p : {2, 3, 5, 11, 13}) {
    VerdictReport r = theorem2_verdict(p);
    CHECK(r.verdict == Verdict::ExternalClassical);
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[0].label == "small_prime_class");
    CHECK(r.steps[1].label == "ClassicalSmallPrimes");
  }

  VerdictReport r17 = theorem2_verdict(17);
  CHECK(r17.verdict == Verdict::FirstCaseProved);
  CHECK(r17.steps.size() == 6);
  CHECK(r17.steps.back().label == "first_case_from_full");
  CHECK(r17.steps.back().outputs.at("theorem1_verdict") == json("Eliminated"));

  CHECK(theorem2_verdict(19).verdict == Verdict::FirstCaseProved);
  CHECK(theorem2_verdict(19).steps.size() == 13);

  VerdictReport r23 = theorem2_verdict(23);
  CHECK(r23.verdict == Verdict::FirstCaseProved);
  REQUIRE(r23.steps.size() == 11);
  CHECK(r23.steps[3].label == "cartan_type");
  CHECK(r23.steps[3].outputs.at("type") == json("NonSplit"));
  CHECK(r23.steps[4].label == "FactorsOfCAreOneModFour");
  CHECK(r23.steps[7].label == "level_raising_dichotomy");
  CHECK(r23.steps[7].outputs.at("rhs_at_plus_one") == json(4));
  CHECK(r23.steps[7].outputs.at("rhs_at_minus_one") == json(0));
  CHECK(r23.steps[8].outputs.at("contradiction") == json(true));
  CHECK(r23.steps[9].outputs.at("alpha_sq_mod_p") == json(1));
  CHECK(r23.steps[9].outputs.at("beta_sq_mod_p") == json(0));
  CHECK(r23.steps[10].label == "product_formula_closure");
  CHECK(r23.steps[10].outputs.at("closed") == json(true));
  CHECK(r23.steps[10].outputs.at("product_re_im_zero") == json(true));

  CHECK(theorem2_verdict(31).verdict == Verdict::FirstCaseProved);
  CHECK(theorem2_verdict(31).steps.size() == 11);
  CHECK_THROWS_AS(theorem2_verdict(21), DomainError);
}

TEST_CASE("theorem2 sweep to 200") {
  for (uint64_t p : primes_up_to(200)) {
    Verdict v = theorem2_verdict(Int(p)).verdict;
    if (p == 7)
      CHECK(v == Verdict::NotCovered);
    else if (p <= 13)
      CHECK(v == Verdict::ExternalClassical);
    else
      CHECK(v == Verdict::FirstCaseProved);
  }
}

TEST_CASE("replay reproduces every computed step bit for bit") {
  for (const VerdictReport& r :
       {theorem1_verdict(19), theorem1_verdict(23), theorem2_verdict(23),
        theorem2_verdict(17), theorem2_verdict(5)}) {
    for (const Step& s : r.steps) {
      if (s.kind == StepKind::Axiom) {
        CHECK(s.inputs == json::object());
        CHECK(s.outputs == json::object());
        CHECK_FALSE(s.statement.empty());
        CHECK_THROWS_AS(replay_step(s.label, s.inputs), DomainError);
      } else {
        CHECK(replay_step(s.label, s.inputs) == s.outputs);
      }
    }
  }
}

TEST_CASE("replay_step errors and standalone calls") {
  CHECK_THROWS_AS(replay_step("no_such_step", json::object()), DomainError);
  CHECK_THROWS_AS(replay_step("Modularity", json::object()), DomainError);
  CHECK_THROWS_AS(replay_step("cartan_type", {{"cm_disc", -3}, {"p", 7}}), DomainError);

  json minus17 = replay_step("minus_one_branch", {{"p", 17}});
  CHECK(minus17.at("legendre_minus_one") == json(1));
  CHECK(minus17.at("contradiction") == json(false));

  json cov = replay_step("coverage_check", {{"target", "Theorem1"}, {"p", 41}});
  CHECK(cov.at("covered") == json(true));

  json cls = replay_step("a3_classification", json::object());
  CHECK(cls.at("zero_classes") == json::array({json::array({0, 1}), json::array({0, 2})}));
  CHECK(cls.at("nonzero_classes").size() == 6);

  json mag = replay_step("a3_prime_value", json::object());
  CHECK(mag.at("ba_magnitude") == json({{"rat", 0}, {"irr", 2}}));
}

TEST_CASE("report serialization") {
  VerdictReport r = theorem1_verdict(19);
  json j = r.to_json();
  CHECK(j.at("p") == json(19));
  CHECK(j.at("target") == json("Theorem1"));
  CHECK(j.at("verdict") == json("Eliminated"));
  REQUIRE(j.at("steps").size() == r.steps.size());
  for (const auto& s : j.at("steps")) {
    CHECK(s.contains("kind"));
    CHECK(s.contains("label"));
    CHECK(s.contains("inputs"));
    CHECK(s.contains("outputs"));
    CHECK(s.contains("paper_quote"));
  }
  CHECK(j.at("steps")[0].at("kind") == json("axiom"));
  CHECK(j.at("steps")[4].at("kind") == json("computed"));

  CHECK(int_json(Int(5)) == json(5));
  CHECK(int_json(Int(-7)) == json(-7));
  CHECK(int_json(Int("123456789012345678901234567890")) ==
        json("123456789012345678901234567890"));
  CHECK(to_string(Target::Theorem1) == "Theorem1");
  CHECK(to_string(Target::Theorem2) == "Theorem2");
  CHECK(to_string(Verdict::FirstCaseProved) == "FirstCaseProved");
}
