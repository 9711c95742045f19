#include "fermat4/obstruction.hpp"

#include <map>

#include "fermat4/frey.hpp"

namespace fermat4::obstruction {

json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
  return v.get_str();
}

namespace {

json rt2_json(const Rt2Int& x) { return {{"rat", int_json(x.rat)}, {"irr", int_json(x.irr)}}; }

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(static_cast<long>(j.get<int64_t>()));
}

}  // namespace

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::Split: return "Split";
    case CartanType::NonSplit: return "NonSplit";
    case CartanType::Ramified: return "Ramified";
  }
  throw DomainError("bad CartanType");
}

std::string to_string(QBranch b) {
  switch (b) {
    case QBranch::ExcludedBy33: return "ExcludedBy33";
    case QBranch::MinusOneBranchContradiction: return "MinusOneBranchContradiction";
    case QBranch::PlusOneBranchShape: return "PlusOneBranchShape";
    case QBranch::ShapeViolated: return "ShapeViolated";
  }
  throw DomainError("bad QBranch");
}

std::string to_string(Target t) {
  return t == Target::Theorem1 ? "Theorem1" : "Theorem2";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Eliminated: return "Eliminated";
    case Verdict::FirstCaseProved: return "FirstCaseProved";
    case Verdict::NotCovered: return "NotCovered";
    case Verdict::ExternalClassical: return "ExternalClassical";
  }
  throw DomainError("bad Verdict");
}

CartanType cartan_type(newforms::CmField cm, const Int& p) {
  if (!is_prime(p)) throw DomainError("cartan_type: " + p.get_str() + " is not prime");
  Int disc(static_cast<int>(cm));
  if (p == 2 || disc % p == 0) return CartanType::Ramified;
  return legendre(disc, p) == -1 ? CartanType::NonSplit : CartanType::Split;
}

bool eliminate_f5_f6(const Int& p) {
  if (!is_prime(p)) throw DomainError("eliminate_f5_f6: " + p.get_str() + " is not prime");
  // Boundary: for p = 2 the congruence sqrt(2) = 2 (mod P) does hold.
  if (p == 2) return false;
  for (const Rt2Int& a : frey::weil_candidates(3))
    for (int t : {2, -2})
      if (congruent_above_p(a, Rt2Int{Int(t), 0}, p)) return false;
  return true;
}

bool eliminate_f3_f4(const Int& p) {
  if (!is_prime(p)) throw DomainError("eliminate_f3_f4: " + p.get_str() + " is not prime");
  if (p == 2) return false;
  return !congruent_above_p(Rt2Int{0, 2}, Rt2Int{0, 0}, p);
}

Int level_raising_rhs(const Int& q, const Int& p) {
  if (!is_prime(q) || !is_prime(p) || q == p)
    throw DomainError("level_raising_rhs: needs distinct primes q, p");
  return (q * (q + 1) * (q + 1)) % p;
}

QAnalysis first_case_constraint(const Int& q, const Int& p) {
  if (!is_prime(p) || p % 4 != 3)
    throw DomainError("first_case_constraint: p = " + p.get_str() +
                      " is not a prime = 3 (mod 4)");
  if (!is_prime(q) || q % 4 != 1 || q == p)
    throw DomainError("first_case_constraint: q = " + q.get_str() +
                      " is not a prime = 1 (mod 4) distinct from p");

  QAnalysis out;
  out.q = q;
  out.p = p;
  out.decomposition = two_squares::decompose_prime(q);
  const Int alpha_sq = (out.decomposition.alpha * out.decomposition.alpha) % p;
  const Int beta_sq = (out.decomposition.beta * out.decomposition.beta) % p;
  out.alpha_sq_is_1 = alpha_sq == 1;
  out.p_divides_beta = out.decomposition.beta % p == 0;

  const Int qm = q % p;
  if ((qm * qm) % p != 1) {
    out.branch = QBranch::ExcludedBy33;
  } else if (qm == p - 1) {
    out.branch = QBranch::MinusOneBranchContradiction;
  } else {
    const bool shape = (alpha_sq == 1 && beta_sq == 0) || (alpha_sq == 0 && beta_sq == 1);
    out.branch = shape ? QBranch::PlusOneBranchShape : QBranch::ShapeViolated;
  }
  return out;
}

bool product_formula_conclusion(const std::vector<two_squares::TwoSquaresRep>& q_shapes,
                                const Int& p) {
  if (!is_prime(p) || p % 4 != 3)
    throw DomainError("product_formula_conclusion: p = " + p.get_str() +
                      " is not a prime = 3 (mod 4)");
  Int c = 1;
  for (const auto& rep : q_shapes) {
    if (!rep.valid() || !is_prime(rep.n) || rep.n % 4 != 1)
      throw DomainError("product_formula_conclusion: bad prime representation in list");
    const Int a2 = (rep.alpha * rep.alpha) % p, b2 = (rep.beta * rep.beta) % p;
    if (!((a2 == 1 && b2 == 0) || (a2 == 0 && b2 == 1)))
      throw DomainError("product_formula_conclusion: " + rep.n.get_str() +
                        " does not carry the forced shape mod " + p.get_str());
    if (c % rep.n == 0)
      throw DomainError("product_formula_conclusion: repeated prime " + rep.n.get_str());
    c *= rep.n;
  }
  Int cp;
  mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), p.get_ui());
  for (const auto& rep : two_squares::all_representations(cp))
    if ((rep.alpha * rep.beta) % p != 0) return false;
  return true;
}

namespace {

const std::map<std::string, std::string>& axiom_statements() {
  static const std::map<std::string, std::string> m = {
      {"Modularity",
       "E_{A,B} and E_{B,A} are quadratic Q-curves over Q(i), completely defined over "
       "Q(i, sqrt(2)); the attached GL_2-type surfaces are modular [ES]."},
      {"IrreducibilityAbove13",
       "for p > 13 the mod-p representation attached to these Q-curves is absolutely "
       "irreducible [E]."},
      {"LevelLowering",
       "level lowering: the residual representation arises from a newform of level 32 "
       "(from E_{A,B}) or level 256 (from E_{B,A}) [ES], [G]."},
      {"SplitCartanImpossible",
       "an absolutely irreducible mod-p representation with projective image in the "
       "normalizer of a split Cartan subgroup is impossible for p > 13 [E]."},
      {"CuspFieldOfDefinition",
       "the cusps in play are defined over the real cyclotomic field, so multiplicative "
       "reduction at a prime over q | C forces q^2 = 1 (mod p) [E]."},
      {"LevelRaising",
       "level raising at a multiplicative prime over q: the congruence with the CM form "
       "forces a_q^2 = q(q+1)^2 (mod P)."},
      {"FactorsOfCAreOneModFour",
       "in the First Case C is odd and prime to A, B; every prime q | C satisfies "
       "-1 = (A^2 B^{-2})^2 (mod q), hence q = 1 (mod 4)."},
      {"ClassicalSmallPrimes",
       "exponents p <= 13 with p != 7 satisfy p != +-1 (mod 8); the First Case for "
       "these exponents is classical [P], [C]."},
  };
  return m;
}

const std::map<std::string, std::string>& computed_statements() {
  static const std::map<std::string, std::string> m = {
      {"coverage_check", "coverage of the exponent class by the obstruction argument."},
      {"cartan_type",
       "the CM form's mod-p image lies in the normalizer of a Cartan subgroup, split "
       "exactly when the CM discriminant is a square mod p."},
      {"a3_forced_zero",
       "a_3(f1) = 0, so a_3(E_{A,B}) = 0 (mod P); the Weil bound at 3 leaves only "
       "candidates z*sqrt(2) with |z| <= 2, and p > 13 divides none of the nonzero "
       "norms, so a_3(E_{A,B}) = 0 exactly."},
      {"a3_classification",
       "point counts over F_9 on every residue class (A, B) mod 3: a_3(E_{A,B}) = 0 "
       "exactly when 3 | A (so 3 does not divide B)."},
      {"a3_prime_value",
       "on the vanishing classes the companion curve has a_3(E_{B,A}) = +-2*sqrt(2)."},
      {"eliminate_f3_f4",
       "a_3 = +-2*sqrt(2) = 0 (mod P) would force p | N(2*sqrt(2)) = 8: f3, f4 are "
       "eliminated."},
      {"eliminate_f5_f6",
       "a = +-2 (mod P) with a in {0, +-sqrt(2), +-2*sqrt(2)} would force p | 2 or "
       "p | 4: f5, f6 are eliminated."},
      {"forced_newform",
       "of the level-256 forms only f2 (up to Galois conjugacy) stays congruent to "
       "E_{B,A}."},
      {"first_case_from_full",
       "the full non-existence verdict at p already rules out First Case solutions."},
      {"level_raising_dichotomy",
       "q(q+1)^2 (mod p) evaluates to 4 on the branch q = 1 and to 0 on the branch "
       "q = -1 (mod p)."},
      {"minus_one_branch",
       "on the branch q = -1 (mod p): p | a_q, so p | alpha and beta^2 = q = -1 "
       "(mod p), impossible because (-1|p) = -1."},
      {"plus_one_shape",
       "on the branch q = 1 (mod p): a_q^2 = 4, so alpha^2 = 1 (mod p) and beta^2 = "
       "q - alpha^2 = 0 (mod p)."},
      {"product_formula_closure",
       "each Gaussian prime over a q | C reduces to one of {1, -1, i, -i} mod p; the "
       "set is closed under multiplication, so every C^p = R^2 + S^2 has p | RS, "
       "contradicting a primitive First Case solution."},
      {"small_prime_class",
       "p <= 13 and p != 7: the exponent lies in the classically settled range."},
  };
  return m;
}

json step_coverage_check(const json& in) {
  const Int p = int_from_json(in.at("p"));
  const std::string target = in.at("target").get<std::string>();
  bool covered;
  std::string reason;
  if (target == "Theorem1") {
    if (p <= 13) {
      covered = false;
      reason = "requires p > 13";
    } else if (p % 8 == 7) {
      covered = false;
      reason = "p = 7 (mod 8): both Cartan normalizers are non-split, no contradiction";
    } else {
      covered = true;
      reason = "p > 13 with p mod 8 in {1, 3, 5}";
    }
  } else if (target == "Theorem2") {
    if (p == 7) {
      covered = false;
      reason = "the case p = 7 is not covered";
    } else {
      covered = true;
      reason = p <= 13 ? "classical range" : "p > 13";
    }
  } else {
    throw DomainError("coverage_check: unknown target " + target);
  }
  return {{"covered", covered}, {"reason", reason}};
}

json step_cartan_type(const json& in) {
  const Int p = int_from_json(in.at("p"));
  const int disc = in.at("cm_disc").get<int>();
  if (disc != -4 && disc != -8) throw DomainError("cartan_type: cm_disc must be -4 or -8");
  auto cm = static_cast<newforms::CmField>(disc);
  return {{"type", to_string(cartan_type(cm, p))}};
}

json step_a3_forced_zero(const json& in) {
  const Int p = int_from_json(in.at("p"));
  json candidates = json::array(), surviving = json::array();
  for (const Rt2Int& a : frey::weil_candidates(3)) {
    candidates.push_back(rt2_json(a));
    if (congruent_above_p(a, Rt2Int{0, 0}, p)) surviving.push_back(rt2_json(a));
  }
  return {{"candidates", candidates}, {"surviving", surviving}};
}

json step_a3_classification(const json&) {
  json zero = json::array(), nonzero = json::array();
  for (const auto& [cls, entry] : frey::a3_table()) {
    json c = json::array({cls.first, cls.second});
    (entry.ab.value.irr == 0 ? zero : nonzero).push_back(c);
  }
  return {{"zero_classes", zero}, {"nonzero_classes", nonzero}};
}

json step_a3_prime_value(const json&) {
  std::optional<Rt2Int> magnitude;
  for (const auto& [cls, entry] : frey::a3_table()) {
    if (entry.ab.value.irr != 0) continue;
    if (magnitude && !(*magnitude == entry.ba.value))
      throw StructureViolationError("a3_prime_value: magnitudes differ between classes");
    magnitude = entry.ba.value;
  }
  if (!magnitude) throw StructureViolationError("a3_prime_value: no vanishing class");
  return {{"ba_magnitude", rt2_json(*magnitude)}};
}

json step_eliminate_f3_f4(const json& in) {
  return {{"eliminated", eliminate_f3_f4(int_from_json(in.at("p")))}};
}

json step_eliminate_f5_f6(const json& in) {
  return {{"eliminated", eliminate_f5_f6(int_from_json(in.at("p")))}};
}

json step_forced_newform(const json& in) {
  const Int p = int_from_json(in.at("p"));
  json survivors = json::array();
  if (!eliminate_f3_f4(p)) {
    survivors.push_back("f3");
    survivors.push_back("f4");
  }
  if (!eliminate_f5_f6(p)) {
    survivors.push_back("f5");
    survivors.push_back("f6");
  }
  // f2 carries a_3 = +-2*sqrt(2) itself, so it always survives this filter.
  survivors.push_back("f2");
  return {{"survivors", survivors}};
}

json step_first_case_from_full(const json& in);

json step_level_raising_dichotomy(const json& in) {
  const Int p = int_from_json(in.at("p"));
  if (!is_prime(p) || p == 2) throw DomainError("level_raising_dichotomy: bad p");
  auto rhs = [&p](const Int& r) -> Int {
    return (((r * (r + 1) * (r + 1)) % p) + p) % p;
  };
  return {{"rhs_at_plus_one", int_json(rhs(Int(1)))},
          {"rhs_at_minus_one", int_json(rhs(p - 1))}};
}

json step_minus_one_branch(const json& in) {
  const Int p = int_from_json(in.at("p"));
  int leg = legendre(Int(-1), p);
  return {{"legendre_minus_one", leg}, {"contradiction", leg == -1}};
}

json step_plus_one_shape(const json& in) {
  const Int p = int_from_json(in.at("p"));
  if (!is_prime(p) || p == 2) throw DomainError("plus_one_shape: bad p");
  // a_q^2 = 4 and a_q = 2*alpha give alpha^2 = 4/4 = 1; beta^2 = q - alpha^2
  // with q = 1 (mod p).
  Int inv4;
  mpz_invert(inv4.get_mpz_t(), Int(4).get_mpz_t(), p.get_mpz_t());
  Int alpha_sq = (Int(4) * inv4) % p;
  Int beta_sq = ((Int(1) - alpha_sq) % p + p) % p;
  return {{"alpha_sq_mod_p", int_json(alpha_sq)}, {"beta_sq_mod_p", int_json(beta_sq)}};
}

json step_product_formula_closure(const json& in) {
  const Int p = int_from_json(in.at("p"));
  if (!is_prime(p) || p == 2) throw DomainError("product_formula_closure: bad p");
  const std::vector<GaussianInt> units = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  auto reduced = [&p](const GaussianInt& g) -> std::pair<Int, Int> {
    return {((g.re % p) + p) % p, ((g.im % p) + p) % p};
  };
  std::vector<std::pair<Int, Int>> classes;
  json unit_classes = json::array();
  bool re_im_zero = true;
  for (const auto& u : units) {
    auto r = reduced(u);
    classes.push_back(r);
    unit_classes.push_back(json::array({int_json(r.first), int_json(r.second)}));
    if ((r.first * r.second) % p != 0) re_im_zero = false;
  }
  bool closed = true;
  for (const auto& u : units)
    for (const auto& v : units) {
      auto r = reduced(u * v);
      bool found = false;
      for (const auto& c : classes) found = found || c == r;
      closed = closed && found;
    }
  return {{"unit_classes", unit_classes},
          {"closed", closed},
          {"product_re_im_zero", re_im_zero}};
}

json step_small_prime_class(const json& in) {
  const Int p = int_from_json(in.at("p"));
  long m = Int(p % 8).get_si();
  return {{"p_mod_8", m}, {"classical", p <= 13 && p != 7}};
}

using StepFn = json (*)(const json&);

const std::map<std::string, StepFn>& step_functions() {
  static const std::map<std::string, StepFn> m = {
      {"coverage_check", step_coverage_check},
      {"cartan_type", step_cartan_type},
      {"a3_forced_zero", step_a3_forced_zero},
      {"a3_classification", step_a3_classification},
      {"a3_prime_value", step_a3_prime_value},
      {"eliminate_f3_f4", step_eliminate_f3_f4},
      {"eliminate_f5_f6", step_eliminate_f5_f6},
      {"forced_newform", step_forced_newform},
      {"first_case_from_full", step_first_case_from_full},
      {"level_raising_dichotomy", step_level_raising_dichotomy},
      {"minus_one_branch", step_minus_one_branch},
      {"plus_one_shape", step_plus_one_shape},
      {"product_formula_closure", step_product_formula_closure},
      {"small_prime_class", step_small_prime_class},
  };
  return m;
}

Step make_axiom(const std::string& label) {
  return {StepKind::Axiom, label, json::object(), json::object(),
          axiom_statements().at(label)};
}

Step make_computed(const std::string& label, json inputs) {
  json outputs = replay_step(label, inputs);
  return {StepKind::Computed, label, std::move(inputs), std::move(outputs),
          computed_statements().at(label)};
}

// The shared opening of every modular argument.
void push_modular_preamble(std::vector<Step>& steps) {
  steps.push_back(make_axiom("Modularity"));
  steps.push_back(make_axiom("IrreducibilityAbove13"));
  steps.push_back(make_axiom("LevelLowering"));
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw StructureViolationError("verdict chain broke: " + what);
}

json step_first_case_from_full(const json& in) {
  const Int p = int_from_json(in.at("p"));
  return {{"theorem1_verdict", to_string(theorem1_verdict(p).verdict)}};
}

}  // namespace

json VerdictReport::to_json() const {
  json steps_json = json::array();
  for (const auto& s : steps)
    steps_json.push_back({{"kind", s.kind == StepKind::Computed ? "computed" : "axiom"},
                          {"label", s.label},
                          {"inputs", s.inputs},
                          {"outputs", s.outputs},
                          {"paper_quote", s.statement}});
  return {{"p", int_json(p)},
          {"target", to_string(target)},
          {"verdict", to_string(verdict)},
          {"steps", steps_json}};
}

VerdictReport theorem1_verdict(const Int& p) {
  if (!is_prime(p)) throw DomainError("theorem1_verdict: " + p.get_str() + " is not prime");
  VerdictReport r{p, Target::Theorem1, Verdict::NotCovered, {}};
  const json jp = int_json(p);

  if (p <= 13) {
    r.steps.push_back(make_computed("coverage_check", {{"target", "Theorem1"}, {"p", jp}}));
    return r;
  }

  push_modular_preamble(r.steps);
  Step qi_cartan = make_computed("cartan_type", {{"cm_disc", -4}, {"p", jp}});
  const std::string qi_type = qi_cartan.outputs.at("type").get<std::string>();
  r.steps.push_back(std::move(qi_cartan));

  if (p % 4 == 1) {
    // Level 32 route: the congruence with f1 puts the image in a split
    // Cartan normalizer.
    expect(qi_type == "Split", "Q(i) Cartan should be split for p = 1 (mod 4)");
    r.steps.push_back(make_axiom("SplitCartanImpossible"));
    r.verdict = Verdict::Eliminated;
    return r;
  }

  expect(qi_type == "NonSplit", "Q(i) Cartan should be non-split for p = 3 (mod 4)");
  if (p % 8 == 7) {
    Step s2 = make_computed("cartan_type", {{"cm_disc", -8}, {"p", jp}});
    expect(s2.outputs.at("type") == "NonSplit",
           "Q(sqrt(-2)) Cartan should be non-split for p = 7 (mod 8)");
    r.steps.push_back(std::move(s2));
    r.steps.push_back(make_computed("coverage_check", {{"target", "Theorem1"}, {"p", jp}}));
    return r;
  }

  // p = 3 (mod 8): the level 32 congruence still pins a_3, and the companion
  // curve's level 256 form is forced to be f2.
  Step forced = make_computed("a3_forced_zero", {{"p", jp}});
  expect(forced.outputs.at("surviving") ==
             json::array({json{{"rat", 0}, {"irr", 0}}}),
         "a_3 should be forced to 0");
  r.steps.push_back(std::move(forced));
  r.steps.push_back(make_computed("a3_classification", json::object()));
  r.steps.push_back(make_computed("a3_prime_value", json::object()));

  Step e34 = make_computed("eliminate_f3_f4", {{"p", jp}});
  expect(e34.outputs.at("eliminated").get<bool>(), "f3/f4 elimination");
  r.steps.push_back(std::move(e34));
  Step e56 = make_computed("eliminate_f5_f6", {{"p", jp}});
  expect(e56.outputs.at("eliminated").get<bool>(), "f5/f6 elimination");
  r.steps.push_back(std::move(e56));
  Step survivor = make_computed("forced_newform", {{"p", jp}});
  expect(survivor.outputs.at("survivors") == json::array({"f2"}), "f2 should be forced");
  r.steps.push_back(std::move(survivor));

  Step s2_cartan = make_computed("cartan_type", {{"cm_disc", -8}, {"p", jp}});
  expect(s2_cartan.outputs.at("type") == "Split",
         "Q(sqrt(-2)) Cartan should be split for p = 3 (mod 8)");
  r.steps.push_back(std::move(s2_cartan));
  r.steps.push_back(make_axiom("SplitCartanImpossible"));
  r.verdict = Verdict::Eliminated;
  return r;
}

VerdictReport theorem2_verdict(const Int& p) {
  if (!is_prime(p)) throw DomainError("theorem2_verdict: " + p.get_str() + " is not prime");
  VerdictReport r{p, Target::Theorem2, Verdict::NotCovered, {}};
  const json jp = int_json(p);

  if (p == 7) {
    r.steps.push_back(make_computed("coverage_check", {{"target", "Theorem2"}, {"p", jp}}));
    return r;
  }
  if (p <= 13) {
    r.steps.push_back(make_computed("small_prime_class", {{"p", jp}}));
    r.steps.push_back(make_axiom("ClassicalSmallPrimes"));
    r.verdict = Verdict::ExternalClassical;
    return r;
  }

  if (p % 8 != 7) {
    // Theorem 1 already eliminates every solution, First Case included.
    VerdictReport full = theorem1_verdict(p);
    expect(full.verdict == Verdict::Eliminated, "theorem 1 should eliminate p");
    r.steps = std::move(full.steps);
    r.steps.push_back(make_computed("first_case_from_full", {{"p", jp}}));
    r.verdict = Verdict::FirstCaseProved;
    return r;
  }

  // p = 7 (mod 8), p > 13: the level raising argument at the primes dividing C.
  push_modular_preamble(r.steps);
  Step qi_cartan = make_computed("cartan_type", {{"cm_disc", -4}, {"p", jp}});
  expect(qi_cartan.outputs.at("type") == "NonSplit",
         "Q(i) Cartan should be non-split for p = 3 (mod 4)");
  r.steps.push_back(std::move(qi_cartan));

  r.steps.push_back(make_axiom("FactorsOfCAreOneModFour"));
  r.steps.push_back(make_axiom("CuspFieldOfDefinition"));
  r.steps.push_back(make_axiom("LevelRaising"));

  Step dich = make_computed("level_raising_dichotomy", {{"p", jp}});
  expect(dich.outputs.at("rhs_at_plus_one") == json(4) &&
             dich.outputs.at("rhs_at_minus_one") == json(0),
         "level raising dichotomy should read 4 / 0");
  r.steps.push_back(std::move(dich));

  Step minus = make_computed("minus_one_branch", {{"p", jp}});
  expect(minus.outputs.at("contradiction").get<bool>(),
         "q = -1 branch should be contradictory for p = 3 (mod 4)");
  r.steps.push_back(std::move(minus));

  Step plus = make_computed("plus_one_shape", {{"p", jp}});
  expect(plus.outputs.at("alpha_sq_mod_p") == json(1) &&
             plus.outputs.at("beta_sq_mod_p") == json(0),
         "q = +1 branch should force the (1, 0) shape");
  r.steps.push_back(std::move(plus));

  Step closure = make_computed("product_formula_closure", {{"p", jp}});
  expect(closure.outputs.at("closed").get<bool>() &&
             closure.outputs.at("product_re_im_zero").get<bool>(),
         "unit classes should close up with re*im = 0");
  r.steps.push_back(std::move(closure));

  r.verdict = Verdict::FirstCaseProved;
  return r;
}

json replay_step(const std::string& label, const json& inputs) {
  auto it = step_functions().find(label);
  if (it == step_functions().end()) {
    if (axiom_statements().count(label))
      throw DomainError("replay_step: " + label + " is an axiom, not a computed step");
    throw DomainError("replay_step: unknown step label " + label);
  }
  return it->second(inputs);
}

}  // namespace fermat4::obstruction
