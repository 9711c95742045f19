#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fermat4/arith.hpp"
#include "fermat4/newforms.hpp"
#include "fermat4/two_squares.hpp"

namespace fermat4::obstruction {

using json = nlohmann::json;

// Shape of the normalizer-of-Cartan image of the mod-p representation of a
// CM form: non-split exactly when the CM discriminant is a non-residue mod p.
enum class CartanType { Split, NonSplit, Ramified };

CartanType cartan_type(newforms::CmField cm, const Int& p);
std::string to_string(CartanType t);

// Congruence a = +-2 (mod P) for a in the Weil list at 3 is impossible: p
// divides neither N(+-2 - 0) = 4 nor N(+-2 -+ z*sqrt(2)) in {2, 4} for the
// nonzero candidates. p = 2 is the boundary where this fails.
bool eliminate_f5_f6(const Int& p);

// Congruence +-2*sqrt(2) = 0 (mod P) is impossible unless p | 8.
bool eliminate_f3_f4(const Int& p);

// q(q+1)^2 mod p, the level-raising constraint on a_q^2 at a prime q of
// multiplicative reduction. Requires distinct primes q, p.
Int level_raising_rhs(const Int& q, const Int& p);

enum class QBranch {
  ExcludedBy33,                 // q^2 != 1 (mod p): no such q divides C
  MinusOneBranchContradiction,  // q = -1 (mod p): forces beta^2 = -1 (mod p)
  PlusOneBranchShape,           // q = +1 (mod p): {alpha^2, beta^2} = {1, 0} (mod p)
  ShapeViolated                 // q = +1 (mod p) but the forced shape fails
};

std::string to_string(QBranch b);

struct QAnalysis {
  Int q, p;
  QBranch branch;
  two_squares::TwoSquaresRep decomposition;  // parity-normalized
  bool alpha_sq_is_1;                        // alpha^2 = 1 (mod p) for the odd leg
  bool p_divides_beta;                       // p | beta for the even leg
};

// First Case constraint at a prime q = 1 (mod 4) dividing C, for p = 3
// (mod 4). The branch classifier tests the symmetric condition
// {alpha^2, beta^2} = {1, 0} (mod p); the flags report the two legs
// literally.
QAnalysis first_case_constraint(const Int& q, const Int& p);

// Given the forced shapes of every prime q | C, checks that all Gaussian
// representations C^p = R^2 + S^2 satisfy p | RS. q_shapes must hold valid
// representations of distinct primes = 1 (mod 4); an empty list encodes
// C = 1.
bool product_formula_conclusion(const std::vector<two_squares::TwoSquaresRep>& q_shapes,
                                const Int& p);

enum class StepKind { Computed, Axiom };
enum class Target { Theorem1, Theorem2 };
enum class Verdict { Eliminated, FirstCaseProved, NotCovered, ExternalClassical };

std::string to_string(Target t);
std::string to_string(Verdict v);

// One link of a verdict chain. Computed steps carry inputs that replay_step
// maps back to the same outputs; axiom steps carry empty inputs/outputs and
// cite the external fact they stand on.
struct Step {
  StepKind kind;
  std::string label;
  json inputs;
  json outputs;
  std::string statement;
};

struct VerdictReport {
  Int p;
  Target target;
  Verdict verdict;
  std::vector<Step> steps;

  json to_json() const;
};

// Full non-existence for x^4 + y^4 = z^p: Eliminated when p > 13 and
// p mod 8 is in {1, 3, 5}, NotCovered otherwise.
VerdictReport theorem1_verdict(const Int& p);

// First Case: FirstCaseProved for p > 13, ExternalClassical for p <= 13
// except the uncovered p = 7.
VerdictReport theorem2_verdict(const Int& p);

// Recomputes the outputs of a computed step from its label and inputs;
// DomainError on unknown labels. Axiom labels are not replayable.
json replay_step(const std::string& label, const json& inputs);

// Serialization helper shared with the CLI: integers that fit in 64 bits
// stay numeric, anything larger becomes a decimal string.
json int_json(const Int& v);

}  // namespace fermat4::obstruction
