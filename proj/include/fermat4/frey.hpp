#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fermat4/arith.hpp"
#include "fermat4/elliptic.hpp"

namespace fermat4::frey {

enum class Variant { AB, BA };

// The two companion curves over Q(i) attached to a primitive pair (A, B):
//   E_{A,B}: y^2 = x^3 + 2(1+i)A x^2 + (-B^2 + iA^2) x
//   E_{B,A}: y^2 = x^3 + 2(1+i)B x^2 + ( A^2 + iB^2) x
struct FreyCurve {
  Int A, B;
  Variant variant;
  elliptic::WeierstrassCurve<GaussianInt> curve;
};

// Requires gcd(A, B) = 1 (NotPrimitiveError otherwise). Checks on
// construction that |N(disc)| = 2^12 (A^4 + B^4)^3.
FreyCurve build_frey(const Int& A, const Int& B, Variant variant);

// Good reduction at an odd prime q: q does not divide N(disc).
bool has_good_reduction(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q);

// Trace recovered through a point count, sign possibly not.
struct QcurveTrace {
  Rt2Int value;          // z * sqrt(2); z >= 0 whenever sign_determined is false
  bool sign_determined;  // false for nonzero inert traces
  Int q;
};

// a_q for inert q (prime, q = 3 mod 4, good reduction): counts points over
// F_{q^2} and solves a_q^2 = a_{q^2} + 2q. The result is z*sqrt(2) with
// z >= 0; only its square is pinned by the count, so sign_determined is
// false unless z = 0.
QcurveTrace trace_inert(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q);

// a_q for split q (prime, q = 1 mod 4, good reduction): reduces at both
// primes above q and checks the two counts agree (ConjugacyViolationError
// otherwise).
Int trace_split(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q);

// All z*sqrt(2) allowed by the Weil bound at an inert prime q: |z| <=
// floor(sqrt(2q)), signs included, ascending.
std::vector<Rt2Int> weil_candidates(const Int& q);

struct A3Entry {
  QcurveTrace ab;  // a_3 of E_{A,B}, up to sign
  QcurveTrace ba;  // a_3 of E_{B,A}, up to sign
};

// |a_3| for both curves on each residue class (A mod 3, B mod 3) != (0, 0),
// computed once from coprime representatives. Construction verifies that
// a_3(E_{A,B}) = 0 exactly on the classes with A = 0 (mod 3), and that
// |a_3(E_{B,A})| = 2*sqrt(2) there.
const std::map<std::pair<int, int>, A3Entry>& a3_table();

}  // namespace fermat4::frey
