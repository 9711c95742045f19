#include "fermat4/frey.hpp"

namespace fermat4::frey {

FreyCurve build_frey(const Int& A, const Int& B, Variant variant) {
  Int g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  if (g != 1)
    throw NotPrimitiveError("build_frey: gcd(" + A.get_str() + ", " + B.get_str() +
                            ") = " + g.get_str());
  GaussianInt a2, a4;
  if (variant == Variant::AB) {
    a2 = {2 * A, 2 * A};
    a4 = {-(B * B), A * A};
  } else {
    a2 = {2 * B, 2 * B};
    a4 = {A * A, B * B};
  }
  FreyCurve f{A, B, variant, {a2, a4, GaussianInt{}}};

  Int c = A * A * A * A + B * B * B * B;
  if (elliptic::discriminant(f.curve).norm() != Int(4096) * c * c * c)
    throw StructureViolationError("build_frey: discriminant norm is not 2^12 (A^4+B^4)^3");
  return f;
}

bool has_good_reduction(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q) {
  if (q == 2 || !is_prime(q))
    throw DomainError("has_good_reduction: q must be an odd prime");
  Int n = elliptic::discriminant(E).norm();
  if (n == 0) return false;
  return n % q != 0;
}

QcurveTrace trace_inert(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q) {
  if (!is_prime(q) || q % 4 != 3)
    throw DomainError("trace_inert: " + q.get_str() + " is not a prime = 3 (mod 4)");
  if (!has_good_reduction(E, q))
    throw BadReductionError("trace_inert: bad reduction at " + q.get_str());

  auto fr = elliptic::trace_of_frobenius(elliptic::reduce_at_inert_prime(E, q.get_ui()));
  // a_q^2 = a_{q^2} + 2q (Frobenius at q squares to Frobenius at q^2 times q).
  Int sq = fr.trace + 2 * q;
  if (sq < 0 || sq % 2 != 0)
    throw StructureViolationError("trace_inert: a_q^2 = " + sq.get_str() +
                                  " is not of the form 2z^2");
  Int half = sq / 2;
  Int z;
  mpz_sqrt(z.get_mpz_t(), half.get_mpz_t());
  if (z * z != half)
    throw StructureViolationError("trace_inert: a_q^2 = " + sq.get_str() +
                                  " is not of the form 2z^2");
  return {Rt2Int{0, z}, z == 0, q};
}

Int trace_split(const elliptic::WeierstrassCurve<GaussianInt>& E, const Int& q) {
  if (!is_prime(q) || q % 4 != 1)
    throw DomainError("trace_split: " + q.get_str() + " is not a prime = 1 (mod 4)");
  if (!has_good_reduction(E, q))
    throw BadReductionError("trace_split: bad reduction at " + q.get_str());

  auto [pi, pibar] = gaussian_factor_split_prime(q);
  auto t1 = elliptic::trace_of_frobenius(elliptic::reduce_at_split_prime(E, pi));
  auto t2 = elliptic::trace_of_frobenius(elliptic::reduce_at_split_prime(E, pibar));
  if (t1.trace != t2.trace)
    throw ConjugacyViolationError("trace_split: reductions at conjugate primes over " +
                                  q.get_str() + " disagree: " + t1.trace.get_str() + " vs " +
                                  t2.trace.get_str());
  return t1.trace;
}

std::vector<Rt2Int> weil_candidates(const Int& q) {
  if (!is_prime(q) || q % 4 != 3)
    throw DomainError("weil_candidates: " + q.get_str() + " is not a prime = 3 (mod 4)");
  // (z*sqrt(2))^2 <= 4q means |z| <= floor(sqrt(2q)).
  Int bound = 2 * q;
  Int zmax;
  mpz_sqrt(zmax.get_mpz_t(), bound.get_mpz_t());
  std::vector<Rt2Int> out;
  for (Int z = -zmax; z <= zmax; ++z) out.push_back(Rt2Int{0, z});
  return out;
}

namespace {

// Smallest coprime (A, B) with the given residues mod 3.
std::pair<Int, Int> coprime_representative(int a, int b) {
  for (int A = a; A < 9; A += 3)
    for (int B = b; B < 9; B += 3) {
      if (A == 0 && B == 0) continue;
      Int g;
      Int Ai(A), Bi(B);
      mpz_gcd(g.get_mpz_t(), Ai.get_mpz_t(), Bi.get_mpz_t());
      if (g == 1) return {Ai, Bi};
    }
  throw StructureViolationError("no coprime representative found");
}

}  // namespace

const std::map<std::pair<int, int>, A3Entry>& a3_table() {
  static const std::map<std::pair<int, int>, A3Entry> table = [] {
    std::map<std::pair<int, int>, A3Entry> t;
    const Int three(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        auto [A, B] = coprime_representative(a, b);
        t.emplace(std::make_pair(a, b),
                  A3Entry{trace_inert(build_frey(A, B, Variant::AB).curve, three),
                          trace_inert(build_frey(A, B, Variant::BA).curve, three)});
      }
    for (const auto& [cls, entry] : t) {
      const bool expect_zero = cls.first == 0;
      if ((entry.ab.value.irr == 0) != expect_zero)
        throw StructureViolationError("a3 table: vanishing pattern broken at class (" +
                                      std::to_string(cls.first) + ", " +
                                      std::to_string(cls.second) + ")");
      if (expect_zero && entry.ba.value.irr != 2)
        throw StructureViolationError("a3 table: |a_3(E_{B,A})| != 2*sqrt(2) where a_3 = 0");
    }
    return t;
  }();
  return table;
}

}  // namespace fermat4::frey
