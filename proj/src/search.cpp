#include "fermat4/search.hpp"

namespace fermat4::search {

namespace {

Int fourth(const Int& x) { return x * x * x * x; }

bool coprime(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

}  // namespace

SearchReport search_solutions(const Int& max_ab, const std::vector<Int>& primes) {
  if (max_ab < 1) throw DomainError("search_solutions: need max_ab >= 1");
  for (const Int& p : primes)
    if (p == 2 || !is_prime(p))
      throw DomainError("search_solutions: " + p.get_str() + " is not an odd prime");

  SearchReport report{max_ab, 0, primes, {}, {}};
  for (Int a = 1; a <= max_ab; ++a) {
    const Int b_top = (a == 1) ? Int(1) : a - 1;
    for (Int b = 1; b <= b_top; ++b) {
      if (!coprime(a, b)) continue;
      ++report.pairs_scanned;
      const Int n = fourth(a) + fourth(b);
      for (const Int& p : primes)
        if (auto z = perfect_kth_root(n, static_cast<unsigned>(p.get_ui())))
          report.solutions.push_back({a, b, *z, p});
    }
  }
  return report;
}

SearchReport verify_side_claims(const Int& max_ab) {
  if (max_ab < 2) throw DomainError("verify_side_claims: need max_ab >= 2");

  SearchReport report{max_ab, 0, {}, {}, {}};
  for (Int a = 2; a <= max_ab; a += 2) {
    for (Int b = 1; b <= max_ab; b += 2) {
      if (!coprime(a, b)) continue;
      ++report.pairs_scanned;
      const Int n = fourth(a) + fourth(b);
      Int g;
      Int six(6);
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), six.get_mpz_t());
      if (g != 1)
        report.violations.push_back({a, b, n, "gcd(A^4 + B^4, 6) != 1"});
      for (const auto& [prime, exp] : factorize(n)) {
        if (prime % 4 != 1)
          report.violations.push_back(
              {a, b, n, "prime factor " + prime.get_str() + " != 1 (mod 4)"});
      }
    }
  }
  return report;
}

}  // namespace fermat4::search
