#include "fermat4/arith.hpp"

#include <algorithm>

namespace fermat4 {

namespace {

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// True if a proves n composite. n odd > a, n - 1 = d * 2^r with d odd.
bool mr_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  static const int kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                               43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  if (n < 2) return false;
  for (int p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 101 * 101) return true;
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // Deterministic for n < 3.3 * 10^24 (first twelve prime bases), far past
  // anything this project tests.
  static const int kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int a : kBases)
    if (mr_witness(n, a, d, r)) return false;
  return true;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p))
    throw DomainError("legendre: modulus " + p.get_str() + " is not an odd prime");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

void factor_into(const Int& n, std::vector<Int>& out);

// Pollard rho with Floyd cycle detection. n odd composite, not a perfect
// power, no factor below the trial-division bound.
void rho_split(const Int& n, std::vector<Int>& out) {
  for (unsigned c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd_int(abs(x - y), n);
    }
    if (d != n) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  // Perfect powers can trap rho in a degenerate cycle; peel them first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned k = 2;; ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
        std::vector<Int> sub;
        factor_into(root, sub);
        for (unsigned i = 0; i < k; ++i) out.insert(out.end(), sub.begin(), sub.end());
        return;
      }
    }
  }
  rho_split(n, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n <= 1) throw DomainError("factorize: need n > 1, got " + n.get_str());
  static const std::vector<uint64_t> kTrialPrimes = primes_up_to(10000);
  Int m = n;
  std::vector<Int> primes;
  for (uint64_t p : kTrialPrimes) {
    if (Int(p) * p > m) break;
    while (m % p == 0) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  if (m > 1) factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::optional<Int> perfect_kth_root(const Int& n, unsigned k) {
  if (n < 1) throw DomainError("perfect_kth_root: need n >= 1, got " + n.get_str());
  if (k < 2) throw DomainError("perfect_kth_root: need k >= 2");
  Int root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
  Int check;
  mpz_pow_ui(check.get_mpz_t(), root.get_mpz_t(), k);
  if (check == n) return root;
  return std::nullopt;
}

GaussianInt gpow(GaussianInt base, unsigned long exp) {
  GaussianInt acc{1, 0};
  while (exp) {
    if (exp & 1) acc = acc * base;
    base = base * base;
    exp >>= 1;
  }
  return acc;
}

std::string to_string(const GaussianInt& g) {
  if (g.im == 0) return g.re.get_str();
  std::string im_part = (g.im == 1) ? "i" : (g.im == -1) ? "-i" : g.im.get_str() + "*i";
  if (g.re == 0) return im_part;
  return g.re.get_str() + (g.im > 0 ? "+" : "") + im_part;
}

namespace {

// x with x^2 = -1 (mod q) for prime q = 1 (mod 4): power the smallest prime
// non-residue (kept deterministic on purpose).
Int sqrt_of_minus_one(const Int& q) {
  for (Int d = 2;; ++d) {
    if (mpz_legendre(d.get_mpz_t(), q.get_mpz_t()) == -1) return powmod(d, (q - 1) / 4, q);
  }
}

}  // namespace

std::pair<GaussianInt, GaussianInt> gaussian_factor_split_prime(const Int& q) {
  if (!is_prime(q))
    throw DomainError("gaussian_factor_split_prime: " + q.get_str() + " is not prime");
  if (q == 2) throw RamifiedPrimeError("2 ramifies in Z[i]");
  if (q % 4 == 3) throw InertPrimeError(q.get_str() + " is inert in Z[i]");
  // Cornacchia: run the Euclidean chain from (q, sqrt(-1) mod q) down to the
  // first remainder below sqrt(q); that remainder is one leg of q = a^2 + b^2.
  Int a = q, b = sqrt_of_minus_one(q);
  while (b * b > q) {
    Int t = a % b;
    a = b;
    b = t;
  }
  Int other_sq = q - b * b;
  Int other;
  mpz_sqrt(other.get_mpz_t(), other_sq.get_mpz_t());
  if (other * other != other_sq)
    throw StructureViolationError("cornacchia produced a non-square residual at q = " +
                                  q.get_str());
  Int odd = b, even = other;
  if (odd % 2 == 0) std::swap(odd, even);
  GaussianInt pi{odd, even};
  return {pi, pi.conj()};
}

std::string to_string(const Rt2Int& x) {
  auto irr_part = [](const Int& k) {
    return (k == 1) ? std::string("rt2")
                    : (k == -1) ? std::string("-rt2") : k.get_str() + "*rt2";
  };
  if (x.irr == 0) return x.rat.get_str();
  if (x.rat == 0) return irr_part(x.irr);
  return x.rat.get_str() + (x.irr > 0 ? "+" : "") + irr_part(x.irr);
}

bool congruent_above_p(const Rt2Int& x, const Rt2Int& y, const Int& p) {
  if (p == 2 || !is_prime(p))
    throw DomainError("congruent_above_p: modulus " + p.get_str() + " is not an odd prime");
  return (x - y).norm() % p == 0;
}

}  // namespace fermat4
