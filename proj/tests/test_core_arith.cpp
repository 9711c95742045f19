#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fermat4/arith.hpp"

using namespace fermat4;

namespace {

// Independent slow primality for the oracle comparisons.
bool slow_is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Euler criterion by direct powering, no reciprocity shortcuts.
int slow_legendre(long a, long p) {
  long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  long acc = 1;
  for (long e = 0; e < (p - 1) / 2; ++e) acc = (acc * r) % p;
  return acc == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("is_prime on known values") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK(is_prime(101));
  CHECK(is_prime(1009));
  CHECK(is_prime(Int("1000000007")));
  CHECK(is_prime(Int("1000000009")));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK_FALSE(is_prime(561));       // Carmichael
  CHECK_FALSE(is_prime(25326001));  // strong pseudoprime to bases 2, 3, 5
  CHECK_FALSE(is_prime(Int("1000003") * Int("999983")));
}

TEST_CASE("is_prime agrees with trial division up to 5000") {
  for (long n = 0; n <= 5000; ++n) CHECK(is_prime(Int(n)) == slow_is_prime(n));
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(30) ==
        std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<uint64_t>{2});
}

TEST_CASE("legendre on pinned values") {
  CHECK(legendre(-1, 19) == -1);
  CHECK(legendre(-2, 17) == 1);
  CHECK(legendre(-1, 13) == 1);
  CHECK(legendre(-2, 19) == 1);
  CHECK(legendre(-2, 23) == -1);
  CHECK(legendre(19, 19) == 0);
  CHECK_THROWS_AS(legendre(3, 2), DomainError);
  CHECK_THROWS_AS(legendre(3, 15), DomainError);
}

TEST_CASE("legendre agrees with the Euler criterion") {
  std::mt19937_64 rng(20250814);
  for (long p : {3L, 5L, 7L, 13L, 101L, 997L}) {
    for (int i = 0; i < 50; ++i) {
      long a = static_cast<long>(rng() % 4000) - 2000;
      CHECK(legendre(a, p) == slow_legendre(a, p));
    }
  }
}

TEST_CASE("factorize pinned values") {
  using F = std::vector<std::pair<Int, int>>;
  CHECK(factorize(65) == F{{5, 1}, {13, 1}});
  CHECK(factorize(20123648) == F{{2, 12}, {17, 3}});
  CHECK(factorize(2) == F{{2, 1}});
  CHECK(factorize(1024) == F{{2, 10}});
  CHECK(factorize(97) == F{{97, 1}});
  // Forces the rho path: both factors sit above the trial-division bound.
  CHECK(factorize(Int("999985999949")) == F{{999983, 1}, {1000003, 1}});
  // Perfect power of a large prime.
  CHECK(factorize(Int("1000003") * Int("1000003")) == F{{1000003, 2}});
  CHECK_THROWS_AS(factorize(1), DomainError);
  CHECK_THROWS_AS(factorize(0), DomainError);
  CHECK_THROWS_AS(factorize(-6), DomainError);
}

TEST_CASE("factorize reconstructs its input") {
  for (long n = 2; n <= 3000; ++n) {
    Int prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("perfect_kth_root") {
  CHECK(perfect_kth_root(32, 5) == Int(2));
  CHECK(perfect_kth_root(1, 7) == Int(1));
  CHECK(perfect_kth_root(Int("18446744073709551616"), 2) == Int("4294967296"));
  CHECK_FALSE(perfect_kth_root(1297, 4).has_value());  // 6^4 + 1
  CHECK_FALSE(perfect_kth_root(33, 5).has_value());
  CHECK_FALSE(perfect_kth_root(31, 5).has_value());
  CHECK_THROWS_AS(perfect_kth_root(0, 3), DomainError);
  CHECK_THROWS_AS(perfect_kth_root(8, 1), DomainError);
}

TEST_CASE("gaussian integer arithmetic") {
  GaussianInt a{3, 2}, b{1, -1};
  CHECK(a + b == GaussianInt{4, 1});
  CHECK(a - b == GaussianInt{2, 3});
  CHECK(a * b == GaussianInt{5, -1});
  CHECK(-a == GaussianInt{-3, -2});
  CHECK(a.conj() == GaussianInt{3, -2});
  CHECK(a.norm() == 13);
  CHECK(a * a.conj() == GaussianInt{13, 0});
  CHECK(gpow({1, 1}, 2) == GaussianInt{0, 2});
  CHECK(gpow({1, 1}, 0) == GaussianInt{1, 0});
  CHECK(gpow({2, 1}, 3) == GaussianInt{2, 11});
  CHECK(to_string(GaussianInt{3, 2}) == "3+2*i");
  CHECK(to_string(GaussianInt{0, -1}) == "-i");
  CHECK(to_string(GaussianInt{-2, 0}) == "-2");
}

TEST_CASE("gaussian_factor_split_prime") {
  auto check_split = [](long q, long re, long im) {
    auto [pi, pibar] = gaussian_factor_split_prime(q);
    CHECK(pi == GaussianInt{re, im});
    CHECK(pibar == pi.conj());
    CHECK(pi.norm() == q);
    CHECK(pi.re % 2 == 1);
    CHECK(pi.im % 2 == 0);
    CHECK(pi.re > 0);
    CHECK(pi.im > 0);
  };
  check_split(5, 1, 2);
  check_split(13, 3, 2);
  check_split(17, 1, 4);
  check_split(29, 5, 2);
  check_split(113, 7, 8);
  check_split(197, 1, 14);

  CHECK_THROWS_AS(gaussian_factor_split_prime(2), RamifiedPrimeError);
  CHECK_THROWS_AS(gaussian_factor_split_prime(7), InertPrimeError);
  CHECK_THROWS_AS(gaussian_factor_split_prime(15), DomainError);
}

TEST_CASE("gaussian_factor_split_prime across a range") {
  for (uint64_t q : primes_up_to(20000)) {
    if (q % 4 != 1) continue;
    auto [pi, pibar] = gaussian_factor_split_prime(Int(q));
    CHECK(pi.norm() == q);
    CHECK(pi.re % 2 == 1);
    CHECK(pi.im % 2 == 0);
    CHECK(pi.re > 0);
    CHECK(pi.im > 0);
  }
}

TEST_CASE("rt2 arithmetic and norms") {
  Rt2Int a{1, 1}, b{0, 2};
  CHECK((a * b) == Rt2Int{4, 2});
  CHECK((a + b) == Rt2Int{1, 3});
  CHECK((a - b) == Rt2Int{1, -1});
  CHECK(Rt2Int{0, 2}.norm() == -8);
  CHECK(Rt2Int{2, 0}.norm() == 4);
  CHECK(Rt2Int{0, 1}.norm() == -2);
  CHECK(Rt2Int{1, 1}.norm() == -1);
  CHECK(Rt2Int{3, 1}.norm() == 7);
  CHECK(a.conj() == Rt2Int{1, -1});
  CHECK((a * a.conj()) == Rt2Int{a.norm(), 0});
  CHECK(to_string(Rt2Int{0, 2}) == "2*rt2");
  CHECK(to_string(Rt2Int{0, -1}) == "-rt2");
  CHECK(to_string(Rt2Int{-3, 0}) == "-3");
  CHECK(to_string(Rt2Int{1, 3}) == "1+3*rt2");
  CHECK(to_string(Rt2Int{0, 0}) == "0");
}

TEST_CASE("congruent_above_p") {
  // N(2*rt2 - 0) = -8: no odd prime divides it.
  CHECK_FALSE(congruent_above_p(Rt2Int{0, 2}, Rt2Int{0, 0}, 3));
  CHECK_FALSE(congruent_above_p(Rt2Int{0, 2}, Rt2Int{0, 0}, 10007));
  // N(3) = 9.
  CHECK(congruent_above_p(Rt2Int{3, 0}, Rt2Int{0, 0}, 3));
  // N(2 - rt2) = 2, N(2 + 2*rt2) = -4: the +-2 vs candidates norms.
  CHECK_FALSE(congruent_above_p(Rt2Int{2, 0}, Rt2Int{0, 1}, 5));
  CHECK(congruent_above_p(Rt2Int{5, 1}, Rt2Int{0, 1}, 5));
  // 7 = N(3 + rt2).
  CHECK(congruent_above_p(Rt2Int{3, 1}, Rt2Int{0, 0}, 7));
  CHECK_THROWS_AS(congruent_above_p(Rt2Int{1, 0}, Rt2Int{0, 0}, 2), DomainError);
  CHECK_THROWS_AS(congruent_above_p(Rt2Int{1, 0}, Rt2Int{0, 0}, 9), DomainError);
}

TEST_CASE("congruence is symmetric and reflexive") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rt2Int x{Int(static_cast<long>(rng() % 41) - 20), Int(static_cast<long>(rng() % 41) - 20)};
    Rt2Int y{Int(static_cast<long>(rng() % 41) - 20), Int(static_cast<long>(rng() % 41) - 20)};
    Int p(std::vector<long>{3, 5, 7, 11, 13}[rng() % 5]);
    CHECK(congruent_above_p(x, x, p));
    CHECK(congruent_above_p(x, y, p) == congruent_above_p(y, x, p));
  }
}
