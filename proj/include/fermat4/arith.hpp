#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fermat4/errors.hpp"

namespace fermat4 {

// Exact signed integer. Everything downstream assumes arithmetic is exact at
// any magnitude the verifier touches (C^p grows past 10^30 in the product
// formula checks).
using Int = mpz_class;

bool is_prime(const Int& n);

// Primes <= bound, ascending.
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Legendre symbol (a|p); p must be an odd prime.
int legendre(const Int& a, const Int& p);

// Prime factorization of n > 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// The exact k-th root of n >= 1 if n is a perfect k-th power, k >= 2.
std::optional<Int> perfect_kth_root(const Int& n, unsigned k);

// Element a + b*i of Z[i].
struct GaussianInt {
  Int re, im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  GaussianInt conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  bool operator==(const GaussianInt&) const = default;

  GaussianInt operator-() const { return {-re, -im}; }
  friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianInt operator*(const Int& c, const GaussianInt& y) {
    return {c * y.re, c * y.im};
  }
};

GaussianInt gpow(GaussianInt base, unsigned long exp);
std::string to_string(const GaussianInt& g);

// For a split prime q = 1 (mod 4): the factorization q = pi * conj(pi) with
// pi canonical (re odd > 0, im even > 0). q = 2 raises RamifiedPrimeError,
// q = 3 (mod 4) raises InertPrimeError.
std::pair<GaussianInt, GaussianInt> gaussian_factor_split_prime(const Int& q);

// Element a + b*sqrt(2) of Z[sqrt(2)].
struct Rt2Int {
  Int rat, irr;

  Rt2Int() : rat(0), irr(0) {}
  Rt2Int(Int a, Int b) : rat(std::move(a)), irr(std::move(b)) {}

  // N(a + b*sqrt(2)) = a^2 - 2b^2; negative values occur.
  Int norm() const { return rat * rat - 2 * irr * irr; }
  Rt2Int conj() const { return {rat, -irr}; }
  bool is_zero() const { return rat == 0 && irr == 0; }

  bool operator==(const Rt2Int&) const = default;

  Rt2Int operator-() const { return {-rat, -irr}; }
  friend Rt2Int operator+(const Rt2Int& x, const Rt2Int& y) {
    return {x.rat + y.rat, x.irr + y.irr};
  }
  friend Rt2Int operator-(const Rt2Int& x, const Rt2Int& y) {
    return {x.rat - y.rat, x.irr - y.irr};
  }
  friend Rt2Int operator*(const Rt2Int& x, const Rt2Int& y) {
    return {x.rat * y.rat + 2 * x.irr * y.irr, x.rat * y.irr + x.irr * y.rat};
  }
};

// Textual form used everywhere k*sqrt(2) has to be shown: "0", "-2", "2*rt2",
// "1+3*rt2".
std::string to_string(const Rt2Int& x);

// Whether x = y (mod P) for every prime P of Z[sqrt(2)] above the odd prime p.
// Equivalent to p | N(x - y).
bool congruent_above_p(const Rt2Int& x, const Rt2Int& y, const Int& p);

}  // namespace fermat4
