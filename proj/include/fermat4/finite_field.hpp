#pragma once

#include <cstdint>

#include "fermat4/arith.hpp"

namespace fermat4::ff {

// Largest field (q or q^2) that count_points will sweep exhaustively.
inline constexpr uint64_t kMaxFieldSize = 4'000'000;

// Element of F_q, q an odd prime. Values stay reduced to [0, q).
struct FqElem {
  uint64_t v = 0;
  uint64_t q = 0;

  bool operator==(const FqElem&) const = default;

  friend FqElem operator+(FqElem x, FqElem y);
  friend FqElem operator-(FqElem x, FqElem y);
  friend FqElem operator*(FqElem x, FqElem y);
  FqElem operator-() const;
};

FqElem make_fq(const Int& x, uint64_t q);
FqElem fq_pow(FqElem x, uint64_t e);
// Raises DivisionByZeroError on 0.
FqElem fq_inv(FqElem x);
bool is_square(FqElem x);

// Element a + b*i of F_{q^2} = F_q[i], which requires q = 3 (mod 4) so that
// x^2 + 1 stays irreducible.
struct Fq2Elem {
  uint64_t a = 0, b = 0;
  uint64_t q = 0;

  bool operator==(const Fq2Elem&) const = default;

  friend Fq2Elem operator+(Fq2Elem x, Fq2Elem y);
  friend Fq2Elem operator-(Fq2Elem x, Fq2Elem y);
  friend Fq2Elem operator*(Fq2Elem x, Fq2Elem y);
  Fq2Elem operator-() const;
};

Fq2Elem make_fq2(const GaussianInt& g, uint64_t q);
Fq2Elem make_fq2(uint64_t a, uint64_t b, uint64_t q);
Fq2Elem fq2_pow(Fq2Elem x, uint64_t e);
// Raises DivisionByZeroError on 0.
Fq2Elem fq2_inv(Fq2Elem x);
// Euler criterion with exponent (q^2 - 1) / 2; 0 counts as a square.
bool is_square(Fq2Elem x);

// Residue map Z[i] -> F_q at the split prime pi = s + t*i, q = N(pi) prime:
// i goes to -s * t^{-1} (mod q).
FqElem reduce_at_split_prime(const GaussianInt& g, const GaussianInt& pi);

}  // namespace fermat4::ff
