#include "fermat4/finite_field.hpp"

namespace fermat4::ff {

namespace {

uint64_t require_same_field(uint64_t qa, uint64_t qb) {
  if (qa == 0 || qa != qb)
    throw DomainError("finite field arithmetic mixed modulus " + std::to_string(qa) +
                      " with " + std::to_string(qb));
  return qa;
}

uint64_t addmod(uint64_t x, uint64_t y, uint64_t q) {
  uint64_t s = x + y;
  return s >= q ? s - q : s;
}

uint64_t submod(uint64_t x, uint64_t y, uint64_t q) { return x >= y ? x - y : x + q - y; }

uint64_t mulmod(uint64_t x, uint64_t y, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % q);
}

}  // namespace

FqElem operator+(FqElem x, FqElem y) {
  uint64_t q = require_same_field(x.q, y.q);
  return {addmod(x.v, y.v, q), q};
}

FqElem operator-(FqElem x, FqElem y) {
  uint64_t q = require_same_field(x.q, y.q);
  return {submod(x.v, y.v, q), q};
}

FqElem operator*(FqElem x, FqElem y) {
  uint64_t q = require_same_field(x.q, y.q);
  return {mulmod(x.v, y.v, q), q};
}

FqElem FqElem::operator-() const { return {v == 0 ? 0 : q - v, q}; }

FqElem make_fq(const Int& x, uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(Int(q)))
    throw DomainError("make_fq: " + std::to_string(q) + " is not an odd prime");
  if (q >= (uint64_t{1} << 32)) throw DomainError("make_fq: modulus too large");
  Int r;
  mpz_mod_ui(r.get_mpz_t(), x.get_mpz_t(), q);
  return {r.get_ui(), q};
}

FqElem fq_pow(FqElem x, uint64_t e) {
  FqElem acc{1 % x.q, x.q};
  while (e) {
    if (e & 1) acc = acc * x;
    x = x * x;
    e >>= 1;
  }
  return acc;
}

FqElem fq_inv(FqElem x) {
  if (x.v == 0) throw DivisionByZeroError("inverse of 0 in F_" + std::to_string(x.q));
  return fq_pow(x, x.q - 2);
}

bool is_square(FqElem x) {
  if (x.v == 0) return true;
  return fq_pow(x, (x.q - 1) / 2).v == 1;
}

Fq2Elem operator+(Fq2Elem x, Fq2Elem y) {
  uint64_t q = require_same_field(x.q, y.q);
  return {addmod(x.a, y.a, q), addmod(x.b, y.b, q), q};
}

Fq2Elem operator-(Fq2Elem x, Fq2Elem y) {
  uint64_t q = require_same_field(x.q, y.q);
  return {submod(x.a, y.a, q), submod(x.b, y.b, q), q};
}

Fq2Elem operator*(Fq2Elem x, Fq2Elem y) {
  uint64_t q = require_same_field(x.q, y.q);
  uint64_t re = submod(mulmod(x.a, y.a, q), mulmod(x.b, y.b, q), q);
  uint64_t im = addmod(mulmod(x.a, y.b, q), mulmod(x.b, y.a, q), q);
  return {re, im, q};
}

Fq2Elem Fq2Elem::operator-() const { return {a == 0 ? 0 : q - a, b == 0 ? 0 : q - b, q}; }

Fq2Elem make_fq2(const GaussianInt& g, uint64_t q) {
  if (q % 4 != 3 || !is_prime(Int(q)))
    throw DomainError("make_fq2: " + std::to_string(q) + " is not a prime = 3 (mod 4)");
  if (q >= (uint64_t{1} << 32)) throw DomainError("make_fq2: modulus too large");
  Int a, b;
  mpz_mod_ui(a.get_mpz_t(), g.re.get_mpz_t(), q);
  mpz_mod_ui(b.get_mpz_t(), g.im.get_mpz_t(), q);
  return {a.get_ui(), b.get_ui(), q};
}

Fq2Elem make_fq2(uint64_t a, uint64_t b, uint64_t q) {
  return make_fq2(GaussianInt{Int(a), Int(b)}, q);
}

Fq2Elem fq2_pow(Fq2Elem x, uint64_t e) {
  Fq2Elem acc{1 % x.q, 0, x.q};
  while (e) {
    if (e & 1) acc = acc * x;
    x = x * x;
    e >>= 1;
  }
  return acc;
}

Fq2Elem fq2_inv(Fq2Elem x) {
  if (x.a == 0 && x.b == 0)
    throw DivisionByZeroError("inverse of 0 in F_" + std::to_string(x.q) + "^2");
  // (a + bi)^{-1} = (a - bi) / (a^2 + b^2); a^2 + b^2 != 0 since -1 is a
  // non-residue mod q.
  uint64_t q = x.q;
  uint64_t nrm = addmod(mulmod(x.a, x.a, q), mulmod(x.b, x.b, q), q);
  uint64_t inv = fq_inv(FqElem{nrm, q}).v;
  uint64_t neg_b = x.b == 0 ? 0 : q - x.b;
  return {mulmod(x.a, inv, q), mulmod(neg_b, inv, q), q};
}

bool is_square(Fq2Elem x) {
  if (x.a == 0 && x.b == 0) return true;
  uint64_t e = (x.q * x.q - 1) / 2;
  Fq2Elem r = fq2_pow(x, e);
  return r.a == 1 && r.b == 0;
}

FqElem reduce_at_split_prime(const GaussianInt& g, const GaussianInt& pi) {
  Int q = pi.norm();
  if (!is_prime(q))
    throw DomainError("reduce_at_split_prime: N(pi) = " + q.get_str() + " is not prime");
  if (q == 2) throw RamifiedPrimeError("reduce_at_split_prime: pi lies over 2");
  uint64_t qu = q.get_ui();
  FqElem s = make_fq(pi.re, qu), t = make_fq(pi.im, qu);
  FqElem i_image = -(s * fq_inv(t));
  return make_fq(g.re, qu) + make_fq(g.im, qu) * i_image;
}

}  // namespace fermat4::ff
