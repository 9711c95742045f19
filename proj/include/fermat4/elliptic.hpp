#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fermat4/arith.hpp"
#include "fermat4/finite_field.hpp"

namespace fermat4::elliptic {

// y^2 = x^3 + a2*x^2 + a4*x + a6 over a commutative coefficient ring R.
template <typename R>
struct WeierstrassCurve {
  R a2, a4, a6;
};

inline Int ring_constant(int k, const Int&) { return Int(k); }
inline GaussianInt ring_constant(int k, const GaussianInt&) { return {Int(k), Int(0)}; }
ff::FqElem ring_constant(int k, const ff::FqElem& model);
ff::Fq2Elem ring_constant(int k, const ff::Fq2Elem& model);

// 16 * (a2^2 a4^2 - 4 a4^3 - 4 a2^3 a6 + 18 a2 a4 a6 - 27 a6^2); for a6 = 0
// this collapses to 16 a4^2 (a2^2 - 4 a4).
template <typename R>
R discriminant(const WeierstrassCurve<R>& E) {
  const R &a2 = E.a2, &a4 = E.a4, &a6 = E.a6;
  R d = a2 * a2 * a4 * a4 - ring_constant(4, a2) * a4 * a4 * a4 -
        ring_constant(4, a2) * a2 * a2 * a2 * a6 + ring_constant(18, a2) * a2 * a4 * a6 -
        ring_constant(27, a2) * a6 * a6;
  return ring_constant(16, a2) * d;
}

struct FrobeniusTrace {
  Int field_size;
  Int trace;        // field_size + 1 - point_count
  Int point_count;  // projective points, including infinity
};

// Exhaustive count of projective points. Raises SingularCurveError when the
// discriminant vanishes, DomainError when the field exceeds kMaxFieldSize.
Int count_points(const WeierstrassCurve<ff::FqElem>& E);
Int count_points(const WeierstrassCurve<ff::Fq2Elem>& E);

// Wraps count_points and enforces |trace| <= 2*sqrt(field size).
FrobeniusTrace trace_of_frobenius(const WeierstrassCurve<ff::FqElem>& E);
FrobeniusTrace trace_of_frobenius(const WeierstrassCurve<ff::Fq2Elem>& E);

WeierstrassCurve<ff::FqElem> reduce_mod_prime(const WeierstrassCurve<Int>& E, uint64_t q);
WeierstrassCurve<ff::Fq2Elem> reduce_at_inert_prime(const WeierstrassCurve<GaussianInt>& E,
                                                    uint64_t q);
WeierstrassCurve<ff::FqElem> reduce_at_split_prime(const WeierstrassCurve<GaussianInt>& E,
                                                   const GaussianInt& pi);

// Optional persistent memo for exhaustive counts. File format: one record per
// line, "curve-hash field-size count", hash in hex.
class PointCountCache {
 public:
  // Merges records from path; silently accepts a missing file.
  void load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<Int> lookup(uint64_t curve_hash, const Int& field_size) const;
  void store(uint64_t curve_hash, const Int& field_size, const Int& count);
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<uint64_t, Int>, Int> entries_;
};

// Counting consults/updates the installed cache when one is set; pass nullptr
// to detach. Correctness never depends on cache state.
void set_point_count_cache(PointCountCache* cache);

uint64_t curve_hash(const WeierstrassCurve<ff::FqElem>& E);
uint64_t curve_hash(const WeierstrassCurve<ff::Fq2Elem>& E);

}  // namespace fermat4::elliptic
