#include "fermat4/elliptic.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <vector>

namespace fermat4::elliptic {

namespace {

std::mutex cache_mutex;
PointCountCache* active_cache = nullptr;

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t mulmod(uint64_t x, uint64_t y, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % q);
}

std::optional<Int> cache_lookup(uint64_t hash, const Int& field_size) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (!active_cache) return std::nullopt;
  return active_cache->lookup(hash, field_size);
}

void cache_store(uint64_t hash, const Int& field_size, const Int& count) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (active_cache) active_cache->store(hash, field_size, count);
}

}  // namespace

ff::FqElem ring_constant(int k, const ff::FqElem& model) { return ff::make_fq(Int(k), model.q); }

ff::Fq2Elem ring_constant(int k, const ff::Fq2Elem& model) {
  return ff::make_fq2(GaussianInt{Int(k), Int(0)}, model.q);
}

uint64_t curve_hash(const WeierstrassCurve<ff::FqElem>& E) {
  std::ostringstream os;
  os << "fq:" << E.a2.q << ":" << E.a2.v << ":" << E.a4.v << ":" << E.a6.v;
  return fnv1a(os.str());
}

uint64_t curve_hash(const WeierstrassCurve<ff::Fq2Elem>& E) {
  std::ostringstream os;
  os << "fq2:" << E.a2.q << ":" << E.a2.a << "," << E.a2.b << ":" << E.a4.a << "," << E.a4.b
     << ":" << E.a6.a << "," << E.a6.b;
  return fnv1a(os.str());
}

Int count_points(const WeierstrassCurve<ff::FqElem>& E) {
  const uint64_t q = E.a2.q;
  if (q == 0 || E.a4.q != q || E.a6.q != q)
    throw DomainError("count_points: coefficients live in different fields");
  if (q > ff::kMaxFieldSize) throw DomainError("count_points: field too large to sweep");
  if (discriminant(E).v == 0)
    throw SingularCurveError("count_points: singular curve over F_" + std::to_string(q));

  const uint64_t hash = curve_hash(E);
  if (auto hit = cache_lookup(hash, Int(q))) return *hit;

  // chi[v] = quadratic character of v, with chi[0] = 0.
  std::vector<int8_t> chi(q, -1);
  chi[0] = 0;
  for (uint64_t y = 1; y < q; ++y) chi[mulmod(y, y, q)] = 1;

  uint64_t count = 1;
  const uint64_t a2 = E.a2.v, a4 = E.a4.v, a6 = E.a6.v;
  for (uint64_t x = 0; x < q; ++x) {
    uint64_t f = mulmod(mulmod(x + a2, x, q) + a4, x, q) + a6;
    if (f >= q) f -= q;
    count += 1 + chi[f];
  }
  Int result(count);
  cache_store(hash, Int(q), result);
  return result;
}

Int count_points(const WeierstrassCurve<ff::Fq2Elem>& E) {
  const uint64_t q = E.a2.q;
  if (q == 0 || E.a4.q != q || E.a6.q != q)
    throw DomainError("count_points: coefficients live in different fields");
  if (q * q > ff::kMaxFieldSize) throw DomainError("count_points: field too large to sweep");
  {
    ff::Fq2Elem d = discriminant(E);
    if (d.a == 0 && d.b == 0)
      throw SingularCurveError("count_points: singular curve over F_" + std::to_string(q) +
                               "^2");
  }

  const uint64_t hash = curve_hash(E);
  const Int field_size = Int(q) * q;
  if (auto hit = cache_lookup(hash, field_size)) return *hit;

  auto idx = [q](const ff::Fq2Elem& z) { return z.a * q + z.b; };
  std::vector<uint8_t> sq(q * q, 0);
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      ff::Fq2Elem z{a, b, q};
      sq[idx(z * z)] = 1;
    }

  uint64_t count = 1;
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b) {
      ff::Fq2Elem x{a, b, q};
      ff::Fq2Elem f = ((x + E.a2) * x + E.a4) * x + E.a6;
      if (f.a == 0 && f.b == 0)
        count += 1;
      else if (sq[idx(f)])
        count += 2;
    }
  Int result(count);
  cache_store(hash, field_size, result);
  return result;
}

namespace {

template <typename Curve>
FrobeniusTrace trace_impl(const Curve& E, const Int& field_size) {
  Int count = count_points(E);
  Int trace = field_size + 1 - count;
  if (trace * trace > 4 * field_size)
    throw StructureViolationError("Weil bound violated: trace " + trace.get_str() +
                                  " over field of size " + field_size.get_str());
  return {field_size, trace, count};
}

}  // namespace

FrobeniusTrace trace_of_frobenius(const WeierstrassCurve<ff::FqElem>& E) {
  return trace_impl(E, Int(E.a2.q));
}

FrobeniusTrace trace_of_frobenius(const WeierstrassCurve<ff::Fq2Elem>& E) {
  return trace_impl(E, Int(E.a2.q) * E.a2.q);
}

WeierstrassCurve<ff::FqElem> reduce_mod_prime(const WeierstrassCurve<Int>& E, uint64_t q) {
  return {ff::make_fq(E.a2, q), ff::make_fq(E.a4, q), ff::make_fq(E.a6, q)};
}

WeierstrassCurve<ff::Fq2Elem> reduce_at_inert_prime(const WeierstrassCurve<GaussianInt>& E,
                                                    uint64_t q) {
  return {ff::make_fq2(E.a2, q), ff::make_fq2(E.a4, q), ff::make_fq2(E.a6, q)};
}

WeierstrassCurve<ff::FqElem> reduce_at_split_prime(const WeierstrassCurve<GaussianInt>& E,
                                                   const GaussianInt& pi) {
  return {ff::reduce_at_split_prime(E.a2, pi), ff::reduce_at_split_prime(E.a4, pi),
          ff::reduce_at_split_prime(E.a6, pi)};
}

void PointCountCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string hash_hex, size_str, count_str;
    if (!(ls >> hash_hex >> size_str >> count_str)) continue;
    uint64_t hash = std::stoull(hash_hex, nullptr, 16);
    entries_[{hash, Int(size_str)}] = Int(count_str);
  }
}

void PointCountCache::save(const std::string& path) const {
  std::ofstream out(path);
  std::ostringstream os;
  os << std::hex;
  for (const auto& [key, count] : entries_) {
    os.str("");
    os << key.first;
    out << os.str() << " " << key.second.get_str() << " " << count.get_str() << "\n";
  }
}

std::optional<Int> PointCountCache::lookup(uint64_t hash, const Int& field_size) const {
  auto it = entries_.find({hash, field_size});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PointCountCache::store(uint64_t hash, const Int& field_size, const Int& count) {
  entries_[{hash, field_size}] = count;
}

void set_point_count_cache(PointCountCache* cache) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  active_cache = cache;
}

}  // namespace fermat4::elliptic
