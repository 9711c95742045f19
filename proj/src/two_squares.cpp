#include "fermat4/two_squares.hpp"

#include <algorithm>
#include <set>

namespace fermat4::two_squares {

TwoSquaresRep TwoSquaresRep::canonical() const {
  Int a = abs(alpha), b = abs(beta);
  if (a > b) std::swap(a, b);
  return {a, b, n};
}

TwoSquaresRep decompose_prime(const Int& q) {
  if (!is_prime(q)) throw DomainError("decompose_prime: " + q.get_str() + " is not prime");
  if (q == 2) return {1, 1, 2};
  if (q % 4 == 3)
    throw NoRepresentationError(q.get_str() + " = 3 (mod 4) is not a sum of two squares");
  auto [pi, pibar] = gaussian_factor_split_prime(q);
  return {pi.re, pi.im, q};
}

TwoSquaresRep compose(const TwoSquaresRep& r1, const TwoSquaresRep& r2) {
  if (!r1.valid() || !r2.valid()) throw DomainError("compose: invalid representation");
  return {r1.alpha * r2.alpha - r1.beta * r2.beta,
          r1.alpha * r2.beta + r1.beta * r2.alpha, r1.n * r2.n};
}

std::vector<TwoSquaresRep> all_representations(const Int& n) {
  if (n < 1) throw DomainError("all_representations: need n >= 1, got " + n.get_str());
  if (n == 1) return {{0, 1, 1}};

  unsigned long two_exp = 0;
  Int inert_part = 1;
  std::vector<std::pair<GaussianInt, int>> split;
  for (const auto& [p, e] : factorize(n)) {
    if (p == 2) {
      two_exp = e;
    } else if (p % 4 == 3) {
      if (e % 2) return {};
      Int half;
      mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
      inert_part *= half;
    } else {
      split.emplace_back(gaussian_factor_split_prime(p).first, e);
    }
  }

  // z runs over (1+i)^v * prod pi_j^{a_j} * conj(pi_j)^{e_j - a_j}; units and
  // conjugation only permute signs, so |re|, |im| already cover every
  // representation.
  const GaussianInt ramified = gpow({1, 1}, two_exp);
  std::set<std::pair<Int, Int>> seen;
  std::vector<int> choice(split.size(), 0);
  for (;;) {
    GaussianInt z = ramified;
    for (size_t j = 0; j < split.size(); ++j) {
      const auto& [pi, e] = split[j];
      z = z * gpow(pi, choice[j]) * gpow(pi.conj(), e - choice[j]);
    }
    Int a = abs(z.re) * inert_part, b = abs(z.im) * inert_part;
    if (a > b) std::swap(a, b);
    seen.emplace(a, b);

    size_t j = 0;
    while (j < split.size() && choice[j] == split[j].second) choice[j++] = 0;
    if (j == split.size()) break;
    ++choice[j];
  }

  std::vector<TwoSquaresRep> out;
  for (const auto& [a, b] : seen) out.push_back({a, b, n});
  return out;
}

std::vector<TwoSquaresRep> all_representations_naive(const Int& n) {
  if (n < 1) throw DomainError("all_representations_naive: need n >= 1, got " + n.get_str());
  std::vector<TwoSquaresRep> out;
  for (Int a = 0; 2 * a * a <= n; ++a) {
    Int rest = n - a * a;
    Int b;
    mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
    if (b * b == rest) out.push_back({a, b, n});
  }
  return out;
}

}  // namespace fermat4::two_squares
