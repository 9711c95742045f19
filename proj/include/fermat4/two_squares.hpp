#pragma once

#include <vector>

#include "fermat4/arith.hpp"

namespace fermat4::two_squares {

// A witness alpha^2 + beta^2 = n.
struct TwoSquaresRep {
  Int alpha, beta, n;

  bool valid() const { return alpha * alpha + beta * beta == n; }
  // (|alpha|, |beta|) with alpha <= beta.
  TwoSquaresRep canonical() const;

  bool operator==(const TwoSquaresRep&) const = default;
  bool operator<(const TwoSquaresRep& o) const {
    if (n != o.n) return n < o.n;
    if (alpha != o.alpha) return alpha < o.alpha;
    return beta < o.beta;
  }
};

// The decomposition of a prime q with q = 1 (mod 4), parity-normalized:
// alpha odd > 0, beta even > 0 (unique). decompose_prime(2) = (1, 1).
// q = 3 (mod 4) raises NoRepresentationError.
TwoSquaresRep decompose_prime(const Int& q);

// Brahmagupta-Fibonacci composition: a representation of r1.n * r2.n.
// Not canonicalized; signs fall where the identity puts them.
TwoSquaresRep compose(const TwoSquaresRep& r1, const TwoSquaresRep& r2);

// Every canonical representation (0 <= alpha <= beta) of n >= 1, sorted.
// Computed by factoring n in Z[i]; empty when some prime q = 3 (mod 4)
// divides n to an odd power.
std::vector<TwoSquaresRep> all_representations(const Int& n);

// Same set by exhaustive search over alpha <= sqrt(n/2). Slow; kept public as
// the independent route for cross-checking the algebraic one.
std::vector<TwoSquaresRep> all_representations_naive(const Int& n);

}  // namespace fermat4::two_squares
