#pragma once

#include <string>
#include <vector>

#include "fermat4/arith.hpp"

namespace fermat4::search {

struct Solution {
  Int A, B, root, p;  // A^4 + B^4 = root^p
};

struct SideClaimViolation {
  Int A, B, n;        // n = A^4 + B^4
  std::string claim;  // which side claim failed
};

struct SearchReport {
  Int max_ab;
  Int pairs_scanned;
  std::vector<Int> primes;
  std::vector<Solution> solutions;
  std::vector<SideClaimViolation> violations;
};

// Exhaustive scan of coprime pairs 1 <= B <= A <= max_ab for perfect p-th
// powers A^4 + B^4 = z^p, for each odd prime p in primes. (Symmetry makes
// B <= A enough; B = A only holds for the pair (1, 1).)
SearchReport search_solutions(const Int& max_ab, const std::vector<Int>& primes);

// Checks the arithmetic facts the proof leans on, over every primitive pair
// with A even, B odd, A, B <= max_ab: gcd(A^4 + B^4, 6) = 1 and every prime
// factor of A^4 + B^4 is 1 (mod 4).
SearchReport verify_side_claims(const Int& max_ab);

}  // namespace fermat4::search
