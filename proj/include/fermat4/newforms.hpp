#pragma once

#include <array>
#include <optional>
#include <string>

#include "fermat4/arith.hpp"
#include "fermat4/elliptic.hpp"

namespace fermat4::newforms {

// CM field of a form, named by discriminant.
enum class CmField { QI = -4, QSqrtMinus2 = -8 };

enum class CoefficientField { Q, QSqrt2 };

// Primes whose eigenvalues the table pins down.
inline constexpr std::array<int, 7> kTablePrimes{2, 3, 5, 7, 11, 13, 17};

struct NewformRecord {
  std::string label;  // f1 .. f6
  int level;          // 32 or 256
  CmField cm;
  CoefficientField coefficients;
  // Eigenvalues a_p for p in kTablePrimes, as elements of Z[sqrt(2)]
  // (rational forms only use the rational part).
  std::array<Rt2Int, 7> table;
  // A curve reproducing the eigenvalue row: rational model for the forms with
  // rational coefficients, a Q(i)-model for f2.
  std::optional<elliptic::WeierstrassCurve<Int>> rational_model;
  std::optional<elliptic::WeierstrassCurve<GaussianInt>> gaussian_model;
};

// The canonical six-form table as shipped (identical to data/newforms.txt).
const char* embedded_table_text();

// All six records, models identified and verified on first use.
// Identification failure raises ModelUnavailableError.
const std::array<NewformRecord, 6>& all();
const NewformRecord& by_label(const std::string& label);

struct ComputedEigenvalue {
  Rt2Int value;
  bool sign_determined;  // false for f2 at inert primes with value != 0
};

// a_q recomputed from the form's model: a point count at any odd prime q of
// good reduction, and 0 at q = 2 (4 divides both levels). For f2 at inert q
// only the magnitude is recovered.
ComputedEigenvalue eigenvalue(const NewformRecord& f, const Int& q);

struct TwoSquaresLawResult {
  Int a_q;    // eigenvalue of f1 at q
  Int alpha;  // a_q / 2, sign as computed
  Int beta;   // the even leg of q = alpha^2 + beta^2
};

// For split q: checks a_q(f1) = 2*alpha against the parity-normalized
// decomposition q = alpha^2 + beta^2 (alpha odd, beta even). Any mismatch
// raises LawViolationError.
TwoSquaresLawResult verify_two_squares_law(const Int& q);

}  // namespace fermat4::newforms
