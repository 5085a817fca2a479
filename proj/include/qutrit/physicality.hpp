#pragma once

#include <array>

#include "qutrit/state.hpp"

namespace qutrit {

/// Single tolerance for every physicality verdict (e2, e3, eigenvalues, inequality LHS).
inline constexpr double kPhysicalityTolerance = 1e-10;

/// One trace inequality of the form lhs <= 1.
struct InequalityResult {
    double lhs_direct = 0.0;  // matrix path, normative
    double lhs_closed = 0.0;  // closed form in the original parameters
    bool holds = true;        // lhs_direct <= 1 + tolerance
    double margin = 1.0;      // 1 - lhs_direct

    /// False when the closed form disagrees with the matrix path beyond tolerance.
    bool consistent() const;
};

/// (3/2) Tr t^2 <= 1, i.e. Tr rho^2 <= 1.
InequalityResult inequality1(const ParamVector& params);
/// 9 Tr(t^2/2 - t^3) <= 1, i.e. 3 Tr rho^2 - 2 Tr rho^3 <= 1.
InequalityResult inequality2(const ParamVector& params);

/// Elementary symmetric functions of the eigenvalues of a unit-trace Hermitian matrix.
struct CharCoeffs {
    double e2 = 0.0;  // sum of principal 2x2 minors
    double e3 = 0.0;  // determinant
};

/// Requires unit trace; throws InvalidMatrix otherwise.
CharCoeffs char_coeffs(const HermitianMatrix3& rho);

/// Real determinant of a Hermitian matrix by cofactor expansion.
double hermitian_det(const HermitianMatrix3& m);

/// Eigenvalues in descending order.
///
/// The traceless part is solved with the trigonometric form of the depressed
/// cubic. The root isolated from the other two is then taken as a shift, its
/// eigenvector is recovered as a cross product of rows, and the remaining pair
/// comes from the exact 2x2 compression onto the orthogonal complement. This
/// keeps double roots (pure states) accurate to roundoff.
std::array<double, 3> eigenvalues3(const HermitianMatrix3& m);

struct PhysicalityReport {
    InequalityResult ineq1;
    InequalityResult ineq2;
    CharCoeffs coeffs;
    std::array<double, 3> eigenvalues{};
    bool physical = false;  // e2 >= -tol and e3 >= -tol
    double purity = 0.0;    // Tr rho^2
    bool closed_forms_consistent = true;

    bool eigenvalue_verdict() const { return eigenvalues[2] >= -kPhysicalityTolerance; }
    bool inequality_verdict() const { return ineq1.holds && ineq2.holds; }
};

PhysicalityReport physicality_report(const ParamVector& params);

}  // namespace qutrit
