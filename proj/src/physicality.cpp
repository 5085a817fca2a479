#include "qutrit/physicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qutrit/bloch.hpp"
#include "qutrit/error.hpp"

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);
const double kSqrtThreeHalves = std::sqrt(1.5);

InequalityResult make_result(double direct, double closed) {
    InequalityResult r;
    r.lhs_direct = direct;
    r.lhs_closed = closed;
    r.holds = direct <= 1.0 + kPhysicalityTolerance;
    r.margin = 1.0 - direct;
    return r;
}

using Vec3 = std::array<Complex, 3>;

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double norm2(const Vec3& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

Vec3 normalized(const Vec3& v) {
    const double n = std::sqrt(norm2(v));
    return {v[0] / n, v[1] / n, v[2] / n};
}

// <u| M |v>
Complex sandwich(const Vec3& u, const Matrix3c& m, const Vec3& v) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < 3; ++c) row += m(r, c) * v[c];
        acc += std::conj(u[r]) * row;
    }
    return acc;
}

// Unit null vector of the rank-2 Hermitian matrix b. Rows of b annihilate the
// bilinear cross product of any two of them.
Vec3 null_vector(const Matrix3c& b) {
    const Vec3 r0{b(0, 0), b(0, 1), b(0, 2)};
    const Vec3 r1{b(1, 0), b(1, 1), b(1, 2)};
    const Vec3 r2{b(2, 0), b(2, 1), b(2, 2)};
    Vec3 best = cross(r0, r1);
    for (const Vec3& c : {cross(r0, r2), cross(r1, r2)}) {
        if (norm2(c) > norm2(best)) best = c;
    }
    return normalized(best);
}

}  // namespace

bool InequalityResult::consistent() const {
    return std::abs(lhs_direct - lhs_closed) <= kPhysicalityTolerance * std::max(1.0, std::abs(lhs_direct));
}

InequalityResult inequality1(const ParamVector& p) {
    const PowerTraces tr = power_traces(build_t(p));
    const Aggregates g = aggregates(p);
    const double closed = 3.0 * ((p.x * p.x + p.y * p.y) / 2.0 + g.A2 + g.B2);
    return make_result(1.5 * tr.trace2, closed);
}

InequalityResult inequality2(const ParamVector& p) {
    const PowerTraces tr = power_traces(build_t(p));
    const Aggregates g = aggregates(p);
    const double x = p.x;
    const double y = p.y;
    const double closed = 9.0 * ((x * x + y * y) / 2.0 + y * (y * y - 3.0 * x * x) / kSqrt6 +
                                 (1.0 + kSqrtThreeHalves * y) * g.A2 + (1.0 - kSqrt6 * y) * g.B2 -
                                 3.0 * kSqrt2 * x * g.C2 - 3.0 * g.D3);
    return make_result(9.0 * (tr.trace2 / 2.0 - tr.trace3), closed);
}

double hermitian_det(const HermitianMatrix3& m) {
    const double d0 = m.diagonal(0);
    const double d1 = m.diagonal(1);
    const double d2 = m.diagonal(2);
    const Complex e01 = m(0, 1);
    const Complex e02 = m(0, 2);
    const Complex e12 = m(1, 2);
    return d0 * d1 * d2 + 2.0 * (e01 * e12 * std::conj(e02)).real() - d0 * std::norm(e12) -
           d1 * std::norm(e02) - d2 * std::norm(e01);
}

CharCoeffs char_coeffs(const HermitianMatrix3& rho) {
    const double tr = rho.trace();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceTolerance) {
        throw InvalidMatrix(MatrixCheck::UnitTrace, "trace is " + std::to_string(tr) + ", expected 1");
    }
    const double d0 = rho.diagonal(0);
    const double d1 = rho.diagonal(1);
    const double d2 = rho.diagonal(2);
    CharCoeffs c;
    c.e2 = (d0 * d1 - std::norm(rho(0, 1))) + (d0 * d2 - std::norm(rho(0, 2))) +
           (d1 * d2 - std::norm(rho(1, 2)));
    c.e3 = hermitian_det(rho);
    return c;
}

std::array<double, 3> eigenvalues3(const HermitianMatrix3& m) {
    const double mean = m.trace() / 3.0;
    const HermitianMatrix3 t = m.shifted(-mean);

    const double p = power_traces(t).trace2 / 2.0;
    if (p <= 1e-30) return {mean, mean, mean};
    const double q = hermitian_det(t);

    const double arg = std::clamp(1.5 * q / p * std::sqrt(3.0 / p), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    const double radius = 2.0 * std::sqrt(p / 3.0);
    std::array<double, 3> roots{};
    for (int k = 0; k < 3; ++k) roots[k] = radius * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);

    // For arg >= 0 the largest root sits apart from the other two, otherwise the smallest.
    const double isolated = arg >= 0.0 ? roots[0] : roots[2];

    Matrix3c shifted = t.dense();
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= isolated;
    const Vec3 v = null_vector(shifted);

    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i) {
        if (std::abs(v[i]) < std::abs(v[k])) k = i;
    }
    Vec3 e1{};
    e1[k] = 1.0;
    for (std::size_t i = 0; i < 3; ++i) e1[i] -= v[i] * std::conj(v[k]);
    e1 = normalized(e1);
    const Vec3 c = cross(v, e1);
    const Vec3 e2 = normalized({std::conj(c[0]), std::conj(c[1]), std::conj(c[2])});

    const Matrix3c& td = t.dense();
    const double lambda_iso = sandwich(v, td, v).real();
    const double h11 = sandwich(e1, td, e1).real();
    const double h22 = sandwich(e2, td, e2).real();
    const Complex h12 = sandwich(e1, td, e2);
    const double centre = (h11 + h22) / 2.0;
    const double half_gap = std::hypot((h11 - h22) / 2.0, std::abs(h12));

    std::array<double, 3> out{lambda_iso + mean, centre + half_gap + mean, centre - half_gap + mean};
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

PhysicalityReport physicality_report(const ParamVector& params) {
    PhysicalityReport r;
    r.ineq1 = inequality1(params);
    r.ineq2 = inequality2(params);
    const HermitianMatrix3 rho = build_rho(params);
    r.coeffs = char_coeffs(rho);
    r.eigenvalues = eigenvalues3(rho);
    r.purity = power_traces(rho).trace2;
    r.physical = r.coeffs.e2 >= -kPhysicalityTolerance && r.coeffs.e3 >= -kPhysicalityTolerance;
    r.closed_forms_consistent = r.ineq1.consistent() && r.ineq2.consistent();
    return r;
}

}  // namespace qutrit
