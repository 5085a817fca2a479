#include "qutrit/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);
const double kSqrtTwoThirds = std::sqrt(2.0 / 3.0);

}  // namespace

Aggregates aggregates(const ParamVector& p) {
    require_finite(p);
    const double x = p.x;
    const double y = p.y;

    Aggregates g;
    g.A2 = p.a * p.a + p.b * p.b + p.alpha1 * p.alpha1 + p.beta1 * p.beta1;
    g.B2 = p.alpha2 * p.alpha2 + p.beta2 * p.beta2;
    g.C2 = p.a * p.alpha1 + p.b * p.beta1;
    g.D3 = p.alpha2 * (p.a * p.a - p.b * p.b - p.alpha1 * p.alpha1 + p.beta1 * p.beta1) +
           2.0 * p.beta2 * (p.a * p.b - p.alpha1 * p.beta1);

    g.f1sq = x * x / 2.0 + y * y / 6.0 + g.A2 / 2.0 + g.B2;
    g.f2sq = x * y / kSqrt3 + g.C2;

    g.F1 = (3.0 * x * x + y * y) / 12.0 - y * (9.0 * x * x + y * y) / (6.0 * kSqrt6) + g.A2 / 4.0 +
           (1.0 - kSqrt6 * y) * g.B2 / 2.0 - kSqrt2 * x * g.C2 - g.D3;
    g.F2 = y * y / 3.0 * (1.0 + 2.0 * kSqrtTwoThirds * y) + g.A2 / 2.0 * (1.0 + kSqrt6 * y) -
           kSqrt2 * x * g.C2 - g.D3;
    g.F3 = x / (2.0 * kSqrt2) * (kSqrtTwoThirds * y - (x * x + y * y)) - x / kSqrt2 * (g.A2 + g.B2) +
           g.C2 / 2.0;
    return g;
}

std::string_view label_name(BlochLabel label) {
    switch (label) {
        case BlochLabel::U: return "u";
        case BlochLabel::V: return "v";
        case BlochLabel::W: return "w";
    }
    return "?";
}

std::array<double, 3> BlochVector::signed_magnitudes() const {
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = std::copysign(std::sqrt(std::abs(squares[i])), squares[i]);
    return out;
}

BlochVector make_bloch_vector(BlochLabel label, const std::array<double, 3>& squares) {
    BlochVector v;
    v.label = label;
    v.squares = squares;
    v.length = std::sqrt(std::max(0.0, v.sum()));
    for (std::size_t i = 0; i < 3; ++i) v.negative_components[i] = squares[i] < -kNegativeSquareTolerance;
    return v;
}

BlochVector u_vector(const ParamVector& params) {
    const HermitianMatrix3 t2 = build_t(params).squared();
    return make_bloch_vector(BlochLabel::U,
                             {1.5 * t2.diagonal(0), 1.5 * t2.diagonal(1), 1.5 * t2.diagonal(2)});
}

BlochVector v_vector(const ParamVector& params) {
    const Matrix3c t = build_t(params).dense();
    const Matrix3c t2 = t * t;
    const Matrix3c t3 = t2 * t;
    std::array<double, 3> sq{};
    for (std::size_t i = 0; i < 3; ++i) sq[i] = 9.0 * (t2(i, i).real() / 2.0 - t3(i, i).real());
    return make_bloch_vector(BlochLabel::V, sq);
}

BlochVector w_vector(const ParamVector& params) {
    const HermitianMatrix3 rho = build_rho(params);
    return make_bloch_vector(BlochLabel::W, {rho.diagonal(0), rho.diagonal(1), rho.diagonal(2)});
}

std::array<double, 3> u_squares_closed(const ParamVector& p, const Aggregates& g) {
    return {1.5 * (g.f1sq + g.f2sq), p.y * p.y + 1.5 * g.A2, 1.5 * (g.f1sq - g.f2sq)};
}

std::array<double, 3> v_squares_closed(const Aggregates& g) {
    return {9.0 * (g.F1 + g.F3), 9.0 * g.F2, 9.0 * (g.F1 - g.F3)};
}

std::array<double, 3> w_squares_closed(const DerivedSymbols& s) {
    return {1.0 / 3.0 + s.gamma1, 1.0 / 3.0 - (s.gamma1 + s.gamma2), 1.0 / 3.0 + s.gamma2};
}

BlochTriple bloch_triple(const ParamVector& params) {
    return {u_vector(params), v_vector(params), w_vector(params), params};
}

}  // namespace qutrit
