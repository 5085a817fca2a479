#include "qutrit/state.hpp"

#include <cmath>
#include <string>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

}  // namespace

std::optional<Field> field_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kFieldCount; ++i) {
        if (kFieldNames[i] == name) return kAllFields[i];
    }
    return std::nullopt;
}

std::string_view field_name(Field f) { return kFieldNames[static_cast<std::size_t>(f)]; }

double& ParamVector::operator[](Field f) {
    switch (f) {
        case Field::X: return x;
        case Field::Y: return y;
        case Field::A: return a;
        case Field::B: return b;
        case Field::Alpha1: return alpha1;
        case Field::Beta1: return beta1;
        case Field::Alpha2: return alpha2;
        case Field::Beta2: return beta2;
    }
    return x;  // unreachable
}

double ParamVector::operator[](Field f) const { return const_cast<ParamVector&>(*this)[f]; }

bool ParamVector::is_finite() const {
    for (Field f : kAllFields) {
        if (!std::isfinite((*this)[f])) return false;
    }
    return true;
}

void require_finite(const ParamVector& p) {
    for (Field f : kAllFields) {
        if (!std::isfinite(p[f])) {
            throw InvalidParameter("parameter '" + std::string(field_name(f)) + "' is not finite");
        }
    }
}

Matrix3c Matrix3c::identity() {
    Matrix3c m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

Matrix3c Matrix3c::adjoint() const {
    Matrix3c out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

Matrix3c operator*(const Matrix3c& lhs, const Matrix3c& rhs) {
    Matrix3c out;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += lhs(r, k) * rhs(k, c);
            out(r, c) = acc;
        }
    }
    return out;
}

Matrix3c operator+(const Matrix3c& lhs, const Matrix3c& rhs) {
    Matrix3c out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = lhs(i, j) + rhs(i, j);
    return out;
}

Matrix3c operator-(const Matrix3c& lhs, const Matrix3c& rhs) {
    Matrix3c out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = lhs(i, j) - rhs(i, j);
    return out;
}

Matrix3c operator*(Complex s, const Matrix3c& m) {
    Matrix3c out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = s * m(i, j);
    return out;
}

HermitianMatrix3 HermitianMatrix3::from_upper(const std::array<double, 3>& diagonal, Complex e01,
                                              Complex e02, Complex e12) {
    HermitianMatrix3 h;
    for (std::size_t i = 0; i < 3; ++i) h.dense_(i, i) = Complex(diagonal[i], 0.0);
    h.dense_(0, 1) = e01;
    h.dense_(0, 2) = e02;
    h.dense_(1, 2) = e12;
    h.dense_(1, 0) = std::conj(e01);
    h.dense_(2, 0) = std::conj(e02);
    h.dense_(2, 1) = std::conj(e12);
    return h;
}

HermitianMatrix3 HermitianMatrix3::from_dense(const Matrix3c& m, double tol) {
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                throw InvalidMatrix(MatrixCheck::Finite, "matrix has a non-finite entry");
            }
        }
    }
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = r; c < 3; ++c) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) {
                throw InvalidMatrix(MatrixCheck::Hermitian,
                                    "matrix is not Hermitian at entry (" + std::to_string(r + 1) + "," +
                                        std::to_string(c + 1) + ")");
            }
        }
    }
    return from_upper({m(0, 0).real(), m(1, 1).real(), m(2, 2).real()}, m(0, 1), m(0, 2), m(1, 2));
}

HermitianMatrix3 HermitianMatrix3::shifted(double shift) const {
    HermitianMatrix3 h = *this;
    for (std::size_t i = 0; i < 3; ++i) h.dense_(i, i) += shift;
    return h;
}

HermitianMatrix3 HermitianMatrix3::squared() const {
    const Matrix3c sq = dense_ * dense_;
    return from_upper({sq(0, 0).real(), sq(1, 1).real(), sq(2, 2).real()}, sq(0, 1), sq(0, 2), sq(1, 2));
}

DerivedSymbols derived_symbols(const ParamVector& p) {
    require_finite(p);
    DerivedSymbols s;
    s.gamma1 = p.y / kSqrt6 + p.x / kSqrt2;
    s.gamma2 = p.y / kSqrt6 - p.x / kSqrt2;
    s.m1 = (p.a + p.alpha1) / kSqrt2;
    s.n1 = (p.b + p.beta1) / kSqrt2;
    s.m2 = (p.a - p.alpha1) / kSqrt2;
    s.n2 = (p.b - p.beta1) / kSqrt2;
    return s;
}

HermitianMatrix3 build_t(const ParamVector& p) {
    const DerivedSymbols s = derived_symbols(p);
    return HermitianMatrix3::from_upper({s.gamma1, -2.0 * p.y / kSqrt6, s.gamma2},
                                        -Complex(s.m1, s.n1), Complex(p.alpha2, p.beta2),
                                        -Complex(s.m2, s.n2));
}

HermitianMatrix3 build_rho(const ParamVector& p) { return build_t(p).shifted(1.0 / 3.0); }

ParamVector extract_params(const HermitianMatrix3& rho) {
    const double tr = rho.trace();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceTolerance) {
        throw InvalidMatrix(MatrixCheck::UnitTrace, "trace is " + std::to_string(tr) + ", expected 1");
    }
    const double gamma1 = rho.diagonal(0) - 1.0 / 3.0;
    const double gamma2 = rho.diagonal(2) - 1.0 / 3.0;
    const double m1 = -rho(0, 1).real();
    const double n1 = -rho(0, 1).imag();
    const double m2 = -rho(1, 2).real();
    const double n2 = -rho(1, 2).imag();

    ParamVector p;
    p.x = (gamma1 - gamma2) / kSqrt2;
    p.y = kSqrt6 * (gamma1 + gamma2) / 2.0;
    p.a = (m1 + m2) / kSqrt2;
    p.alpha1 = (m1 - m2) / kSqrt2;
    p.b = (n1 + n2) / kSqrt2;
    p.beta1 = (n1 - n2) / kSqrt2;
    p.alpha2 = rho(0, 2).real();
    p.beta2 = rho(0, 2).imag();
    return p;
}

ParamVector extract_params(const Matrix3c& rho) {
    return extract_params(HermitianMatrix3::from_dense(rho));
}

PowerTraces power_traces(const HermitianMatrix3& t) {
    const Matrix3c t2 = t.dense() * t.dense();
    const Complex tr3 = (t2 * t.dense()).trace();
    return {t2.trace().real(), tr3.real(), tr3.imag()};
}

TSquaredElements t2_closed(const DerivedSymbols& s, const ParamVector& p) {
    const double g12 = s.gamma1 + s.gamma2;
    const double a2 = p.alpha2;
    const double b2 = p.beta2;

    TSquaredElements e;
    e.Gamma1 = s.gamma1 * s.gamma1 + s.m1 * s.m1 + s.n1 * s.n1 + a2 * a2 + b2 * b2;
    e.Gamma2 = g12 * g12 + s.m1 * s.m1 + s.n1 * s.n1 + s.m2 * s.m2 + s.n2 * s.n2;
    e.Gamma3 = s.gamma2 * s.gamma2 + s.m2 * s.m2 + s.n2 * s.n2 + a2 * a2 + b2 * b2;
    e.X1 = s.gamma2 * s.m1 - (a2 * s.m2 + b2 * s.n2);
    e.X2 = g12 * a2 + s.m1 * s.m2 - s.n1 * s.n2;
    e.X3 = s.gamma1 * s.m2 - a2 * s.m1 - b2 * s.n1;
    e.Y1 = s.gamma2 * s.n1 + a2 * s.n2 - b2 * s.m2;
    e.Y2 = g12 * b2 + s.m2 * s.n1 + s.m1 * s.n2;
    e.Y3 = s.gamma1 * s.n2 + a2 * s.n1 - b2 * s.m1;
    return e;
}

TCubedDiagonal t3_diag_closed(const DerivedSymbols& s, const ParamVector& p, const TSquaredElements& t2) {
    // Rearranged from 1/2 Gamma_i - Delta_iR as printed for v_i^2 / 9.
    const double row1 = s.m1 * t2.X1 + s.n1 * t2.Y1;
    const double row3 = s.m2 * t2.X3 + s.n2 * t2.Y3;
    const double corner = p.alpha2 * t2.X2 + p.beta2 * t2.Y2;

    TCubedDiagonal d;
    d.Delta1R = s.gamma1 * t2.Gamma1 - row1 + corner;
    d.Delta2R = -(s.gamma1 + s.gamma2) * t2.Gamma2 - row1 - row3;
    d.Delta3R = s.gamma2 * t2.Gamma3 - row3 + corner;
    return d;
}

}  // namespace qutrit
