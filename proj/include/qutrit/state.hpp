#pragma once

// Polarization parametrization of a qutrit density matrix.
//
//   rho = I/3 + t,   t traceless Hermitian,
//
//         | g1          -(m1 + i n1)   a2 + i b2   |
//   t  =  | -(m1 - i n1)  -2y/sqrt6    -(m2 + i n2) |
//         | a2 - i b2   -(m2 - i n2)   g2          |
//
// with g1,2 = y/sqrt6 +- x/sqrt2, m1,2 = (a +- alpha1)/sqrt2, n1,2 = (b +- beta1)/sqrt2.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>

namespace qutrit {

using Complex = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;

enum class Field : std::size_t { X, Y, A, B, Alpha1, Beta1, Alpha2, Beta2 };

inline constexpr std::size_t kFieldCount = 8;
inline constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "x", "y", "a", "b", "alpha1", "beta1", "alpha2", "beta2"};
inline constexpr std::array<Field, kFieldCount> kAllFields = {
    Field::X, Field::Y, Field::A, Field::B, Field::Alpha1, Field::Beta1, Field::Alpha2, Field::Beta2};

std::optional<Field> field_from_name(std::string_view name);
std::string_view field_name(Field f);

/// The eight real polarization parameters. Unphysical points are representable.
struct ParamVector {
    double x = 0.0;
    double y = 0.0;
    double a = 0.0;
    double b = 0.0;
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double alpha2 = 0.0;
    double beta2 = 0.0;

    double& operator[](Field f);
    double operator[](Field f) const;

    bool is_finite() const;

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

/// Throws InvalidParameter naming the first non-finite field.
void require_finite(const ParamVector& p);

/// Dense 3x3 complex matrix, row-major, zero-based indices.
class Matrix3c {
public:
    constexpr Matrix3c() = default;

    static Matrix3c identity();

    Complex& operator()(std::size_t row, std::size_t col) { return e_[row * 3 + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return e_[row * 3 + col]; }

    Complex trace() const { return e_[0] + e_[4] + e_[8]; }
    Matrix3c adjoint() const;

    friend Matrix3c operator*(const Matrix3c& lhs, const Matrix3c& rhs);
    friend Matrix3c operator+(const Matrix3c& lhs, const Matrix3c& rhs);
    friend Matrix3c operator-(const Matrix3c& lhs, const Matrix3c& rhs);
    friend Matrix3c operator*(Complex s, const Matrix3c& m);

private:
    std::array<Complex, 9> e_{};
};

/// 3x3 Hermitian matrix. The lower triangle is always the conjugate of the upper
/// triangle and the diagonal is real; both hold by construction.
class HermitianMatrix3 {
public:
    HermitianMatrix3() = default;

    static HermitianMatrix3 from_upper(const std::array<double, 3>& diagonal, Complex e01, Complex e02,
                                       Complex e12);

    /// Validates Hermiticity within `tol` and throws InvalidMatrix otherwise.
    static HermitianMatrix3 from_dense(const Matrix3c& m, double tol = kHermitianTolerance);

    Complex operator()(std::size_t row, std::size_t col) const { return dense_(row, col); }
    double diagonal(std::size_t i) const { return dense_(i, i).real(); }
    double trace() const { return dense_.trace().real(); }
    const Matrix3c& dense() const { return dense_; }

    /// Adds `shift` to every diagonal entry.
    HermitianMatrix3 shifted(double shift) const;

    HermitianMatrix3 squared() const;

private:
    Matrix3c dense_{};
};

struct DerivedSymbols {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double m1 = 0.0;
    double n1 = 0.0;
    double m2 = 0.0;
    double n2 = 0.0;
};

/// Entries of t^2: diagonal Gamma_i, upper off-diagonals X_k + i Y_k
/// with k = 1 for (1,2), 2 for (1,3), 3 for (2,3).
struct TSquaredElements {
    double Gamma1 = 0.0;
    double Gamma2 = 0.0;
    double Gamma3 = 0.0;
    double X1 = 0.0;
    double X2 = 0.0;
    double X3 = 0.0;
    double Y1 = 0.0;
    double Y2 = 0.0;
    double Y3 = 0.0;
};

/// Real parts of the diagonal of t^3.
struct TCubedDiagonal {
    double Delta1R = 0.0;
    double Delta2R = 0.0;
    double Delta3R = 0.0;

    double sum() const { return Delta1R + Delta2R + Delta3R; }
};

struct PowerTraces {
    double trace2 = 0.0;       // Tr t^2
    double trace3 = 0.0;       // Re Tr t^3
    double trace3_imag = 0.0;  // Im Tr t^3, zero up to roundoff
};

HermitianMatrix3 build_t(const ParamVector& params);
HermitianMatrix3 build_rho(const ParamVector& params);
DerivedSymbols derived_symbols(const ParamVector& params);

/// Inverse of build_rho. Requires unit trace; positivity is not required.
ParamVector extract_params(const HermitianMatrix3& rho);
/// As above, validating Hermiticity of a dense input first.
ParamVector extract_params(const Matrix3c& rho);

PowerTraces power_traces(const HermitianMatrix3& t);

TSquaredElements t2_closed(const DerivedSymbols& sym, const ParamVector& params);
TCubedDiagonal t3_diag_closed(const DerivedSymbols& sym, const ParamVector& params,
                              const TSquaredElements& t2);

}  // namespace qutrit
