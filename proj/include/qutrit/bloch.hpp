#pragma once

#include <array>
#include <string_view>

#include "qutrit/state.hpp"

namespace qutrit {

/// A squared component below -kNegativeSquareTolerance is flagged as negative.
inline constexpr double kNegativeSquareTolerance = 1e-12;

/// Scalar aggregates of the polarization parameters used by the closed forms.
///
///   A2 = a^2 + b^2 + alpha1^2 + beta1^2      B2 = alpha2^2 + beta2^2
///   C2 = a alpha1 + b beta1                  D3 = alpha2 (a^2 - b^2 - alpha1^2 + beta1^2)
///                                                 + 2 beta2 (a b - alpha1 beta1)
///
/// The names follow the printed symbols; C2, D3, f2sq and the F's can be negative.
struct Aggregates {
    double A2 = 0.0;
    double B2 = 0.0;
    double C2 = 0.0;
    double D3 = 0.0;
    double f1sq = 0.0;
    double f2sq = 0.0;
    double F1 = 0.0;
    double F2 = 0.0;
    double F3 = 0.0;
};

Aggregates aggregates(const ParamVector& params);

enum class BlochLabel { U, V, W };

std::string_view label_name(BlochLabel label);

/// Signed squared components. The printed construction only defines squares, and
/// v can have negative ones even for pure states, so they are kept as-is.
struct BlochVector {
    BlochLabel label = BlochLabel::U;
    std::array<double, 3> squares{};
    double length = 0.0;  // sqrt(max(0, sum of squares))
    std::array<bool, 3> negative_components{};

    double sum() const { return squares[0] + squares[1] + squares[2]; }
    bool any_negative() const {
        return negative_components[0] || negative_components[1] || negative_components[2];
    }
    /// sqrt(|square|) carrying the sign of the square.
    std::array<double, 3> signed_magnitudes() const;
};

BlochVector make_bloch_vector(BlochLabel label, const std::array<double, 3>& squares);

/// u_i^2 = (3/2) (t^2)_ii via matrix multiplication.
BlochVector u_vector(const ParamVector& params);
/// v_i^2 = 9 ((t^2)_ii / 2 - Re (t^3)_ii) via matrix multiplication.
BlochVector v_vector(const ParamVector& params);
/// w_i^2 = rho_ii.
BlochVector w_vector(const ParamVector& params);

// Closed forms in the original parameters, used as cross-checks of the matrix path.
std::array<double, 3> u_squares_closed(const ParamVector& params, const Aggregates& agg);
std::array<double, 3> v_squares_closed(const Aggregates& agg);
std::array<double, 3> w_squares_closed(const DerivedSymbols& sym);

struct BlochTriple {
    BlochVector u;
    BlochVector v;
    BlochVector w;
    ParamVector params_echo;
};

BlochTriple bloch_triple(const ParamVector& params);

}  // namespace qutrit
