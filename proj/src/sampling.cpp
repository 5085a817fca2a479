#include "qutrit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "qutrit/error.hpp"
#include "qutrit/physicality.hpp"

namespace qutrit {

std::string_view method_name(SamplingMethod m) {
    switch (m) {
        case SamplingMethod::Rejection: return "rejection";
        case SamplingMethod::Pure: return "pure";
        case SamplingMethod::HilbertSchmidt: return "hilbert_schmidt";
    }
    return "?";
}

std::optional<SamplingMethod> method_from_name(std::string_view name) {
    for (SamplingMethod m : {SamplingMethod::Rejection, SamplingMethod::Pure, SamplingMethod::HilbertSchmidt}) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::array<Complex, 3> random_ket(Rng& rng) {
    std::array<Complex, 3> psi{};
    double norm = 0.0;
    do {
        for (Complex& c : psi) c = rng.complex_normal();
        norm = std::sqrt(std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]));
    } while (norm == 0.0);
    for (Complex& c : psi) c /= norm;
    return psi;
}

HermitianMatrix3 projector(const std::array<Complex, 3>& ket) {
    return HermitianMatrix3::from_upper({std::norm(ket[0]), std::norm(ket[1]), std::norm(ket[2])},
                                        ket[0] * std::conj(ket[1]), ket[0] * std::conj(ket[2]),
                                        ket[1] * std::conj(ket[2]));
}

HermitianMatrix3 hilbert_schmidt_rho(Rng& rng) {
    Matrix3c g;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) g(r, c) = rng.complex_normal();
    const Matrix3c ggd = g * g.adjoint();
    const double tr = ggd.trace().real();
    const Matrix3c rho = Complex(1.0 / tr, 0.0) * ggd;
    return HermitianMatrix3::from_upper({rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real()}, rho(0, 1),
                                        rho(0, 2), rho(1, 2));
}

ParamVector box_point(Rng& rng) {
    const double diag_bound = std::sqrt(2.0 / 3.0);
    const double off_bound = 1.0 / std::sqrt(3.0);
    ParamVector p;
    for (Field f : kAllFields) {
        const double bound = (f == Field::X || f == Field::Y) ? diag_bound : off_bound;
        p[f] = (2.0 * rng.uniform() - 1.0) * bound;
    }
    return p;
}

Sampler::Sampler(const SamplerConfig& config) : method_(config.method), rng_(config.seed) {}

ParamVector Sampler::next() {
    switch (method_) {
        case SamplingMethod::Rejection:
            for (std::size_t attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
                const ParamVector p = box_point(rng_);
                if (physicality_report(p).physical) return p;
            }
            throw SamplerStall("rejection sampler exceeded " + std::to_string(kMaxRejectionAttempts) + " attempts");
        case SamplingMethod::Pure: return extract_params(projector(random_ket(rng_)));
        case SamplingMethod::HilbertSchmidt: return extract_params(hilbert_schmidt_rho(rng_));
    }
    return {};
}

std::vector<ParamVector> sample(const SamplerConfig& config) {
    if (config.count == 0) throw InvalidRange("sample count must be at least 1");
    Sampler sampler(config);
    std::vector<ParamVector> out;
    out.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) out.push_back(sampler.next());
    return out;
}

}  // namespace qutrit
