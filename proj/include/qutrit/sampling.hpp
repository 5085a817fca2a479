#pragma once

// Reproducible qutrit state samplers.
//
// Random stream: std::mt19937_64 seeded with the 64-bit seed (its output
// sequence is fixed by the C++ standard). Uniform doubles in [0, 1) take the top
// 53 bits of each draw. Gaussians use the Box-Muller transform on two uniforms,
// both outputs consumed in order.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "qutrit/state.hpp"

namespace qutrit {

enum class SamplingMethod { Rejection, Pure, HilbertSchmidt };

std::string_view method_name(SamplingMethod m);
std::optional<SamplingMethod> method_from_name(std::string_view name);

struct SamplerConfig {
    SamplingMethod method = SamplingMethod::Rejection;
    std::uint64_t seed = 0;
    std::size_t count = 1;
};

inline constexpr std::size_t kMaxRejectionAttempts = 1'000'000;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    Complex complex_normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Haar-random unit ket from three complex standard normals.
std::array<Complex, 3> random_ket(Rng& rng);

/// G G^dagger / Tr(G G^dagger) for a complex Ginibre matrix G.
HermitianMatrix3 hilbert_schmidt_rho(Rng& rng);

/// |psi><psi|.
HermitianMatrix3 projector(const std::array<Complex, 3>& ket);

/// Uniform point in the box implied by the first inequality:
/// |x|,|y| <= sqrt(2/3), every other parameter in [-1/sqrt3, 1/sqrt3].
ParamVector box_point(Rng& rng);

/// Single-stream sampler.
class Sampler {
public:
    explicit Sampler(const SamplerConfig& config);

    /// Next parameter point. Throws SamplerStall if rejection runs out of attempts.
    ParamVector next();

private:
    SamplingMethod method_;
    Rng rng_;
};

/// `count` points for (method, seed). Throws InvalidRange for count 0.
std::vector<ParamVector> sample(const SamplerConfig& config);

}  // namespace qutrit
