#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace conerank {

/// Default seed for every randomized procedure.
inline constexpr std::uint64_t default_seed = 20230517;

/// Deterministic across standard libraries: only the engine is taken from
/// <random>, the distributions are computed here from raw 64-bit draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed = default_seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    /// Standard exponential; normalized exponentials give a flat Dirichlet draw.
    double exponential() { return -std::log1p(-uniform()); }

    double normal()
    {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace conerank
