#pragma once

#include "blaschke/blaschke.hpp"

#include <cstdint>
#include <random>

namespace blaschke {

/// Reproducible sampler built on std::mt19937_64, whose output sequence is
/// fixed by the standard. Doubles come from the top 53 bits of each draw, so
/// results do not depend on the standard library's distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    /// Uniform in the disc of the given radius (rejection from the square).
    Complex in_disc(double radius);
    /// Uniform on the unit circle.
    Complex on_circle();

private:
    std::mt19937_64 engine_;
};

/// Zeros i.i.d. uniform in |z| <= max_radius, gamma uniform on the circle.
FiniteBlaschkeProduct random_product(Sampler& rng, int order, double max_radius = 0.9);

} // namespace blaschke
