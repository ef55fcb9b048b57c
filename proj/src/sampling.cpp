#include "blaschke/sampling.hpp"

#include <vector>

namespace blaschke {

double Sampler::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Sampler::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Complex Sampler::in_disc(double radius) {
    for (;;) {
        const Complex z{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
        if (std::norm(z) <= 1.0)
            return radius * z;
    }
}

Complex Sampler::on_circle() { return polar_unit(uniform(0.0, 2.0 * kPi)); }

FiniteBlaschkeProduct random_product(Sampler& rng, int order, double max_radius) {
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k)
        zeros.push_back(rng.in_disc(max_radius));
    const Complex gamma = rng.on_circle();
    return {gamma, std::move(zeros)};
}

} // namespace blaschke
