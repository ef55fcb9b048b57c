#pragma once

#include "blaschke/numeric.hpp"
#include "blaschke/sampling.hpp"

#include <cmath>

namespace testing {

using blaschke::Complex;

inline bool near(Complex x, Complex y, double tol) { return std::abs(x - y) <= tol; }

inline double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace testing
