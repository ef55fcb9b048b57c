#pragma once

#include <complex>
#include <numbers>

namespace blaschke {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// 1 - |z|^2 without the cancellation of the naive formula near the unit circle.
/// Squares are split with fma so the result keeps full relative precision
/// even when |z| is within a few ulps of 1.
double one_minus_abs2(Complex z) noexcept;

/// Unit vector in the direction of z; z must be nonzero.
inline Complex unit(Complex z) { return z / std::abs(z); }

inline Complex polar_unit(double theta) { return std::polar(1.0, theta); }

} // namespace blaschke
