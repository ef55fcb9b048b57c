#include "blaschke/numeric.hpp"
#include "blaschke/error.hpp"

#include <cmath>

namespace blaschke {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::PoleProximity: return "pole-proximity";
    case ErrorKind::ZeroProximity: return "zero-proximity";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::NumericalBreakdown: return "numerical-breakdown";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::ExtractionAmbiguity: return "extraction-ambiguity";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    }
    return "unknown";
}

double one_minus_abs2(Complex z) noexcept {
    const double x = z.real();
    const double y = z.imag();
    const double hx = x * x;
    const double lx = std::fma(x, x, -hx);
    const double hy = y * y;
    const double ly = std::fma(y, y, -hy);
    // Order the large parts so the first subtraction is exact (Sterbenz) when |z| ~ 1.
    const double big = hx >= hy ? hx : hy;
    const double small = hx >= hy ? hy : hx;
    long double acc = 1.0L - static_cast<long double>(big);
    acc -= small;
    acc -= static_cast<long double>(lx) + static_cast<long double>(ly);
    return static_cast<double>(acc);
}

} // namespace blaschke
