#include "blaschke/moebius.hpp"
#include "blaschke/error.hpp"

#include <cmath>
#include <sstream>

namespace blaschke {

namespace {

constexpr double kInteriorMargin = 1e-15;
constexpr double kClosedDiscSlack = 1e-9;
constexpr double kPoleTolerance = 1e-14;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

DiscAutomorphism::DiscAutomorphism(Complex a, Complex gamma) : a_(a), gamma_(gamma) {
    if (!finite(a) || std::abs(a) >= 1.0 - kInteriorMargin) {
        std::ostringstream msg;
        msg << "automorphism parameter a=" << a << " is not strictly inside the unit disc";
        fail(ErrorKind::Domain, msg.str());
    }
    const double m = std::abs(gamma);
    if (!std::isfinite(m) || m == 0.0)
        fail(ErrorKind::Domain, "automorphism constant gamma must be a nonzero finite number");
    gamma_ = gamma / m;
}

Complex DiscAutomorphism::operator()(Complex z) const {
    if (std::abs(z) > 1.0 + kClosedDiscSlack)
        fail(ErrorKind::Domain, "automorphism evaluated outside the closed disc");
    const Complex den = 1.0 - std::conj(a_) * z;
    if (std::abs(den) < kPoleTolerance)
        fail(ErrorKind::PoleProximity, "automorphism evaluated at its pole");
    return gamma_ * (a_ - z) / den;
}

Complex DiscAutomorphism::derivative(Complex z) const {
    const Complex den = 1.0 - std::conj(a_) * z;
    if (std::abs(den) < kPoleTolerance)
        fail(ErrorKind::PoleProximity, "automorphism derivative evaluated at its pole");
    return -gamma_ * one_minus_abs2(a_) / (den * den);
}

// With S = T_{s,g}, T = T_{t,h}:
//   S(T(z)) = g [(s - h t) + z (h - s conj(t))] / [(1 - conj(s) h t) + z (conj(s) h - conj(t))]
// so a = (h t - s) / (h - s conj(t)) and gamma = -g (h - s conj(t)) / (1 - conj(s) h t).
DiscAutomorphism compose(const DiscAutomorphism& outer, const DiscAutomorphism& inner) {
    const Complex s = outer.a(), g = outer.gamma();
    const Complex t = inner.a(), h = inner.gamma();
    const Complex num_lead = h - s * std::conj(t);
    const Complex den_const = 1.0 - std::conj(s) * h * t;
    return {(h * t - s) / num_lead, -g * num_lead / den_const};
}

DiscAutomorphism inverse(const DiscAutomorphism& t) {
    return {t.gamma() * t.a(), std::conj(t.gamma())};
}

LimitBound automorphism_limit_bound(Complex a, Complex gamma, Complex gamma0, Complex z) {
    if (std::abs(z) >= 1.0)
        fail(ErrorKind::Domain, "limit bound requires |z| < 1");
    const DiscAutomorphism t(a, gamma);
    const Complex g0 = unit(gamma0);
    LimitBound out{2.0 * std::abs(g0 - t.a() * t.gamma()) / (1.0 - std::abs(z)),
                   std::abs(g0 - t(z))};
    if (out.deviation > out.bound + 1e-12)
        fail(ErrorKind::NumericalBreakdown, "automorphism deviates from gamma0 beyond the uniform bound");
    return out;
}

} // namespace blaschke
