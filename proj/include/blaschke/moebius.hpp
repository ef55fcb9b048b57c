#pragma once

#include "blaschke/numeric.hpp"

namespace blaschke {

/// Disc automorphism T_{a,gamma}(z) = gamma (a - z) / (1 - conj(a) z).
///
/// |a| < 1 and gamma is unimodular; gamma is divided by its modulus on
/// construction so long composition chains do not drift off the circle.
/// The identity is T_{0,-1} and a rotation z -> g z is T_{0,-g}.
class DiscAutomorphism {
public:
    /// Throws Error(Domain) unless |a| < 1 - 1e-15 and gamma is nonzero and finite.
    DiscAutomorphism(Complex a, Complex gamma);

    static DiscAutomorphism identity() { return {Complex{0.0, 0.0}, Complex{-1.0, 0.0}}; }
    /// z -> g z.
    static DiscAutomorphism rotation(Complex g) { return {Complex{0.0, 0.0}, -g}; }
    /// T_a = T_{a,1}, the involution swapping a and 0.
    static DiscAutomorphism involution(Complex a) { return {a, Complex{1.0, 0.0}}; }

    Complex a() const noexcept { return a_; }
    Complex gamma() const noexcept { return gamma_; }

    /// Throws Error(Domain) for |z| > 1 + 1e-9 and Error(PoleProximity) when
    /// |1 - conj(a) z| < 1e-14.
    Complex operator()(Complex z) const;

    /// T'(z) = -gamma (1 - |a|^2) / (1 - conj(a) z)^2.
    Complex derivative(Complex z) const;

private:
    Complex a_;
    Complex gamma_;
};

/// S o T in closed form.
DiscAutomorphism compose(const DiscAutomorphism& outer, const DiscAutomorphism& inner);

/// T^{-1} = T_{gamma a, conj(gamma)}.
DiscAutomorphism inverse(const DiscAutomorphism& t);

struct LimitBound {
    double bound;      // 2 |gamma0 - a gamma| / (1 - |z|)
    double deviation;  // |gamma0 - T_{a,gamma}(z)|
};

/// Uniform estimate of how far T_{a,gamma}(z) is from gamma0.
/// Throws Error(Domain) when |z| >= 1 or |a| >= 1, and
/// Error(NumericalBreakdown) if the deviation exceeds the bound by more than 1e-12.
LimitBound automorphism_limit_bound(Complex a, Complex gamma, Complex gamma0, Complex z);

} // namespace blaschke
