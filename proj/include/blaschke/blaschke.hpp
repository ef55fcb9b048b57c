#pragma once

#include "blaschke/moebius.hpp"
#include "blaschke/numeric.hpp"
#include "blaschke/polyroots.hpp"

#include <vector>

namespace blaschke {

/// B(z) = gamma * prod_k (z_k - z) / (1 - conj(z_k) z).
///
/// Stored by its zeros and unimodular constant; the numerator and
/// denominator polynomials are only expanded when a root finder needs them.
/// Immutable after construction.
class FiniteBlaschkeProduct {
public:
    /// Throws Error(Domain) for an empty zero list, a zero with
    /// |z_k| >= 1 - 1e-12, or a zero/non-finite gamma (which is renormalized).
    FiniteBlaschkeProduct(Complex gamma, std::vector<Complex> zeros);

    /// B(z) = z^n, i.e. n zeros at the origin with gamma = (-1)^n.
    static FiniteBlaschkeProduct monomial(int n);
    /// gamma * prod T_{z_k}: zeros with gamma = 1.
    static FiniteBlaschkeProduct from_zeros(std::vector<Complex> zeros) {
        return {Complex{1.0, 0.0}, std::move(zeros)};
    }

    Complex gamma() const noexcept { return gamma_; }
    const std::vector<Complex>& zeros() const noexcept { return zeros_; }
    int order() const noexcept { return static_cast<int>(zeros_.size()); }
    double max_zero_modulus() const noexcept;

    /// Valid for any z away from the reflected poles 1/conj(z_k);
    /// throws Error(PoleProximity) within 1e-14 of one.
    Complex operator()(Complex z) const;

    /// P = gamma prod (z_k - z) and Q = prod (1 - conj(z_k) z) in ascending coefficients.
    poly::Polynomial numerator() const;
    poly::Polynomial denominator() const;

private:
    Complex gamma_;
    std::vector<Complex> zeros_;
};

inline Complex eval(const FiniteBlaschkeProduct& b, Complex z) { return b(z); }

/// B'(z) = (P'Q - PQ') / Q^2 evaluated by forward accumulation over the factors.
Complex derivative(const FiniteBlaschkeProduct& b, Complex z);

/// B'/B = sum_k (1 - |z_k|^2) / ((1 - conj(z_k) z)(z - z_k)).
/// Throws Error(ZeroProximity) within 1e-12 of a zero and Error(PoleProximity) near a pole.
Complex log_derivative(const FiniteBlaschkeProduct& b, Complex z);

/// |B'(e^{i theta})| = sum_k (1 - |z_k|^2) / |e^{i theta} - z_k|^2.
double boundary_derivative_modulus(const FiniteBlaschkeProduct& b, double theta);

/// 1 - |B(z)|^2 for |z| < 1, accumulated factor by factor so it keeps full
/// relative precision as z approaches the circle.
double one_minus_abs2(const FiniteBlaschkeProduct& b, Complex z);

/// B(p) - B(q), given q - p computed independently (which it often can be
/// exactly). Cancellation-free telescoping over the factors.
Complex difference(const FiniteBlaschkeProduct& b, Complex p, Complex q, Complex q_minus_p);

/// P'Q - PQ', the numerator of B'. Its top coefficient (degree 2n-1) cancels
/// analytically and is dropped.
poly::Polynomial critical_numerator(const FiniteBlaschkeProduct& b);

struct CriticalPoint {
    Complex location;
    int multiplicity;
};

struct CriticalSet {
    std::vector<CriticalPoint> interior;
    /// Reflections 1/conj(w) of interior points; those reflected to
    /// infinity (interior critical points at 0) are absent.
    std::vector<CriticalPoint> exterior;

    int interior_count() const noexcept;
    int exterior_count() const noexcept;
};

/// Zeros of B' on the Riemann sphere minus infinity, split at the unit circle.
/// Throws Error(NumericalBreakdown) when a root lies within 1e-9 of the
/// circle or the interior count differs from n - 1; root-finder errors propagate.
CriticalSet critical_points(const FiniteBlaschkeProduct& b);

/// The n solutions of B(w) = c (|c| < 1), repeated by multiplicity.
/// Throws Error(Domain) for |c| >= 1 and Error(NonConvergence) if a solution
/// does not re-evaluate to c within 1e-8.
std::vector<Complex> fiber_solve(const FiniteBlaschkeProduct& b, Complex c);

/// outer o B o inner as an exact product of the same order. Zeros are
/// inner^{-1}(fiber of outer^{-1}(0)); the constant is matched at a probe point.
FiniteBlaschkeProduct conjugate_by(const FiniteBlaschkeProduct& b, const DiscAutomorphism& inner,
                                   const DiscAutomorphism& outer);

} // namespace blaschke
