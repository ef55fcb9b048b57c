#pragma once

#include "blaschke/numeric.hpp"

#include <span>
#include <vector>

namespace blaschke::poly {

/// Dense polynomial with complex coefficients in ascending degree.
/// Coefficients below 1e-14 of the largest modulus are trimmed from the top.
class Polynomial {
public:
    Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    /// prod (z - r) over the roots, leading coefficient 1.
    static Polynomial from_roots(std::span<const Complex> roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex leading() const noexcept { return coeffs_.back(); }
    double max_coeff_modulus() const noexcept;

    Complex operator()(Complex z) const noexcept;
    /// sum |c_k| |z|^k, the natural scale of rounding errors in operator().
    double magnitude_at(double abs_z) const noexcept;

    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Complex scale, const Polynomial& p);

private:
    std::vector<Complex> coeffs_;
};

struct Root {
    Complex location;
    int multiplicity;
};

struct RootSet {
    std::vector<Root> roots;
    /// Backward error |p(r)| / sum |c_k||r|^k for each entry of roots.
    std::vector<double> residuals;

    int total_multiplicity() const noexcept;
    /// Roots repeated according to multiplicity.
    std::vector<Complex> expanded() const;
};

/// All roots of p with multiplicities.
///
/// Aberth-Ehrlich simultaneous iteration from equally spaced guesses on the
/// Cauchy-bound circle (angular offset 0.4 rad), 200 sweeps at most. Clusters
/// of approximations are merged when their Weierstrass inclusion discs overlap
/// or they sit within 1e-7 of each other (relative), and each cluster centroid
/// is refined by Newton on the (m-1)-th derivative. Deterministic.
///
/// Throws Error(Domain) for degree < 1 and Error(NonConvergence) when a root
/// ends with backward error above 1e-8.
RootSet find_roots(const Polynomial& p);

struct PolishResult {
    Complex root;
    bool stalled;
};

/// Newton refinement of a single root. When the residual cannot be brought
/// to 1e-12 of the largest coefficient (or to rounding level), the guess is
/// returned unchanged with stalled = true.
PolishResult polish_root(const Polynomial& p, Complex guess);

} // namespace blaschke::poly
