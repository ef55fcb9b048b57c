#pragma once

#include "blaschke/blaschke.hpp"
#include "blaschke/hyperbolic.hpp"

#include <optional>
#include <string_view>
#include <span>
#include <utility>
#include <vector>

namespace blaschke::lab {

// ---------------------------------------------------------------------------
// Sequences a_k, gamma_k with a_k gamma_k -> gamma0

enum class SequenceMode { Radial, Spiral, Alternating };

const char* to_string(SequenceMode mode) noexcept;
std::optional<SequenceMode> parse_sequence_mode(std::string_view name) noexcept;

struct SequenceStep {
    Complex a;
    Complex gamma;
};

/// Closed-form generators, with eps_k = rate^k:
///   radial       a_k = (1 - eps_k) gamma0,                    gamma_k = 1
///   spiral       a_k = (1 - eps_k) gamma0 exp(-i eps_k),      gamma_k = exp(i eps_k)
///   alternating  a_k = (1 - eps_k) gamma0 (-1)^k,             gamma_k = (-1)^k
/// In every mode a_k gamma_k = (1 - eps_k) gamma0.
struct SequenceSpec {
    Complex gamma0{1.0, 0.0};
    SequenceMode mode = SequenceMode::Radial;
    double rate = 0.5;
    int count = 12;

    /// Throws Error(Domain) for rate outside (0, 1), count < 1 or k < 1.
    SequenceStep step(int k) const;
    void validate() const;
};

// ---------------------------------------------------------------------------
// Renormalized conjugates f = rot o T_{B(a gamma)} o B o T_{a,gamma}

enum class Normalization {
    Renormalized,  // outer automorphism T_{B(a gamma), conj(gamma)}
    Plain,         // outer automorphism T_{B(a gamma)}
};

/// Pointwise evaluator for the conjugate that stays accurate when a gamma is
/// within a few ulps of the circle. With p = a gamma, q = T_p(gamma z) and
/// c = B(p):
///   q - p   = -gamma z (1 - |p|^2) / (1 - conj(p) gamma z)
///   c - B(q) from the telescoped factor differences
///   f(z)    = rot (c - B(q)) / ((1 - |c|^2) + conj(c)(c - B(q)))
/// where 1 - |p|^2 and 1 - |c|^2 are computed without cancellation.
class ConjugateMap {
public:
    ConjugateMap(FiniteBlaschkeProduct b, Complex a, Complex gamma,
                 Normalization norm = Normalization::Renormalized);

    Complex operator()(Complex z) const;
    /// rot * gamma * (1 - |a gamma|^2) / (1 - |B(a gamma)|^2) * B'(a gamma);
    /// rot * gamma = 1 in the renormalized form.
    Complex derivative_at_zero() const;

    Complex base_point() const noexcept { return p_; }
    Complex image_of_base() const noexcept { return c_; }

private:
    FiniteBlaschkeProduct b_;
    Complex gamma_;
    Complex rot_;
    Complex p_;
    double one_minus_p2_;
    Complex c_;
    double one_minus_c2_;
};

/// f = T_{B(a gamma), conj(gamma)} o B o T_{a,gamma} as an exact product;
/// the zero at the origin is exact. Throws Error(NumericalBreakdown) once
/// the other zeros are numerically on the circle (|a| very close to 1).
FiniteBlaschkeProduct renormalized_conjugate(const FiniteBlaschkeProduct& b, Complex a,
                                             Complex gamma);

struct DerivativeIdentity {
    Complex lhs;  // f'(0) of the exact conjugate product
    Complex rhs;  // (1 - |a gamma|^2) / (1 - |B(a gamma)|^2) B'(a gamma)
};

DerivativeIdentity derivative_at_zero_identity(const FiniteBlaschkeProduct& b, Complex a,
                                               Complex gamma);

/// B'(gamma0)/|B'(gamma0)|, the limiting rotation of the renormalized conjugates.
Complex rotation_constant(const FiniteBlaschkeProduct& b, Complex gamma0);

struct PolarGrid {
    double radius = 0.9;
    int size = 24;  // `size` radii in (0, radius], 4 * size angles
};

/// max over the grid of |f(z) - rotation z|.
double sup_deviation(const ConjugateMap& f, Complex rotation, PolarGrid grid);

struct ConvergenceRecord {
    int k;
    Complex a;
    Complex gamma;
    double sup_deviation;
    Complex rotation_constant;
};

/// One record per k = 1..count, in order.
std::vector<ConvergenceRecord> convergence_experiment(const FiniteBlaschkeProduct& b,
                                                      const SequenceSpec& spec, double r,
                                                      int grid = 24,
                                                      Normalization norm = Normalization::Renormalized);

/// Same with caller-supplied a_k, gamma_k (k numbered from 1).
std::vector<ConvergenceRecord> convergence_experiment(const FiniteBlaschkeProduct& b,
                                                      std::span<const SequenceStep> steps,
                                                      Complex gamma0, double r, int grid = 24,
                                                      Normalization norm = Normalization::Renormalized);

struct CounterexampleResult {
    double even_limit_deviation;        // plain f_k vs z at the last even k, |z| <= 0.5
    double odd_limit_deviation;         // plain f_k vs -z at the last odd k, |z| <= 0.5
    double unrenormalized_oscillation;  // sup |f_count - f_{count-1}| (plain), |z| <= 0.9
    double renormalized_deviation;      // renormalized f_count vs z, |z| <= 0.5
};

/// B = z^2 along the alternating sequence with gamma0 = 1, rate 1/2.
/// Throws Error(Domain) for count < 6.
CounterexampleResult counterexample_run(int count);

// ---------------------------------------------------------------------------
// Schwarz-Pick quotient, valence, separation

/// (1 - |z|^2)|B'(z)| / (1 - |B(z)|^2). Throws Error(Domain) for |z| >= 1 and
/// Error(NumericalBreakdown) if 1 - |B(z)|^2 underflows.
double fatou_quotient(const FiniteBlaschkeProduct& b, Complex z);

struct FatouScanRow {
    double r;
    double min_quotient;
};

/// Minimum quotient over `angles` equally spaced points on each circle.
/// Radii must be increasing and inside (0, 1).
std::vector<FatouScanRow> fatou_limit_scan(const FiniteBlaschkeProduct& b,
                                           std::span<const double> radii, int angles);

struct ValenceReport {
    Complex w;
    double radius;
    Complex winding_integral;
    int valence;
    double residual;
    int samples;
};

/// Argument-principle count of solutions of B(z) = w inside |z| < radius,
/// trapezoidal rule with `samples` nodes (doubled once if the integer
/// residual exceeds 0.05). Throws Error(Domain) when B - w comes within 1e-6
/// of zero on the contour.
ValenceReport valence(const FiniteBlaschkeProduct& b, Complex w, double radius, int samples = 4096);

/// Radius 0.5 (1 + max |fiber point|), which encloses the whole fiber.
ValenceReport valence(const FiniteBlaschkeProduct& b, Complex w);

struct SeparationEstimate {
    double M;
    /// +infinity when no two fiber points ever fall in the annulus.
    double delta;
    std::optional<std::pair<Complex, Complex>> witness_pair;
    int samples;
};

/// Smallest distance between two distinct points of one fiber inside the
/// annulus M <= |z| <= 1/M. Base points sit on |a| = M and |a| = (M + 1)/2
/// at golden-ratio angles; each contributes the fiber of B(a) and its
/// reflection 1/conj(w), the fiber of 1/conj(B(a)).
/// Throws Error(Domain) unless max|z_k| < M < 1.
SeparationEstimate separation_estimate(const FiniteBlaschkeProduct& b, double M, int samples);

// ---------------------------------------------------------------------------
// Critical points of T_a^m T_b^n and T_a^m T_b^n T_c^p

FiniteBlaschkeProduct factor_power_product(std::span<const std::pair<Complex, int>> factors);

struct DensityPoint {
    int m;
    int n;
    Complex c;
    double collinearity_residual;
    bool between;  // inside the hyperbolic segment [a, b] (Klein tolerance 1e-8)
};

/// For each (m, n), the critical point of T_a^m T_b^n other than a and b.
/// Throws Error(ExtractionAmbiguity) if it cannot be separated from a or b by 1e-7.
std::vector<DensityPoint> density_family(Complex a, Complex b,
                                         std::span<const std::pair<int, int>> exponent_pairs);

struct HullCheck {
    Complex critical_point;
    int multiplicity;
    bool in_hull;
};

struct Exponents3 {
    int m;
    int n;
    int p;
};

/// Interior critical points of T_a^m T_b^n T_c^p with membership in hull{a, b, c}
/// at Klein tolerance 1e-8.
std::vector<HullCheck> density_family3(Complex a, Complex b, Complex c, Exponents3 exponents);

} // namespace blaschke::lab
