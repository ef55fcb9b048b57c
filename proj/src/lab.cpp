#include "blaschke/lab.hpp"
#include "blaschke/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace blaschke::lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kContourGap = 1e-6;
constexpr double kValenceResidual = 0.05;
constexpr double kAnnulusSlack = 1e-12;
constexpr double kExtractionRadius = 1e-7;
constexpr double kSegmentTolerance = 1e-8;
constexpr double kHullTolerance = 1e-8;
constexpr double kGoldenFraction = 0.6180339887498948482;

void check_grid(double r, int grid) {
    if (!(r > 0.0 && r < 1.0))
        fail(ErrorKind::Domain, "grid radius must lie in (0, 1)");
    if (grid < 1)
        fail(ErrorKind::Domain, "grid size must be positive");
}

double sup_over_grid(PolarGrid grid, auto&& deviation) {
    check_grid(grid.radius, grid.size);
    const int angles = 4 * grid.size;
    double worst = 0.0;
    for (int i = 1; i <= grid.size; ++i) {
        const double rho = grid.radius * i / grid.size;
        for (int j = 0; j < angles; ++j) {
            const Complex z = std::polar(rho, 2.0 * kPi * j / angles);
            worst = std::max(worst, deviation(z));
        }
    }
    return worst;
}

} // namespace

const char* to_string(SequenceMode mode) noexcept {
    switch (mode) {
    case SequenceMode::Radial: return "radial";
    case SequenceMode::Spiral: return "spiral";
    case SequenceMode::Alternating: return "alternating";
    }
    return "unknown";
}

std::optional<SequenceMode> parse_sequence_mode(std::string_view name) noexcept {
    if (name == "radial")
        return SequenceMode::Radial;
    if (name == "spiral")
        return SequenceMode::Spiral;
    if (name == "alternating")
        return SequenceMode::Alternating;
    return std::nullopt;
}

void SequenceSpec::validate() const {
    if (!(rate > 0.0 && rate < 1.0))
        fail(ErrorKind::Domain, "sequence rate must lie in (0, 1)");
    if (count < 1)
        fail(ErrorKind::Domain, "sequence count must be positive");
    if (!(std::abs(gamma0) > 0.0) || !std::isfinite(std::abs(gamma0)))
        fail(ErrorKind::Domain, "gamma0 must be a nonzero finite number");
}

SequenceStep SequenceSpec::step(int k) const {
    validate();
    if (k < 1)
        fail(ErrorKind::Domain, "sequence index starts at 1");
    const Complex g0 = unit(gamma0);
    const double eps = std::pow(rate, k);
    switch (mode) {
    case SequenceMode::Radial:
        return {(1.0 - eps) * g0, Complex{1.0, 0.0}};
    case SequenceMode::Spiral:
        return {(1.0 - eps) * g0 * polar_unit(-eps), polar_unit(eps)};
    case SequenceMode::Alternating: {
        const Complex sign{k % 2 == 0 ? 1.0 : -1.0, 0.0};
        return {(1.0 - eps) * g0 * sign, sign};
    }
    }
    fail(ErrorKind::Domain, "unknown sequence mode");
}

ConjugateMap::ConjugateMap(FiniteBlaschkeProduct b, Complex a, Complex gamma, Normalization norm)
    : b_(std::move(b)), gamma_(unit(gamma)), rot_{1.0, 0.0}, p_(a * gamma_), one_minus_p2_(0.0),
      c_{}, one_minus_c2_(0.0) {
    one_minus_p2_ = one_minus_abs2(p_);
    if (!(one_minus_p2_ > 0.0))
        fail(ErrorKind::Domain, "conjugating automorphism needs |a| < 1");
    c_ = b_(p_);
    one_minus_c2_ = one_minus_abs2(b_, p_);
    if (!(one_minus_c2_ > std::numeric_limits<double>::min()))
        fail(ErrorKind::NumericalBreakdown, "1 - |B(a gamma)|^2 underflows");
    if (norm == Normalization::Renormalized)
        rot_ = std::conj(gamma_);
}

Complex ConjugateMap::operator()(Complex z) const {
    const Complex zeta = gamma_ * z;
    const Complex den = 1.0 - std::conj(p_) * zeta;
    const Complex q = (p_ - zeta) / den;
    const Complex q_minus_p = -zeta * one_minus_p2_ / den;
    const Complex diff = difference(b_, p_, q, q_minus_p);
    return rot_ * diff / (one_minus_c2_ + std::conj(c_) * diff);
}

Complex ConjugateMap::derivative_at_zero() const {
    return rot_ * gamma_ * one_minus_p2_ / one_minus_c2_ * derivative(b_, p_);
}

FiniteBlaschkeProduct renormalized_conjugate(const FiniteBlaschkeProduct& b, Complex a,
                                             Complex gamma) {
    const DiscAutomorphism inner(a, gamma);
    const Complex p = inner.a() * inner.gamma();
    const DiscAutomorphism outer(b(p), std::conj(inner.gamma()));
    const FiniteBlaschkeProduct f = conjugate_by(b, inner, outer);

    // The origin is a zero analytically (inner maps 0 to p, outer maps B(p) to 0).
    std::vector<Complex> zeros = f.zeros();
    auto nearest = std::min_element(zeros.begin(), zeros.end(),
                                    [](Complex l, Complex r) { return std::abs(l) < std::abs(r); });
    if (std::abs(*nearest) > 1e-9)
        fail(ErrorKind::NumericalBreakdown, "renormalized conjugate lost its zero at the origin");
    *nearest = Complex{};
    return {f.gamma(), std::move(zeros)};
}

DerivativeIdentity derivative_at_zero_identity(const FiniteBlaschkeProduct& b, Complex a,
                                               Complex gamma) {
    const FiniteBlaschkeProduct f = renormalized_conjugate(b, a, gamma);
    const Complex p = a * unit(gamma);
    const Complex rhs = one_minus_abs2(p) / one_minus_abs2(b, p) * derivative(b, p);
    return {derivative(f, Complex{}), rhs};
}

Complex rotation_constant(const FiniteBlaschkeProduct& b, Complex gamma0) {
    const Complex d = derivative(b, unit(gamma0));
    if (!(std::abs(d) > 0.0) || !std::isfinite(std::abs(d)))
        fail(ErrorKind::NumericalBreakdown, "B' vanishes on the unit circle");
    return unit(d);
}

double sup_deviation(const ConjugateMap& f, Complex rotation, PolarGrid grid) {
    return sup_over_grid(grid, [&](Complex z) { return std::abs(f(z) - rotation * z); });
}

std::vector<ConvergenceRecord> convergence_experiment(const FiniteBlaschkeProduct& b,
                                                      std::span<const SequenceStep> steps,
                                                      Complex gamma0, double r, int grid,
                                                      Normalization norm) {
    check_grid(r, grid);
    const Complex rot = rotation_constant(b, gamma0);
    std::vector<ConvergenceRecord> out;
    out.reserve(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const ConjugateMap f(b, steps[i].a, steps[i].gamma, norm);
        out.push_back({static_cast<int>(i) + 1, steps[i].a, unit(steps[i].gamma),
                       sup_deviation(f, rot, {r, grid}), rot});
    }
    return out;
}

std::vector<ConvergenceRecord> convergence_experiment(const FiniteBlaschkeProduct& b,
                                                      const SequenceSpec& spec, double r, int grid,
                                                      Normalization norm) {
    spec.validate();
    std::vector<SequenceStep> steps;
    for (int k = 1; k <= spec.count; ++k)
        steps.push_back(spec.step(k));
    return convergence_experiment(b, steps, spec.gamma0, r, grid, norm);
}

CounterexampleResult counterexample_run(int count) {
    if (count < 6)
        fail(ErrorKind::Domain, "counterexample needs count >= 6");
    const FiniteBlaschkeProduct square = FiniteBlaschkeProduct::monomial(2);
    const SequenceSpec spec{Complex{1.0, 0.0}, SequenceMode::Alternating, 0.5, count};
    const PolarGrid limit_grid{0.5, 24};
    const PolarGrid wide_grid{0.9, 24};
    auto plain = [&](int k) {
        const SequenceStep s = spec.step(k);
        return ConjugateMap(square, s.a, s.gamma, Normalization::Plain);
    };

    const int last_even = count % 2 == 0 ? count : count - 1;
    const int last_odd = count % 2 == 1 ? count : count - 1;
    const ConjugateMap even = plain(last_even);
    const ConjugateMap odd = plain(last_odd);
    const ConjugateMap prev = plain(count - 1);
    const ConjugateMap last = plain(count);
    const SequenceStep s = spec.step(count);
    const ConjugateMap renormalized(square, s.a, s.gamma, Normalization::Renormalized);

    CounterexampleResult out{};
    out.even_limit_deviation = sup_deviation(even, Complex{1.0, 0.0}, limit_grid);
    out.odd_limit_deviation = sup_deviation(odd, Complex{-1.0, 0.0}, limit_grid);
    out.unrenormalized_oscillation =
        sup_over_grid(wide_grid, [&](Complex z) { return std::abs(last(z) - prev(z)); });
    out.renormalized_deviation = sup_deviation(renormalized, Complex{1.0, 0.0}, limit_grid);
    return out;
}

double fatou_quotient(const FiniteBlaschkeProduct& b, Complex z) {
    const double s = one_minus_abs2(z);
    if (!(s > 0.0))
        fail(ErrorKind::Domain, "Schwarz-Pick quotient needs |z| < 1");
    const double gap = one_minus_abs2(b, z);
    if (!(gap > std::numeric_limits<double>::min()))
        fail(ErrorKind::NumericalBreakdown, "1 - |B(z)|^2 underflows");
    return s * std::abs(derivative(b, z)) / gap;
}

std::vector<FatouScanRow> fatou_limit_scan(const FiniteBlaschkeProduct& b,
                                           std::span<const double> radii, int angles) {
    if (angles < 1)
        fail(ErrorKind::Domain, "angle count must be positive");
    std::vector<FatouScanRow> out;
    double previous = 0.0;
    for (double r : radii) {
        if (!(r > previous && r < 1.0))
            fail(ErrorKind::Domain, "scan radii must increase inside (0, 1)");
        previous = r;
        double lowest = kInf;
        for (int j = 0; j < angles; ++j)
            lowest = std::min(lowest, fatou_quotient(b, std::polar(r, 2.0 * kPi * j / angles)));
        out.push_back({r, lowest});
    }
    return out;
}

ValenceReport valence(const FiniteBlaschkeProduct& b, Complex w, double radius, int samples) {
    if (!(std::abs(w) < 1.0))
        fail(ErrorKind::Domain, "valence target must lie in the open disc");
    if (!(radius > 0.0 && radius < 1.0))
        fail(ErrorKind::Domain, "valence contour radius must lie in (0, 1)");
    if (samples < 8)
        fail(ErrorKind::Domain, "valence needs at least 8 contour nodes");

    auto integrate = [&](int nodes) {
        Complex acc{};
        for (int j = 0; j < nodes; ++j) {
            const Complex z = std::polar(radius, 2.0 * kPi * j / nodes);
            const Complex gap = b(z) - w;
            if (std::abs(gap) <= kContourGap) {
                std::ostringstream msg;
                msg << "contour |z| = " << radius << " passes through the fiber of " << w;
                fail(ErrorKind::Domain, msg.str());
            }
            acc += z * derivative(b, z) / gap;
        }
        return acc / static_cast<double>(nodes);
    };

    ValenceReport report{w, radius, integrate(samples), 0, 0.0, samples};
    auto settle = [&] {
        report.valence = static_cast<int>(std::lround(report.winding_integral.real()));
        report.residual = std::abs(report.winding_integral - static_cast<double>(report.valence));
    };
    settle();
    if (report.residual > kValenceResidual) {
        report.samples = 2 * samples;
        report.winding_integral = integrate(report.samples);
        settle();
    }
    return report;
}

ValenceReport valence(const FiniteBlaschkeProduct& b, Complex w) {
    double outer = 0.0;
    for (Complex z : fiber_solve(b, w))
        outer = std::max(outer, std::abs(z));
    return valence(b, w, 0.5 * (1.0 + outer));
}

SeparationEstimate separation_estimate(const FiniteBlaschkeProduct& b, double M, int samples) {
    if (!(M > b.max_zero_modulus() && M < 1.0))
        fail(ErrorKind::Domain, "separation needs max|z_k| < M < 1");
    if (samples < 1)
        fail(ErrorKind::Domain, "separation needs at least one sample");

    const double radii[] = {M, 0.5 * (M + 1.0)};
    const double lo = M - kAnnulusSlack;
    const double hi = 1.0 / M + kAnnulusSlack;
    SeparationEstimate out{M, kInf, std::nullopt, samples};

    auto scan = [&](const std::vector<Complex>& fiber) {
        std::vector<Complex> kept;
        for (Complex z : fiber)
            if (std::abs(z) >= lo && std::abs(z) <= hi)
                kept.push_back(z);
        for (std::size_t i = 0; i < kept.size(); ++i)
            for (std::size_t j = i + 1; j < kept.size(); ++j) {
                const double d = std::abs(kept[i] - kept[j]);
                if (d < out.delta) {
                    out.delta = d;
                    out.witness_pair = std::make_pair(kept[i], kept[j]);
                }
            }
    };

    for (int s = 0; s < samples; ++s) {
        const double rho = radii[s % 2];
        const double turn = std::fmod(s * kGoldenFraction, 1.0);
        const Complex base = std::polar(rho, 2.0 * kPi * turn);
        std::vector<Complex> fiber = fiber_solve(b, b(base));
        // The base point is an exact member of its own fiber.
        auto nearest = std::min_element(fiber.begin(), fiber.end(), [&](Complex l, Complex r) {
            return std::abs(l - base) < std::abs(r - base);
        });
        *nearest = base;
        scan(fiber);

        std::vector<Complex> reflected;
        for (Complex z : fiber)
            if (z != Complex{})
                reflected.push_back(1.0 / std::conj(z));
        scan(reflected);
    }
    return out;
}

FiniteBlaschkeProduct factor_power_product(std::span<const std::pair<Complex, int>> factors) {
    std::vector<Complex> zeros;
    for (const auto& [point, power] : factors) {
        if (power < 1)
            fail(ErrorKind::Domain, "factor exponents must be >= 1");
        zeros.insert(zeros.end(), static_cast<std::size_t>(power), point);
    }
    return FiniteBlaschkeProduct::from_zeros(std::move(zeros));
}

std::vector<DensityPoint> density_family(Complex a, Complex b,
                                         std::span<const std::pair<int, int>> exponent_pairs) {
    if (hyperbolic::pseudo_hyperbolic_distance(a, b) <= 1e-10)
        fail(ErrorKind::Degenerate, "density family needs distinct a and b");
    const Complex pair[] = {a, b};
    const hyperbolic::HyperbolicHull segment = hyperbolic::hyperbolic_convex_hull(pair);

    std::vector<DensityPoint> out;
    for (const auto& [m, n] : exponent_pairs) {
        const std::pair<Complex, int> factors[] = {{a, m}, {b, n}};
        const CriticalSet crit = critical_points(factor_power_product(factors));
        std::vector<CriticalPoint> extra;
        for (const CriticalPoint& cp : crit.interior)
            if (std::abs(cp.location - a) > kExtractionRadius &&
                std::abs(cp.location - b) > kExtractionRadius)
                extra.push_back(cp);
        if (extra.size() != 1 || extra.front().multiplicity != 1) {
            std::ostringstream msg;
            msg << "cannot isolate the extra critical point for (m, n) = (" << m << ", " << n << ")";
            fail(ErrorKind::ExtractionAmbiguity, msg.str());
        }
        const Complex c = extra.front().location;
        out.push_back({m, n, c, hyperbolic::collinearity_residual(a, b, c),
                       hyperbolic::hull_contains(segment, c, kSegmentTolerance)});
    }
    return out;
}

std::vector<HullCheck> density_family3(Complex a, Complex b, Complex c, Exponents3 exponents) {
    const std::pair<Complex, int> factors[] = {{a, exponents.m}, {b, exponents.n}, {c, exponents.p}};
    const Complex corners[] = {a, b, c};
    const hyperbolic::HyperbolicHull hull = hyperbolic::hyperbolic_convex_hull(corners);
    std::vector<HullCheck> out;
    for (const CriticalPoint& cp : critical_points(factor_power_product(factors)).interior)
        out.push_back({cp.location, cp.multiplicity,
                       hyperbolic::hull_contains(hull, cp.location, kHullTolerance)});
    return out;
}

} // namespace blaschke::lab
