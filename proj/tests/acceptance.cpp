// Acceptance run: every criterion prints one PASS/FAIL line with its worst
// observed statistic. Exit status is 0 only when all of them pass.

#include "blaschke/error.hpp"
#include "blaschke/hyperbolic.hpp"
#include "blaschke/lab.hpp"
#include "blaschke/sampling.hpp"
#include "hull_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace blaschke;
namespace hyp = blaschke::hyperbolic;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Verdict {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
};

std::string fmt(const char* format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

// Shared corpus for criteria 1 and 2.
std::vector<FiniteBlaschkeProduct> hull_corpus() {
    Sampler rng(1);
    std::vector<FiniteBlaschkeProduct> out;
    for (int i = 0; i < 200; ++i) {
        const int order = rng.uniform_int(2, 8);
        out.push_back(random_product(rng, order));
    }
    return out;
}

Verdict hull_containment() {
    double worst = -1.0;
    int points = 0;
    bool ok = true;
    for (const auto& b : hull_corpus()) {
        const auto hull = hyp::hyperbolic_convex_hull(b.zeros());
        for (const auto& c : critical_points(b).interior) {
            ++points;
            worst = std::max(worst, hyp::hull_signed_distance(hull, c.location));
            ok = ok && hyp::hull_contains(hull, c.location, 1e-8);
        }
    }
    return {ok, std::to_string(points) + " critical points, max Klein distance " + fmt("%.3g", worst)};
}

Verdict critical_count_and_reflection() {
    int bad_count = 0;
    double worst = 0.0;
    for (const auto& b : hull_corpus()) {
        const auto cs = critical_points(b);
        if (cs.interior_count() != b.order() - 1)
            ++bad_count;
        if (cs.exterior_count() + [&] {
                int at_origin = 0;
                for (const auto& c : cs.interior)
                    if (std::abs(c.location) == 0.0)
                        at_origin += c.multiplicity;
                return at_origin;
            }() != b.order() - 1)
            ++bad_count;
        for (const auto& e : cs.exterior) {
            const Complex r = 1.0 / std::conj(e.location);
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : cs.interior)
                if (c.multiplicity == e.multiplicity)
                    best = std::min(best, std::abs(c.location - r));
            worst = std::max(worst, best);
        }
    }
    return {bad_count == 0 && worst <= 1e-8,
            std::to_string(bad_count) + " count mismatches, max reflection error " + fmt("%.3g", worst)};
}

Verdict renormalized_convergence() {
    Sampler rng(2);
    std::vector<std::pair<FiniteBlaschkeProduct, Complex>> cases;
    cases.emplace_back(FiniteBlaschkeProduct::monomial(2), Complex{1.0, 0.0});
    for (int i = 0; i < 10; ++i) {
        auto b = random_product(rng, rng.uniform_int(1, 8));
        cases.emplace_back(std::move(b), rng.on_circle());
    }
    double worst = 0.0;
    double worst_rot = 0.0;
    bool monotone = true;
    for (const auto& [b, g0] : cases) {
        for (auto mode : {lab::SequenceMode::Radial, lab::SequenceMode::Spiral}) {
            const lab::SequenceSpec spec{g0, mode, 0.3, 14};
            const auto rec = lab::convergence_experiment(b, spec, 0.9);
            worst = std::max(worst, rec.back().sup_deviation);
            for (std::size_t k = rec.size() - 5; k < rec.size(); ++k)
                monotone = monotone && rec[k].sup_deviation < rec[k - 1].sup_deviation;
            const Complex d = derivative(b, g0);
            worst_rot = std::max(worst_rot, std::abs(rec.back().rotation_constant - d / std::abs(d)));
        }
    }
    return {worst < 1e-6 && monotone && worst_rot <= 1e-12,
            "rate 0.3, max final sup " + fmt("%.3g", worst) + (monotone ? ", " : ", NOT ") +
                "decreasing over last 5, rotation error " + fmt("%.3g", worst_rot)};
}

Verdict counterexample() {
    const auto r = lab::counterexample_run(16);
    const bool ok = r.even_limit_deviation < 1e-6 && r.odd_limit_deviation < 1e-6 && r.renormalized_deviation < 1e-6;
    return {ok, "even vs z " + fmt("%.3g", r.even_limit_deviation) + ", odd vs -z " +
                    fmt("%.3g", r.odd_limit_deviation) + ", renormalized vs z " +
                    fmt("%.3g", r.renormalized_deviation) + ", oscillation " +
                    fmt("%.3g", r.unrenormalized_oscillation)};
}

Verdict derivative_identity() {
    Sampler rng(5);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto b = random_product(rng, rng.uniform_int(1, 8));
        const Complex a = rng.in_disc(0.95);
        const Complex gamma = rng.on_circle();
        const auto id = lab::derivative_at_zero_identity(b, a, gamma);
        worst = std::max(worst, std::abs(id.lhs - id.rhs) / (1.0 + std::abs(id.rhs)));
    }
    return {worst <= 1e-9, "max relative residual " + fmt("%.3g", worst)};
}

Verdict boundary_derivative() {
    Sampler rng(6);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const auto b = random_product(rng, rng.uniform_int(1, 10));
        for (int j = 0; j < 36; ++j) {
            const double theta = 2.0 * kPi * j / 36.0;
            const double formula = boundary_derivative_modulus(b, theta);
            const double direct = std::abs(derivative(b, polar_unit(theta)));
            worst = std::max(worst, std::abs(formula - direct) / direct);
        }
    }
    // z^n: every term is 1/|e^{it}|^2, so the sum is n up to rounding of the unit vector.
    double mono = 0.0;
    for (int n = 1; n <= 12; ++n)
        for (int j = 0; j < 36; ++j)
            mono = std::max(mono, std::abs(boundary_derivative_modulus(FiniteBlaschkeProduct::monomial(n), 2.0 * kPi * j / 36.0) - n) / n);
    return {worst < 1e-10 && mono <= 4.0 * kEps,
            "max relative error " + fmt("%.3g", worst) + ", z^n relative error " + fmt("%.3g", mono)};
}

Verdict fatou_quotient() {
    Sampler rng(7);
    double max_q = 0.0;
    double order1 = 0.0;
    double min_last = 2.0;
    const std::vector<double> radii{0.9, 0.99, 0.999, 1.0 - 1e-4};
    for (int order = 1; order <= 10; ++order) {
        for (int i = 0; i < 5; ++i) {
            const auto b = random_product(rng, order);
            for (int s = 0; s < 200; ++s) {
                const double q = lab::fatou_quotient(b, rng.in_disc(0.9999));
                max_q = std::max(max_q, q);
                if (order == 1)
                    order1 = std::max(order1, std::abs(q - 1.0));
            }
            min_last = std::min(min_last, lab::fatou_limit_scan(b, radii, 360).back().min_quotient);
        }
    }
    return {max_q <= 1.0 + 1e-12 && order1 <= 1e-12 && min_last >= 1.0 - 1e-3,
            "max quotient 1" + fmt("%+.3g", max_q - 1.0) + ", order-1 deviation " + fmt("%.3g", order1) +
                ", min at r=1-1e-4 " + fmt("%.7f", min_last)};
}

Verdict valence() {
    Sampler rng(8);
    int mismatches = 0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int order = rng.uniform_int(1, 6);
        const auto b = random_product(rng, order);
        const Complex w = rng.in_disc(0.95);
        const auto rep = lab::valence(b, w);
        const auto fiber = fiber_solve(b, w);
        const auto inside = std::count_if(fiber.begin(), fiber.end(), [&](Complex z) { return std::abs(z) < rep.radius; });
        worst = std::max(worst, rep.residual);
        if (rep.valence != order || inside != rep.valence || rep.residual >= 0.05)
            ++mismatches;
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches, max integer residual " + fmt("%.3g", worst)};
}

Verdict separation() {
    Sampler rng(9);
    double min_delta = std::numeric_limits<double>::infinity();
    int invalid = 0;
    for (int i = 0; i < 20; ++i) {
        const auto b = random_product(rng, rng.uniform_int(2, 8));
        const double M = b.max_zero_modulus() + 0.05;
        const auto est = lab::separation_estimate(b, M, 64);
        if (!(est.delta > 0.0) || !est.witness_pair) {
            ++invalid;
            continue;
        }
        const auto [z, w] = *est.witness_pair;
        const bool annulus = std::min(std::abs(z), std::abs(w)) >= M - 1e-12 &&
                             std::max(std::abs(z), std::abs(w)) <= 1.0 / M + 1e-12;
        const Complex bz = eval(b, z);
        const bool fiber = std::abs(bz - eval(b, w)) <= 1e-8 * std::max(1.0, std::abs(bz));
        const bool distance = std::abs(std::abs(z - w) - est.delta) <= 1e-15;
        if (!(annulus && fiber && distance))
            ++invalid;
        min_delta = std::min(min_delta, est.delta);
    }
    const double sq = lab::separation_estimate(FiniteBlaschkeProduct::monomial(2), 0.8, 64).delta;
    return {invalid == 0 && sq >= 1.6 - 1e-9,
            std::to_string(invalid) + " invalid, min delta " + fmt("%.4g", min_delta) + ", z^2 at M=0.8 delta " +
                fmt("%.12g", sq)};
}

Verdict density_families() {
    Sampler rng(10);
    std::vector<std::pair<int, int>> pairs;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n)
            pairs.emplace_back(m, n);
    double worst = 0.0;
    int outside = 0;
    for (int i = 0; i < 10; ++i) {
        const Complex a = rng.in_disc(0.9);
        const Complex b = rng.in_disc(0.9);
        for (const auto& d : lab::density_family(a, b, pairs)) {
            worst = std::max(worst, d.collinearity_residual);
            outside += d.between ? 0 : 1;
        }
    }
    int points = 0;
    int hull_fail = 0;
    for (int i = 0; i < 5; ++i) {
        const Complex a = rng.in_disc(0.9);
        const Complex b = rng.in_disc(0.9);
        const Complex c = rng.in_disc(0.9);
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n)
                for (int p = 1; p <= 4; ++p)
                    for (const auto& h : lab::density_family3(a, b, c, {m, n, p})) {
                        ++points;
                        hull_fail += h.in_hull ? 0 : 1;
                    }
    }
    return {worst < 1e-8 && hull_fail == 0,
            "max collinearity residual " + fmt("%.3g", worst) + " (" + std::to_string(outside) +
                " off the segment), three-factor: " + std::to_string(hull_fail) + "/" + std::to_string(points) +
                " outside the hull"};
}

Verdict geometry_kernel() {
    Sampler rng(11);
    double round_trip = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex p = rng.in_disc(0.999);
        round_trip = std::max(round_trip, std::abs(hyp::klein_to_poincare(hyp::poincare_to_klein(p)) - p));
    }

    int equivariance_fail = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<Complex> pts(rng.uniform_int(3, 8));
        for (auto& z : pts)
            z = rng.in_disc(0.8);
        const DiscAutomorphism t(rng.in_disc(0.7), rng.on_circle());
        std::vector<Complex> moved;
        for (Complex z : pts)
            moved.push_back(t(z));
        const auto h = hyp::hyperbolic_convex_hull(pts);
        const auto hm = hyp::hyperbolic_convex_hull(moved);
        const auto back = inverse(t);
        for (Complex z : testing::sample_hull(h, 16))
            equivariance_fail += hyp::hull_contains(hm, t(z), 1e-8) ? 0 : 1;
        for (Complex z : testing::sample_hull(hm, 16))
            equivariance_fail += hyp::hull_contains(h, back(z), 1e-8) ? 0 : 1;
    }

    int euclid_fail = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<Complex> pts(rng.uniform_int(2, 8));
        for (auto& z : pts)
            z = rng.in_disc(0.95);
        const auto h = hyp::hyperbolic_convex_hull(pts);
        for (Complex z : testing::sample_hull(h, 32))
            euclid_fail += testing::in_euclidean_hull(pts, z, 1e-9) ? 0 : 1;
    }
    return {round_trip <= 1e-12 && equivariance_fail == 0 && euclid_fail == 0,
            "round trip " + fmt("%.3g", round_trip) + ", equivariance misses " + std::to_string(equivariance_fail) +
                ", Euclidean-hull misses " + std::to_string(euclid_fail)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hull containment of critical points", hull_containment},
        {2, "critical count and reflection pairing", critical_count_and_reflection},
        {3, "renormalized conjugates converge to the rotation", renormalized_convergence},
        {4, "alternating counterexample", counterexample},
        {5, "f'(0) identity", derivative_identity},
        {6, "boundary derivative formula", boundary_derivative},
        {7, "Schwarz-Pick / Fatou quotient", fatou_quotient},
        {8, "valence equals order", valence},
        {9, "fiber separation", separation},
        {10, "density families", density_families},
        {11, "geometry kernel", geometry_kernel},
    };

    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const Error& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-50s %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs);
        failed += v.pass ? 0 : 1;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
    return failed == 0 ? 0 : 1;
}
