#include "cli/suites.hpp"

#include "blaschke/error.hpp"
#include "blaschke/hyperbolic.hpp"
#include "blaschke/lab.hpp"
#include "blaschke/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace blaschke::cli {

using nlohmann::json;

namespace {

constexpr int kSeparationSamples = 64;
constexpr int kFatouPoints = 200;
constexpr int kFatouAngles = 360;
constexpr int kCounterexampleCount = 16;
constexpr double kConvergeRate = 0.3;
constexpr int kConvergeCount = 14;
constexpr double kConvergeRadius = 0.9;

// Counts checks and keeps the first failing instance.
class Tally {
public:
    int checks = 0;
    int violations = 0;
    int errors = 0;
    json first_failure;

    void check(bool ok, const std::function<json()>& instance) {
        ++checks;
        if (ok)
            return;
        ++violations;
        if (first_failure.is_null())
            first_failure = instance();
    }

    void error(json instance, const Error& e) {
        ++errors;
        if (first_failure.is_null()) {
            instance["error"] = e.what();
            instance["error_kind"] = blaschke::to_string(e.kind());
            first_failure = std::move(instance);
        }
    }

    SuiteOutcome finish(json summary) const {
        summary["checks"] = checks;
        summary["violations"] = violations;
        summary["errors"] = errors;
        summary["passed"] = violations == 0 && errors == 0;
        if (!first_failure.is_null())
            summary["failing_instance"] = first_failure;
        return {std::move(summary), violations, errors};
    }
};

json base_summary(Suite suite, int trials, std::uint64_t seed) {
    return {{"suite", to_string(suite)}, {"seed", seed}, {"trials", trials}};
}

json instance(int trial, const FiniteBlaschkeProduct& b, const char* reason) {
    return {{"trial", trial}, {"product", product_to_json(b)}, {"reason", reason}};
}

SuiteOutcome hull_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Sampler rng(seed);
    Tally tally;
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const int order = rng.uniform_int(2, 8);
        const auto b = random_product(rng, order);
        try {
            const auto cs = critical_points(b);
            const auto hull = hyperbolic::hyperbolic_convex_hull(b.zeros());
            tally.check(cs.interior_count() == order - 1, [&] {
                auto j = instance(t, b, "interior critical count differs from order - 1");
                j["interior_count"] = cs.interior_count();
                return j;
            });
            for (const auto& c : cs.interior) {
                const double d = hyperbolic::hull_signed_distance(hull, c.location);
                worst = std::max(worst, d);
                tally.check(hyperbolic::hull_contains(hull, c.location, tol["hull_klein_tol"]), [&] {
                    auto j = instance(t, b, "critical point outside the hyperbolic hull");
                    j["critical_point"] = complex_to_json(c.location);
                    j["klein_distance"] = d;
                    return j;
                });
            }
            for (const auto& e : cs.exterior) {
                const Complex r = 1.0 / std::conj(e.location);
                const bool paired = std::any_of(cs.interior.begin(), cs.interior.end(), [&](const CriticalPoint& c) {
                    return std::abs(c.location - r) <= tol["reflection_tol"] && c.multiplicity == e.multiplicity;
                });
                tally.check(paired, [&] {
                    auto j = instance(t, b, "exterior critical point without a reflected partner");
                    j["critical_point"] = complex_to_json(e.location);
                    return j;
                });
            }
        } catch (const Error& e) {
            tally.error(instance(t, b, "numerical failure"), e);
        }
    }
    auto summary = base_summary(Suite::Hull, trials, seed);
    summary["max_klein_distance"] = trials > 0 ? json(worst) : json(nullptr);
    return tally.finish(std::move(summary));
}

SuiteOutcome converge_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Sampler rng(seed);
    Tally tally;
    double worst = 0.0;
    for (int t = 0; t <= trials; ++t) {
        // Trial 0 is z^2 at gamma0 = 1; the rest are random.
        const auto b = t == 0 ? FiniteBlaschkeProduct::monomial(2) : random_product(rng, rng.uniform_int(1, 8));
        const Complex gamma0 = t == 0 ? Complex{1.0, 0.0} : rng.on_circle();
        for (auto mode : {lab::SequenceMode::Radial, lab::SequenceMode::Spiral}) {
            lab::SequenceSpec spec{gamma0, mode, kConvergeRate, kConvergeCount};
            auto where = [&](const char* reason) {
                auto j = instance(t, b, reason);
                j["gamma0"] = complex_to_json(gamma0);
                j["mode"] = lab::to_string(mode);
                j["rate"] = kConvergeRate;
                j["count"] = kConvergeCount;
                j["radius"] = kConvergeRadius;
                return j;
            };
            try {
                const auto rec = lab::convergence_experiment(b, spec, kConvergeRadius);
                const double last = rec.back().sup_deviation;
                worst = std::max(worst, last);
                tally.check(last < tol["converge_sup_tol"], [&] {
                    auto j = where("final sup deviation too large");
                    j["sup_deviation"] = last;
                    return j;
                });
                bool decreasing = true;
                for (std::size_t k = rec.size() - 5; k < rec.size(); ++k)
                    decreasing = decreasing && rec[k].sup_deviation < rec[k - 1].sup_deviation;
                tally.check(decreasing, [&] { return where("sup deviation not decreasing over the last 5 steps"); });
                const Complex d = derivative(b, gamma0);
                tally.check(std::abs(rec.back().rotation_constant - d / std::abs(d)) <= tol["rotation_tol"],
                            [&] { return where("rotation constant mismatch"); });
            } catch (const Error& e) {
                tally.error(where("numerical failure"), e);
            }
        }
    }
    auto summary = base_summary(Suite::Converge, trials, seed);
    summary["rate"] = kConvergeRate;
    summary["count"] = kConvergeCount;
    summary["radius"] = kConvergeRadius;
    summary["max_final_sup_deviation"] = worst;
    return tally.finish(std::move(summary));
}

SuiteOutcome counterexample_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Tally tally;
    auto summary = base_summary(Suite::Counterexample, trials, seed);
    try {
        const auto r = lab::counterexample_run(kCounterexampleCount);
        const double eps = tol["counterexample_tol"];
        const auto ctx = [&](const char* reason) {
            return json{{"product", product_to_json(FiniteBlaschkeProduct::monomial(2))},
                        {"mode", "alternating"},
                        {"count", kCounterexampleCount},
                        {"reason", reason}};
        };
        const bool even = r.even_limit_deviation < eps;
        const bool odd = r.odd_limit_deviation < eps;
        const bool renorm = r.renormalized_deviation < eps;
        const bool oscillates = r.unrenormalized_oscillation > 1.0;
        tally.check(even, [&] { return ctx("plain even subsequence does not approach z"); });
        tally.check(odd, [&] { return ctx("plain odd subsequence does not approach -z"); });
        tally.check(renorm, [&] { return ctx("renormalized sequence does not approach z"); });
        tally.check(oscillates, [&] { return ctx("plain sequence does not oscillate"); });
        summary["count"] = kCounterexampleCount;
        summary["even_limit_deviation"] = r.even_limit_deviation;
        summary["odd_limit_deviation"] = r.odd_limit_deviation;
        summary["renormalized_deviation"] = r.renormalized_deviation;
        summary["unrenormalized_oscillation"] = r.unrenormalized_oscillation;
        summary["even_limit_is_z"] = even;
        summary["odd_limit_is_minus_z"] = odd;
        summary["renormalized_limit_is_z"] = renorm;
    } catch (const Error& e) {
        tally.error({{"reason", "numerical failure"}}, e);
    }
    return tally.finish(std::move(summary));
}

SuiteOutcome valence_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Sampler rng(seed);
    Tally tally;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const int order = rng.uniform_int(1, 6);
        const auto b = random_product(rng, order);
        const Complex w = rng.in_disc(0.95);
        auto where = [&](const char* reason) {
            auto j = instance(t, b, reason);
            j["w"] = complex_to_json(w);
            return j;
        };
        try {
            const auto rep = lab::valence(b, w);
            worst = std::max(worst, rep.residual);
            const auto fiber = fiber_solve(b, w);
            const auto inside = std::count_if(fiber.begin(), fiber.end(),
                                              [&](Complex z) { return std::abs(z) < rep.radius; });
            tally.check(rep.valence == order, [&] {
                auto j = where("winding count differs from the order");
                j["valence"] = rep.valence;
                j["radius"] = rep.radius;
                return j;
            });
            tally.check(rep.residual < tol["valence_residual_tol"], [&] {
                auto j = where("winding integral far from an integer");
                j["residual"] = rep.residual;
                return j;
            });
            tally.check(inside == rep.valence, [&] {
                auto j = where("winding count differs from the fiber count");
                j["fiber_inside"] = inside;
                return j;
            });
        } catch (const Error& e) {
            tally.error(where("numerical failure"), e);
        }
    }
    auto summary = base_summary(Suite::Valence, trials, seed);
    summary["max_residual"] = worst;
    return tally.finish(std::move(summary));
}

SuiteOutcome separation_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Sampler rng(seed);
    Tally tally;
    double smallest = std::numeric_limits<double>::infinity();

    const auto sq = FiniteBlaschkeProduct::monomial(2);
    try {
        const auto est = lab::separation_estimate(sq, 0.8, kSeparationSamples);
        tally.check(est.delta >= 1.6 - 1e-9, [&] {
            auto j = instance(-1, sq, "antipodal bound violated");
            j["M"] = 0.8;
            j["delta"] = est.delta;
            return j;
        });
    } catch (const Error& e) {
        tally.error(instance(-1, sq, "numerical failure"), e);
    }

    for (int t = 0; t < trials; ++t) {
        const auto b = random_product(rng, rng.uniform_int(2, 8));
        const double M = b.max_zero_modulus() + 0.05;
        auto where = [&](const char* reason) {
            auto j = instance(t, b, reason);
            j["M"] = M;
            return j;
        };
        try {
            const auto est = lab::separation_estimate(b, M, kSeparationSamples);
            tally.check(est.delta > 0.0 && std::isfinite(est.delta) && est.witness_pair.has_value(), [&] {
                auto j = where("no positive separation with a witness");
                j["delta"] = std::isfinite(est.delta) ? json(est.delta) : json("inf");
                return j;
            });
            if (!est.witness_pair)
                continue;
            smallest = std::min(smallest, est.delta);
            const auto [z, w] = *est.witness_pair;
            const bool in_annulus = std::min(std::abs(z), std::abs(w)) >= M - 1e-12 &&
                                    std::max(std::abs(z), std::abs(w)) <= 1.0 / M + 1e-12;
            const Complex bz = eval(b, z);
            const bool same_value = std::abs(bz - eval(b, w)) <= tol["separation_value_tol"] * std::max(1.0, std::abs(bz));
            tally.check(in_annulus && same_value, [&] {
                auto j = where("invalid witness pair");
                j["witness"] = json::array({complex_to_json(z), complex_to_json(w)});
                return j;
            });
        } catch (const Error& e) {
            tally.error(where("numerical failure"), e);
        }
    }
    auto summary = base_summary(Suite::Separation, trials, seed);
    summary["samples"] = kSeparationSamples;
    summary["min_delta"] = std::isfinite(smallest) ? json(smallest) : json(nullptr);
    return tally.finish(std::move(summary));
}

SuiteOutcome fatou_suite(int trials, std::uint64_t seed, const Tolerances& tol) {
    Sampler rng(seed);
    Tally tally;
    const std::vector<double> radii{0.9, 0.99, 0.999, 1.0 - 1e-4};
    double max_quotient = 0.0;
    double min_final = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const int order = rng.uniform_int(1, 10);
        const auto b = random_product(rng, order);
        try {
            const double slack = tol["schwarz_pick_slack"];
            for (int i = 0; i < kFatouPoints; ++i) {
                const Complex z = rng.in_disc(0.9999);
                const double q = lab::fatou_quotient(b, z);
                max_quotient = std::max(max_quotient, q);
                const bool ok = q <= 1.0 + slack && (order != 1 || std::abs(q - 1.0) <= slack);
                tally.check(ok, [&] {
                    auto j = instance(t, b, "Schwarz-Pick quotient out of range");
                    j["z"] = complex_to_json(z);
                    j["quotient"] = q;
                    return j;
                });
            }
            const auto rows = lab::fatou_limit_scan(b, radii, kFatouAngles);
            min_final = std::min(min_final, rows.back().min_quotient);
            tally.check(rows.back().min_quotient >= 1.0 - tol["fatou_limit_tol"], [&] {
                auto j = instance(t, b, "boundary quotient not close to 1");
                j["r"] = rows.back().r;
                j["min_quotient"] = rows.back().min_quotient;
                return j;
            });
        } catch (const Error& e) {
            tally.error(instance(t, b, "numerical failure"), e);
        }
    }
    auto summary = base_summary(Suite::Fatou, trials, seed);
    summary["max_quotient"] = max_quotient;
    summary["min_quotient_at_last_radius"] = std::isfinite(min_final) ? json(min_final) : json(nullptr);
    return tally.finish(std::move(summary));
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
    for (Suite s : {Suite::Hull, Suite::Converge, Suite::Counterexample, Suite::Valence, Suite::Separation, Suite::Fatou})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

const char* to_string(Suite suite) noexcept {
    switch (suite) {
    case Suite::Hull: return "hull";
    case Suite::Converge: return "converge";
    case Suite::Counterexample: return "counterexample";
    case Suite::Valence: return "valence";
    case Suite::Separation: return "separation";
    case Suite::Fatou: return "fatou";
    }
    return "?";
}

int default_trials(Suite suite) noexcept {
    switch (suite) {
    case Suite::Hull: return 200;
    case Suite::Converge: return 10;
    case Suite::Counterexample: return 1;
    case Suite::Valence: return 20;
    case Suite::Separation: return 20;
    case Suite::Fatou: return 20;
    }
    return 1;
}

SuiteOutcome run_suite(Suite suite, int trials, std::uint64_t seed, const Tolerances& tol) {
    switch (suite) {
    case Suite::Hull: return hull_suite(trials, seed, tol);
    case Suite::Converge: return converge_suite(trials, seed, tol);
    case Suite::Counterexample: return counterexample_suite(trials, seed, tol);
    case Suite::Valence: return valence_suite(trials, seed, tol);
    case Suite::Separation: return separation_suite(trials, seed, tol);
    case Suite::Fatou: return fatou_suite(trials, seed, tol);
    }
    fail(ErrorKind::Domain, "unknown suite");
}

} // namespace blaschke::cli
