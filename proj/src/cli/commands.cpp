#include "cli/commands.hpp"

#include "blaschke/error.hpp"
#include "blaschke/hyperbolic.hpp"
#include "blaschke/sampling.hpp"
#include "cli/spec_io.hpp"
#include "cli/suites.hpp"
#include "cli/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace blaschke::cli {

using nlohmann::json;

std::vector<CriticalRow> critical_rows(const FiniteBlaschkeProduct& b, bool check_hull, double klein_tol) {
    const auto cs = critical_points(b);
    std::vector<CriticalRow> rows;
    std::optional<hyperbolic::HyperbolicHull> hull;
    if (check_hull)
        hull = hyperbolic::hyperbolic_convex_hull(b.zeros());
    for (const auto& c : cs.interior) {
        std::optional<bool> inside;
        if (hull)
            inside = hyperbolic::hull_contains(*hull, c.location, klein_tol);
        rows.push_back({c.location, c.multiplicity, true, inside});
    }
    for (const auto& c : cs.exterior)
        rows.push_back({c.location, c.multiplicity, false, std::nullopt});
    return rows;
}

std::string critical_rows_csv(std::span<const CriticalRow> rows) {
    std::ostringstream out;
    out << "re,im,multiplicity,region,in_hull\n";
    for (const auto& r : rows) {
        out << format_double(r.location.real()) << ',' << format_double(r.location.imag()) << ','
            << r.multiplicity << ',' << (r.interior ? "interior" : "exterior") << ','
            << (r.in_hull ? (*r.in_hull ? "true" : "false") : "n/a") << '\n';
    }
    return out.str();
}

json critical_rows_json(std::span<const CriticalRow> rows) {
    json interior = json::array();
    json exterior = json::array();
    for (const auto& r : rows) {
        json j{{"re", r.location.real()}, {"im", r.location.imag()}, {"multiplicity", r.multiplicity}};
        if (r.interior) {
            j["in_hull"] = r.in_hull ? json(*r.in_hull) : json(nullptr);
            interior.push_back(std::move(j));
        } else {
            exterior.push_back(std::move(j));
        }
    }
    return {{"interior", std::move(interior)}, {"exterior", std::move(exterior)}};
}

std::string convergence_csv(std::span<const lab::ConvergenceRecord> records) {
    std::ostringstream out;
    out << "k,a_re,a_im,gamma_re,gamma_im,sup_deviation,rot_re,rot_im\n";
    for (const auto& r : records) {
        out << r.k << ',' << format_double(r.a.real()) << ',' << format_double(r.a.imag()) << ','
            << format_double(r.gamma.real()) << ',' << format_double(r.gamma.imag()) << ','
            << format_double(r.sup_deviation) << ',' << format_double(r.rotation_constant.real()) << ','
            << format_double(r.rotation_constant.imag()) << '\n';
    }
    return out.str();
}

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Domain:
        return kExitUsage;
    case ErrorKind::Io:
        return kExitIo;
    default:
        return kExitNumerical;
    }
}

struct CriticalArgs {
    std::string spec;
    bool hull = false;
    std::string format = "csv";
};

struct ConvergeArgs {
    std::string spec;
    std::string mode = "radial";
    std::string gamma0 = "1,0";
    double rate = 0.5;
    int count = 12;
    double radius = 0.9;
    int grid = 24;
    bool plain = false;
};

struct PlotArgs {
    std::string spec;
    std::string out;
};

struct VerifyArgs {
    std::string suite;
    int trials = -1;
    std::uint64_t seed = 1;
};

struct RandomArgs {
    std::uint64_t seed = 1;
    int order = 0;
    double radius = 0.9;
};

int cmd_critical_points(const CriticalArgs& args, const Tolerances& tol, std::ostream& out) {
    const auto b = load_product_spec(args.spec);
    const auto rows = critical_rows(b, args.hull, tol["hull_klein_tol"]);
    if (args.format == "json")
        out << critical_rows_json(rows).dump(2) << '\n';
    else
        out << critical_rows_csv(rows);
    for (const auto& r : rows)
        if (r.in_hull && !*r.in_hull)
            return kExitViolation;
    return kExitOk;
}

int cmd_converge(const ConvergeArgs& args, std::ostream& out) {
    const auto b = load_product_spec(args.spec);
    const auto mode = lab::parse_sequence_mode(args.mode);
    if (!mode)
        fail(ErrorKind::Parse, "unknown --mode '" + args.mode + "'");
    const Complex g0 = parse_complex_pair(args.gamma0);
    if (std::abs(std::abs(g0) - 1.0) > 1e-9)
        fail(ErrorKind::Parse, "--gamma0 must be unimodular");
    if (!(args.radius > 0.0 && args.radius <= 0.95))
        fail(ErrorKind::Parse, "--radius must be in (0, 0.95]");
    if (args.grid < 1)
        fail(ErrorKind::Parse, "--grid must be positive");
    const lab::SequenceSpec spec{g0 / std::abs(g0), *mode, args.rate, args.count};
    spec.validate();
    const auto records = lab::convergence_experiment(
        b, spec, args.radius, args.grid, args.plain ? lab::Normalization::Plain : lab::Normalization::Renormalized);
    out << convergence_csv(records);
    return kExitOk;
}

int cmd_plot(const PlotArgs& args) {
    const auto b = load_product_spec(args.spec);
    const std::string svg = render_svg(b);
    std::ofstream file(args.out, std::ios::binary);
    if (!file)
        fail(ErrorKind::Io, "cannot write " + args.out);
    file << svg;
    file.flush();
    if (!file)
        fail(ErrorKind::Io, "error writing " + args.out);
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args, const Tolerances& tol, std::ostream& out) {
    const auto suite = parse_suite(args.suite);
    if (!suite)
        fail(ErrorKind::Parse, "unknown suite '" + args.suite + "'");
    const int trials = args.trials < 0 ? default_trials(*suite) : args.trials;
    const auto outcome = run_suite(*suite, trials, args.seed, tol);
    out << outcome.summary.dump(2) << '\n';
    if (outcome.violations > 0)
        return kExitViolation;
    if (outcome.errors > 0)
        return kExitNumerical;
    return kExitOk;
}

int cmd_random_spec(const RandomArgs& args, std::ostream& out) {
    if (args.order < 1)
        fail(ErrorKind::Parse, "--order must be positive");
    if (!(args.radius > 0.0 && args.radius < 1.0))
        fail(ErrorKind::Parse, "--radius must be in (0, 1)");
    Sampler rng(args.seed);
    out << product_to_json(random_product(rng, args.order, args.radius)).dump(2) << '\n';
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite Blaschke products: critical points, hyperbolic hulls and renormalized conjugates"};
    app.name("blaschke-lab");
    app.require_subcommand(1);
    app.footer("Tolerance overrides: BLASCHKE_LAB_TOL_OVERRIDES=name=value,... (see README)");

    CriticalArgs crit;
    auto* c = app.add_subcommand("critical-points", "Critical points of B, optionally with hull membership");
    c->add_option("spec", crit.spec, "Product spec (JSON)")->required();
    c->add_flag("--hull", crit.hull, "Check each interior critical point against the hull of the zeros");
    c->add_option("--format", crit.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    ConvergeArgs conv;
    auto* v = app.add_subcommand("converge", "Sup deviation of the renormalized conjugates from their limit rotation");
    v->add_option("spec", conv.spec, "Product spec (JSON)")->required();
    v->add_option("--mode", conv.mode, "radial, spiral or alternating");
    v->add_option("--gamma0", conv.gamma0, "Boundary point as re,im");
    v->add_option("--rate", conv.rate, "eps_k = rate^k");
    v->add_option("--count", conv.count, "Number of steps");
    v->add_option("--radius", conv.radius, "Outer radius of the evaluation grid");
    v->add_option("--grid", conv.grid, "Grid radii (angles = 4 * grid)");
    v->add_flag("--plain", conv.plain, "Drop the conj(gamma_k) rotation from the outer automorphism");

    PlotArgs plot;
    auto* p = app.add_subcommand("plot", "SVG figure of zeros, critical points and hull");
    p->add_option("spec", plot.spec, "Product spec (JSON)")->required();
    p->add_option("--out", plot.out, "Output SVG file")->required();

    VerifyArgs ver;
    auto* w = app.add_subcommand("verify", "Run a verification suite and print a JSON summary");
    w->add_option("--suite", ver.suite, "hull, converge, counterexample, valence, separation or fatou")->required();
    w->add_option("--trials", ver.trials, "Number of random instances");
    w->add_option("--seed", ver.seed, "Seed for the mt19937_64 generator");

    RandomArgs rnd;
    auto* r = app.add_subcommand("random-spec", "Print a random product spec");
    r->add_option("--seed", rnd.seed, "Seed for the mt19937_64 generator");
    r->add_option("--order", rnd.order, "Number of zeros")->required();
    r->add_option("--radius", rnd.radius, "Zeros are uniform in |z| <= radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "blaschke-lab: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto tol = Tolerances::from_environment();
        if (c->parsed())
            return cmd_critical_points(crit, tol, out);
        if (v->parsed())
            return cmd_converge(conv, out);
        if (p->parsed())
            return cmd_plot(plot);
        if (w->parsed())
            return cmd_verify(ver, tol, out);
        return cmd_random_spec(rnd, out);
    } catch (const Error& e) {
        err << "blaschke-lab: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace blaschke::cli
