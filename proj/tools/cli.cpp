#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <sstream>

#include "manifest.hpp"
#include "pacman/csv.hpp"
#include "pacman/domain.hpp"
#include "pacman/errors.hpp"
#include "pacman/experiments.hpp"
#include "pacman/green_continuous.hpp"
#include "pacman/green_discrete.hpp"
#include "pacman/potential_kernel.hpp"
#include "pacman/svg_plot.hpp"
#include "pacman/walk_mc.hpp"

#ifndef PACMAN_VERSION
#define PACMAN_VERSION "dev"
#endif

namespace pacman::cli {
namespace {

namespace fs = std::filesystem;

struct PairArg {
    double x = 0.0;
    double y = 0.0;
};

PairArg parse_pair(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(flag + " expects x,y but got '" + text + "'");
    try {
        std::size_t used_x = 0, used_y = 0;
        const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
        PairArg p{std::stod(xs, &used_x), std::stod(ys, &used_y)};
        if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument(text);
        return p;
    } catch (const std::exception&) {
        throw UsageError(flag + " expects two numbers x,y but got '" + text + "'");
    }
}

LatticePoint parse_lattice_pair(const std::string& text, const std::string& flag) {
    const PairArg p = parse_pair(text, flag);
    if (p.x != std::round(p.x) || p.y != std::round(p.y)) {
        throw UsageError(flag + " must name a lattice point (integers), got '" + text + "'");
    }
    return {static_cast<int>(p.x), static_cast<int>(p.y)};
}

PacmanGeometry checked_geometry(double alpha, int n) {
    try {
        return build_geometry(snap_angle(alpha), n);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::string point_text(LatticePoint p) { return std::to_string(p.x) + "," + std::to_string(p.y); }

// Collects outputs, writes each atomically, then writes the run manifest
// (which lists all of them) next to every output.
class RunRecorder {
public:
    RunRecorder(std::string subcommand, std::optional<std::uint64_t> seed) {
        manifest_.subcommand = std::move(subcommand);
        manifest_.tool_version = PACMAN_VERSION;
        manifest_.started_at = utc_timestamp();
        manifest_.has_seed = seed.has_value();
        manifest_.seed = seed.value_or(0);
    }

    nlohmann::json& parameters() { return manifest_.parameters; }

    void write(const fs::path& path, const std::string& content) {
        write_file_atomic(path, content);
        manifest_.outputs.push_back(digest_file(path));
    }

    void finish() {
        if (manifest_.outputs.empty()) return;
        manifest_.finished_at = utc_timestamp();
        const std::string text = nlohmann::json(manifest_).dump(2) + "\n";
        for (const auto& o : manifest_.outputs) write_file_atomic(o.path + ".manifest.json", text);
    }

private:
    RunManifest manifest_;
};

fs::path sibling(const fs::path& path, const std::string& suffix) {
    return path.parent_path() / (path.stem().string() + suffix + path.extension().string());
}

// --- potential -------------------------------------------------------------

int run_potential(int x, int y, std::ostream& out) {
    const LatticePoint p{x, y};
    const double exact = potential_exact(p);
    out << "x,y,exact,asymptotic,difference\n";
    out << x << ',' << y << ',' << format_double(exact) << ',';
    if (x == 0 && y == 0) {
        out << ",\n";  // asymptotic form is singular at the origin
    } else {
        const double asym = potential_asymptotic(p);
        out << format_double(asym) << ',' << format_double(exact - asym) << '\n';
    }
    return kExitOk;
}

// --- field -----------------------------------------------------------------

struct FieldOptions {
    double alpha = 0.0;
    int n = 0;
    std::string source = "0,0";
    std::string out;
    bool continuous = false;
};

int run_field(const FieldOptions& o) {
    const PacmanGeometry g = checked_geometry(o.alpha, o.n);
    const LatticePoint source = parse_lattice_pair(o.source, "--source");
    const LatticeDomain d = build_lattice_domain(g);
    if (!d.is_interior(source)) throw UsageError("--source " + o.source + " is not an interior lattice site");

    RunRecorder rec("field", std::nullopt);
    rec.parameters() = {{"alpha", g.alpha}, {"n", g.n}, {"source", point_text(source)}, {"continuous", o.continuous}};

    const ScalarField green = green_solve(d, source);
    CsvTable t;
    t.header = {"x", "y", "G", "g", "diff"};
    const auto sites = d.interior();
    t.rows.reserve(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const LatticePoint w = sites[i];
        std::string gs, diff;
        if (o.continuous && w != source) {
            const double cont = green_pacman(g, source.to_complex(), w.to_complex());
            gs = format_double(cont);
            diff = format_double(std::abs(green[i] - 2.0 / std::numbers::pi * cont));
        }
        t.rows.push_back({std::to_string(w.x), std::to_string(w.y), format_double(green[i]), gs, diff});
    }
    rec.write(o.out, to_csv(t));
    rec.finish();
    return kExitOk;
}

// --- arcs ------------------------------------------------------------------

struct ArcsOptions {
    double alpha = 0.0;
    int n = 0;
    std::string start;
    std::string mode = "bm";
    std::uint64_t trials = 100000;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string plot;
};

int run_arcs(const ArcsOptions& o) {
    const PacmanGeometry g = checked_geometry(o.alpha, o.n);
    const LatticePoint start = parse_lattice_pair(o.start, "--start");
    if (!contains(g, start)) throw UsageError("--start " + o.start + " is not strictly inside the domain");
    if (o.mode == "walk") {
        if (!o.seed) throw UsageError("--seed is required for --mode walk");
        if (o.trials == 0) throw UsageError("--trials must be positive");
    }

    RunRecorder rec("arcs", o.mode == "walk" ? o.seed : std::nullopt);
    rec.parameters() = {{"alpha", g.alpha}, {"n", g.n}, {"start", point_text(start)}, {"mode", o.mode}};

    CsvTable t;
    if (o.mode == "bm") {
        const ArcMeasure m = bm_arc_measure(g, start.to_complex());
        t.header = {"k", "measure"};
        for (int k = 1; k <= m.arc_count(); ++k) t.rows.push_back({std::to_string(k), format_double(m.at(k))});
    } else {
        const LatticeDomain d = build_lattice_domain(g);
        WalkRunConfig cfg;
        cfg.trials = o.trials;
        cfg.seed = *o.seed;
        rec.parameters()["trials"] = o.trials;
        const ArcMeasure m = walk_arc_measure(d, start, cfg);
        t.header = {"k", "p", "stderr"};
        for (int k = 1; k <= m.arc_count(); ++k) {
            t.rows.push_back({std::to_string(k), format_double(m.at(k)),
                              format_double(m.standard_error[static_cast<std::size_t>(k - 1)])});
        }
    }
    rec.write(o.out, to_csv(t));
    if (!o.plot.empty()) rec.write(o.plot, render_plot(t, PlotKind::ArcHistogram));
    rec.finish();
    return kExitOk;
}

// --- rate ------------------------------------------------------------------

struct RateOptions {
    std::vector<double> alphas;
    std::vector<int> ns;
    std::string out;
    std::string plot;
    std::optional<std::uint64_t> seed;
};

int run_rate(const RateOptions& o) {
    ExperimentConfig cfg;
    for (double a : o.alphas) cfg.alphas.push_back(snap_angle(a));
    cfg.ns = o.ns;
    cfg.seed = o.seed.value_or(0);
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    } catch (const FitError& e) {
        throw UsageError(e.what());
    }

    RunRecorder rec("rate", o.seed);
    rec.parameters() = {{"alphas", cfg.alphas}, {"ns", cfg.ns}, {"residual_tolerance", cfg.solver.residual_tolerance}};

    const auto results = rate_sweep(cfg);
    CsvTable rows, summary;
    rows.header = {"alpha", "n", "sup_error", "mean_error", "region_min_radius"};
    summary.header = {"alpha", "slope", "intercept", "r2", "c_alpha"};
    for (const auto& r : results) {
        for (const auto& s : r.scales) {
            rows.rows.push_back({format_double(r.alpha), std::to_string(s.n), format_double(s.sup_error),
                                 format_double(s.mean_error), format_double(s.region_min_radius)});
        }
        summary.rows.push_back({format_double(r.alpha), format_double(r.fit.slope), format_double(r.fit.intercept),
                                format_double(r.fit.r_squared), format_double(r.c_alpha)});
    }
    rec.write(o.out, to_csv(rows));
    rec.write(sibling(o.out, "_summary"), to_csv(summary));
    if (!o.plot.empty()) rec.write(o.plot, render_plot(rows, PlotKind::RateLogLog));
    rec.finish();
    return kExitOk;
}

// --- expdiff ---------------------------------------------------------------

struct ExpdiffOptions {
    double alpha = 0.0;
    int n = 0;
    std::string x;
    std::string y;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string out;
};

int run_expdiff(const ExpdiffOptions& o) {
    const PacmanGeometry g = checked_geometry(o.alpha, o.n);
    const LatticePoint x = parse_lattice_pair(o.x, "--x");
    const PairArg yp = parse_pair(o.y, "--y");
    const Complex y{yp.x, yp.y};
    if (o.trials == 0) throw UsageError("--trials must be positive");
    if (!contains(g, x)) throw UsageError("--x " + o.x + " is not strictly inside the domain");
    if (!contains(g, y)) throw UsageError("--y " + o.y + " is not strictly inside the domain");
    const double reach = 10.0 * std::log(static_cast<double>(g.n));
    if (project_to_boundary(g, x.to_complex()).distance > reach) {
        throw UsageError("--x must lie within 10 ln n of the boundary");
    }
    if (std::abs(x.to_complex() - y) > reach) throw UsageError("|x - y| must be at most 10 ln n");

    RunRecorder rec("expdiff", o.seed);
    rec.parameters() = {{"alpha", g.alpha}, {"n", g.n}, {"x", point_text(x)}, {"y", o.y}, {"trials", o.trials}};

    const LatticeDomain d = build_lattice_domain(g);
    WalkRunConfig cfg;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    const ExpDiffResult r = expdiff_estimate(d, x, y, cfg);
    CsvTable t;
    t.header = {"estimate", "stderr", "bound_scale", "k0", "boundary_distance", "separation"};
    t.rows.push_back({format_double(r.estimate), format_double(r.standard_error), format_double(r.bound_scale),
                      std::to_string(r.k0), format_double(r.boundary_distance), format_double(r.separation)});
    rec.write(o.out, to_csv(t));
    rec.finish();
    return kExitOk;
}

}  // namespace

double snap_angle(double radians) {
    const double quarter = std::numbers::pi / 4.0;
    const double k = std::round(radians / quarter);
    if (std::abs(radians - k * quarter) <= 1e-6) return k * std::numbers::pi / 4.0;
    return radians;
}

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Green's functions, harmonic measure and convergence rates on pacman domains", "pacman_lab"};
    app.require_subcommand(1);

    int px = 0, py = 0;
    auto* potential = app.add_subcommand("potential", "potential kernel a(x): exact, asymptotic, difference");
    potential->add_option("--x", px, "first coordinate")->required();
    potential->add_option("--y", py, "second coordinate")->required();

    FieldOptions fo;
    auto* field = app.add_subcommand("field", "discrete Green's function G(., source) as CSV");
    field->add_option("--alpha", fo.alpha, "wedge angle in radians, [0, pi]")->required();
    field->add_option("--n", fo.n, "scale n >= 8")->required();
    field->add_option("--source", fo.source, "source lattice point x,y (default 0,0)");
    field->add_option("--out", fo.out, "output CSV path")->required();
    field->add_flag("--continuous", fo.continuous, "also fill g and |G - (2/pi) g|");

    ArcsOptions ao;
    std::uint64_t arcs_seed = 0;
    auto* arcs = app.add_subcommand("arcs", "exit probability per boundary arc");
    arcs->add_option("--alpha", ao.alpha, "wedge angle in radians, [0, pi]")->required();
    arcs->add_option("--n", ao.n, "scale n >= 8")->required();
    arcs->add_option("--start", ao.start, "start lattice point x,y")->required();
    arcs->add_option("--mode", ao.mode, "bm (exact Brownian) or walk (Monte Carlo)")
        ->check(CLI::IsMember({"bm", "walk"}));
    arcs->add_option("--trials", ao.trials, "walk trials");
    auto* arcs_seed_opt = arcs->add_option("--seed", arcs_seed, "RNG seed (required for walk)");
    arcs->add_option("--out", ao.out, "output CSV path")->required();
    arcs->add_option("--plot", ao.plot, "optional SVG histogram path");

    RateOptions ro;
    std::uint64_t rate_seed = 0;
    auto* rate = app.add_subcommand("rate", "convergence-rate sweep and log-log fit");
    rate->add_option("--alphas", ro.alphas, "comma-separated angles in radians")->required()->delimiter(',');
    rate->add_option("--ns", ro.ns, "comma-separated strictly increasing scales")->required()->delimiter(',');
    rate->add_option("--out", ro.out, "output CSV path")->required();
    rate->add_option("--plot", ro.plot, "optional SVG log-log plot path");
    auto* rate_seed_opt = rate->add_option("--seed", rate_seed, "recorded in the manifest");

    ExpdiffOptions eo;
    auto* expdiff = app.add_subcommand("expdiff", "mean |log(|S_T| / |B_tau|)| for independent exits");
    expdiff->add_option("--alpha", eo.alpha, "wedge angle in radians, [0, pi]")->required();
    expdiff->add_option("--n", eo.n, "scale n >= 8")->required();
    expdiff->add_option("--x", eo.x, "walk start lattice point x,y")->required();
    expdiff->add_option("--y", eo.y, "Brownian start point x,y")->required();
    expdiff->add_option("--trials", eo.trials, "trials");
    expdiff->add_option("--seed", eo.seed, "RNG seed")->required();
    expdiff->add_option("--out", eo.out, "output CSV path")->required();

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*potential) return run_potential(px, py, out);
        if (*field) return run_field(fo);
        if (*arcs) {
            if (*arcs_seed_opt) ao.seed = arcs_seed;
            return run_arcs(ao);
        }
        if (*rate) {
            if (*rate_seed_opt) ro.seed = rate_seed;
            return run_rate(ro);
        }
        if (*expdiff) return run_expdiff(eo);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return dispatch(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace pacman::cli
