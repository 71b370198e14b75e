#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "report.hpp"
#include "weber_orr/case_grid.hpp"
#include "weber_orr/errors.hpp"
#include "weber_orr/identities.hpp"
#include "weber_orr/mellin.hpp"
#include "weber_orr/weber.hpp"

namespace weber_orr::cli {
namespace fs = std::filesystem;

namespace {

constexpr double kDefaultResidualTol = 1e-3;

using PointFn = std::function<QuadratureResult(double)>;

// Evaluates fn over the grid. Numeric failures at a point are recorded in its
// row; configuration errors still propagate.
std::vector<Row> evaluate_grid(const std::vector<double>& xs, int workers, const PointFn& fn,
                               const std::optional<RadialFunction>& reference) {
    return parallel_map<Row>(xs.size(), workers, [&](std::size_t i) {
        Row r;
        r.x = xs[i];
        try {
            const QuadratureResult q = fn(xs[i]);
            r.value = q.value.real();
            r.value_im = q.value.imag();
            r.error_estimate = q.error_estimate;
            if (!q.converged) r.status = "not converged";
        } catch (const ParameterError&) {
            throw;
        } catch (const Error& e) {
            r.value = std::nan("");
            r.error_estimate = std::nan("");
            r.status = e.what();
        }
        if (reference) {
            try {
                r.reference = (*reference)(xs[i]);
            } catch (const DomainError&) {
                r.reference = std::nan("");
            }
        }
        return r;
    });
}

// "reference": "input" | function spec. Roundtrip transforms default to "input".
std::optional<RadialFunction> parse_reference(const RunConfig& rc, const RadialFunction& input, bool roundtrip,
                                              double domain_lo) {
    if (!rc.doc.contains("reference")) {
        if (roundtrip) return input;
        return std::nullopt;
    }
    const json& ref = rc.doc.at("reference");
    if (ref.is_string()) {
        if (ref.get<std::string>() != "input") throw ConfigError("'reference' must be \"input\" or a function spec");
        return input;
    }
    return parse_function(ref, rc, domain_lo);
}

json grid_summary(const std::vector<Row>& rows, double residual_tol, bool& passed) {
    std::size_t failed = 0;
    double worst = 0.0;
    bool any_reference = false;
    for (const Row& r : rows) {
        if (r.status != "ok") ++failed;
        if (r.reference) {
            any_reference = true;
            const double res = residual(r);
            if (!(res <= worst)) worst = std::isnan(res) ? std::numeric_limits<double>::infinity() : res;
        }
    }
    passed = failed == 0 && (!any_reference || worst <= residual_tol);
    json s;
    s["points"] = rows.size();
    s["failed_points"] = failed;
    if (any_reference) {
        s["max_residual"] = std::isfinite(worst) ? json(worst) : json("inf");
        s["residual_tol"] = residual_tol;
    }
    s["passed"] = passed;
    return s;
}

int finish_grid(const RunConfig& rc, const fs::path& out_dir, const std::string& command,
                const std::vector<Row>& rows, const CsvLayout& layout, json summary_extra = json::object()) {
    const double residual_tol = get_number(rc.doc, "residual_tol", kDefaultResidualTol);
    bool passed = false;
    json summary = grid_summary(rows, residual_tol, passed);
    for (auto& [k, v] : summary_extra.items()) summary[k] = v;
    write_csv(out_dir / (command + ".csv"), rows, layout);
    write_manifest(out_dir / "manifest.json", command, rc.doc, summary);
    return passed ? 0 : 1;
}

int workers_of(const RunConfig& rc) {
    const int w = get_int(rc.doc, "workers", 1);
    if (w < 1) throw ConfigError("'workers' must be at least 1");
    return w;
}

}  // namespace

int cmd_transform(const RunConfig& rc, const fs::path& out_dir) {
    const std::string kind = get_string(rc.doc, "transform", "weber");
    const TransformConfig cfg = parse_params(rc.doc);
    validate_solver_config(cfg);
    const std::vector<double> xs = parse_grid(require(rc.doc, "grid"));
    const int workers = workers_of(rc);

    const bool on_outer_domain = kind == "weber-orr-forward" || kind == "weber-orr-roundtrip-3";
    const double domain_lo = on_outer_domain ? cfg.a : 0.0;
    const RadialFunction f = parse_function(require(rc.doc, "function"), rc, domain_lo);
    const bool roundtrip = kind == "weber-orr-roundtrip-3" || kind == "weber-orr-roundtrip-4";
    const std::optional<RadialFunction> reference = parse_reference(rc, f, roundtrip, domain_lo);

    PointFn fn;
    std::optional<PreparedRoundtrip> prepared;
    if (kind == "weber") {
        fn = [&](double x) { return weber_apply(f, cfg, x); };
    } else if (kind == "weber-orr-forward") {
        fn = [&](double x) { return weber_outer_integral(f, cfg, x); };
    } else if (kind == "weber-orr-roundtrip-3") {
        prepared = prepare_roundtrip_3(f, cfg);
        fn = [&](double x) { return (*prepared)(x); };
    } else if (kind == "weber-orr-roundtrip-4") {
        prepared = prepare_roundtrip_4(f, cfg);
        fn = [&](double x) { return (*prepared)(x); };
    } else {
        throw ConfigError("unknown transform '" + kind +
                          "' (expected weber, weber-orr-forward, weber-orr-roundtrip-3, weber-orr-roundtrip-4)");
    }
    const std::vector<Row> rows = evaluate_grid(xs, workers, fn, reference);
    CsvLayout layout;
    layout.with_reference = reference.has_value();
    return finish_grid(rc, out_dir, "transform", rows, layout);
}

int cmd_solve_weber(const RunConfig& rc, const fs::path& out_dir) {
    const TransformConfig cfg = parse_params(rc.doc);
    validate_solver_config(cfg);
    const std::vector<double> xs = parse_grid(require(rc.doc, "grid"));
    const int workers = workers_of(rc);
    const std::string input = get_string(rc.doc, "input", "rhs");
    if (input != "rhs" && input != "roundtrip") throw ConfigError("'input' must be \"rhs\" or \"roundtrip\"");

    // In roundtrip mode the function is g and f = weber_apply(g) is built first.
    const RadialFunction given = parse_function(require(rc.doc, "function"), rc, input == "rhs" ? cfg.a : 0.0);
    std::optional<RadialFunction> g;
    if (input == "roundtrip") g = given;
    if (rc.doc.contains("validate")) g = parse_function(rc.doc.at("validate"), rc, 0.0);
    const std::optional<RadialFunction> reference = parse_reference(rc, given, input == "roundtrip", 0.0);

    json extra = json::object();
    std::optional<MellinImage> g_star;
    if (g) {
        g_star = MellinImage::from_function(*g, cfg.line);
        const MembershipVerdict v = membership_m01(*g_star, cfg.line);
        json m;
        m["space"] = "M^{-1}_{0,1}";
        m["member"] = v.member;
        m["norm"] = v.norm.finite ? json(v.norm.value) : json("inf");
        m["norm_error_estimate"] = v.norm.error_estimate;
        m["fitted_decay"] = std::isfinite(v.norm.fitted_decay) ? json(v.norm.fitted_decay) : json("inf");
        if (!v.norm.reason.empty()) m["reason"] = v.norm.reason;
        m["constraint"] = v.constraint;
        extra["membership"] = m;
    } else if (cfg.strict) {
        throw ConstraintError("g in M^{-1}_{0,1}", "strict mode needs 'validate' or roundtrip input");
    }

    const RadialFunction f = input == "roundtrip" ? tabulate_weber_apply(given, cfg) : given;
    const MellinImage* gate = cfg.strict && g_star ? &*g_star : nullptr;
    if (gate) {
        // Runs the hypothesis gate once, up front, so a rejection is a config error.
        weber_solve(RadialFunction::zero(), cfg, 1.0, gate);
    }
    const std::vector<Row> rows =
        evaluate_grid(xs, workers, [&](double x) { return weber_solve(f, cfg, x, gate); }, reference);
    CsvLayout layout;
    layout.with_reference = reference.has_value();
    return finish_grid(rc, out_dir, "solve-weber", rows, layout, extra);
}

int cmd_mellin(const RunConfig& rc, const fs::path& out_dir) {
    const TransformConfig cfg = parse_params(rc.doc);
    const std::string direction = get_string(rc.doc, "direction", "forward");
    const std::vector<double> grid = parse_grid(require(rc.doc, "grid"));
    const int workers = workers_of(rc);
    const RadialFunction f = parse_function(require(rc.doc, "function"), rc, 0.0);
    const double tol = get_number(require(rc.doc, "params"), "tol", 1e-10);
    const auto [lo, hi] = f.mellin_strip();
    if (!(cfg.line.mu > lo && cfg.line.mu < hi)) {
        throw ConstraintError("lo < Re s < hi", "mu = " + format_double(cfg.line.mu) + " outside the strip (" +
                                                    format_double(lo) + ", " + format_double(hi) + ")");
    }
    CsvLayout layout;
    std::vector<Row> rows;
    if (direction == "forward") {
        // Grid variable is tau, s = mu + i tau.
        layout.x_name = "tau";
        layout.complex_values = true;
        rows = evaluate_grid(
            grid, workers, [&](double tau) { return mellin_forward_result(f, cplx(cfg.line.mu, tau), tol); },
            std::nullopt);
    } else if (direction == "inverse") {
        // The image of the given function is built numerically, then inverted.
        const MellinImage image = MellinImage::from_function(f, cfg.line);
        const std::optional<RadialFunction> reference = parse_reference(rc, f, true, 0.0);
        layout.with_reference = reference.has_value();
        rows = evaluate_grid(grid, workers, [&](double x) { return mellin_inverse(image, cfg.line, x, tol); },
                             reference);
    } else {
        throw ConfigError("'direction' must be \"forward\" or \"inverse\"");
    }
    return finish_grid(rc, out_dir, "mellin", rows, layout);
}

int cmd_verify(const RunConfig& rc, const fs::path& out_dir) {
    const std::string suite = get_string(rc.doc, "suite", "all");
    const auto& names = identity_suites();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw ConfigError("unknown suite '" + suite + "'");
    }
    const int workers = workers_of(rc);

    // Load every grid before running anything so a bad case stops the run early.
    std::vector<fs::path> files;
    if (rc.doc.contains("cases")) {
        const json& c = rc.doc.at("cases");
        if (c.is_string()) {
            files.emplace_back(c.get<std::string>());
        } else if (c.is_array()) {
            for (const auto& p : c) {
                if (!p.is_string()) throw ConfigError("'cases' entries must be paths");
                files.emplace_back(p.get<std::string>());
            }
        } else {
            throw ConfigError("'cases' must be a path or an array of paths");
        }
    } else if (rc.doc.contains("case_dir")) {
        const fs::path dir = get_string(rc.doc, "case_dir", "");
        for (const auto& name : names) {
            if (suite != "all" && name != suite) continue;
            files.push_back(dir / (name + ".json"));
        }
    } else {
        throw ConfigError("verify needs 'cases' or 'case_dir'");
    }
    std::vector<CaseGrid> grids;
    for (fs::path p : files) {
        if (p.is_relative()) p = rc.base_dir / p;
        CaseGrid g = load_case_grid(p.string());
        if (suite != "all" && g.suite != suite) {
            throw ConfigError("grid '" + p.string() + "' holds suite '" + g.suite + "', expected '" + suite + "'");
        }
        grids.push_back(std::move(g));
    }

    std::vector<IdentityReport> reports;
    json per_suite = json::object();
    std::size_t failed = 0;
    for (const CaseGrid& g : grids) {
        const std::vector<IdentityReport> part = run_suite(g.suite, g.cases, workers);
        std::size_t suite_failed = 0;
        for (const auto& r : part) suite_failed += r.passed ? 0 : 1;
        json s;
        s["cases"] = part.size();
        s["failed"] = suite_failed;
        per_suite[g.suite] = s;
        failed += suite_failed;
        reports.insert(reports.end(), part.begin(), part.end());
    }

    write_text(out_dir / "reports.json", reports_to_json(reports) + "\n");
    std::string csv = "suite,label,rel_diff,tolerance,lhs_error_estimate,passed\n";
    for (const auto& r : reports) {
        csv += r.suite + ',' + r.label + ',' + format_double(r.rel_diff) + ',' + format_double(r.tolerance) + ',' +
               format_double(r.lhs_error_estimate) + ',' + (r.passed ? "true" : "false") + '\n';
    }
    write_text(out_dir / "summary.csv", csv);
    json summary;
    summary["cases"] = reports.size();
    summary["failed"] = failed;
    summary["suites"] = per_suite;
    summary["passed"] = failed == 0;
    write_manifest(out_dir / "manifest.json", "verify", rc.doc, summary);
    return failed == 0 ? 0 : 1;
}

}  // namespace weber_orr::cli
