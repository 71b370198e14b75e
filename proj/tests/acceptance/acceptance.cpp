// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "weber_orr/case_grid.hpp"
#include "weber_orr/identities.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/mellin.hpp"
#include "weber_orr/mellin_barnes.hpp"
#include "weber_orr/partial_expansion.hpp"
#include "weber_orr/specfun.hpp"
#include "weber_orr/weber.hpp"

using namespace weber_orr;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CaseGrid grid(const std::string& suite) {
    return load_case_grid(std::string(WEBER_ORR_DATA_DIR) + "/cases/" + suite + ".json");
}

TransformConfig desk_config() {
    TransformConfig cfg;
    cfg.a = 1.0;
    cfg.nu = 0.25;
    cfg.line = {-0.25, 16.0};
    cfg.policy.tol = 1e-9;
    return cfg;
}

RadialFunction sqrt_exp() {
    return RadialFunction::from_expression("x^0.5*exp(-x)", {0.5, DecayHint::Tail::exponential, 1.0});
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return xs;
}

// Identity suite with a per-case time limit and the report's own pass flag
// (rel_diff against max(1e-6, 10 * error estimate)).
Verdict identity_suite(const std::string& suite, std::size_t min_cases, double per_case_limit,
                       const std::function<void(const IdentityReport&, Verdict&)>& extra = {}) {
    Verdict v;
    const auto g = grid(suite);
    v.require(g.cases.size() >= min_cases, std::to_string(g.cases.size()) + " cases < " + std::to_string(min_cases));
    double worst = 0.0, slowest = 0.0;
    for (const auto& c : g.cases) {
        const auto t0 = Clock::now();
        const auto r = run_case(suite, c);
        const double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        worst = std::max(worst, r.rel_diff);
        v.require(r.passed, c.label + " failed (" + r.criterion + ")");
        v.require(dt < per_case_limit, c.label + " took " + fmt(dt) + " s");
        if (extra) extra(r, v);
    }
    v.detail = std::to_string(g.cases.size()) + " cases, max rel_diff " + fmt(worst) + ", slowest " + fmt(slowest) +
               " s" + (v.detail.empty() ? "" : " | " + v.detail);
    return v;
}

Verdict ac1() {
    Verdict v;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    double worst_gamma = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cplx z(u(rng), u(rng));
        const cplx g = gamma_complex(z);
        worst_gamma = std::max(worst_gamma, std::abs(gamma_complex(z + 1.0) - z * g) / std::abs(z * g));
        const cplx refl = kPi / std::sin(kPi * z);
        worst_gamma = std::max(worst_gamma, std::abs(g * gamma_complex(1.0 - z) - refl) / std::abs(refl));
    }
    double worst_wronskian = 0.0;
    for (double nu : {0.0, 0.1, 0.25, 0.4, 0.5}) {
        for (double x : log_grid(0.01, 100.0, 400)) {
            const auto b = bessel_jy(nu, x);
            worst_wronskian = std::max(worst_wronskian, std::abs((b.j * b.dy - b.y * b.dj) * kPi * x / 2.0 - 1.0));
        }
    }
    double worst_half = 0.0;
    for (double x : log_grid(0.01, 100.0, 200)) {
        const double amp = std::sqrt(2.0 / (kPi * x));
        worst_half = std::max(worst_half, std::abs(bessel_j(0.5, x) - amp * std::sin(x)) / amp);
        worst_half = std::max(worst_half, std::abs(bessel_y(0.5, x) + amp * std::cos(x)) / amp);
    }
    const double dt = seconds_since(t0);
    v.require(worst_gamma <= 1e-12, "gamma " + fmt(worst_gamma));
    v.require(worst_wronskian <= 1e-9, "wronskian " + fmt(worst_wronskian));
    v.require(worst_half <= 1e-12, "half-integer " + fmt(worst_half));
    v.require(dt < 5.0, "runtime " + fmt(dt) + " s");
    v.detail = "gamma " + fmt(worst_gamma) + ", wronskian " + fmt(worst_wronskian) + ", half-integer " +
               fmt(worst_half) + ", " + fmt(dt) + " s" + (v.pass ? "" : " | " + v.detail);
    return v;
}

Verdict ac4() {
    double worst_cross = 0.0;
    auto v = identity_suite("slater", 6, 1e9, [&](const IdentityReport& r, Verdict& out) {
        out.require(r.has_cross_check, r.label + " has no residue oracle");
        worst_cross = std::max(worst_cross, r.cross_check_diff);
        out.require(r.cross_check_diff <= 1e-8, r.label + " residue diff " + fmt(r.cross_check_diff));
    });
    v.detail += ", max residue diff " + fmt(worst_cross);
    return v;
}

Verdict ac5() {
    Verdict v;
    const auto g = grid("mb-kernel");
    double worst = 0.0, worst_line = 0.0;
    int covered = 0;
    for (double nu : {0.1, 0.25, 0.4}) {
        for (double ax : {0.5, 1.0, 2.0, 10.0}) {
            bool found = false;
            for (const auto& c : g.cases) {
                if (c.nu != nu || std::abs(c.a * c.x - ax) > 1e-12) continue;
                found = true;
                const auto r = run_case("mb-kernel", c);
                worst = std::max(worst, r.rel_diff);
                v.require(r.rel_diff <= 1e-6, c.label + " rel_diff " + fmt(r.rel_diff));
            }
            v.require(found, "no case for nu=" + fmt(nu) + " ax=" + fmt(ax));
            covered += found;
            // Two lines inside the strip 2 nu < gamma < 1.
            const double lo = 2.0 * nu + 0.25 * (1.0 - 2.0 * nu), hi = 2.0 * nu + 0.75 * (1.0 - 2.0 * nu);
            const double m1 = mb_modulus(nu, ax, lo, 1e-10).value.real();
            const double m2 = mb_modulus(nu, ax, hi, 1e-10).value.real();
            const double d = std::abs(m1 - m2) / std::abs(m2);
            worst_line = std::max(worst_line, d);
            v.require(d <= 1e-8, "gamma dependence " + fmt(d) + " at nu=" + fmt(nu) + " ax=" + fmt(ax));
        }
    }
    v.detail = std::to_string(covered) + "/12 (nu, ax) pairs, max rel_diff " + fmt(worst) + ", max gamma dependence " +
               fmt(worst_line) + (v.pass ? "" : " | " + v.detail);
    return v;
}

Verdict ac6() {
    Verdict v;
    const auto t0 = Clock::now();
    const auto cfg = desk_config();
    const auto g = sqrt_exp();
    const auto image = MellinImage::from_function(g, cfg.line);
    const auto member = membership_m01(image, cfg.line);
    v.require(member.member, "membership: " + member.constraint + " " + member.norm.reason);
    const auto f = tabulate_weber_apply(g, cfg);
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        const double got = weber_solve(f, cfg, x, &image).value.real();
        const double res = std::abs(got - g(x)) / (1.0 + std::abs(g(x)));
        worst = std::max(worst, res);
        v.require(res <= 1e-3, "x=" + fmt(x) + " residual " + fmt(res));
    }
    const double dt = seconds_since(t0);
    v.require(dt < 120.0, "runtime " + fmt(dt) + " s");
    v.detail = "norm " + fmt(member.norm.value) + ", max residual " + fmt(worst) + ", " + fmt(dt) + " s" +
               (v.pass ? "" : " | " + v.detail);
    return v;
}

Verdict ac7() {
    Verdict v;
    const auto cfg = desk_config();
    std::vector<double> xs;
    for (int i = 0; i < 9; ++i) xs.push_back(1.2 + (5.0 - 1.2) * i / 8.0);
    const auto f3 =
        RadialFunction::from_expression("(x-1)*exp(-(x-1))", {0.0, DecayHint::Tail::exponential, 1.0}, cfg.a);
    const auto f4 = sqrt_exp();
    double worst3 = 0.0, worst4 = 0.0;
    const auto r3 = weber_orr_roundtrip_3(f3, cfg, xs);
    const auto r4 = weber_orr_roundtrip_4(f4, cfg, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        worst3 = std::max(worst3, std::abs(r3[i].value.real() - f3(xs[i])) / (1.0 + std::abs(f3(xs[i]))));
        worst4 = std::max(worst4, std::abs(r4[i].value.real() - f4(xs[i])) / (1.0 + std::abs(f4(xs[i]))));
    }
    v.require(worst3 <= 1e-3, "outer-domain pair " + fmt(worst3));
    v.require(worst4 <= 1e-3, "weighted pair " + fmt(worst4));
    v.detail = "outer-domain pair " + fmt(worst3) + ", weighted pair " + fmt(worst4) + (v.pass ? "" : " | " + v.detail);
    return v;
}

Verdict ac8() {
    Verdict v;
    std::string slopes;
    for (const auto& c : grid("in-decay").cases) {
        const auto r = run_case("in-decay", c);
        slopes += (slopes.empty() ? "" : " ") + fmt(r.lhs.real() - r.rhs.real());
        v.require(std::abs(r.lhs.real() - r.rhs.real()) <= 0.1,
                  c.label + " slope " + fmt(r.lhs.real()) + " vs " + fmt(r.rhs.real()));
    }
    const auto cfg = desk_config();
    const auto g = sqrt_exp();
    PartialExpansion pe(MellinImage::from_function(g, cfg.line), cfg, 40.0);
    const auto xs = log_grid(0.125, 8.0, 64);
    std::string rms;
    double prev = INFINITY;
    for (double n : {5.0, 10.0, 20.0, 40.0}) {
        const double r = gn_residual(pe, g, n, xs);
        rms += (rms.empty() ? "" : " ") + fmt(r);
        v.require(r < prev, "residual not decreasing at N=" + fmt(n));
        prev = r;
    }
    v.detail = "slope offsets [" + slopes + "], residual over N=5,10,20,40 [" + rms + "]" +
               (v.pass ? "" : " | " + v.detail);
    return v;
}

Verdict ac9() {
    Verdict v;
    struct Entry {
        const char* expr;
        double origin;
        VerticalLine line;
    };
    const Entry catalog[] = {
        {"exp(-x)", 0.0, {0.5, 16.0}},
        {"x*exp(-x)", 1.0, {0.5, 16.0}},
        {"x^0.5*exp(-x)", 0.5, {-0.25, 16.0}},
        {"exp(-x^2)", 0.0, {0.5, 16.0}},
    };
    double worst_rt = 0.0;
    for (const auto& e : catalog) {
        const auto f = RadialFunction::from_expression(e.expr, {e.origin, DecayHint::Tail::exponential, 1.0});
        const auto image = MellinImage::from_function(f, e.line);
        for (double x : log_grid(0.1, 10.0, 9)) {
            // Any line in the strip gives f; the saddle line keeps the error relative.
            const auto line = saddle_line(image, x, f.mellin_strip().first, e.line.t_height);
            const double got = mellin_inverse(image, line, x).value.real();
            const double err = std::abs(got - f(x)) / std::abs(f(x));
            worst_rt = std::max(worst_rt, err);
            v.require(err <= 1e-6, std::string(e.expr) + " at x=" + fmt(x) + " " + fmt(err));
        }
    }
    auto closure = [](const char* expr, double origin) {
        return RadialFunction::from_expression(expr, {origin, DecayHint::Tail::exponential, 1.0});
    };
    struct Pair {
        RadialFunction f, g;
        VerticalLine line;
    };
    const Pair pairs[] = {
        {closure("exp(-x)", 0.0), closure("exp(-x)", 0.0), {0.5, 16.0}},
        {closure("exp(-x)", 0.0), closure("x*exp(-x)", 1.0), {0.5, 16.0}},
        {closure("x^0.5*exp(-x)", 0.5), closure("exp(-x^2)", 0.0), {0.25, 16.0}},
    };
    double worst_parseval = 0.0;
    for (const auto& p : pairs) {
        const auto sides = parseval_pair(p.f, p.g, p.line);
        const double d = std::abs(sides.lhs - sides.rhs);
        worst_parseval = std::max(worst_parseval, d);
        v.require(d <= 1e-7, "parseval " + p.f.label() + " / " + p.g.label() + " " + fmt(d));
    }
    const auto shifted = MellinImage::closed_form([](cplx s) { return gamma_complex(s + 0.5); }, {-0.25, 16.0});
    double worst_line = 0.0;
    for (double x : log_grid(0.1, 10.0, 9)) {
        const cplx a = mellin_inverse(shifted, {-0.25, 16.0}, x).value;
        const cplx b = mellin_inverse(shifted, {-0.4, 16.0}, x).value;
        worst_line = std::max(worst_line, std::abs(a - b));
    }
    v.require(worst_line <= 1e-7, "line dependence " + fmt(worst_line));
    v.detail = "roundtrip " + fmt(worst_rt) + ", parseval " + fmt(worst_parseval) + ", line dependence " +
               fmt(worst_line) + (v.pass ? "" : " | " + v.detail);
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string without_timestamp(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.find("\"timestamp\"") == std::string::npos) out += line + "\n";
    }
    return out;
}

int run_cli(const std::string& command, const std::string& config, const fs::path& out_dir, std::string* err) {
    fs::create_directories(out_dir);
    const fs::path err_file = out_dir / "stderr.txt";
    const std::string cmd = std::string("\"") + WEBER_ORR_CLI + "\" " + command + " --config \"" + config +
                            "\" --output-dir \"" + out_dir.string() + "\" > /dev/null 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    if (err) *err = slurp(err_file);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict ac10() {
    Verdict v;
    const fs::path root = fs::temp_directory_path() / ("weber-orr-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(root);
    const std::string data = WEBER_ORR_DATA_DIR, fixtures = std::string(WEBER_ORR_FIXTURE_DIR) + "/cli/";

    const std::string verify_cfg = data + "/configs/verify-all.json";
    const int e1 = run_cli("verify", verify_cfg, root / "run1", nullptr);
    const int e2 = run_cli("verify", verify_cfg, root / "run2", nullptr);
    v.require(e1 == 0 && e2 == 0, "verify exit codes " + std::to_string(e1) + ", " + std::to_string(e2));
    for (const char* name : {"reports.json", "summary.csv"}) {
        v.require(slurp(root / "run1" / name) == slurp(root / "run2" / name), std::string(name) + " differs");
    }
    v.require(without_timestamp(slurp(root / "run1" / "manifest.json")) ==
                  without_timestamp(slurp(root / "run2" / "manifest.json")),
              "manifest differs beyond timestamp");

    const std::string transform_cfg = data + "/configs/transform-weber.json";
    run_cli("transform", transform_cfg, root / "t1", nullptr);
    run_cli("transform", transform_cfg, root / "t2", nullptr);
    v.require(slurp(root / "t1" / "transform.csv") == slurp(root / "t2" / "transform.csv"), "transform.csv differs");

    struct Failure {
        const char* command;
        const char* config;
        const char* message;
    };
    const Failure failures[] = {
        {"transform", "malformed-expression.json", "offset"},
        {"solve-weber", "solve-mu-half.json", "-1 < Re s < 0"},
        {"verify", "verify-bad-grid.json", "nu < Re((w - s)/2) < 1/2"},
    };
    int honoured = 0;
    for (const auto& f : failures) {
        std::string err;
        const int code = run_cli(f.command, fixtures + f.config, root / f.config, &err);
        const bool ok = code == 2 && err.find(f.message) != std::string::npos;
        honoured += ok;
        v.require(ok, std::string(f.config) + " exit " + std::to_string(code));
    }
    fs::remove_all(root);
    v.detail = "repeat runs identical, " + std::to_string(honoured) + "/3 failure fixtures exit 2 with the named cause" +
               (v.pass ? "" : " | " + v.detail);
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "special functions", ac1},
        {"AC2", "kernel Mellin identity suite", [] { return identity_suite("eq12", 27, 10.0); }},
        {"AC3", "Legendre product integral suite", [] { return identity_suite("eq18", 12, 30.0); }},
        {"AC4", "Slater contour identity", ac4},
        {"AC5", "Mellin-Barnes kernel representation", ac5},
        {"AC6", "Weber roundtrip", ac6},
        {"AC7", "Weber-Orr roundtrips", ac7},
        {"AC8", "convergence rates", ac8},
        {"AC9", "Mellin layer", ac9},
        {"AC10", "CLI determinism and exit codes", ac10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failed += !v.pass;
        std::printf("%-5s %s  %s: %s [%.1f s]\n", c.id, v.pass ? "PASS" : "FAIL", c.title, v.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
