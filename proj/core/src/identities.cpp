#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>

#include "weber_orr/errors.hpp"
#include "weber_orr/identities.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/mellin_barnes.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

constexpr double kIdentityTol = 1e-6;
constexpr double kResidueTol = 1e-8;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require(bool ok, const std::string& constraint, const IdentityCase& c, const std::string& detail = "") {
    if (!ok) {
        throw ConstraintError(constraint, "case '" + c.label + "'" + (detail.empty() ? "" : ": " + detail));
    }
}

bool is_gamma_pole(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

IdentityReport finish(IdentityReport r, double tol) {
    r.abs_diff = std::abs(r.lhs - r.rhs);
    const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
    r.rel_diff = r.abs_diff / scale;
    r.tolerance = std::max(tol, 10.0 * r.lhs_error_estimate / scale);
    r.criterion = "rel_diff <= " + num(r.tolerance);
    r.passed = r.rel_diff <= r.tolerance;
    if (r.has_cross_check) {
        r.cross_check_diff = std::abs(r.cross_check - r.lhs) / scale;
        r.criterion += ", cross_check_diff <= " + num(kResidueTol);
        r.passed = r.passed && r.cross_check_diff <= kResidueTol;
    }
    return r;
}

double slater_gamma(const IdentityCase& c) {
    if (!std::isnan(c.gamma_abscissa)) return c.gamma_abscissa;
    return 0.5 * (0.5 * (1.0 + c.s.real() + c.nu) + 0.5 * (1.0 + c.w.real() - c.nu));
}

double mb_gamma(const IdentityCase& c) {
    if (!std::isnan(c.gamma_abscissa)) return c.gamma_abscissa;
    return 0.5 * (2.0 * c.nu + 1.0);
}

// (t - 1)^{(w-s)/2 - 1} Q_w(t) Q_s(t) written in y = t - 1.
cplx product_integrand(const IdentityCase& c, double y) {
    // The Euler integrals inside Q overflow once y is near the subnormal range.
    // The integrand is y^{p} with p > -1 there, so this piece is negligible
    // unless Re((w - s)/2) - nu is very close to zero.
    if (y < 1e-290) return {0.0, 0.0};
    const cplx deg_w = -(c.w + 1.0) / 2.0;
    const cplx deg_s = (c.s - 1.0) / 2.0;
    const cplx q = legendre_q_near_one(c.nu, deg_w, y) * legendre_q_near_one(c.nu, deg_s, y);
    return std::exp(((c.w - c.s) / 2.0 - 1.0) * std::log(y)) * q;
}

}  // namespace

const std::vector<std::string>& identity_suites() {
    static const std::vector<std::string> names{"eq12", "eq18", "slater", "mb-kernel", "in-decay", "q-bounds"};
    return names;
}

void check_constraints(const std::string& suite, const IdentityCase& c) {
    const double sr = c.s.real();
    const double wr = c.w.real();
    const double nu = c.nu;
    require(std::isfinite(nu) && nu >= 0.0 && nu <= 0.5, "0 <= nu <= 1/2", c, "nu = " + num(nu));
    if (suite == "eq12") {
        require(c.a > 0.0 && c.x > c.a, "x > a > 0", c, "x = " + num(c.x) + ", a = " + num(c.a));
        require(sr > -1.0 && sr < 0.0, "-1 < Re s < 0", c, "Re s = " + num(sr));
    } else if (suite == "eq18" || suite == "in-decay") {
        const double half = (wr - sr) / 2.0;
        require(nu < half && half < 0.5, "nu < Re((w - s)/2) < 1/2", c, "Re((w - s)/2) = " + num(half));
        require(wr < -0.5 && wr > std::max(2.0 * nu + sr, -1.0), "-1/2 > Re w > max(2 nu + Re s, -1)", c,
                "Re w = " + num(wr) + ", Re s = " + num(sr));
        require(sr > -1.0 - 2.0 * nu, "Re s > -1 - 2 nu", c, "Legendre integral diverges");
        const cplx d = (c.w - c.s) / 2.0;
        for (cplx z : {(1.0 + c.s - c.w) / 2.0, d, d - nu, d + nu, (1.0 + c.s) / 2.0 - nu, (1.0 - c.w) / 2.0 - nu,
                       (c.s + 1.0 - 2.0 * nu) / 2.0, (1.0 - c.w - 2.0 * nu) / 2.0}) {
            require(!is_gamma_pole(z), "Gamma arguments avoid the poles", c);
        }
        if (suite == "in-decay") {
            require(c.a > 0.0, "a > 0", c);
            require(c.n_values.size() >= 2, "at least two cutoffs N", c);
            for (double n : c.n_values) require(n > c.a, "N > a", c, "N = " + num(n));
        }
    } else if (suite == "slater") {
        const double g = slater_gamma(c);
        const double lo = 0.5 * (1.0 + sr + nu);
        const double hi = 0.5 * (1.0 + wr - nu);
        require(lo < g && g < hi, "(1 + Re(s + nu))/2 < gamma < (1 + Re(w - nu))/2", c,
                "gamma = " + num(g) + ", strip (" + num(lo) + ", " + num(hi) + ")");
        require(wr - sr < 1.0, "Re(w - s) < 1", c, "contour integrand must decay");
        const cplx d = (c.w - c.s) / 2.0;
        for (cplx z : {(1.0 + c.s - c.w) / 2.0, d, d - nu, d + nu}) {
            require(!is_gamma_pole(z), "Gamma arguments avoid the poles", c);
        }
    } else if (suite == "mb-kernel") {
        const double g = mb_gamma(c);
        require(2.0 * nu < g && g < 1.0, "2 nu < gamma < 1", c, "gamma = " + num(g));
        require(c.a > 0.0 && c.x > 0.0, "a x > 0", c);
    } else if (suite == "q-bounds") {
        require(sr > 2.0 * nu - 1.0, "Re s > 2 nu - 1", c, "Re s = " + num(sr));
        require(!c.t_grid.empty(), "non-empty t grid", c);
        for (double t : c.t_grid) require(t > 1.0, "t > 1", c, "t = " + num(t));
        require(c.tau_min > 0.0 && c.tau_max > c.tau_min, "0 < tau_min < tau_max", c);
    } else {
        throw ParameterError("unknown identity suite '" + suite + "'");
    }
}

IdentityReport verify_eq12(const IdentityCase& c) {
    check_constraints("eq12", c);
    IdentityReport r;
    r.suite = "eq12";
    r.label = c.label;
    const double nu = c.nu;
    const cplx s = c.s;
    const Integrand h = [&](double xi) {
        return weber_kernel(nu, c.x * xi, c.a * xi) * std::exp(-s * std::log(xi));
    };
    TruncationPolicy policy;
    policy.tol = 1e-10;
    const double omega = c.x - c.a;
    const double head = kPi / omega;
    const QuadratureResult near = integrate_de(h, 0.0, head, 1e-12);
    OscillatoryOptions o;
    o.half_periods_per_panel = 3;
    const QuadratureResult far = integrate_oscillatory(h, omega, head, policy.tol, policy, o);
    r.lhs = near.value + far.value;
    r.lhs_error_estimate = near.error_estimate + far.error_estimate;
    r.rhs = kernel_mellin(nu, s, c.x, c.a);
    if (s.imag() == 0.0) {
        r.imaginary_residue = std::fabs(r.lhs.imag());
        r.note = "rhs imaginary part " + num(std::fabs(r.rhs.imag()));
    }
    return finish(r, kIdentityTol);
}

IdentityReport verify_eq18(const IdentityCase& c) {
    check_constraints("eq18", c);
    IdentityReport r;
    r.suite = "eq18";
    r.label = c.label;
    const QuadratureResult lhs = integrate_de_semi_infinite(
        [&](double y, double, double) { return product_integrand(c, y); }, 0.0, 1e-11);
    r.lhs = lhs.value;
    r.lhs_error_estimate = lhs.error_estimate;
    const double nu = c.nu;
    const cplx s = c.s;
    const cplx w = c.w;
    const cplx d = (w - s) / 2.0;
    const cplx lg = log_gamma((1.0 + s - w) / 2.0) + log_gamma(d) + log_gamma(d - nu) + log_gamma(d + nu) +
                    log_gamma((1.0 + s) / 2.0 - nu) + log_gamma((1.0 - w) / 2.0 - nu) - log_gamma((1.0 - s) / 2.0) -
                    log_gamma((1.0 + w) / 2.0);
    r.rhs = std::pow(2.0, (s - w) / 2.0 - 1.0) * std::exp(cplx(0.0, -2.0 * nu * kPi)) * std::cos(kPi * nu) /
            std::sqrt(kPi) * std::exp(lg);
    if (s.imag() == 0.0 && w.imag() == 0.0) r.imaginary_residue = std::fabs(r.lhs.imag());
    return finish(r, kIdentityTol);
}

IdentityReport verify_slater(const IdentityCase& c) {
    check_constraints("slater", c);
    IdentityReport r;
    r.suite = "slater";
    r.label = c.label;
    const QuadratureResult lhs = slater_contour(c.nu, c.s, c.w, slater_gamma(c), 1e-10);
    r.lhs = lhs.value;
    r.lhs_error_estimate = lhs.error_estimate;
    r.rhs = slater_closed_form(c.nu, c.s, c.w);
    const ResidueSum res = slater_residue_sum(c.nu, c.s, c.w, 1e-13);
    r.has_cross_check = true;
    r.cross_check = res.value;
    r.note = "residue columns " + std::to_string(res.columns) + ", residue error " + num(res.error_estimate);
    if (c.s.imag() == 0.0 && c.w.imag() == 0.0) r.imaginary_residue = std::fabs(r.lhs.imag());
    return finish(r, kIdentityTol);
}

IdentityReport verify_mb_kernel(const IdentityCase& c) {
    check_constraints("mb-kernel", c);
    IdentityReport r;
    r.suite = "mb-kernel";
    r.label = c.label;
    const double z = c.a * c.x;
    const QuadratureResult lhs = mb_modulus(c.nu, z, mb_gamma(c), 1e-10);
    r.lhs = lhs.value;
    r.lhs_error_estimate = lhs.error_estimate;
    r.rhs = modulus_sq(c.nu, z);
    r.imaginary_residue = std::fabs(r.lhs.imag());
    return finish(r, kIdentityTol);
}

QuadratureResult tail_integral_in(const IdentityCase& c) {
    const double wr = c.w.real();
    require(wr > 2.0 * c.nu + c.s.real(), "Re w > 2 nu + Re s", c);
    require(c.a > 0.0 && c.n_cut > c.a, "N > a > 0", c, "N = " + num(c.n_cut));
    const double eps = 2.0 * c.a * c.a / ((c.n_cut - c.a) * (c.n_cut + c.a));
    QuadratureResult r =
        integrate_de([&](double y, double, double) { return product_integrand(c, y); }, 0.0, eps, 1e-12);
    const cplx pre = std::pow(2.0, c.s - c.w - 1.0) * std::exp((c.s - c.w) * std::log(c.a));
    r.value *= pre;
    r.error_estimate *= std::abs(pre);
    return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ParameterError("loglog_slope: need two or more points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::fabs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

IdentityReport verify_in_decay(const IdentityCase& c) {
    check_constraints("in-decay", c);
    IdentityReport r;
    r.suite = "in-decay";
    r.label = c.label;
    std::vector<double> mags;
    double worst_err = 0.0;
    for (double n : c.n_values) {
        IdentityCase k = c;
        k.n_cut = n;
        const QuadratureResult q = tail_integral_in(k);
        mags.push_back(std::abs(q.value));
        worst_err = std::max(worst_err, q.error_estimate / std::max(std::abs(q.value), 1e-300));
    }
    r.lhs = loglog_slope(c.n_values, mags);
    r.rhs = (c.s + 2.0 * c.nu - c.w).real();
    r.lhs_error_estimate = worst_err;
    r.abs_diff = std::abs(r.lhs - r.rhs);
    r.rel_diff = r.abs_diff / std::max(std::abs(r.rhs), 1e-300);
    r.tolerance = 0.1;
    r.criterion = "|slope - Re(s + 2 nu - w)| <= 0.1";
    r.passed = r.abs_diff <= r.tolerance;
    std::string vals;
    for (std::size_t i = 0; i < mags.size(); ++i) vals += (i ? ", " : "") + num(mags[i]);
    r.note = "|I_N| = [" + vals + "]";
    return r;
}

QBoundSummary q_bound_summary(double nu, double mu, const std::vector<double>& t_grid, double tau_min,
                              double tau_max, int tau_points) {
    auto sup_over = [&](int points) {
        double sup = 0.0;
        for (int i = 0; i < points; ++i) {
            const double tau = tau_min * std::pow(tau_max / tau_min, static_cast<double>(i) / (points - 1));
            for (double sign : {1.0, -1.0}) {
                const cplx s(mu, sign * tau);
                for (double t : t_grid) {
                    const double zm1 = t - 1.0;
                    const cplx q = legendre_q_near_one(nu, (s - 1.0) / 2.0, zm1);
                    const double ratio =
                        std::abs(q) * std::pow(std::abs(s), nu) * std::pow(zm1 * (t + 1.0), nu / 2.0);
                    sup = std::max(sup, ratio);
                }
            }
        }
        return sup;
    };
    QBoundSummary out;
    out.sup_ratio = sup_over(tau_points);
    out.sup_ratio_refined = sup_over(2 * tau_points - 1);
    std::vector<double> taus{10, 31.6227766, 100, 316.227766, 1000};
    std::vector<double> abs_s;
    std::vector<double> vals;
    for (double tau : taus) {
        const cplx s(mu, tau);
        const cplx lr = log_gamma((s + 1.0 - 2.0 * nu) / 2.0) - log_gamma((3.0 + s - 2.0 * nu) / 4.0) -
                        log_gamma((1.0 + s + 2.0 * nu) / 4.0);
        abs_s.push_back(std::abs(s));
        vals.push_back(std::exp(lr.real()));
    }
    out.stirling_slope = loglog_slope(abs_s, vals);
    return out;
}

IdentityReport verify_q_bounds(const IdentityCase& c) {
    check_constraints("q-bounds", c);
    IdentityReport r;
    r.suite = "q-bounds";
    r.label = c.label;
    const QBoundSummary q = q_bound_summary(c.nu, c.s.real(), c.t_grid, c.tau_min, c.tau_max, 9);
    r.lhs = q.sup_ratio;
    r.rhs = q.sup_ratio_refined;
    r.abs_diff = std::fabs(q.sup_ratio - q.sup_ratio_refined);
    r.rel_diff = r.abs_diff / std::max(q.sup_ratio_refined, 1e-300);
    const double slope_diff = std::fabs(q.stirling_slope + c.nu);
    r.has_cross_check = true;
    r.cross_check = q.stirling_slope;
    r.cross_check_diff = slope_diff;
    r.tolerance = 0.05;
    r.criterion = "finite sup, refinement change <= 0.05, |Stirling slope + nu| <= 0.05";
    r.passed = std::isfinite(q.sup_ratio) && r.rel_diff <= r.tolerance && slope_diff <= 0.05;
    r.note = "Stirling slope " + num(q.stirling_slope);
    return r;
}

IdentityReport run_case(const std::string& suite, const IdentityCase& c) {
    if (suite == "eq12") return verify_eq12(c);
    if (suite == "eq18") return verify_eq18(c);
    if (suite == "slater") return verify_slater(c);
    if (suite == "mb-kernel") return verify_mb_kernel(c);
    if (suite == "in-decay") return verify_in_decay(c);
    if (suite == "q-bounds") return verify_q_bounds(c);
    throw ParameterError("unknown identity suite '" + suite + "'");
}

std::vector<IdentityReport> run_suite(const std::string& suite, const std::vector<IdentityCase>& cases,
                                      int workers) {
    std::vector<IdentityReport> out(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                out[i] = run_case(suite, cases[i]);
            } catch (const Error& e) {
                // Numeric failures become failed reports; the run continues.
                IdentityReport r;
                r.suite = suite;
                r.label = cases[i].label;
                r.passed = false;
                r.note = e.what();
                out[i] = r;
                if (dynamic_cast<const ConstraintError*>(&e) != nullptr) errors[i] = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(cases.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace weber_orr
