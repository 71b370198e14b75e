#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "piecewise_chebyshev.hpp"
#include "weber_orr/errors.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/specfun.hpp"
#include "weber_orr/weber.hpp"

namespace weber_orr {
namespace {

void add_to(QuadratureResult& acc, const QuadratureResult& r) {
    acc.value += r.value;
    acc.error_estimate += r.error_estimate;
    acc.evaluations += r.evaluations;
    acc.converged = acc.converged && r.converged;
}

void check_point(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + ": x must be positive and finite");
}

bool exponential_tail(const RadialFunction& f) { return f.decay().tail == DecayHint::Tail::exponential; }

// int_lo^inf h(t) dt for h = envelope * sin(omega t + phase) with a smooth
// envelope. Exponentially decaying envelopes need no acceleration.
QuadratureResult oscillatory_tail(const Integrand& h, double omega, double phase, double lo, bool exponential,
                                  const TruncationPolicy& policy, double tol) {
    const double step = kPi / omega;
    if (exponential) {
        const double chunk = std::min(step, 1.0);
        QuadratureResult out = integrate_de(h, lo, lo + chunk, 0.1 * tol);
        add_to(out, integrate_semi_infinite(h, lo + chunk, tol, chunk, tol * std::abs(out.value)));
        return out;
    }
    OscillatoryOptions o;
    o.phase = phase;
    o.half_periods_per_panel = 3;
    return integrate_oscillatory(h, omega, lo, tol, policy, o);
}

}  // namespace

void validate_solver_config(const TransformConfig& cfg) {
    if (!(cfg.a > 0.0) || !std::isfinite(cfg.a)) {
        throw ConstraintError("a > 0", "inner radius a = " + std::to_string(cfg.a));
    }
    if (!(cfg.nu > 0.0 && cfg.nu < 0.5)) {
        throw ConstraintError("0 < nu < 1/2", "order nu = " + std::to_string(cfg.nu));
    }
    if (!(cfg.line.mu > -1.0 && cfg.line.mu < 0.0)) {
        throw ConstraintError("-1 < Re s < 0", "line abscissa mu = " + std::to_string(cfg.line.mu));
    }
    if (!(cfg.policy.tol >= 1e-14) || !(cfg.policy.n_cut > 0.0) || !(cfg.policy.t_height > 0.0)) {
        throw ConstraintError("tol >= 1e-14, n_cut > 0, t_height > 0", "truncation policy");
    }
}

QuadratureResult weber_apply(const RadialFunction& g, const TransformConfig& cfg, double x) {
    check_point(x, "weber_apply");
    if (!(cfg.a > 0.0)) throw ConstraintError("a > 0", "inner radius a = " + std::to_string(cfg.a));
    if (g.is_zero() || x == cfg.a) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    const double nu = cfg.nu;
    const double a = cfg.a;
    const double tol = cfg.policy.tol;
    const double lo = g.domain_lo();
    const Integrand h = [&](double xi) { return cplx(weber_kernel(nu, x * xi, a * xi) * g(xi)); };
    const double omega = std::fabs(x - a);
    if (lo > 0.0) {
        return oscillatory_tail(h, omega, 0.0, lo, exponential_tail(g), cfg.policy, tol);
    }
    // Origin piece up to a fixed fraction of the first oscillation.
    const double head_end = std::min(1.0, kPi / omega);
    QuadratureResult out = integrate_de(h, 0.0, head_end, 0.1 * tol);
    add_to(out, oscillatory_tail(h, omega, 0.0, head_end, exponential_tail(g), cfg.policy, tol));
    return out;
}

QuadratureResult weber_apply_mellin(const MellinImage& g_star, const TransformConfig& cfg, double x) {
    check_point(x, "weber_apply_mellin");
    if (!(cfg.line.mu > -1.0 && cfg.line.mu < 1.0)) {
        throw ConstraintError("-1 < Re s < 1", "kernel image needs the line inside its strip");
    }
    if (x == cfg.a) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    auto F = [&](cplx s) { return g_star(s) * kernel_mellin(cfg.nu, s, x, cfg.a); };
    // Close to x = a the contour values cancel heavily; accuracy is judged
    // against the size of the integrand on the real axis.
    VerticalLineOptions o;
    o.abs_tol = 0.01 * cfg.policy.tol * std::abs(F(cplx(cfg.line.mu, 0.0)));
    return integrate_vertical_line(F, cfg.line, cfg.policy.tol, o);
}

QuadratureResult weber_outer_integral(const RadialFunction& f, const TransformConfig& cfg, double x) {
    check_point(x, "weber_outer_integral");
    if (f.is_zero()) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    const double nu = cfg.nu;
    const double a = cfg.a;
    const double lo = std::max(a, f.domain_lo());
    const HankelPolar at_xa = hankel_polar(nu, x * a);
    const double phase =
        -static_cast<double>((0.5L * nu + 0.25L) * static_cast<long double>(kPi) + at_xa.linear + at_xa.offset);
    const Integrand h = [&](double t) { return cplx(weber_kernel(nu, x * t, x * a) * t * f(t)); };
    return oscillatory_tail(h, x, std::remainder(phase, 2.0 * kPi), lo, exponential_tail(f), cfg.policy,
                            cfg.policy.tol);
}

QuadratureResult weber_solve(const RadialFunction& f, const TransformConfig& cfg, double x,
                             const MellinImage* g_star) {
    validate_solver_config(cfg);
    check_point(x, "weber_solve");
    if (cfg.strict) {
        if (g_star == nullptr) {
            throw ConstraintError("g in M^{-1}_{0,1}", "strict mode needs the Mellin image of g");
        }
        const MembershipVerdict v = membership_m01(*g_star, cfg.line);
        if (!v.member) throw ConstraintError(v.constraint, v.norm.reason);
    }
    QuadratureResult r = weber_outer_integral(f, cfg, x);
    const double scale = x / modulus_sq(cfg.nu, cfg.a * x);
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

RadialFunction tabulate(const std::function<double(double)>& fn, double lo, DecayHint hint,
                        const TabulateOptions& opts) {
    if (!(opts.hi > lo + opts.near_lo)) throw ParameterError("tabulate: empty range");
    // Panels geometric in the distance from lo, out to opts.hi.
    std::vector<double> breaks{lo + opts.near_lo};
    for (double d = 4.0 * opts.near_lo; lo + d < opts.hi; d *= 4.0) breaks.push_back(lo + d);
    breaks.push_back(opts.hi);
    auto table = std::make_shared<const detail::PiecewiseChebyshev>(fn, breaks, opts.tol);
    const double first = table->lo();
    const double last = table->hi();
    const double at_first = (*table)(first);
    const double at_last = (*table)(last);
    auto body = [table, lo, first, last, at_first, at_last, hint](double t) {
        if (t < first) {
            // Power law toward lo from the origin exponent of the hint.
            return at_first * std::pow((t - lo) / (first - lo), hint.origin_exponent);
        }
        if (t > last) {
            if (hint.tail == DecayHint::Tail::exponential) return 0.0;
            return at_last * std::pow(last / t, hint.infinity_rate);
        }
        return (*table)(t);
    };
    return RadialFunction::from_closure(body, hint, "table", lo);
}

RadialFunction tabulate_weber_apply(const RadialFunction& g, const TransformConfig& cfg, const TabulateOptions& opts) {
    // f(t) - f(a) = O(t - a) at the inner radius; at infinity f ~ t^{nu - 1 - p}
    // when g ~ xi^p at the origin.
    DecayHint hint;
    hint.origin_exponent = 1.0;
    hint.tail = DecayHint::Tail::algebraic;
    hint.infinity_rate = 1.0 + g.decay().origin_exponent - cfg.nu;
    auto fn = [&](double t) { return weber_apply(g, cfg, t).value.real(); };
    return tabulate(fn, cfg.a, hint, opts);
}

PreparedRoundtrip prepare_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg) {
    PreparedRoundtrip out;
    if (f.is_zero()) return out;
    if (f.domain_lo() < cfg.a) throw DomainError("weber_orr_roundtrip_3: f must live on (a, inf)");
    const double nu = cfg.nu;
    const double a = cfg.a;
    // Inner transform F(t) = int_a^inf C(xi t, a t) xi f(xi) d xi; the outer
    // integral is then the forward map applied to t F(t) / (J^2 + Y^2)(a t).
    auto weighted = [&](double t) {
        return t * weber_outer_integral(f, cfg, t).value.real() / modulus_sq(nu, a * t);
    };
    DecayHint hint;
    hint.origin_exponent = 1.0 + 2.0 * nu;
    hint.tail = DecayHint::Tail::algebraic;
    hint.infinity_rate = 1.0;
    TabulateOptions o;
    o.hi = 150.0;
    o.near_lo = 1e-5;
    out.intermediate = tabulate(weighted, 0.0, hint, o);
    out.outer_ = [inner = out.intermediate, cfg](double x) { return weber_apply(inner, cfg, x); };
    return out;
}

PreparedRoundtrip prepare_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg) {
    PreparedRoundtrip out;
    if (f.is_zero()) return out;
    const double nu = cfg.nu;
    const double a = cfg.a;
    DecayHint g_hint = f.decay();
    g_hint.origin_exponent += 1.0 + 2.0 * nu;
    if (g_hint.tail == DecayHint::Tail::algebraic) g_hint.infinity_rate -= 2.0;
    const RadialFunction g = RadialFunction::from_closure(
        [f, nu, a](double xi) { return xi * f(xi) / modulus_sq(nu, a * xi); }, g_hint, "weighted", f.domain_lo());
    out.intermediate = tabulate_weber_apply(g, cfg);
    out.outer_ = [inner = out.intermediate, cfg](double x) { return weber_outer_integral(inner, cfg, x); };
    return out;
}

QuadratureResult PreparedRoundtrip::operator()(double x) const {
    check_point(x, "weber_orr_roundtrip");
    if (!outer_) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    return outer_(x);
}

std::vector<QuadratureResult> weber_orr_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg,
                                                   const std::vector<double>& xs) {
    for (double x : xs) check_point(x, "weber_orr_roundtrip_3");
    const PreparedRoundtrip r = prepare_roundtrip_3(f, cfg);
    std::vector<QuadratureResult> out;
    for (double x : xs) out.push_back(r(x));
    return out;
}

QuadratureResult weber_orr_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg, double x) {
    return weber_orr_roundtrip_3(f, cfg, std::vector<double>{x}).front();
}

std::vector<QuadratureResult> weber_orr_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg,
                                                   const std::vector<double>& xs) {
    for (double x : xs) check_point(x, "weber_orr_roundtrip_4");
    const PreparedRoundtrip r = prepare_roundtrip_4(f, cfg);
    std::vector<QuadratureResult> out;
    for (double x : xs) out.push_back(r(x));
    return out;
}

QuadratureResult weber_orr_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg, double x) {
    return weber_orr_roundtrip_4(f, cfg, std::vector<double>{x}).front();
}

}  // namespace weber_orr
