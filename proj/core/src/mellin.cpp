#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "weber_orr/errors.hpp"
#include "weber_orr/mellin.hpp"

namespace weber_orr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_lo^inf G(log x, x) dx / x, split at x = 1, both halves in u = |log x|.
using LogIntegrand = std::function<cplx(double log_x, double x)>;

QuadratureResult integrate_dlogx(const LogIntegrand& G, double domain_lo, double tol) {
    QuadratureResult out;
    auto add = [&out](const QuadratureResult& r) {
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    };
    if (domain_lo < 1.0) {
        auto lower = [&](double u) {
            const double x = std::exp(-u);
            if (x == 0.0) return cplx(0.0);
            return G(-u, x);
        };
        if (domain_lo > 0.0) {
            const double u_max = -std::log(domain_lo);
            add(integrate_de(
                [&](double u, double, double) {
                    const double x = std::max(std::exp(-u), domain_lo);
                    return G(std::log(x), x);
                },
                0.0, u_max, tol));
        } else {
            add(integrate_semi_infinite(lower, 0.0, tol, 1.0));
        }
    }
    const double start = std::max(1.0, domain_lo);
    const double u0 = std::log(start);
    auto upper = [&](double u) {
        const double x = std::exp(u);
        if (!std::isfinite(x)) return cplx(0.0);
        return G(u, x);
    };
    add(integrate_semi_infinite(upper, u0, tol, 1.0, tol * std::abs(out.value)));
    return out;
}

void check_strip(const RadialFunction& f, double sigma, const char* what) {
    const auto [lo, hi] = f.mellin_strip();
    if (!(sigma > lo && sigma < hi)) {
        throw ConstraintError(std::to_string(lo) + " < Re s < " + std::to_string(hi),
                              std::string(what) + ": Re s = " + std::to_string(sigma) +
                                  " is outside the Mellin strip of '" + f.label() + "'");
    }
}

}  // namespace

QuadratureResult mellin_forward_result(const RadialFunction& f, cplx s, double tol) {
    check_strip(f, s.real(), "mellin_forward");
    if (f.is_zero()) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    // x^s f(x) in log space: x^s alone overflows for large Re s where f has underflowed.
    auto G = [&](double log_x, double x) {
        const double fx = f(x);
        if (fx == 0.0) return cplx(0.0);
        return std::copysign(1.0, fx) * std::exp(s * log_x + std::log(std::fabs(fx)));
    };
    return integrate_dlogx(G, f.domain_lo(), tol);
}

cplx mellin_forward(const RadialFunction& f, cplx s, double tol) {
    return mellin_forward_result(f, s, tol).value;
}

struct MellinImage::Cache {
    RadialFunction f;
    double mu = 0.0;
    double step = 0.5;
    std::shared_mutex mutex;
    std::unordered_map<long long, cplx> nodes;

    cplx direct(double tau) const { return mellin_forward(f, cplx(mu, tau)); }

    cplx node(long long i) {
        {
            std::shared_lock lock(mutex);
            auto it = nodes.find(i);
            if (it != nodes.end()) return it->second;
        }
        const cplx v = direct(static_cast<double>(i) * step);
        std::unique_lock lock(mutex);
        nodes.emplace(i, v);
        return v;
    }

    // Six-point Lagrange interpolation on the nodes around tau.
    cplx interpolate(double tau) {
        const double q = tau / step;
        const double base = std::floor(q);
        const double u = q - base;
        const long long i0 = static_cast<long long>(base);
        if (u == 0.0) return node(i0);
        cplx acc(0.0);
        for (int j = -2; j <= 3; ++j) {
            double w = 1.0;
            for (int k = -2; k <= 3; ++k) {
                if (k != j) w *= (u - k) / static_cast<double>(j - k);
            }
            acc += w * node(i0 + j);
        }
        return acc;
    }

    void clear() {
        std::unique_lock lock(mutex);
        nodes.clear();
    }
};

MellinImage MellinImage::closed_form(Body body, VerticalLine native_line, std::string label) {
    if (!body) throw ParameterError("mellin image: empty body");
    MellinImage m;
    m.body_ = std::move(body);
    m.line_ = native_line;
    m.label_ = std::move(label);
    return m;
}

MellinImage MellinImage::from_function(const RadialFunction& f, VerticalLine native_line, double interp_tol) {
    check_strip(f, native_line.mu, "mellin image");
    auto cache = std::make_shared<Cache>();
    cache->f = f;
    cache->mu = native_line.mu;
    const double probes[] = {0.37, 2.71, 0.61 * native_line.t_height, 1.93 * native_line.t_height};
    // Quadrature noise in f* is absolute, so tiny values far up the line are
    // compared against a floor tied to the size of the image near the axis.
    const double floor = 1e-6 * std::abs(cache->direct(0.0));
    for (double step = 0.5; step >= 1.0 / 256.0; step *= 0.5) {
        cache->clear();
        cache->step = step;
        bool ok = true;
        for (double tau : probes) {
            const cplx exact = cache->direct(tau);
            const cplx approx = cache->interpolate(tau);
            if (std::abs(exact - approx) > interp_tol * std::max(std::abs(exact), floor)) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    MellinImage m;
    m.line_ = native_line;
    m.label_ = "mellin(" + f.label() + ")";
    const RadialFunction magnitude = RadialFunction::from_closure(
        [f](double x) { return std::fabs(f(x)); }, f.decay(), "|" + f.label() + "|", f.domain_lo());
    m.noise_ = 1e-13 * std::abs(mellin_forward(magnitude, cplx(native_line.mu, 0.0)));
    m.cache_ = cache;
    m.body_ = [cache](cplx s) {
        if (std::fabs(s.real() - cache->mu) < 1e-14) return cache->interpolate(s.imag());
        return mellin_forward(cache->f, s);
    };
    return m;
}

cplx MellinImage::operator()(cplx s) const {
    if (!body_) throw ParameterError("mellin image: empty");
    return body_(s);
}

double MellinImage::grid_step() const { return cache_ ? cache_->step : 0.0; }

QuadratureResult mellin_inverse(const MellinImage& F, const VerticalLine& line, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("mellin_inverse: x must be positive");
    const double log_x = std::log(x);
    // |f(x)| is bounded on the scale x^{-mu} |F(mu)|; cancellation far from x = 1
    // makes a purely relative target unreachable.
    VerticalLineOptions o;
    o.abs_tol = 0.01 * tol * std::exp(-line.mu * log_x) * std::abs(F(cplx(line.mu, 0.0)));
    return integrate_vertical_line([&](cplx s) { return F(s) * std::exp(-s * log_x); }, line, tol, o);
}

VerticalLine saddle_line(const MellinImage& F, double x, double mu_lo, double t_height) {
    if (!(x > 0.0)) throw DomainError("saddle_line: x must be positive");
    const double log_x = std::log(x);
    auto cost = [&](double mu) {
        const double v = std::abs(F(cplx(mu, 0.0)));
        return v > 0.0 && std::isfinite(v) ? std::log(v) - mu * log_x : std::numeric_limits<double>::infinity();
    };
    // log|F| is convex in mu for positive f; bracket, then golden section.
    const double floor = mu_lo + 1e-3;
    double a = std::max(F.native_line().mu, floor + 0.5);
    double step = 1.0;
    double fa = cost(a);
    double b = a + step;
    double fb = cost(b);
    if (fb > fa) {
        step = -std::min(step, 0.5 * (a - floor));
        b = a + step;
        fb = cost(b);
        if (fb > fa) {
            std::swap(a, b);
            std::swap(fa, fb);
            step = -step;
        }
    }
    double c = b + 2.0 * step;
    if (c < floor) c = floor;
    double fc = cost(c);
    for (int i = 0; i < 60 && fc < fb && c > floor; ++i) {
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        step *= 2.0;
        c = std::max(b + step, floor);
        fc = cost(c);
    }
    if (a > c) std::swap(a, c);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = a, hi = c;
    double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    double f1 = cost(m1), f2 = cost(m2);
    while (hi - lo > 1e-3 * (1.0 + std::abs(lo))) {
        if (f1 < f2) {
            hi = m2;
            m2 = m1;
            f2 = f1;
            m1 = hi - g * (hi - lo);
            f1 = cost(m1);
        } else {
            lo = m1;
            m1 = m2;
            f1 = f2;
            m2 = lo + g * (hi - lo);
            f2 = cost(m2);
        }
    }
    const double mu = 0.5 * (lo + hi);
    return VerticalLine{mu, std::max(t_height, 8.0 * std::sqrt(std::abs(mu)))};
}

ParsevalSides parseval_pair(const RadialFunction& f, const RadialFunction& g, const VerticalLine& line,
                            double tol) {
    check_strip(f, line.mu, "parseval_pair (f)");
    check_strip(g, 1.0 - line.mu, "parseval_pair (g)");
    ParsevalSides out;
    const double lo = std::max(f.domain_lo(), g.domain_lo());
    const QuadratureResult direct = integrate_dlogx([&](double, double x) { return cplx(x * f(x) * g(x)); }, lo, tol);
    out.lhs = direct.value;
    out.lhs_error = direct.error_estimate;

    const MellinImage fs = MellinImage::from_function(f, line);
    const MellinImage gs = MellinImage::from_function(g, VerticalLine{1.0 - line.mu, line.t_height});
    const QuadratureResult contour =
        integrate_vertical_line([&](cplx s) { return fs(s) * gs(1.0 - s); }, line, tol);
    out.rhs = contour.value;
    out.rhs_error = contour.error_estimate;
    return out;
}

void validate_space_params(const SpaceParams& p) {
    auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    if (!std::isfinite(p.c1) || !std::isfinite(p.c2) || 2 * sign(p.c1) + sign(p.c2) < 0) {
        throw ConstraintError("2 sign(c1) + sign(c2) >= 0", "space parameters (" + std::to_string(p.c1) + ", " +
                                                                std::to_string(p.c2) + ")");
    }
}

bool space_included(const SpaceParams& smaller, const SpaceParams& larger) {
    if (smaller.c1 != larger.c1) return smaller.c1 > larger.c1;
    return smaller.c2 >= larger.c2;
}

NormResult space_norm(const MellinImage& F, const VerticalLine& line, const SpaceParams& p, double tol) {
    validate_space_params(p);
    NormResult out;
    if (line.mu == 0.0 && p.c2 < 0.0) {
        out.value = kInf;
        out.reason = "weight |s|^c2 is singular at s = 0 on the line";
        return out;
    }
    // Image values at the quadrature noise level carry no decay information
    // and count as zero.
    const double noise = F.noise_level();
    auto weighted = [&](cplx s) {
        const double v = std::abs(F(s));
        if (v <= 10.0 * noise) return 0.0;
        return std::exp(kPi * p.c1 * std::abs(s)) * std::pow(std::abs(s), p.c2) * v;
    };
    const double T = line.t_height;
    // Decay sampled at T, 2T, 4T on both halves of the line.
    double worst_decay = kInf;
    for (double side : {1.0, -1.0}) {
        const double h1 = weighted(cplx(line.mu, side * T));
        const double h2 = weighted(cplx(line.mu, side * 2 * T));
        const double h4 = weighted(cplx(line.mu, side * 4 * T));
        if (h4 == 0.0 && h2 == 0.0) continue;
        if (!(h2 < h1 && h4 < h2)) {
            out.value = kInf;
            out.fitted_decay = 0.0;
            out.reason = "weighted image does not decrease along the line";
            return out;
        }
        worst_decay = std::min(worst_decay, std::log2(h2 / h4));
    }
    out.fitted_decay = worst_decay;
    if (worst_decay <= 1.0) {
        out.value = kInf;
        out.reason = "weighted image decays like |tau|^-" + std::to_string(worst_decay) + ", not integrable";
        return out;
    }
    try {
        VerticalLineOptions o;
        o.t_max = 64.0 * T;
        const QuadratureResult r = integrate_vertical_line([&](cplx s) { return cplx(weighted(s)); }, line, tol, o);
        out.value = r.value.real();
        out.error_estimate = r.error_estimate;
        out.finite = std::isfinite(out.value);
    } catch (const TruncationError& e) {
        out.value = kInf;
        out.reason = e.what();
    }
    return out;
}

MembershipVerdict membership_m01(const MellinImage& F, const VerticalLine& line, double tol) {
    MembershipVerdict v;
    if (!(line.mu > -1.0 && line.mu < 0.0)) {
        v.constraint = "-1 < Re s < 0";
        v.norm.value = kInf;
        v.norm.reason = "line abscissa " + std::to_string(line.mu) + " outside the admissible strip";
        return v;
    }
    v.norm = space_norm(F, line, SpaceParams{0.0, 1.0}, tol);
    v.member = v.norm.finite;
    if (!v.member) v.constraint = "s g*(s) integrable on the line";
    return v;
}

double lmu_p_norm(const RadialFunction& f, double mu, double p, double tol) {
    if (!(p >= 1.0)) throw ParameterError("lmu_p_norm: p must be at least 1");
    const QuadratureResult r = integrate_dlogx(
        [&](double log_x, double x) { return cplx(std::pow(std::fabs(f(x)), p) * std::exp(mu * p * log_x)); },
        f.domain_lo(), tol);
    return std::pow(r.value.real(), 1.0 / p);
}

}  // namespace weber_orr
