#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"

namespace weber_orr {
namespace {

constexpr double kTwoPi = 2.0 * kPi;

// Integral of F over tau in [t0, t1], split at powers of two so the rule
// sees the decay scale.
QuadratureResult segment(const LineIntegrand& F, double mu, double t0, double t1, double tol,
                         double abs_tol) {
    AdaptiveOptions o;
    o.abs_tol = abs_tol;
    o.max_intervals = 20000;
    const double lo = std::min(std::fabs(t0), std::fabs(t1));
    const double hi = std::max(std::fabs(t0), std::fabs(t1));
    for (double b = 1.0; b < hi; b *= 2.0) {
        if (b > lo) {
            o.breakpoints.push_back(t0 < 0.0 ? -b : b);
        }
    }
    if (t0 < 0.0 && t1 > 0.0) {
        for (double b = 1.0; b < std::fabs(t0); b *= 2.0) o.breakpoints.push_back(-b);
        for (double b = 1.0; b < t1; b *= 2.0) o.breakpoints.push_back(b);
        o.breakpoints.push_back(0.0);
    }
    Integrand g = [&](double tau) { return F(cplx(mu, tau)); };
    return integrate_adaptive(g, t0, t1, tol, o);
}

}  // namespace

QuadratureResult integrate_vertical_line(const LineIntegrand& F, const VerticalLine& line, double tol,
                                         const VerticalLineOptions& opts) {
    if (!(line.t_height > 0.0) || !std::isfinite(line.mu)) {
        throw ParameterError("integrate_vertical_line: needs finite mu and t_height > 0");
    }
    const double mu = line.mu;
    double T = line.t_height;
    const double seg_tol = 0.05 * tol;
    QuadratureResult core = segment(F, mu, -T, T, seg_tol, 0.05 * opts.abs_tol * kTwoPi);
    QuadratureResult out;
    out.evaluations = core.evaluations;
    cplx total = core.value;
    double err = core.error_estimate;
    bool inner_ok = core.converged;
    cplx prev_with_tail(std::numeric_limits<double>::quiet_NaN(), 0.0);

    while (true) {
        if (opts.tail) {
            const cplx with_tail = total / kTwoPi + opts.tail(T);
            const double change = std::abs(with_tail - prev_with_tail);
            const double target = std::max(tol * std::abs(with_tail), opts.abs_tol);
            if (std::isfinite(change) && change <= target) {
                out.value = with_tail;
                out.error_estimate = change + err / kTwoPi;
                out.converged = inner_ok;
                return out;
            }
            prev_with_tail = with_tail;
        } else {
            const double fp = std::abs(F(cplx(mu, T)));
            const double fm = std::abs(F(cplx(mu, -T)));
            const double hp = std::abs(F(cplx(mu, 0.5 * T)));
            const double hm = std::abs(F(cplx(mu, -0.5 * T)));
            out.evaluations += 4;
            const double value_mag = std::abs(total) / kTwoPi;
            const double floor = 1e-3 * std::max(tol * value_mag, opts.abs_tol) * kTwoPi / T;
            auto side_tail = [&](double at_t, double at_half) {
                if (at_t == 0.0) return 0.0;
                // Samples at rounding-noise level carry no decay information.
                if (at_t <= floor && at_half <= floor) return at_t * T;
                if (!(at_half > at_t)) return std::numeric_limits<double>::infinity();
                const double p = std::log2(at_half / at_t);
                if (p <= 1.05) return std::numeric_limits<double>::infinity();
                return at_t * T / (p - 1.0);
            };
            const double tail = (side_tail(fp, hp) + side_tail(fm, hm)) / kTwoPi;
            if (tail <= 0.1 * std::max(tol * value_mag, opts.abs_tol)) {
                out.value = total / kTwoPi;
                out.error_estimate = err / kTwoPi + tail;
                out.converged = inner_ok;
                return out;
            }
        }
        if (2.0 * T > opts.t_max) {
            throw TruncationError("integrate_vertical_line: integrand not decayed at |Im s| = " +
                                  std::to_string(T));
        }
        const QuadratureResult up = segment(F, mu, T, 2.0 * T, seg_tol, 0.05 * opts.abs_tol * kTwoPi);
        const QuadratureResult down = segment(F, mu, -2.0 * T, -T, seg_tol, 0.05 * opts.abs_tol * kTwoPi);
        total += up.value + down.value;
        err += up.error_estimate + down.error_estimate;
        inner_ok = inner_ok && up.converged && down.converged;
        out.evaluations += up.evaluations + down.evaluations;
        T *= 2.0;
    }
}

}  // namespace weber_orr
