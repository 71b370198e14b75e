#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"

namespace weber_orr {

cplx euler_average(const std::vector<cplx>& partial_sums, int depth) {
    if (partial_sums.empty()) return {0.0, 0.0};
    const int n = static_cast<int>(partial_sums.size());
    const int m = std::clamp(depth, 0, n - 1);
    std::vector<cplx> row(partial_sums.end() - (m + 1), partial_sums.end());
    for (int level = 0; level < m; ++level) {
        for (int i = 0; i + 1 < static_cast<int>(row.size()); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
    }
    return row.front();
}

namespace {

constexpr int kAverageDepth = 12;

QuadratureResult panel(const Integrand& f, double lo, double hi, double tol, double abs_tol) {
    AdaptiveOptions o;
    o.abs_tol = abs_tol;
    return integrate_adaptive(f, lo, hi, tol, o);
}

}  // namespace

QuadratureResult integrate_oscillatory(const Integrand& f, double phase_freq, double lo, double tol,
                                       const TruncationPolicy& policy, const OscillatoryOptions& opts) {
    if (phase_freq == 0.0 || !std::isfinite(phase_freq)) {
        throw ParameterError("integrate_oscillatory: phase_freq must be nonzero");
    }
    if (opts.half_periods_per_panel < 1 || opts.half_periods_per_panel % 2 == 0) {
        throw ParameterError("integrate_oscillatory: half_periods_per_panel must be odd");
    }
    double omega = std::fabs(phase_freq);
    double phase = phase_freq > 0.0 ? opts.phase : -opts.phase;
    const double step = kPi / omega;
    // Zeros of sin(omega*x + phase) sit at (k*pi - phase)/omega.
    double k = std::ceil((omega * lo + phase) / kPi);
    double first_zero = (k * kPi - phase) / omega;
    if (first_zero - lo < 1e-3 * step) first_zero += step;

    const double panel_tol = 0.05 * tol;
    QuadratureResult out;
    out.converged = false;

    // First panel may contain an endpoint singularity at lo.
    QuadratureResult head = integrate_de(f, lo, first_zero, panel_tol);
    out.evaluations += head.evaluations;
    double local_err = head.error_estimate;
    cplx sum = head.value;

    const double width = step * opts.half_periods_per_panel;
    std::vector<cplx> seq;
    auto corrected = [&](cplx s, double at) { return opts.tail ? s + opts.tail(at) : s; };

    if (opts.fixed_cutoff) {
        const double n_cut = policy.n_cut;
        double a = first_zero;
        if (n_cut <= first_zero) {
            QuadratureResult r = integrate_de(f, lo, n_cut, panel_tol);
            out.value = corrected(r.value, n_cut);
            out.error_estimate = r.error_estimate;
            out.evaluations = r.evaluations;
            out.converged = r.converged;
            return out;
        }
        while (a < n_cut) {
            const double b = std::min(a + width, n_cut);
            const QuadratureResult r = panel(f, a, b, panel_tol, 1e-3 * opts.abs_tol);
            sum += r.value;
            local_err += r.error_estimate;
            out.evaluations += r.evaluations;
            a = b;
        }
        out.value = corrected(sum, n_cut);
        out.error_estimate = local_err;
        out.converged = true;
        return out;
    }

    seq.push_back(corrected(sum, first_zero));
    double a = first_zero;
    int quiet = 0;
    cplx prev_acc = seq.back();
    double prev_diff = std::numeric_limits<double>::infinity();
    int panels = 0;
    const int max_panels = std::max(opts.min_panels + 4, static_cast<int>((policy.n_cut - lo) / width) + 1);
    while (true) {
        const double b = a + width;
        const QuadratureResult r = panel(f, a, b, panel_tol, 1e-3 * opts.abs_tol);
        ++panels;
        sum += r.value;
        local_err += r.error_estimate;
        out.evaluations += r.evaluations;
        seq.push_back(corrected(sum, b));
        a = b;

        const double scale = std::max(std::abs(sum), opts.abs_tol / std::max(tol, 1e-300));
        // Exponentially decaying envelope: the plain partial sum has converged.
        if (std::abs(r.value) <= 1e-3 * tol * scale) {
            if (++quiet >= 4) {
                out.value = sum;
                out.error_estimate = local_err + 4.0 * std::abs(r.value);
                out.converged = true;
                return out;
            }
        } else {
            quiet = 0;
        }

        const cplx acc = euler_average(seq, kAverageDepth);
        const double diff = std::abs(acc - prev_acc);
        prev_acc = acc;
        const double target = std::max(tol * std::abs(acc), opts.abs_tol);
        if (panels >= opts.min_panels && diff <= target && prev_diff <= target) {
            out.value = acc;
            out.error_estimate = std::max(diff, prev_diff) + local_err;
            out.converged = true;
            return out;
        }
        prev_diff = diff;
        if (panels >= max_panels) {
            out.value = acc;
            out.error_estimate = std::max(diff, prev_diff) + local_err;
            out.converged = out.error_estimate <= target;
            return out;
        }
    }
}

}  // namespace weber_orr
