#pragma once

#include <functional>
#include <vector>

#include "weber_orr/types.hpp"

namespace weber_orr {

using Integrand = std::function<cplx(double)>;

// Integrand that also receives the distances to both interval ends, computed
// without cancellation. dist_hi is +inf on semi-infinite ranges.
using EndpointIntegrand = std::function<cplx(double x, double dist_lo, double dist_hi)>;

// Integrand on a vertical line, called with s = mu + i*tau.
using LineIntegrand = std::function<cplx(cplx s)>;

struct AdaptiveOptions {
    double abs_tol = 0.0;
    int max_intervals = 4000;
    // Optional interior breakpoints (must lie strictly inside (lo, hi)).
    std::vector<double> breakpoints;
};

// Adaptive Gauss-Kronrod (10/21 point) on a finite interval.
// Converged when error_estimate <= max(tol * |value|, abs_tol).
QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi, double tol,
                                    const AdaptiveOptions& opts = {});

struct DeOptions {
    double abs_tol = 0.0;
    int max_level = 11;
};

// Tanh-sinh rule for algebraic endpoint singularities.
// Throws DivergenceError when the endpoint contributions do not decay.
QuadratureResult integrate_de(const Integrand& f, double lo, double hi, double tol,
                              const DeOptions& opts = {});
QuadratureResult integrate_de(const EndpointIntegrand& f, double lo, double hi, double tol,
                              const DeOptions& opts = {});

// Exp-sinh rule on (lo, inf) for integrands singular at lo and decaying
// algebraically or faster at infinity.
QuadratureResult integrate_de_semi_infinite(const EndpointIntegrand& f, double lo, double tol,
                                            const DeOptions& opts = {});

// Non-oscillatory integral over (lo, inf) by Gauss-Kronrod on doubling chunks.
// Throws DivergenceError when chunk contributions stop decreasing.
QuadratureResult integrate_semi_infinite(const Integrand& f, double lo, double tol,
                                         double first_chunk = 1.0, double abs_tol = 0.0);

struct OscillatoryOptions {
    // Zeros of the asymptotic oscillation sin(phase_freq*x + phase).
    double phase = 0.0;
    // Odd number of half periods per panel; odd keeps panel sums alternating.
    int half_periods_per_panel = 1;
    int min_panels = 8;
    // Optional analytic tail: approximation of the integral from N to infinity.
    std::function<cplx(double)> tail;
    // Integrate exactly up to policy.n_cut, add the tail if given, no acceleration.
    bool fixed_cutoff = false;
    double abs_tol = 0.0;
};

// Semi-infinite oscillatory integral over (lo, inf): zero-aligned panels,
// iterated averaging of the partial sums, optional tail correction.
QuadratureResult integrate_oscillatory(const Integrand& f, double phase_freq, double lo,
                                       double tol, const TruncationPolicy& policy,
                                       const OscillatoryOptions& opts = {});

// Iterated averaging (Euler transform) of a sequence of partial sums.
cplx euler_average(const std::vector<cplx>& partial_sums, int depth);

struct VerticalLineOptions {
    double abs_tol = 0.0;
    double t_max = 1.0e5;
    // Optional analytic tail: approximation of (1/2pi) * integral over |tau| > T.
    std::function<cplx(double)> tail;
};

// (1/2pi) * integral of F(mu + i*tau) over tau in (-T, T), T raised until the
// tail is below tol. Throws TruncationError when t_max is reached first.
QuadratureResult integrate_vertical_line(const LineIntegrand& F, const VerticalLine& line,
                                         double tol, const VerticalLineOptions& opts = {});

}  // namespace weber_orr
