#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "weber_orr/mellin.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/types.hpp"

namespace weber_orr {

struct TransformConfig {
    double a = 1.0;
    double nu = 0.25;
    TruncationPolicy policy;
    VerticalLine line;
    // Refuse to solve unless the image of g passes the admissibility test.
    bool strict = false;
};

// Throws ConstraintError naming the first violated hypothesis:
// "a > 0", "0 < nu < 1/2", "-1 < Re s < 0".
void validate_solver_config(const TransformConfig& cfg);

// f(x) = int_0^inf C_nu(x xi, a xi) g(xi) d xi.
QuadratureResult weber_apply(const RadialFunction& g, const TransformConfig& cfg, double x);

// Same value through the Mellin-Parseval route:
// f(x) = (1/2 pi i) int_line g*(s) K(s; x, a) ds with K the kernel image.
QuadratureResult weber_apply_mellin(const MellinImage& g_star, const TransformConfig& cfg, double x);

// g(x) = x / (J^2(ax) + Y^2(ax)) * int_a^inf C_nu(x t, x a) t f(t) dt.
// With cfg.strict set, g_star must be given and admissible.
QuadratureResult weber_solve(const RadialFunction& f, const TransformConfig& cfg, double x,
                             const MellinImage* g_star = nullptr);

// The bare integral int_a^inf C_nu(x t, x a) t f(t) dt of the solver.
QuadratureResult weber_outer_integral(const RadialFunction& f, const TransformConfig& cfg, double x);

// Reconstruction of f at x through the pair in which the inner integral runs
// over (a, inf) and the outer over (0, inf).
QuadratureResult weber_orr_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg, double x);
// Grid form: the inner transform is tabulated once for all points.
std::vector<QuadratureResult> weber_orr_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg,
                                                   const std::vector<double>& xs);

// Reconstruction through the pair with the weight 1/(J^2 + Y^2) inside.
QuadratureResult weber_orr_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg, double x);
std::vector<QuadratureResult> weber_orr_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg,
                                                   const std::vector<double>& xs);

// A roundtrip with its intermediate transform already tabulated. Calls are
// const and may run concurrently.
class PreparedRoundtrip {
public:
    QuadratureResult operator()(double x) const;

    // The tabulated intermediate function (zero for a zero input).
    RadialFunction intermediate;

private:
    friend PreparedRoundtrip prepare_roundtrip_3(const RadialFunction&, const TransformConfig&);
    friend PreparedRoundtrip prepare_roundtrip_4(const RadialFunction&, const TransformConfig&);
    std::function<QuadratureResult(double)> outer_;
};
PreparedRoundtrip prepare_roundtrip_3(const RadialFunction& f, const TransformConfig& cfg);
PreparedRoundtrip prepare_roundtrip_4(const RadialFunction& f, const TransformConfig& cfg);

struct TabulateOptions {
    double tol = 1e-9;
    // Table covers [lo, hi]; beyond hi the values follow the decay hint.
    double hi = 400.0;
    // Smallest distance from lo resolved by the geometric panels.
    double near_lo = 1e-4;
};

// A smooth transform sampled once on piecewise Chebyshev panels, for use as
// the inner function of a repeated integral.
RadialFunction tabulate(const std::function<double(double)>& fn, double lo, DecayHint hint,
                        const TabulateOptions& opts = {});

// weber_apply(g) tabulated on (a, opts.hi].
RadialFunction tabulate_weber_apply(const RadialFunction& g, const TransformConfig& cfg,
                                    const TabulateOptions& opts = {});

}  // namespace weber_orr
