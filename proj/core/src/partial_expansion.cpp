#include <algorithm>
#include <cmath>

#include "weber_orr/errors.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/partial_expansion.hpp"

namespace weber_orr {

QuadratureResult weber_outer_integral_truncated(const RadialFunction& f, const TransformConfig& cfg,
                                                double n_cut, double x) {
    if (!(x > 0.0)) throw DomainError("weber_outer_integral_truncated: x must be positive");
    if (!(n_cut > cfg.a)) throw ParameterError("weber_outer_integral_truncated: requires N > a");
    if (f.is_zero()) return QuadratureResult{{0.0, 0.0}, 0.0, 1, true};
    const double nu = cfg.nu;
    const double a = cfg.a;
    AdaptiveOptions o;
    o.abs_tol = 1e-14;
    // One breakpoint per half period of the kernel oscillation.
    const double step = kPi / x;
    for (double b = a + step; b < n_cut; b += step) o.breakpoints.push_back(b);
    o.max_intervals = std::max(4000, 8 * static_cast<int>(o.breakpoints.size()));
    return integrate_adaptive([&](double t) { return cplx(weber_kernel(nu, x * t, x * a) * t * f(t)); }, a, n_cut,
                              cfg.policy.tol, o);
}

PartialExpansion::PartialExpansion(MellinImage g_star, TransformConfig cfg, double n_max)
    : g_star_(std::move(g_star)), cfg_(cfg), n_max_(n_max), imag_residue_(std::make_shared<double>(0.0)) {
    validate_solver_config(cfg_);
    if (!(n_max_ > cfg_.a)) throw ParameterError("PartialExpansion: requires N > a");
    auto residue = imag_residue_;
    const MellinImage image = g_star_;
    const TransformConfig c = cfg_;
    auto fn = [image, c, residue](double t) {
        const QuadratureResult r = weber_apply_mellin(image, c, t);
        *residue = std::max(*residue, std::fabs(r.value.imag()));
        return r.value.real();
    };
    DecayHint hint;
    hint.origin_exponent = 1.0;
    hint.tail = DecayHint::Tail::algebraic;
    hint.infinity_rate = 1.0;
    TabulateOptions o;
    o.hi = n_max_;
    o.tol = 1e-9;
    inner_ = tabulate(fn, cfg_.a, hint, o);
}

QuadratureResult PartialExpansion::gn(double n_cut, double x) const {
    if (n_cut > n_max_ * (1.0 + 1e-12)) throw ParameterError("PartialExpansion: N beyond the tabulated range");
    return weber_outer_integral_truncated(inner_, cfg_, std::min(n_cut, n_max_), x);
}

cplx partial_expansion_gn(const RadialFunction& g, const TransformConfig& cfg, double n_cut, double x) {
    if (g.is_zero()) return {0.0, 0.0};
    const PartialExpansion pe(MellinImage::from_function(g, cfg.line), cfg, n_cut);
    return pe.gn(n_cut, x).value;
}

double gn_residual(const PartialExpansion& pe, const RadialFunction& g, double n_cut, const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    const TransformConfig& cfg = pe.config();
    double acc = 0.0;
    for (double x : xs) {
        const double d = x * pe.gn(n_cut, x).value.real() - g(x) * modulus_sq(cfg.nu, cfg.a * x);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace weber_orr
