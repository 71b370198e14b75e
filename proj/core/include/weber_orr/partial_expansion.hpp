#pragma once

#include <memory>
#include <vector>

#include "weber_orr/mellin.hpp"
#include "weber_orr/weber.hpp"

namespace weber_orr {

// int_a^N C_nu(x t, x a) t f(t) dt, the solver integral cut at N.
QuadratureResult weber_outer_integral_truncated(const RadialFunction& f, const TransformConfig& cfg,
                                                double n_cut, double x);

// Partial sums G_N(x) = int_a^N C_nu(x t, x a) t f(t) dt where f(t) comes
// from the contour integral of g*(s) against the Legendre form of the kernel
// image. The inner contour values are tabulated once on (a, n_max].
class PartialExpansion {
public:
    PartialExpansion(MellinImage g_star, TransformConfig cfg, double n_max);

    // G_N(x) for a < N <= n_max.
    QuadratureResult gn(double n_cut, double x) const;

    // The contour-route inner function, tabulated.
    const RadialFunction& inner() const { return inner_; }
    double n_max() const { return n_max_; }
    const TransformConfig& config() const { return cfg_; }
    // Largest |Im| of the raw contour values seen while tabulating.
    double imaginary_residue() const { return *imag_residue_; }

private:
    MellinImage g_star_;
    TransformConfig cfg_;
    double n_max_;
    std::shared_ptr<double> imag_residue_;
    RadialFunction inner_;
};

// Single-shot form; builds the Mellin image of g by quadrature.
cplx partial_expansion_gn(const RadialFunction& g, const TransformConfig& cfg, double n_cut, double x);

// Root mean square over xs of x G_N(x) - g(x) (J^2 + Y^2)(a x).
double gn_residual(const PartialExpansion& pe, const RadialFunction& g, double n_cut, const std::vector<double>& xs);

}  // namespace weber_orr
