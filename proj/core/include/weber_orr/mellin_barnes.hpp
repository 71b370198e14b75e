#pragma once

#include <array>
#include <vector>

#include "weber_orr/quad.hpp"
#include "weber_orr/types.hpp"

namespace weber_orr {

// Integrand of the contour identity
//   Gamma(A1 - t) Gamma(A2 - t) Gamma(B1 + t) Gamma(B2 + t)
//   / [Gamma(D1 - t) Gamma(D2 - t) Gamma(E1 + t) Gamma(E2 + t)]
// with A1 = (nu + w + 1)/2, A2 = (w + 1 - nu)/2, B1 = (nu - s - 1)/2,
// B2 = -(1 + s + nu)/2, D1 = 1 + nu/2, D2 = 1 - nu/2, E1 = nu/2, E2 = -nu/2.
struct SlaterIntegrand {
    std::array<cplx, 2> a;  // enter as Gamma(a - t)
    std::array<cplx, 2> b;  // Gamma(b + t)
    std::array<cplx, 2> d;  // 1/Gamma(d - t)
    std::array<cplx, 2> e;  // 1/Gamma(e + t)

    static SlaterIntegrand make(double nu, cplx s, cplx w);

    cplx operator()(cplx t) const;

    // |integrand| ~ |t|^{Re exponent()} along vertical lines.
    cplx exponent() const;

    // (1/2 pi) int over |Im t| > T on the line Re t = gamma, from the large-|t|
    // expansion of the Gamma ratios.
    cplx tail(double gamma, double T, int order = 10) const;
};

// (1/2 pi i) int_{gamma - i inf}^{gamma + i inf} of the Slater integrand.
QuadratureResult slater_contour(double nu, cplx s, cplx w, double gamma, double tol = 1e-12);

// Sum of residues at the left poles t = -b_j - k, accelerated by Richardson
// extrapolation in the number of columns.
struct ResidueSum {
    cplx value;
    double error_estimate = 0.0;
    int columns = 0;
};
ResidueSum slater_residue_sum(double nu, cplx s, cplx w, double tol = 1e-12);

// Closed form of the contour identity.
cplx slater_closed_form(double nu, cplx s, cplx w);

// (1/2 pi i) int_gamma Gamma((1-s)/2) Gamma(s/2) Gamma(s/2 - nu) Gamma(s/2 + nu) z^{-s} ds
// times cos(pi nu) / (pi^2 sqrt(pi)); equals J_nu^2(z) + Y_nu^2(z) for 2 nu < gamma < 1.
QuadratureResult mb_modulus(double nu, double z, double gamma, double tol = 1e-12);

}  // namespace weber_orr
