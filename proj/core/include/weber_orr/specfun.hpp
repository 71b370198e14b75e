#pragma once

#include "weber_orr/types.hpp"

namespace weber_orr {

// ---- Gamma ----------------------------------------------------------------

// Complex Gamma. Throws PoleError at non-positive integers.
cplx gamma_complex(cplx z);

// A logarithm of Gamma(z), correct modulo 2*pi*i. Meant for products and
// ratios that are exponentiated afterwards.
cplx log_gamma(cplx z);

// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
cplx reciprocal_gamma(cplx z);

// ---- Bessel functions of order 0 <= nu <= 1/2 ----------------------------

struct BesselValues {
    double j = 0.0;
    double y = 0.0;
    double dj = 0.0;  // d/dx J
    double dy = 0.0;  // d/dx Y
};

// Polar form J + iY = amplitude * exp(i * (linear + offset)).
// linear is x on the asymptotic branch and 0 below the switchover, so phase
// differences between two large arguments keep full relative precision.
struct HankelPolar {
    long double amplitude = 0.0L;
    long double linear = 0.0L;
    long double offset = 0.0L;
};

// Argument at which evaluation switches from the ascending series to the
// Hankel expansion.
inline constexpr double kBesselSwitchover = 17.0;

double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
BesselValues bessel_jy(double nu, double x);
HankelPolar hankel_polar(double nu, double x);

// Series and asymptotic branches exposed for the overlap check.
BesselValues bessel_jy_series(double nu, double x);
BesselValues bessel_jy_asymptotic(double nu, double x);

// ---- Gauss hypergeometric 2F1 on 0 <= z <= 1 ------------------------------

cplx gauss_2f1(cplx a, cplx b, cplx c, double z);

// ---- Associated Legendre function of the second kind ----------------------
//
// Q^{-nu}_deg(z) for z > 1, complex degree, evaluated from the Euler integral
// representation. With s = 2*deg + 1 the integral converges for
// Re s > -1 - 2*nu; Gamma((s + 1 - 2*nu)/2) has a pole at s = 2*nu - 1 which
// legendre_q rejects and legendre_q_regularized divides out.

cplx legendre_q(double nu, cplx deg, double z);
cplx legendre_q_deriv(double nu, cplx deg, double z);

// Same functions with the argument given as z - 1 (keeps precision near 1).
cplx legendre_q_near_one(double nu, cplx deg, double z_minus_one);
cplx legendre_q_deriv_near_one(double nu, cplx deg, double z_minus_one);

// Q^{-nu}_deg(z) / Gamma((s + 1 - 2*nu)/2), finite on the whole domain.
cplx legendre_q_regularized(double nu, cplx deg, double z_minus_one);

// Independent route through 2F1(.;.;1/z^2); used as a cross-check away from z = 1.
cplx legendre_q_hypergeometric(double nu, cplx deg, double z);

// Inner Euler integral of Q^{-nu}_{(s-1)/2}(z), without its Gamma prefactor.
QuadratureResult legendre_euler_integral(double nu, cplx s, double z_minus_one,
                                         double tol = 1e-13);

}  // namespace weber_orr
