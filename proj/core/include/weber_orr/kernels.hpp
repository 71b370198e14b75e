#pragma once

#include "weber_orr/types.hpp"

namespace weber_orr {

// C_nu(alpha, beta) = J_nu(alpha) Y_nu(beta) - Y_nu(alpha) J_nu(beta).
double weber_kernel(double nu, double alpha, double beta);

// J_nu(x)^2 + Y_nu(x)^2.
double modulus_sq(double nu, double x);

// Leading large-xi term of C_nu(x*xi, a*xi): -2 sin(xi (x - a)) / (pi xi sqrt(a x)).
double kernel_tail_asymptote(double nu, double x, double a, double xi);

// Closed form of int_0^inf C_nu(x xi, a xi) xi^{-s} d xi for -1 < Re s < 1,
// x != a (x < a by antisymmetry). Uses the regularized Legendre function so
// the removable pole at s = 2 nu - 1 is harmless.
cplx kernel_mellin(double nu, cplx s, double x, double a);

}  // namespace weber_orr
