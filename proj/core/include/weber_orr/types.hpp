#pragma once

#include <complex>
#include <cstdint>

namespace weber_orr {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Uniform return type of every integrator.
struct QuadratureResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = true;
};

// n_cut: cutoff of oscillatory integrals; t_height: initial contour half-height.
struct TruncationPolicy {
    double n_cut = 2000.0;
    double t_height = 16.0;
    double tol = 1e-10;
};

// The contour Re s = mu, truncated at |Im s| <= t_height.
struct VerticalLine {
    double mu = -0.25;
    double t_height = 16.0;
};

}  // namespace weber_orr
