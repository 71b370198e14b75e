#include <cmath>

#include "weber_orr/errors.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {

double weber_kernel(double nu, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("weber_kernel: arguments must be positive and finite");
    }
    if (alpha == beta) return 0.0;
    const double h = beta - alpha;
    if (std::fabs(h) < 1e-4 * std::max(alpha, beta)) {
        // Taylor expansion in beta about alpha; the leading coefficient is the
        // Wronskian 2/(pi alpha) and Bessel's equation gives the next two.
        const double w = 2.0 / (kPi * alpha);
        const double r = h / alpha;
        const double third = ((2.0 + nu * nu) * r * r - h * h) / 6.0;
        return w * h * (1.0 - 0.5 * r + third);
    }
    if (std::min(alpha, beta) < kBesselSwitchover) {
        // Below the switchover the phases sit near -pi/2 and their difference
        // would cancel; the products keep full precision instead.
        const BesselValues va = bessel_jy(nu, alpha);
        const BesselValues vb = bessel_jy(nu, beta);
        return va.j * vb.y - va.y * vb.j;
    }
    const HankelPolar pa = hankel_polar(nu, alpha);
    const HankelPolar pb = hankel_polar(nu, beta);
    const long double dphi = (pb.linear - pa.linear) + (pb.offset - pa.offset);
    return static_cast<double>(pa.amplitude * pb.amplitude * std::sin(dphi));
}

double modulus_sq(double nu, double x) {
    const HankelPolar p = hankel_polar(nu, x);
    return static_cast<double>(p.amplitude * p.amplitude);
}

double kernel_tail_asymptote(double nu, double x, double a, double xi) {
    (void)nu;
    if (!(a > 0.0) || !(x > a)) throw DomainError("kernel_tail_asymptote: requires x > a > 0");
    if (!(xi > 0.0)) throw DomainError("kernel_tail_asymptote: requires xi > 0");
    return -2.0 * std::sin(xi * (x - a)) / (kPi * xi * std::sqrt(a * x));
}

cplx kernel_mellin(double nu, cplx s, double x, double a) {
    if (!(a > 0.0) || !(x > 0.0)) throw DomainError("kernel_mellin: requires x > 0 and a > 0");
    if (!(s.real() > -1.0 && s.real() < 1.0)) {
        throw ParameterError("kernel_mellin: requires -1 < Re s < 1");
    }
    if (x == a) return {0.0, 0.0};
    if (x < a) return -kernel_mellin(nu, s, a, x);
    const double d2 = (x - a) * (x + a);
    const double zm1 = 2.0 * a * a / d2;
    const cplx qreg = legendre_q_regularized(nu, (s - 1.0) / 2.0, zm1);
    const cplx log_pre = (1.0 - s) * std::log(2.0) - std::log(kPi) + cplx(0.0, nu * kPi) +
                         (s - 1.0) / 2.0 * std::log(d2) + log_gamma((1.0 - s) / 2.0);
    return -std::exp(log_pre) * qreg;
}

}  // namespace weber_orr
