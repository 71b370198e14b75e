#include <cmath>
#include <complex>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

struct EulerExponents {
    cplx alpha;  // u^alpha
    cplx beta;   // (1 - u)^beta
    cplx gamma;  // (z^2 - u)^gamma
};

EulerExponents exponents(double nu, cplx s) {
    return {-(1.0 - s + 2.0 * nu) / 4.0, (s - 3.0 + 2.0 * nu) / 4.0, (2.0 * nu - 1.0 - s) / 4.0};
}

void check(double nu, cplx s, double z_minus_one) {
    if (!(nu >= 0.0 && nu <= 0.5)) throw DomainError("legendre_q: order must satisfy 0 <= nu <= 1/2");
    if (!(z_minus_one > 0.0) || !std::isfinite(z_minus_one)) throw DomainError("legendre_q: requires z > 1");
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("legendre_q: degree not finite");
    if (!(s.real() > -1.0 - 2.0 * nu)) {
        throw ParameterError("legendre_q: Euler integral requires Re(2*deg + 1) > -1 - 2*nu");
    }
}

// c = z^2 - 1 carried as its logarithm so that huge z does not overflow.
struct Gap {
    double c;
    double log_c;
};

Gap gap_from(double zm1) { return {zm1 * (zm1 + 2.0), std::log(zm1) + std::log(zm1 + 2.0)}; }

// I = int_0^1 u^alpha (1-u)^beta (z^2-u)^(gamma + shift) du.
QuadratureResult euler_integral(const EulerExponents& e, const Gap& gap, int shift, double tol) {
    const double c = gap.c;
    const double log_c = gap.log_c;
    const cplx al = e.alpha;
    const cplx be = e.beta;
    const cplx ga = e.gamma + static_cast<double>(shift);
    DeOptions opts;
    opts.max_level = 12;
    if (c >= 1.0) {
        // z^2 - u = c (1 + (1 - u)/c); c^gamma comes out of the integral.
        EndpointIntegrand f = [&](double, double dlo, double dhi) {
            return std::exp(al * std::log(dlo) + be * std::log(dhi) + ga * std::log1p(dhi / c));
        };
        QuadratureResult out = integrate_de(f, 0.0, 1.0, tol, opts);
        const cplx scale = std::exp(ga * log_c);
        out.value *= scale;
        out.error_estimate *= std::abs(scale);
        return out;
    }
    // Near z = 1 the factor (z^2 - u)^gamma varies on the scale c next to
    // u = 1. Split at u = 1 - c; on the last piece put u = 1 - c*r.
    EndpointIntegrand fa = [&](double, double dlo, double dhi) {
        return std::exp(al * std::log(dlo) + be * std::log(c + dhi) + ga * std::log(2.0 * c + dhi));
    };
    EndpointIntegrand fb = [&](double, double dlo, double dhi) {
        return std::exp(al * std::log1p(-c * dlo) + be * std::log(dlo) + ga * std::log(2.0 - dhi));
    };
    QuadratureResult a = integrate_de(fa, 0.0, 1.0 - c, tol, opts);
    QuadratureResult b = integrate_de(fb, 0.0, 1.0, tol, opts);
    const cplx scale = std::exp((1.0 + be + ga) * log_c);
    QuadratureResult out;
    out.value = a.value + scale * b.value;
    out.error_estimate = a.error_estimate + std::abs(scale) * b.error_estimate;
    out.evaluations = a.evaluations + b.evaluations;
    out.converged = a.converged && b.converged;
    return out;
}

// log of 2^{-(s+1)/2} e^{-i nu pi} sqrt(pi) / (Gamma((3+s-2nu)/4) Gamma((1+s+2nu)/4)),
// i.e. the Euler prefactor without Gamma((s+1-2nu)/2).
cplx log_prefactor_regular(double nu, cplx s) {
    return -(s + 1.0) / 2.0 * std::log(2.0) - cplx(0.0, nu * kPi) + 0.5 * std::log(kPi) -
           log_gamma((3.0 + s - 2.0 * nu) / 4.0) - log_gamma((1.0 + s + 2.0 * nu) / 4.0);
}

cplx log_gamma_pole_checked(double nu, cplx s) {
    const cplx arg = (s + 1.0 - 2.0 * nu) / 2.0;
    try {
        return log_gamma(arg);
    } catch (const PoleError&) {
        throw ParameterError("legendre_q: Gamma((s+1-2nu)/2) has a pole; requires Re(2*deg + 1) > 2*nu - 1");
    }
}

}  // namespace

QuadratureResult legendre_euler_integral(double nu, cplx s, double z_minus_one, double tol) {
    check(nu, s, z_minus_one);
    return euler_integral(exponents(nu, s), gap_from(z_minus_one), 0, tol);
}

cplx legendre_q_regularized(double nu, cplx deg, double z_minus_one) {
    const cplx s = 2.0 * deg + 1.0;
    check(nu, s, z_minus_one);
    const Gap gap = gap_from(z_minus_one);
    const QuadratureResult I = euler_integral(exponents(nu, s), gap, 0, 1e-13);
    return std::exp(log_prefactor_regular(nu, s) - nu / 2.0 * gap.log_c) * I.value;
}

cplx legendre_q_near_one(double nu, cplx deg, double z_minus_one) {
    const cplx s = 2.0 * deg + 1.0;
    check(nu, s, z_minus_one);
    const cplx lg = log_gamma_pole_checked(nu, s);
    const Gap gap = gap_from(z_minus_one);
    const QuadratureResult I = euler_integral(exponents(nu, s), gap, 0, 1e-13);
    return std::exp(log_prefactor_regular(nu, s) + lg - nu / 2.0 * gap.log_c) * I.value;
}

cplx legendre_q(double nu, cplx deg, double z) {
    if (!(z > 1.0)) throw DomainError("legendre_q: requires z > 1");
    return legendre_q_near_one(nu, deg, z - 1.0);
}

cplx legendre_q_deriv_near_one(double nu, cplx deg, double z_minus_one) {
    const cplx s = 2.0 * deg + 1.0;
    check(nu, s, z_minus_one);
    const cplx lg = log_gamma_pole_checked(nu, s);
    const Gap gap = gap_from(z_minus_one);
    const EulerExponents e = exponents(nu, s);
    const QuadratureResult i1 = euler_integral(e, gap, 0, 1e-13);
    const QuadratureResult i2 = euler_integral(e, gap, -1, 1e-13);
    const double z = 1.0 + z_minus_one;
    const cplx pre = std::exp(log_prefactor_regular(nu, s) + lg - nu / 2.0 * gap.log_c) * z;
    return pre * (-nu * std::exp(-gap.log_c) * i1.value + 2.0 * e.gamma * i2.value);
}

cplx legendre_q_deriv(double nu, cplx deg, double z) {
    if (!(z > 1.0)) throw DomainError("legendre_q_deriv: requires z > 1");
    return legendre_q_deriv_near_one(nu, deg, z - 1.0);
}

cplx legendre_q_hypergeometric(double nu, cplx deg, double z) {
    if (!(z > 1.0)) throw DomainError("legendre_q_hypergeometric: requires z > 1");
    const double mu = -nu;
    const cplx lam = deg;
    const cplx lead = std::exp(cplx(0.0, mu * kPi) + 0.5 * std::log(kPi) + log_gamma(lam + mu + 1.0) -
                               (lam + 1.0) * std::log(2.0) - log_gamma(lam + 1.5) -
                               (lam + mu + 1.0) * std::log(z) + mu / 2.0 * std::log((z - 1.0) * (z + 1.0)));
    return lead * gauss_2f1((lam + mu + 2.0) / 2.0, (lam + mu + 1.0) / 2.0, lam + 1.5, 1.0 / (z * z));
}

}  // namespace weber_orr
