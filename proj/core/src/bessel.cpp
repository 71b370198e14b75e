#include <cmath>

#include "weber_orr/errors.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

struct JyL {
    long double j, y, dj, dy;
};

void check_args(double nu, double x) {
    if (!(nu >= 0.0 && nu <= 0.5)) throw DomainError("bessel: order must satisfy 0 <= nu <= 1/2");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel: argument must be positive and finite");
}

// J_{v}(x) and its derivative from the ascending series, any real v > -1.
void j_series(long double v, long double x, long double& j, long double& dj) {
    const long double q = -0.25L * x * x;
    long double term = 1.0L / std::tgamma(v + 1.0L);
    long double sum = term;
    long double dsum = term * v;
    for (int k = 1; k < 300; ++k) {
        term *= q / (static_cast<long double>(k) * (k + v));
        sum += term;
        dsum += term * (2.0L * k + v);
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > 0.5L * x) break;
    }
    const long double p = std::pow(0.5L * x, v);
    j = p * sum;
    dj = p * dsum / x;
}

JyL series(double nu, double x) {
    const long double xl = x;
    JyL r{};
    j_series(nu, xl, r.j, r.dj);
    if (nu == 0.0) {
        // Y_0 = (2/pi)[(ln(x/2) + gamma) J_0 + sum (-1)^{k+1} H_k (x^2/4)^k / (k!)^2]
        const long double q = 0.25L * xl * xl;
        long double term = 1.0L;
        long double h = 0.0L;
        long double sum = 0.0L;
        long double dsum = 0.0L;
        for (int k = 1; k < 300; ++k) {
            term *= -q / (static_cast<long double>(k) * k);
            h += 1.0L / k;
            const long double t = -term * h;
            sum += t;
            dsum += t * (2.0L * k) / xl;
            if (std::fabs(t) < 1e-22L * std::fabs(sum) && k > 0.5L * xl) break;
        }
        const long double lg = std::log(0.5L * xl) + kEulerGamma;
        r.y = (2.0L / kPiL) * (lg * r.j + sum);
        r.dy = (2.0L / kPiL) * (r.j / xl + lg * r.dj + dsum);
        return r;
    }
    long double jm = 0.0L;
    long double djm = 0.0L;
    j_series(-static_cast<long double>(nu), xl, jm, djm);
    const long double c = std::cos(nu * kPiL);
    const long double s = std::sin(nu * kPiL);
    r.y = (r.j * c - jm) / s;
    r.dy = (r.dj * c - djm) / s;
    return r;
}

// Hankel expansion H = sqrt(2/(pi x)) (P + iQ) exp(i chi), chi = x - (nu/2 + 1/4) pi.
struct Hankel {
    long double p, q, dp, dq;
};

Hankel hankel_pq(double nu, double x) {
    const long double mu = 4.0L * nu * nu;
    const long double inv = 1.0L / x;
    Hankel h{1.0L, 0.0L, 0.0L, 0.0L};
    long double a = 1.0L;  // a_k / x^k
    long double prev = 1.0L;
    for (int k = 1; k < 200; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        a *= (mu - odd * odd) * inv / (8.0L * k);
        const long double mag = std::fabs(a);
        if (mag == 0.0L) break;
        if (mag > prev) break;  // asymptotic series starts to diverge
        prev = mag;
        const int m = k / 2;
        const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
        if (k % 2 == 0) {
            h.p += sign * a;
            h.dp -= sign * a * k * inv;
        } else {
            h.q += sign * a;
            h.dq -= sign * a * k * inv;
        }
        if (mag < 1e-21L) break;
    }
    return h;
}

JyL asymptotic(double nu, double x) {
    const Hankel h = hankel_pq(nu, x);
    const long double xl = x;
    const long double chi = xl - (0.5L * nu + 0.25L) * kPiL;
    const long double c = std::cos(chi);
    const long double s = std::sin(chi);
    const long double amp = std::sqrt(2.0L / (kPiL * xl));
    JyL r{};
    r.j = amp * (h.p * c - h.q * s);
    r.y = amp * (h.p * s + h.q * c);
    // H' = amp * [(P + iQ)(i - 1/(2x)) + (P' + iQ')] e^{i chi}
    const long double rr = -h.q - h.p / (2.0L * xl) + h.dp;
    const long double ri = h.p - h.q / (2.0L * xl) + h.dq;
    r.dj = amp * (rr * c - ri * s);
    r.dy = amp * (rr * s + ri * c);
    return r;
}

BesselValues to_double(const JyL& r) {
    return {static_cast<double>(r.j), static_cast<double>(r.y), static_cast<double>(r.dj),
            static_cast<double>(r.dy)};
}

}  // namespace

BesselValues bessel_jy_series(double nu, double x) {
    check_args(nu, x);
    return to_double(series(nu, x));
}

BesselValues bessel_jy_asymptotic(double nu, double x) {
    check_args(nu, x);
    return to_double(asymptotic(nu, x));
}

BesselValues bessel_jy(double nu, double x) {
    check_args(nu, x);
    return to_double(x < kBesselSwitchover ? series(nu, x) : asymptotic(nu, x));
}

double bessel_j(double nu, double x) { return bessel_jy(nu, x).j; }

double bessel_y(double nu, double x) { return bessel_jy(nu, x).y; }

HankelPolar hankel_polar(double nu, double x) {
    check_args(nu, x);
    HankelPolar out;
    if (x < kBesselSwitchover) {
        const JyL r = series(nu, x);
        out.amplitude = std::hypot(r.j, r.y);
        out.linear = 0.0L;
        out.offset = std::atan2(r.y, r.j);
        return out;
    }
    const Hankel h = hankel_pq(nu, x);
    out.amplitude = std::sqrt(2.0L / (kPiL * x)) * std::hypot(h.p, h.q);
    out.linear = x;
    out.offset = -(0.5L * nu + 0.25L) * kPiL + std::atan2(h.q, h.p);
    return out;
}

}  // namespace weber_orr
