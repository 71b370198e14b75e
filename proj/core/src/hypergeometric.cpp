#include <cmath>
#include <complex>

#include "weber_orr/errors.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

using lcplx = std::complex<long double>;

bool nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

cplx series(cplx a, cplx b, cplx c, double z) {
    const lcplx al(a.real(), a.imag()), bl(b.real(), b.imag()), cl(c.real(), c.imag());
    lcplx term = 1.0L;
    lcplx sum = 1.0L;
    int small = 0;
    for (int k = 0; k < 200000; ++k) {
        const long double kk = k;
        term *= (al + kk) * (bl + kk) / ((cl + kk) * (kk + 1.0L)) * static_cast<long double>(z);
        sum += term;
        if (term == 0.0L) break;
        if (std::abs(term) < 1e-19L * std::abs(sum)) {
            if (++small == 3) break;
        } else {
            small = 0;
        }
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Transformation toward z = 1; d = c - a - b must be away from the integers.
cplx transformed(cplx a, cplx b, cplx c, double z) {
    const cplx d = c - a - b;
    const double w = 1.0 - z;
    const cplx gc = gamma_complex(c);
    const cplx t1 = gc * gamma_complex(d) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b) *
                    series(a, b, 1.0 - d, w);
    const cplx t2 = std::pow(cplx(w, 0.0), d) * gc * gamma_complex(-d) * reciprocal_gamma(a) *
                    reciprocal_gamma(b) * series(c - a, c - b, 1.0 + d, w);
    return t1 + t2;
}

}  // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, double z) {
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("gauss_2f1: argument must satisfy 0 <= z <= 1");
    if (nonpositive_integer(c)) throw ParameterError("gauss_2f1: c is a non-positive integer");
    if (z == 0.0) return {1.0, 0.0};
    const cplx d = c - a - b;
    if (z == 1.0) {
        if (d.real() <= 0.0) throw ParameterError("gauss_2f1: z = 1 requires Re(c - a - b) > 0");
        return gamma_complex(c) * gamma_complex(d) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    }
    if (nonpositive_integer(a) || nonpositive_integer(b) || z <= 0.5) return series(a, b, c, z);

    const double m = std::nearbyint(d.real());
    if (std::abs(d - cplx(m, 0.0)) >= 1e-3) return transformed(a, b, c, z);
    if (z <= 0.9) return series(a, b, c, z);

    // c - a - b close to an integer: the two transformed terms have nearly
    // cancelling poles. Average symmetric perturbations of c and extrapolate
    // the even expansion in the perturbation to zero.
    constexpr double step = 0.01;
    constexpr double weight[3] = {1.5, -0.6, 0.1};
    cplx out(0.0, 0.0);
    for (int j = 1; j <= 3; ++j) {
        const double dl = j * step;
        const cplx avg = 0.5 * (transformed(a, b, c + dl, z) + transformed(a, b, c - dl, z));
        out += weight[j - 1] * avg;
    }
    return out;
}

}  // namespace weber_orr
