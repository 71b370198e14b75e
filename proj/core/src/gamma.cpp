#include <array>
#include <cmath>
#include <complex>

#include "weber_orr/errors.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

using lcplx = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617640L;

// Lanczos approximation, g = 7, n = 9.
constexpr long double kLanczosG = 7.0L;
constexpr std::array<long double, 9> kLanczos = {
    0.99999999999980993227684700473478L,  676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L, 771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,     12.507343278686904814458936853L,
    -0.13857109526572011689554707L,       9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

bool is_pole(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

lcplx lanczos_log_gamma(lcplx z) {
    z -= 1.0L;
    lcplx sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (z + static_cast<long double>(i));
    const lcplx t = z + kLanczosG + 0.5L;
    return kHalfLog2Pi + (z + 0.5L) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) for Im z >= 0, modulo 2 pi i.
lcplx log_sin_pi(lcplx z) {
    const long double n = std::nearbyint(z.real());
    const lcplx r(z.real() - n, z.imag());
    // sin(pi r) = (i/2) exp(-i pi r) (1 - exp(2 i pi r)); the bracket is
    // computed through expm1 so it stays accurate near r = 0.
    const long double a = -2.0L * kPiL * r.imag();
    const long double b = 2.0L * kPiL * r.real();
    const long double sh = std::sin(0.5L * b);
    const lcplx em1(std::expm1(a) * std::cos(b) - 2.0L * sh * sh, std::exp(a) * std::sin(b));
    lcplx out = lcplx(0.0L, -kPiL) * r + std::log(-em1) + std::log(lcplx(0.0L, 0.5L));
    if (std::fmod(std::fabs(n), 2.0L) == 1.0L) out += lcplx(0.0L, kPiL);
    return out;
}

lcplx log_gamma_upper(lcplx z) {
    if (z.real() < 0.5L) {
        return std::log(kPiL) - log_sin_pi(z) - lanczos_log_gamma(1.0L - z);
    }
    return lanczos_log_gamma(z);
}

lcplx log_gamma_l(cplx z) {
    const lcplx zl(z.real(), z.imag());
    if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(zl)));
    return log_gamma_upper(zl);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (is_pole(z)) throw PoleError("gamma: pole at non-positive integer");
    const lcplx v = log_gamma_l(z);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

cplx gamma_complex(cplx z) {
    if (is_pole(z)) throw PoleError("gamma: pole at non-positive integer");
    const lcplx v = std::exp(log_gamma_l(z));
    if (z.imag() == 0.0) return {static_cast<double>(v.real()), 0.0};
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

cplx reciprocal_gamma(cplx z) {
    if (is_pole(z)) return {0.0, 0.0};
    const lcplx v = std::exp(-log_gamma_l(z));
    if (z.imag() == 0.0) return {static_cast<double>(v.real()), 0.0};
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace weber_orr
