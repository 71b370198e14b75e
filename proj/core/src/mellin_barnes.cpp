#include <cmath>
#include <vector>

#include "weber_orr/errors.hpp"
#include "weber_orr/mellin_barnes.hpp"
#include "weber_orr/specfun.hpp"

namespace weber_orr {
namespace {

const cplx kI(0.0, 1.0);

// Bernoulli numbers B_0..B_n (B_1 = -1/2).
std::vector<double> bernoulli_numbers(int n) {
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        double binom = 1.0;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / (m + 1);
    }
    return b;
}

cplx bernoulli_poly(int n, cplx x, const std::vector<double>& b) {
    cplx acc(0.0);
    double binom = 1.0;  // C(n, j)
    for (int j = 0; j <= n; ++j) {
        acc += binom * b[j] * std::pow(x, n - j);
        binom = binom * (n - j) / (j + 1);
    }
    return acc;
}

// Coefficients c_k of log Gamma(z + num0) + log Gamma(z + num1)
// - log Gamma(z + den0) - log Gamma(z + den1) - P log z  ~  sum_k c_k z^{-k}.
std::vector<cplx> ratio_log_coeffs(const std::array<cplx, 2>& num, const std::array<cplx, 2>& den, int order,
                                   const std::vector<double>& b) {
    std::vector<cplx> c(order + 1, 0.0);
    for (int k = 1; k <= order; ++k) {
        cplx diff = bernoulli_poly(k + 1, num[0], b) + bernoulli_poly(k + 1, num[1], b) -
                    bernoulli_poly(k + 1, den[0], b) - bernoulli_poly(k + 1, den[1], b);
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        c[k] = sign * diff / static_cast<double>(k * (k + 1));
    }
    return c;
}

}  // namespace

SlaterIntegrand SlaterIntegrand::make(double nu, cplx s, cplx w) {
    SlaterIntegrand f;
    f.a = {(nu + w + 1.0) / 2.0, (w + 1.0 - nu) / 2.0};
    f.b = {(nu - s - 1.0) / 2.0, -(1.0 + s + nu) / 2.0};
    f.d = {cplx(1.0 + nu / 2.0), cplx(1.0 - nu / 2.0)};
    f.e = {cplx(nu / 2.0), cplx(-nu / 2.0)};
    return f;
}

cplx SlaterIntegrand::operator()(cplx t) const {
    const cplx lower[4] = {d[0] - t, d[1] - t, e[0] + t, e[1] + t};
    for (const cplx& z : lower) {
        if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) return 0.0;
    }
    // One exponential: the factors separately over- and underflow once |Im t| passes about 110.
    const cplx lg = log_gamma(a[0] - t) + log_gamma(a[1] - t) + log_gamma(b[0] + t) + log_gamma(b[1] + t) -
                    log_gamma(lower[0]) - log_gamma(lower[1]) - log_gamma(lower[2]) - log_gamma(lower[3]);
    return std::exp(lg);
}

cplx SlaterIntegrand::exponent() const { return a[0] + a[1] + b[0] + b[1] - d[0] - d[1] - e[0] - e[1]; }

cplx SlaterIntegrand::tail(double gamma, double T, int order) const {
    static const std::vector<double> bern = bernoulli_numbers(40);
    if (order < 1 || order > 38) throw ParameterError("SlaterIntegrand::tail: order out of range");
    // Group in +t with exponent p1, group in -t with exponent p2.
    const cplx p1 = b[0] + b[1] - e[0] - e[1];
    const cplx p2 = a[0] + a[1] - d[0] - d[1];
    const std::vector<cplx> c1 = ratio_log_coeffs(b, e, order, bern);
    const std::vector<cplx> c2 = ratio_log_coeffs(a, d, order, bern);
    // Series in 1/t: exponent sum_k C_k t^{-k}, C_k = c1_k + (-1)^k c2_k.
    std::vector<cplx> C(order + 1, 0.0);
    for (int k = 1; k <= order; ++k) C[k] = c1[k] + ((k % 2 == 0) ? 1.0 : -1.0) * c2[k];
    std::vector<cplx> e_n(order + 1, 0.0);
    e_n[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        cplx acc(0.0);
        for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * C[k] * e_n[n - k];
        e_n[n] = acc / static_cast<double>(n);
    }
    // (-t)^{p2} = t^{p2} exp(-+ i pi p2) above / below the real axis; each
    // power integrates in closed form along the line.
    const cplx p = p1 + p2;
    const cplx up = gamma + kI * T;
    const cplx down = gamma - kI * T;
    cplx upper(0.0);
    cplx lower(0.0);
    for (int n = 0; n <= order; ++n) {
        const cplx q1 = p - static_cast<double>(n) + 1.0;
        upper += e_n[n] * kI * std::pow(up, q1) / q1;
        lower += e_n[n] * std::pow(down, q1) / (kI * q1);
    }
    const cplx rot = std::exp(-kI * kPi * p2);
    return (rot * upper + lower / rot) / (2.0 * kPi);
}

QuadratureResult slater_contour(double nu, cplx s, cplx w, double gamma, double tol) {
    const SlaterIntegrand f = SlaterIntegrand::make(nu, s, w);
    if (!(f.exponent().real() < -1.0)) {
        throw ConstraintError("Re(w - s) < 1", "contour integrand does not decay along the line");
    }
    VerticalLineOptions o;
    o.tail = [&](double T) { return f.tail(gamma, T); };
    o.t_max = 4096.0;
    return integrate_vertical_line(f, VerticalLine{gamma, 32.0}, tol, o);
}

ResidueSum slater_residue_sum(double nu, cplx s, cplx w, double tol) {
    const SlaterIntegrand f = SlaterIntegrand::make(nu, s, w);
    const cplx p = f.exponent();
    if (!(p.real() < -1.0)) throw ConstraintError("Re(w - s) < 1", "residue series does not converge");
    constexpr int kLevels = 8;
    constexpr int kFirst = 32;
    const int k_max = kFirst << (kLevels - 1);

    std::vector<cplx> partial(kLevels, 0.0);
    for (int fam = 0; fam < 2; ++fam) {
        const cplx B = f.b[fam];
        const cplx Bo = f.b[1 - fam];
        cplx term = std::exp(log_gamma(f.a[0] + B) + log_gamma(f.a[1] + B) + log_gamma(Bo - B)) *
                    reciprocal_gamma(f.d[0] + B) * reciprocal_gamma(f.d[1] + B) * reciprocal_gamma(f.e[0] - B) *
                    reciprocal_gamma(f.e[1] - B);
        cplx sum(0.0);
        int level = 0;
        for (int k = 0; k < k_max; ++k) {
            sum += term;
            if (k + 1 == (kFirst << level)) partial[level++] += sum;
            const double kk = static_cast<double>(k);
            term *= -1.0 / (kk + 1.0) * (f.a[0] + B + kk) * (f.a[1] + B + kk) / (Bo - B - kk - 1.0) *
                    (f.e[0] - B - kk - 1.0) * (f.e[1] - B - kk - 1.0) / ((f.d[0] + B + kk) * (f.d[1] + B + kk));
        }
    }
    // Partial sums behave like S + sum_j c_j K^{p + 1 - j}.
    std::vector<cplx> row = partial;
    ResidueSum out;
    out.columns = k_max;
    out.value = row.back();
    out.error_estimate = std::abs(row[kLevels - 1] - row[kLevels - 2]);
    for (int m = 0; m + 1 < kLevels; ++m) {
        const cplx factor = std::pow(2.0, p + 1.0 - static_cast<double>(m));
        std::vector<cplx> next(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next[i] = (row[i + 1] - factor * row[i]) / (1.0 - factor);
        const double change = std::abs(next.back() - row.back());
        if (change > out.error_estimate && m > 1) break;
        out.value = next.back();
        out.error_estimate = next.size() > 1 ? std::abs(next.back() - next[next.size() - 2]) : change;
        row = std::move(next);
        if (out.error_estimate < tol * std::abs(out.value)) break;
    }
    return out;
}

cplx slater_closed_form(double nu, cplx s, cplx w) {
    const cplx d = (w - s) / 2.0;
    const cplx lg = log_gamma((1.0 + s - w) / 2.0) + log_gamma(d) + log_gamma(d - nu) + log_gamma(d + nu);
    return std::pow(2.0, s - w + 1.0) * std::cos(kPi * nu) / std::sqrt(kPi) * std::exp(lg) *
           reciprocal_gamma((1.0 + s) / 2.0) * reciprocal_gamma((1.0 - s) / 2.0) * reciprocal_gamma((1.0 + w) / 2.0) *
           reciprocal_gamma((1.0 - w) / 2.0);
}

QuadratureResult mb_modulus(double nu, double z, double gamma, double tol) {
    if (!(z > 0.0)) throw DomainError("mb_modulus: argument must be positive");
    const double log_z = std::log(z);
    auto F = [&](cplx s) {
        return std::exp(log_gamma((1.0 - s) / 2.0) + log_gamma(s / 2.0) + log_gamma(s / 2.0 - nu) +
                        log_gamma(s / 2.0 + nu) - s * log_z);
    };
    QuadratureResult r = integrate_vertical_line(F, VerticalLine{gamma, 16.0}, tol);
    const double pre = std::cos(kPi * nu) / (kPi * kPi * std::sqrt(kPi));
    r.value *= pre;
    r.error_estimate *= pre;
    return r;
}

}  // namespace weber_orr
