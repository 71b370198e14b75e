#!/usr/bin/env python3
"""Regenerates oracle_values.hpp from mpmath at 30 digits.

    python3 gen_oracles.py > oracle_values.hpp
"""
import sys

import mpmath as mp

mp.mp.dps = 30


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=1))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-1, max_fixed=1)


def weber_kernel(nu, al, be):
    return mp.besselj(nu, al) * mp.bessely(nu, be) - mp.bessely(nu, al) * mp.besselj(nu, be)


# Q^{-nu}_deg(z), z > 1, through its 2F1 in 1/z^2; agrees with mp.legenq(deg, -nu, z, type=3)
# wherever the latter converges and is much faster inside quadratures.
def q_minus(nu, deg, z):
    return q_minus_near_one(nu, deg, mp.mpf(z) - 1)


# Same with y = z - 1 given. For y < 1 it goes through Legendre P, whose 2F1 argument -y/2 is exact;
# the 1/z^2 form loses about -log10(y) digits there, and nodes at y ~ 1e-200 still count.
def q_minus_near_one(nu, deg, y):
    mu = -mp.mpf(nu)
    l = mp.mpc(deg)
    y = mp.mpf(y)
    if y < 1 and nu != 0:
        def p(m):
            return ((2 + y) / y) ** (m / 2) / mp.gamma(1 - m) * mp.hyp2f1(-l, l + 1, 1 - m, -y / 2)
        return (mp.exp(1j * mu * mp.pi) * mp.pi / (2 * mp.sin(mu * mp.pi))
                * (p(mu) - mp.gamma(l + mu + 1) / mp.gamma(l - mu + 1) * p(-mu)))
    z = 1 + y
    return (mp.exp(1j * mu * mp.pi) * mp.sqrt(mp.pi) * mp.gamma(l + mu + 1) * (y * (2 + y)) ** (mu / 2)
            / (2 ** (l + 1) * mp.gamma(l + 1.5) * z ** (l + mu + 1))
            * mp.hyp2f1((l + mu + 2) / 2, (l + mu + 1) / 2, l + 1.5, 1 / (z * z)))


# int_0^c f(y) dy for f ~ y^{p}, p > -1 + 1/k, as a smooth integral in y = c t^k.
def singular_head(f, c, k=40):
    return mp.quad(lambda t: f(c * t ** k) * c * k * t ** (k - 1), [0, 0.5, 0.8, 0.9, 0.95, 1])


out = []


def emit(line):
    out.append(line)
    if line.startswith("inline constexpr"):
        print(line.split()[3], file=sys.stderr, flush=True)
emit("// Generated by gen_oracles.py (mpmath, 30 digits). Do not edit.")
emit("#pragma once\n")
emit("#include <complex>\n")
emit("namespace oracle {\n")
emit("using cplx = std::complex<double>;\n")

emit("struct ComplexPoint { cplx z; cplx value; };")
emit("inline constexpr ComplexPoint kGamma[] = {")
for z in [mp.mpc(0.5, 0), mp.mpc(3.7, 0), mp.mpc(-2.5, 0), mp.mpc(0.3, 4), mp.mpc(-0.25, 16),
          mp.mpc(2, -7.5), mp.mpc(-3.3, 0.2), mp.mpc(12.5, 30)]:
    emit("    {%s, %s}," % (c(z), c(mp.gamma(z))))
emit("};\n")

emit("inline constexpr ComplexPoint kLogGamma[] = {")
for z in [mp.mpc(0.3, 200), mp.mpc(-0.25, 1000), mp.mpc(50, -3), mp.mpc(1e-3, 0.1)]:
    emit("    {%s, %s}," % (c(z), c(mp.loggamma(z))))
emit("};\n")

emit("struct BesselPoint { double nu; double x; double j; double y; };")
emit("inline constexpr BesselPoint kBessel[] = {")
for nu in [0.0, 0.1, 0.25, 0.4, 0.5]:
    for x in [1e-3, 0.5, 3.0, 16.5, 17.5, 40.0, 250.0]:
        emit("    {%s, %s, %s, %s}," % (r(nu), r(x), r(mp.besselj(nu, x)), r(mp.bessely(nu, x))))
emit("};\n")

emit("struct Hyp2F1Point { cplx a; cplx b; cplx c; double z; cplx value; };")
emit("inline constexpr Hyp2F1Point kHyp2F1[] = {")
for a, b, cc, z in [(0.5, 0.25, 1.5, 0.3), (mp.mpc(0.2, 1), 0.7, 1.9, 0.9), (1.1, mp.mpc(-0.3, 0.5), 2.6, 0.8),
                    (0.3, 0.6, mp.mpc(1.2, 2), 0.97), (0.25, 0.75, 1.5, 1.0), (0.1, 0.2, 0.5, 0.5)]:
    emit("    {%s, %s, %s, %s, %s}," % (c(a), c(b), c(cc), r(z), c(mp.hyp2f1(a, b, cc, z))))
emit("};\n")

emit("struct LegendrePoint { double nu; cplx deg; double z; cplx value; };")
emit("inline constexpr LegendrePoint kLegendreQ[] = {")
for nu, deg, z in [(0.25, mp.mpc(-0.7, 0), 1.5), (0.1, mp.mpc(-0.75, 1), 3.0), (0.4, mp.mpc(-0.8, 0), 1.01),
                   (0.25, mp.mpc(-0.6, -2), 1.6666666666666667), (0.0, mp.mpc(-0.5, 0), 2.0),
                   (0.3, mp.mpc(-1.2, 0.5), 1.2), (0.2, mp.mpc(-0.6, 0), 41.0), (0.5, mp.mpc(-0.7, 0), 1.25)]:
    emit("    {%s, %s, %s, %s}," % (r(nu), c(deg), r(z), c(q_minus(nu, deg, z))))
emit("};\n")

emit("struct KernelPoint { double nu; double alpha; double beta; double value; };")
emit("inline constexpr KernelPoint kWeberKernel[] = {")
for nu, al, be in [(0.25, 3.0, 1.0), (0.1, 0.5, 0.2), (0.4, 30.0, 25.0), (0.25, 1e-4, 5e-5), (0.25, 2.0, 2.0000001),
                   (0.1, 120.0, 60.0), (0.4, 18.0, 3.0)]:
    emit("    {%s, %s, %s, %s}," % (r(nu), r(al), r(be), r(weber_kernel(nu, al, be))))
emit("};\n")

emit("struct ModulusPoint { double nu; double x; double value; };")
emit("inline constexpr ModulusPoint kModulusSq[] = {")
for nu in [0.1, 0.25, 0.4]:
    for x in [0.05, 0.5, 1.0, 2.0, 10.0, 100.0]:
        emit("    {%s, %s, %s}," % (r(nu), r(x), r(mp.besselj(nu, x) ** 2 + mp.bessely(nu, x) ** 2)))
emit("};\n")


# int_0^inf C(x t, a t) t^{-s} dt split at T. Beyond T the kernel is (H(at) conj H(xt) - conj)/(2i) with
# the Hankel series H(z) ~ sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)} sum_k i^k c_k z^{-k}; each term
# integrates to an incomplete Gamma function. mp.quadosc only reaches about 1e-6 on these integrands.
def hankel_coeffs(nu, count):
    c = [mp.mpf(1)]
    for k in range(1, count):
        c.append(c[-1] * (4 * nu ** 2 - (2 * k - 1) ** 2) / (8 * k))
    return c


def kernel_mellin_tail(nu, s, x, a, T, terms=14):
    om = x - a
    c = hankel_coeffs(mp.mpf(nu), terms)
    total = 0
    for j in range(terms):
        for k in range(terms - j):
            p = -s - j - k
            coef = c[j] * c[k] * mp.mpf(x) ** (-j) * mp.mpf(a) ** (-k)
            down = (1j * om) ** (-p) * mp.gammainc(p, 1j * om * T)
            up = (-1j * om) ** (-p) * mp.gammainc(p, -1j * om * T)
            total += coef * ((-1j) ** j * (1j) ** k * down - (1j) ** j * (-1j) ** k * up) / 2j
    return total * 2 / (mp.pi * mp.sqrt(mp.mpf(x) * a))


def kernel_mellin_lhs(nu, s, x, a, T=60):
    f = lambda t: weber_kernel(nu, x * t, a * t) * t ** (-s)
    zeros = [k * mp.pi / (x - a) for k in range(1, int(T * (x - a) / mp.pi) + 1)]
    return mp.quad(f, [0] + zeros + [T]) + kernel_mellin_tail(nu, s, x, a, T)


emit("struct KernelMellinPoint { double nu; cplx s; double x; double a; cplx value; };")
emit("inline constexpr KernelMellinPoint kKernelMellin[] = {")
for nu, s, x, a in [(0.25, -0.3, 2.0, 1.0), (0.1, mp.mpc(-0.5, 2), 3.0, 1.0), (0.4, -0.6, 1.5, 1.0)]:
    emit("    {%s, %s, %s, %s, %s}," % (r(nu), c(s), r(x), r(a), c(kernel_mellin_lhs(nu, mp.mpc(s), x, a))))
emit("};\n")


# Forward Weber map of g(xi) = xi^{1/2} e^{-xi}.
def weber_apply_sqrt_exp(nu, a, x):
    f = lambda t: weber_kernel(nu, x * t, a * t) * mp.sqrt(t) * mp.exp(-t)
    return mp.quad(f, [0, 1, 5, 20, 60, mp.inf])


emit("struct WeberApplyPoint { double nu; double a; double x; double value; };")
emit("// g(xi) = xi^{1/2} e^{-xi}")
emit("inline constexpr WeberApplyPoint kWeberApplySqrtExp[] = {")
for nu, a, x in [(0.25, 1.0, 2.0), (0.25, 1.0, 0.5), (0.1, 2.0, 5.0), (0.4, 1.0, 1.001)]:
    emit("    {%s, %s, %s, %s}," % (r(nu), r(a), r(x), r(weber_apply_sqrt_exp(nu, a, x))))
emit("};\n")


def eq18_rhs(nu, s, w):
    d = (w - s) / 2
    return (mp.mpf(2) ** ((s - w) / 2 - 1) * mp.exp(-2j * nu * mp.pi) * mp.cos(mp.pi * nu) / mp.sqrt(mp.pi)
            * mp.gamma((1 + s - w) / 2) * mp.gamma(d) * mp.gamma(d - nu) * mp.gamma(d + nu)
            * mp.gamma((1 + s) / 2 - nu) * mp.gamma((1 - w) / 2 - nu) / (mp.gamma((1 - s) / 2) * mp.gamma((1 + w) / 2)))


def eq18_lhs(nu, s, w):
    f = lambda y: y ** ((w - s) / 2 - 1) * q_minus_near_one(nu, -(w + 1) / 2, y) * q_minus_near_one(nu, (s - 1) / 2, y)
    return singular_head(f, 1) + mp.quad(f, [1, 10, 100, 1000, mp.inf])


emit("struct Eq18Point { double nu; cplx s; cplx w; cplx lhs; cplx rhs; };")
emit("inline constexpr Eq18Point kEq18[] = {")
for nu, s, w in [(0.1, mp.mpc(-0.9), mp.mpc(-0.6)), (0.2, mp.mpc(-1.1, 1), mp.mpc(-0.6, 1))]:
    emit("    {%s, %s, %s, %s, %s}," % (r(nu), c(s), c(w), c(eq18_lhs(nu, s, w)), c(eq18_rhs(nu, s, w))))
emit("};\n")


def slater_closed(nu, s, w):
    d = (w - s) / 2
    return (mp.mpf(2) ** (s - w + 1) * mp.cos(mp.pi * nu) / mp.sqrt(mp.pi)
            * mp.gamma((1 + s - w) / 2) * mp.gamma(d) * mp.gamma(d - nu) * mp.gamma(d + nu)
            / (mp.gamma((1 + s) / 2) * mp.gamma((1 - s) / 2) * mp.gamma((1 + w) / 2) * mp.gamma((1 - w) / 2)))


def slater_contour(nu, s, w, g):
    def f(t):
        tau = g + 1j * t
        num = (mp.gamma((nu + w + 1) / 2 - tau) * mp.gamma((w + 1 - nu) / 2 - tau)
               * mp.gamma((nu - s - 1) / 2 + tau) * mp.gamma(tau - (1 + s + nu) / 2))
        den = mp.gamma(1 + nu / 2 - tau) * mp.gamma(1 - nu / 2 - tau) * mp.gamma(tau + nu / 2) * mp.gamma(tau - nu / 2)
        return num / den
    return mp.quad(f, [-mp.inf, -10, -1, 0, 1, 10, mp.inf]) / (2 * mp.pi)


emit("struct SlaterPoint { double nu; cplx s; cplx w; double gamma; cplx contour; cplx closed_form; };")
emit("inline constexpr SlaterPoint kSlater[] = {")
for nu, s, w in [(0.1, mp.mpc(-0.9), mp.mpc(-0.55)), (0.1, mp.mpc(-0.9, 1), mp.mpc(-0.55, 1))]:
    g = ((1 + s.real + nu) / 2 + (1 + w.real - nu) / 2) / 2
    emit("    {%s, %s, %s, %s, %s, %s}," % (r(nu), c(s), c(w), r(g), c(slater_contour(nu, s, w, g)),
                                            c(slater_closed(nu, s, w))))
emit("};\n")


def tail_in(nu, s, w, a, n):
    eps = 2 * a * a / (n * n - a * a)
    f = lambda y: y ** ((w - s) / 2 - 1) * q_minus_near_one(nu, -(w + 1) / 2, y) * q_minus_near_one(nu, (s - 1) / 2, y)
    return mp.mpf(2) ** (s - w - 1) * a ** (s - w) * singular_head(f, eps)


emit("struct TailPoint { double nu; cplx s; cplx w; double a; double n_cut; cplx value; };")
emit("inline constexpr TailPoint kTailIn[] = {")
for nu, s, w, a, n in [(0.3, mp.mpc(-1.4), mp.mpc(-0.55), 1.0, 20.0), (0.25, mp.mpc(-1.2), mp.mpc(-0.6), 2.0, 40.0)]:
    emit("    {%s, %s, %s, %s, %s, %s}," % (r(nu), c(s), c(w), r(a), r(n), c(tail_in(nu, s, w, a, n))))
emit("};\n")

emit("}  // namespace oracle")
print("\n".join(out))
