#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "weber_orr/errors.hpp"
#include "weber_orr/quad.hpp"
#include "weber_orr/specfun.hpp"

using namespace weber_orr;

TEST(Adaptive, SmoothIntegrand) {
    const auto r = integrate_adaptive([](double x) { return cplx(std::sin(x), 0.0); }, 0.0, 1.0, 1e-13);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), 1.0 - std::cos(1.0), 1e-14);
    EXPECT_GT(r.evaluations, 0);
}

TEST(Adaptive, KinkWithBreakpoint) {
    AdaptiveOptions opts;
    opts.breakpoints = {0.3};
    const auto r = integrate_adaptive([](double x) { return cplx(std::abs(x - 0.3), 0.0); }, 0.0, 1.0, 1e-12, opts);
    EXPECT_NEAR(r.value.real(), (0.09 + 0.49) / 2.0, 1e-14);
}

TEST(Adaptive, ComplexValues) {
    const auto r = integrate_adaptive([](double x) { return std::exp(cplx(0.0, x)); }, 0.0, kPi, 1e-13);
    EXPECT_NEAR(r.value.real(), 0.0, 1e-13);
    EXPECT_NEAR(r.value.imag(), 2.0, 1e-13);
}

TEST(Adaptive, ErrorEstimateBoundsError) {
    const auto r = integrate_adaptive([](double x) { return cplx(std::exp(-x * x), 0.0); }, -3.0, 3.0, 1e-6);
    EXPECT_LE(std::abs(r.value.real() - std::sqrt(kPi) * std::erf(3.0)), std::max(r.error_estimate, 1e-15) * 10.0);
}

TEST(DoubleExponential, AlgebraicEndpointSingularity) {
    const auto r = integrate_de([](double x) { return cplx(std::pow(x, -0.9), 0.0); }, 0.0, 1.0, 1e-10);
    EXPECT_NEAR(r.value.real(), 10.0, 1e-8);
}

TEST(DoubleExponential, EndpointDistancesAvoidCancellation) {
    // (1 - x)^{-1/2} on [0, 1] from the exact distance to the upper end.
    EndpointIntegrand f = [](double, double, double dist_hi) { return cplx(1.0 / std::sqrt(dist_hi), 0.0); };
    const auto r = integrate_de(f, 0.0, 1.0, 1e-12);
    EXPECT_NEAR(r.value.real(), 2.0, 1e-11);
}

TEST(DoubleExponential, LogSingularity) {
    const auto r = integrate_de([](double x) { return cplx(std::log(x), 0.0); }, 0.0, 1.0, 1e-12);
    EXPECT_NEAR(r.value.real(), -1.0, 1e-12);
}

TEST(DoubleExponential, NonIntegrableEndpointThrows) {
    EXPECT_THROW(integrate_de([](double x) { return cplx(1.0 / x, 0.0); }, 0.0, 1.0, 1e-10), DivergenceError);
}

TEST(ExpSinh, SingularAtOriginAlgebraicTail) {
    EndpointIntegrand f = [](double y, double, double) { return cplx(1.0 / (std::sqrt(y) * (1.0 + y)), 0.0); };
    const auto r = integrate_de_semi_infinite(f, 0.0, 1e-12);
    EXPECT_NEAR(r.value.real(), kPi, 1e-11);
}

TEST(ExpSinh, ShiftedLowerLimit) {
    EndpointIntegrand f = [](double x, double, double) { return cplx(std::exp(-x), 0.0); };
    const auto r = integrate_de_semi_infinite(f, 2.0, 1e-12);
    EXPECT_NEAR(r.value.real(), std::exp(-2.0), 1e-14);
}

TEST(SemiInfinite, ExponentialAndAlgebraicTails) {
    auto e = integrate_semi_infinite([](double x) { return cplx(std::exp(-x), 0.0); }, 1.0, 1e-12);
    EXPECT_NEAR(e.value.real(), std::exp(-1.0), 1e-13);
    auto p = integrate_semi_infinite([](double x) { return cplx(1.0 / (x * x * x), 0.0); }, 1.0, 1e-10);
    EXPECT_NEAR(p.value.real(), 0.5, 1e-8);
}

TEST(SemiInfinite, DivergentTailThrows) {
    EXPECT_THROW(integrate_semi_infinite([](double x) { return cplx(1.0 / std::sqrt(x), 0.0); }, 1.0, 1e-8),
                 DivergenceError);
}

TEST(Oscillatory, Dirichlet) {
    TruncationPolicy policy;
    const auto r = integrate_oscillatory([](double x) { return cplx(x == 0.0 ? 1.0 : std::sin(x) / x, 0.0); }, 1.0, 0.0,
                                         1e-10, policy);
    EXPECT_NEAR(r.value.real(), kPi / 2.0, 1e-9);
}

TEST(Oscillatory, SlowAlgebraicDecay) {
    TruncationPolicy policy;
    const auto r = integrate_oscillatory([](double x) { return cplx(std::sin(x) / std::sqrt(x), 0.0); }, 1.0, 0.0,
                                         1e-10, policy);
    EXPECT_NEAR(r.value.real(), std::sqrt(kPi / 2.0), 1e-8);
}

TEST(Oscillatory, FixedCutoffWithTail) {
    // int_0^inf cos(2x) e^{-x/10}: the tail after N is given analytically.
    const double k = 0.1;
    auto f = [k](double x) { return cplx(std::cos(2.0 * x) * std::exp(-k * x), 0.0); };
    auto antideriv = [k](double x) {
        return std::exp(-k * x) * (2.0 * std::sin(2.0 * x) - k * std::cos(2.0 * x)) / (4.0 + k * k);
    };
    TruncationPolicy policy;
    policy.n_cut = 50.0 * kPi;
    OscillatoryOptions opts;
    opts.phase = kPi / 2.0;
    opts.fixed_cutoff = true;
    opts.tail = [&](double n) { return cplx(-antideriv(n), 0.0); };
    const auto r = integrate_oscillatory(f, 2.0, 0.0, 1e-12, policy, opts);
    EXPECT_NEAR(r.value.real(), k / (4.0 + k * k), 1e-10);
}

TEST(Oscillatory, RejectsEvenPanels) {
    OscillatoryOptions opts;
    opts.half_periods_per_panel = 2;
    EXPECT_THROW(integrate_oscillatory([](double) { return cplx(0.0, 0.0); }, 1.0, 0.0, 1e-8, {}, opts), ParameterError);
}

TEST(EulerAverage, AcceleratesAlternatingSeries) {
    std::vector<cplx> sums;
    double s = 0.0;
    for (int k = 1; k <= 12; ++k) {
        s += (k % 2 ? 1.0 : -1.0) / k;
        sums.emplace_back(s, 0.0);
    }
    const double plain = std::abs(sums.back().real() - std::log(2.0));
    const double accel = std::abs(euler_average(sums, 8).real() - std::log(2.0));
    EXPECT_LT(accel, 1e-6);
    EXPECT_LT(accel, plain * 1e-3);
}

TEST(VerticalLine, InverseMellinOfGamma) {
    // (1/2pi) int Gamma(mu + i tau) dtau = e^{-1}
    const auto r = integrate_vertical_line([](cplx s) { return gamma_complex(s); }, VerticalLine{0.5, 8.0}, 1e-12);
    EXPECT_NEAR(r.value.real(), std::exp(-1.0), 1e-12);
    EXPECT_NEAR(r.value.imag(), 0.0, 1e-12);
}

TEST(VerticalLine, AlgebraicDecayWithTail) {
    // F(s) = 1 / (1 + tau^2) on the line, tail (1/pi) atan(1/T) approx 1/(pi T).
    VerticalLineOptions opts;
    opts.tail = [](double T) { return cplx((kPi / 2.0 - std::atan(T)) / kPi, 0.0); };
    const auto r = integrate_vertical_line(
        [](cplx s) {
            const double tau = s.imag();
            return cplx(1.0 / (1.0 + tau * tau), 0.0);
        },
        VerticalLine{0.0, 4.0}, 1e-10, opts);
    EXPECT_NEAR(r.value.real(), 0.5, 1e-9);
}

TEST(VerticalLine, NonDecayingThrows) {
    VerticalLineOptions opts;
    opts.t_max = 1e3;
    EXPECT_THROW(integrate_vertical_line([](cplx) { return cplx(1.0, 0.0); }, VerticalLine{0.0, 4.0}, 1e-8, opts),
                 TruncationError);
}
