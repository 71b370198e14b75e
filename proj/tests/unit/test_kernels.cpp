#include <cmath>

#include <gtest/gtest.h>

#include "oracles/oracle_values.hpp"
#include "weber_orr/errors.hpp"
#include "weber_orr/kernels.hpp"
#include "weber_orr/specfun.hpp"

using namespace weber_orr;

TEST(WeberKernel, MatchesOracle) {
    for (const auto& p : oracle::kWeberKernel) {
        const double got = weber_kernel(p.nu, p.alpha, p.beta);
        // The kernel vanishes on the diagonal; compare against the size of its terms there.
        const double scale = std::max(std::abs(p.value), 1e-12 * (1.0 + std::abs(bessel_y(p.nu, p.alpha))));
        EXPECT_LT(std::abs(got - p.value) / scale, 1e-9) << "alpha=" << p.alpha << " beta=" << p.beta;
    }
}

TEST(WeberKernel, AntisymmetricAndZeroOnDiagonal) {
    for (double al : {0.3, 5.0, 40.0}) {
        for (double be : {0.1, 2.0, 70.0}) {
            EXPECT_DOUBLE_EQ(weber_kernel(0.3, al, be), -weber_kernel(0.3, be, al));
        }
        EXPECT_EQ(weber_kernel(0.3, al, al), 0.0);
    }
}

TEST(WeberKernel, HalfOrderClosedForm) {
    // C_{1/2}(al, be) = -2 sin(al - be) / (pi sqrt(al be))
    for (double al : {0.5, 3.0, 20.0, 150.0}) {
        for (double be : {0.2, 1.0, 18.0}) {
            const double want = -2.0 * std::sin(al - be) / (kPi * std::sqrt(al * be));
            EXPECT_NEAR(weber_kernel(0.5, al, be), want, 1e-12 * (1.0 + 1.0 / std::sqrt(al * be)));
        }
    }
}

TEST(ModulusSq, MatchesOracle) {
    for (const auto& p : oracle::kModulusSq) {
        EXPECT_LT(std::abs(modulus_sq(p.nu, p.x) / p.value - 1.0), 1e-11) << "nu=" << p.nu << " x=" << p.x;
    }
}

TEST(ModulusSq, LargeArgumentLimit) {
    for (double nu : {0.1, 0.4}) {
        EXPECT_NEAR(modulus_sq(nu, 1e4) * kPi * 1e4 / 2.0, 1.0, 1e-7);
    }
}

TEST(KernelTail, AsymptoteApproachesKernel) {
    const double nu = 0.25, x = 2.0, a = 1.0;
    double prev = 1.0;
    for (double xi : {50.0, 200.0, 800.0}) {
        const double k = weber_kernel(nu, x * xi, a * xi);
        const double t = kernel_tail_asymptote(nu, x, a, xi);
        // Next term is O(xi^-2) against O(xi^-1).
        const double err = std::abs(k - t) * xi * xi;
        EXPECT_LT(err, 1.0);
        EXPECT_LT(std::abs(k - t), prev);
        prev = std::abs(k - t);
    }
}

TEST(KernelMellin, MatchesOscillatoryOracle) {
    for (const auto& p : oracle::kKernelMellin) {
        const cplx got = kernel_mellin(p.nu, p.s, p.x, p.a);
        EXPECT_LT(std::abs(got - p.value) / std::abs(p.value), 1e-9) << "nu=" << p.nu << " s=" << p.s;
    }
}

TEST(KernelMellin, AntisymmetricInArguments) {
    const cplx s(-0.4, 0.7);
    EXPECT_LT(std::abs(kernel_mellin(0.2, s, 3.0, 1.0) + kernel_mellin(0.2, s, 1.0, 3.0)), 1e-12);
}

TEST(KernelMellin, FiniteAcrossRemovablePole) {
    // s = 2 nu - 1 is a pole of the Legendre prefactor only.
    const cplx at = kernel_mellin(0.25, cplx(-0.5, 0.0), 2.0, 1.0);
    const cplx near = kernel_mellin(0.25, cplx(-0.5 + 1e-6, 0.0), 2.0, 1.0);
    EXPECT_TRUE(std::isfinite(at.real()));
    EXPECT_LT(std::abs(at - near), 1e-4 * std::abs(at));
}

TEST(KernelMellin, RejectsOutsideStrip) {
    EXPECT_THROW(kernel_mellin(0.25, cplx(1.2, 0.0), 2.0, 1.0), ParameterError);
    EXPECT_THROW(kernel_mellin(0.25, cplx(-0.5, 0.0), 2.0, 0.0), DomainError);
}
