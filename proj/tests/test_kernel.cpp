#include "ahl/kernel.hpp"
#include "ahl/special.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ahl;

namespace {

// Series-expansion oracle for the kernel:
//   P_alpha(z e^{-i theta}) = sum_{k>=0} e^{-ik theta} z^k
//     + sum_{k>=1} gamma_ratio(k) P_{alpha,k}(|z|^2) e^{ik theta} zbar^k,
// truncated when the tail is below 1e-13.
Complex kernel_by_series(const AlphaParam& alpha, Complex z, double theta) {
    const double w = std::norm(z);
    Complex acc{1.0, 0.0};
    Complex zp{1.0, 0.0}, zbp{1.0, 0.0};
    for (int k = 1; k < 4000; ++k) {
        zp *= z * std::polar(1.0, -theta);
        zbp *= std::conj(z) * std::polar(1.0, theta);
        const Complex term = zp + gamma_ratio(k, alpha) * p_alpha_k(alpha, k, w).value * zbp;
        acc += term;
        if (std::abs(term) < 1e-14 && k > 10) break;
    }
    return acc;
}

} // namespace

TEST_CASE("poisson_kernel: value 1 at the origin") {
    for (double a : {-0.5, 0.0, 2.3})
        for (double theta : {0.0, 1.0, 4.5}) {
            const Complex v = poisson_kernel(AlphaParam(a), {0.0, 0.0}, theta);
            CHECK(std::abs(v - Complex{1.0, 0.0}) <= 1e-15);
        }
}

TEST_CASE("poisson_kernel: classical Poisson kernel at alpha = 0") {
    for (double r : {0.1, 0.5, 0.9}) {
        const Complex v = poisson_kernel(AlphaParam(0.0), {r, 0.0}, 0.0);
        CHECK(v.real() == doctest::Approx((1.0 + r) / (1.0 - r)).epsilon(1e-13));
        CHECK(std::abs(v.imag()) <= 1e-13);
    }
}

TEST_CASE("poisson_kernel: matches the series expansion") {
    const AlphaParam a(1.5);
    const Complex z{0.3, 0.2};
    const double theta = std::numbers::pi / 3.0;
    const Complex oracle = kernel_by_series(a, z, theta);
    CHECK(std::abs(poisson_kernel(a, z, theta) - oracle) <= 1e-10);

    std::mt19937_64 rng(3);
    for (double av : {-0.5, 0.0, 1.0, 2.5}) {
        const AlphaParam ap(av);
        for (int i = 0; i < 10; ++i) {
            const Complex zz = oracles::random_disk_point(rng, 0.8);
            const double th = 2.0 * std::numbers::pi * i / 10.0;
            CHECK(std::abs(poisson_kernel(ap, zz, th) - kernel_by_series(ap, zz, th))
                  <= 1e-10);
        }
    }
}

TEST_CASE("poisson_kernel: domain error outside the disk") {
    CHECK_THROWS_AS(poisson_kernel(AlphaParam(0.0), {1.0, 0.0}, 0.0), std::domain_error);
}

TEST_CASE("kernel mean-value: theta-average of the kernel is 1") {
    std::mt19937_64 rng(5);
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const AlphaParam ap(a);
        for (int i = 0; i < 5; ++i) {
            const Complex z = oracles::random_disk_point(rng, 0.85);
            const Complex mean = oracles::periodic_mean(
                [&](double theta) { return poisson_kernel(ap, z, theta); }, 2048);
            CHECK(std::abs(mean - Complex{1.0, 0.0}) <= 1e-10);
        }
    }
}

TEST_CASE("kernel_wirtinger: closed form at z = 0") {
    for (double a : {-0.5, 0.0, 1.7}) {
        for (double theta : {0.0, 0.9, 3.1}) {
            const auto d = kernel_wirtinger(AlphaParam(a), {0.0, 0.0}, theta);
            CHECK(std::abs(d.dz - std::polar(1.0, -theta)) <= 1e-14);
            CHECK(std::abs(d.dzbar - (a + 1.0) * std::polar(1.0, theta)) <= 1e-14);
        }
    }
}

TEST_CASE("kernel_wirtinger: matches finite differences of poisson_kernel") {
    std::mt19937_64 rng(9);
    const double h = 1e-6;
    for (int i = 0; i < 100; ++i) {
        const double a = -0.5 + 3.0 * (i % 7) / 6.0;
        const AlphaParam ap(a);
        const Complex z = oracles::random_disk_point(rng, 0.7);
        const double theta = 2.0 * std::numbers::pi * (i / 100.0);
        const auto [fz, fzbar] = oracles::fd_wirtinger(
            [&](Complex zz) { return poisson_kernel(ap, zz, theta); }, z, h);
        const auto d = kernel_wirtinger(ap, z, theta);
        CHECK(std::abs(d.dz - fz) <= 1e-6);
        CHECK(std::abs(d.dzbar - fzbar) <= 1e-6);
    }
}

TEST_CASE("kernel_wirtinger: zbar-derivative modulus identity") {
    // |d/dzbar P_alpha(z e^{-i theta})| = (alpha+1)/c_alpha * K_alpha / (1-|z|^2)
    std::mt19937_64 rng(13);
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const AlphaParam ap(a);
        for (int i = 0; i < 20; ++i) {
            const Complex z = oracles::random_disk_point(rng, 0.9);
            const double theta = 2.0 * std::numbers::pi * i / 20.0;
            const double lhs = std::abs(kernel_wirtinger(ap, z, theta).dzbar);
            const double rhs = (a + 1.0) / c_alpha(ap)
                             * kernel_modulus(ap, z * std::polar(1.0, -theta))
                             / (1.0 - std::norm(z));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("kernel_wirtinger: z-derivative bound from the Schwarz-Pick proof") {
    // |d/dz P| <= (1/c_alpha) ((alpha+2)|z| + 1)/(1-|z|^2) * K_alpha
    std::mt19937_64 rng(17);
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const AlphaParam ap(a);
        for (int i = 0; i < 50; ++i) {
            const Complex z = oracles::random_disk_point(rng, 0.9);
            const double theta = 2.0 * std::numbers::pi * i / 50.0;
            const double lhs = std::abs(kernel_wirtinger(ap, z, theta).dz);
            const double r = std::abs(z);
            const double rhs = ((a + 2.0) * r + 1.0) / (1.0 - r * r)
                             * kernel_modulus(ap, z * std::polar(1.0, -theta)) / c_alpha(ap);
            CHECK(lhs <= rhs * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("integral_means: value c_alpha at r = 0") {
    for (double a : {-0.5, 0.0, 1.0, 2.5})
        CHECK(integral_means(AlphaParam(a), 0.0).value
              == doctest::Approx(c_alpha(AlphaParam(a))).epsilon(1e-12));
}

TEST_CASE("integral_means: identically 1 at alpha = 0") {
    for (double r : {0.0, 0.25, 0.6, 0.95})
        CHECK(std::abs(integral_means(AlphaParam(0.0), r).value - 1.0) <= 1e-10);
}

TEST_CASE("integral_means: monotone, bounded, convex on the radius grid") {
    for (double a : {-0.5, 0.0, 1.0, 2.5}) {
        const AlphaParam ap(a);
        std::vector<double> values;
        for (double r = 0.0; r <= 0.95 + 1e-12; r += 0.05)
            values.push_back(integral_means(ap, r).value);
        for (size_t i = 1; i < values.size(); ++i)
            CHECK(values[i] >= values[i - 1] - 1e-10);
        if (a >= 0.0)
            for (double v : values)
                CHECK(v <= 1.0 + 1e-9);
        // Second differences >= 0 (Theorem-A convexity, n = 2).
        for (size_t i = 2; i < values.size(); ++i)
            CHECK(values[i] - 2.0 * values[i - 1] + values[i - 2] >= -1e-9);
    }
}

TEST_CASE("integral_means: adaptive-quadrature oracle at alpha = 2, r = 0.9") {
    const AlphaParam a(2.0);
    const double oracle = oracles::integrate(
        [&](double theta) {
            return kernel_modulus(a, 0.9 * std::polar(1.0, theta));
        },
        0.0, 2.0 * std::numbers::pi, 1e-13) / (2.0 * std::numbers::pi);
    const double v09 = integral_means(a, 0.9).value;
    CHECK(v09 == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(v09 > c_alpha(a));
    CHECK(v09 < 1.0);
    CHECK(v09 >= integral_means(a, 0.5).value);
}

TEST_CASE("integral_means: rejects radii too close to 1") {
    CHECK_THROWS_AS(integral_means(AlphaParam(0.0), 0.9995), std::domain_error);
    CHECK_THROWS_AS(integral_means(AlphaParam(0.0), 0.5, 8), std::domain_error);
}
