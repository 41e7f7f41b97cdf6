#include "ahl/special.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ahl;

TEST_CASE("AlphaParam rejects alpha <= -1") {
    CHECK_THROWS_AS(AlphaParam(-1.0), std::domain_error);
    CHECK_THROWS_AS(AlphaParam(-2.5), std::domain_error);
    CHECK(AlphaParam(-0.999).value() == doctest::Approx(-0.999));
}

TEST_CASE("gamma: classical values") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("gamma: defining-integral oracle") {
    // Frozen from the quadrature oracle below; the oracle stays live as a
    // consistency check of itself.
    const double expected_2_7 = oracles::gamma_by_quadrature(2.7);
    CHECK(expected_2_7 == doctest::Approx(1.5446858458505940).epsilon(1e-12));
    CHECK(gamma_fn(2.7) == doctest::Approx(expected_2_7).epsilon(1e-13));

    for (double s : {0.3, 1.1, 3.9, 7.5, 14.0, 27.5, 50.0}) {
        const double oracle = oracles::gamma_by_quadrature(s);
        CHECK(std::abs(gamma_fn(s) - oracle) / oracle <= 1e-13);
    }
}

TEST_CASE("gamma: domain errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("beta: closed-form values") {
    for (int k = 1; k <= 10; ++k)
        CHECK(beta_fn(k, 1.0) == doctest::Approx(1.0 / k).epsilon(1e-13));
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("beta: quadrature oracle at (3, 2.5)") {
    const double oracle = oracles::integrate(
        [](double x) { return x * x * std::pow(1.0 - x, 1.5); }, 0.0, 1.0, 1e-15);
    CHECK(beta_fn(3.0, 2.5) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("beta: symmetry property") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double p = u(rng), q = u(rng);
        CHECK(beta_fn(p, q) == doctest::Approx(beta_fn(q, p)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(beta_fn(-1.0, 2.0), std::domain_error);
}

TEST_CASE("c_alpha: closed-form values") {
    CHECK(std::abs(c_alpha(AlphaParam(0.0)) - 1.0) <= 1e-14);
    CHECK(c_alpha(AlphaParam(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c_alpha(AlphaParam(1.0)) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-14));
}

TEST_CASE("p_alpha_k: alpha = 0 gives 1/k with zero derivative") {
    for (int k : {1, 2, 5, 17}) {
        for (double w : {0.0, 0.3, 0.5, 0.9}) {
            const auto p = p_alpha_k(AlphaParam(0.0), k, w);
            CHECK(p.value == doctest::Approx(1.0 / k).epsilon(1e-14));
            CHECK(std::abs(p.derivative) <= 1e-13);
        }
    }
}

TEST_CASE("p_alpha_k: value and derivative at w = 0") {
    for (double a : {-0.5, 0.7, 1.0, 3.2}) {
        for (int k : {1, 2, 6}) {
            const auto p = p_alpha_k(AlphaParam(a), k, 0.0);
            CHECK(p.value == doctest::Approx(1.0 / k).epsilon(1e-14));
            CHECK(p.derivative == doctest::Approx(-a / (k + 1.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("p_alpha_k: closed form at alpha=1, k=1 is 1 - w/2") {
    const auto p = p_alpha_k(AlphaParam(1.0), 1, 0.5);
    CHECK(p.value == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(p.derivative == doctest::Approx(-0.5).epsilon(1e-13));
}

TEST_CASE("p_alpha_k: matches the defining integral on both branches") {
    for (double a : {-0.5, 0.4, 1.5, 2.7}) {
        for (int k : {1, 3, 8}) {
            for (double w : {0.05, 0.3, 0.49, 0.51, 0.7, 0.9}) {
                const auto oracle = oracles::integrate(
                    [a, k, w](double t) {
                        return std::pow(t, k - 1) * std::pow(1.0 - t * w, a);
                    },
                    0.0, 1.0, 1e-16);
                const auto p = p_alpha_k(AlphaParam(a), k, w);
                CHECK(std::abs(p.value - oracle) / oracle <= 1e-12);
            }
        }
    }
}

TEST_CASE("p_alpha_k: branch continuity at the switchover") {
    for (double a : {-0.5, 1.3, 2.6}) {
        for (int k : {1, 4}) {
            const auto lo = p_alpha_k(AlphaParam(a), k, std::nextafter(0.5, 0.0));
            const auto hi = p_alpha_k(AlphaParam(a), k, std::nextafter(0.5, 1.0));
            CHECK(lo.value == doctest::Approx(hi.value).epsilon(1e-12));
            CHECK(lo.derivative == doctest::Approx(hi.derivative).epsilon(1e-9));
        }
    }
}

TEST_CASE("p_alpha_k: limit w -> 1- approaches beta(k, alpha+1)") {
    for (double a : {0.5, 1.0, 2.5}) {
        for (int k : {1, 3}) {
            const double target = beta_fn(k, a + 1.0);
            const double d1 = std::abs(p_alpha_k(AlphaParam(a), k, 0.99).value - target);
            const double d2 = std::abs(p_alpha_k(AlphaParam(a), k, 0.999).value - target);
            CHECK(d2 < d1);
            CHECK(d2 < 0.01);
        }
    }
}

TEST_CASE("p_alpha_k: monotone in w and boxed between the limits (alpha >= 0)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.0, 4.0);
    std::uniform_int_distribution<int> uk(1, 10);
    for (int i = 0; i < 100; ++i) {
        const AlphaParam a(ua(rng));
        const int k = uk(rng);
        double prev = p_alpha_k(a, k, 0.0).value;
        for (double w = 0.1; w < 1.0 - 1e-9; w += 0.1) {
            const auto p = p_alpha_k(a, k, w);
            CHECK(p.value <= prev + 1e-13);
            CHECK(p.derivative <= 1e-13);
            CHECK(p.value <= 1.0 / k + 1e-13);
            CHECK(p.value >= beta_fn(k, a.value() + 1.0) - 1e-13);
            prev = p.value;
        }
    }
}

TEST_CASE("p_alpha_k: inequality reverses for -1 < alpha < 0") {
    for (double a : {-0.9, -0.4}) {
        for (double w : {0.2, 0.6, 0.9}) {
            CHECK(p_alpha_k(AlphaParam(a), 3, w).value >= 1.0 / 3.0 - 1e-13);
        }
    }
}

TEST_CASE("p_alpha_k: derivative agrees with centered finite differences") {
    const double h = 1e-6;
    for (double a : {-0.5, 0.8, 2.1}) {
        for (int k : {1, 2, 7}) {
            for (double w = 0.1; w <= 0.9 + 1e-12; w += 0.1) {
                const AlphaParam ap(a);
                const double fd = (p_alpha_k(ap, k, w + h).value
                                   - p_alpha_k(ap, k, w - h).value) / (2.0 * h);
                CHECK(p_alpha_k(ap, k, w).derivative == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("p_alpha_k: domain errors") {
    CHECK_THROWS_AS(p_alpha_k(AlphaParam(1.0), 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(p_alpha_k(AlphaParam(1.0), 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(p_alpha_k(AlphaParam(1.0), 1, -0.1), std::domain_error);
}

TEST_CASE("gamma_ratio: increasing and unbounded in k for alpha > 0") {
    for (double a : {0.5, 1.0, 3.0}) {
        double prev = 0.0;
        for (int k = 1; k <= 30; ++k) {
            const double r = gamma_ratio(k, AlphaParam(a));
            CHECK(r > prev);
            prev = r;
        }
        CHECK(prev > 10.0);
    }
}
