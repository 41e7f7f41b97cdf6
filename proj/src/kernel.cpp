#include "ahl/kernel.hpp"
#include "ahl/special.hpp"

#include <cmath>
#include <numbers>

namespace ahl {

namespace {

void require_in_disk(Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("kernel: |z| must be < 1");
}

} // namespace

Complex poisson_kernel(const AlphaParam& alpha, Complex z, double theta) {
    require_in_disk(z);
    const double a = alpha.value();
    const Complex zeta = z * std::polar(1.0, -theta);
    const double one_minus_sq = 1.0 - std::norm(z);
    return std::pow(one_minus_sq, a + 1.0)
         / ((1.0 - zeta) * std::pow(1.0 - std::conj(zeta), a + 1.0));
}

double kernel_modulus(const AlphaParam& alpha, Complex zeta) {
    require_in_disk(zeta);
    const double a = alpha.value();
    return c_alpha(alpha) * std::pow(1.0 - std::norm(zeta), a + 1.0)
         / std::pow(std::abs(1.0 - zeta), a + 2.0);
}

KernelWirtinger kernel_wirtinger(const AlphaParam& alpha, Complex z, double theta) {
    require_in_disk(z);
    const double a = alpha.value();
    const Complex eit = std::polar(1.0, theta);
    const Complex emit = std::conj(eit);
    const double one_minus_sq = 1.0 - std::norm(z);
    const Complex u = 1.0 - z * emit;            // 1 - z e^{-i theta}
    const Complex v = 1.0 - std::conj(z) * eit;  // 1 - zbar e^{i theta}
    const double wa = std::pow(one_minus_sq, a);

    KernelWirtinger out;
    out.dz = wa * (emit * one_minus_sq - (a + 1.0) * std::conj(z) * u)
           / (u * u * std::pow(v, a + 1.0));
    out.dzbar = (a + 1.0) * wa * eit / std::pow(v, a + 2.0);
    return out;
}

IntegralMeans integral_means(const AlphaParam& alpha, double r, int nodes) {
    if (!(r >= 0.0) || r > kIntegralMeansMaxRadius)
        throw std::domain_error("integral_means: r must lie in [0, 0.999]");
    if (nodes < 16)
        throw std::domain_error("integral_means: nodes must be >= 16");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const auto mean = [&](int n) {
        // Uniform trapezoid on a full period; Kahan summation keeps the
        // result deterministic to the stated tolerance.
        double sum = 0.0, carry = 0.0;
        for (int j = 0; j < n; ++j) {
            const double theta = two_pi * j / n;
            const double term = kernel_modulus(alpha, r * std::polar(1.0, theta));
            const double y = term - carry;
            const double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        return sum / n;
    };

    int n = nodes;
    double value = mean(n);
    while (n < (1 << 21)) {
        const double next = mean(2 * n);
        n *= 2;
        const bool converged = std::abs(next - value) < 1e-11;
        value = next;
        if (converged) break;
    }
    return IntegralMeans{alpha.value(), r, value, n};
}

} // namespace ahl
