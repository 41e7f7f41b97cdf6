#ifndef AHL_KERNEL_HPP
#define AHL_KERNEL_HPP

#include "ahl/alpha.hpp"

#include <complex>

namespace ahl {

using Complex = std::complex<double>;

// Poisson-type kernel P_alpha(zeta) = (1-|zeta|^2)^{alpha+1} /
// ((1-zeta)(1-conj(zeta))^{alpha+1}) evaluated at zeta = z e^{-i theta}.
// The complex power uses the principal branch; the base 1-conj(zeta) has
// positive real part for |z| < 1, so the branch is continuous.
Complex poisson_kernel(const AlphaParam& alpha, Complex z, double theta);

// Modulus-normalized kernel K_alpha(zeta) = c_alpha |P_alpha(zeta)|.
double kernel_modulus(const AlphaParam& alpha, Complex zeta);

// Wirtinger derivatives of theta -> P_alpha(z e^{-i theta}) with respect
// to z and zbar, in closed form.
struct KernelWirtinger {
    Complex dz;
    Complex dzbar;
};
KernelWirtinger kernel_wirtinger(const AlphaParam& alpha, Complex z, double theta);

// Circular integral means M_alpha(r) of K_alpha over |z| = r, by uniform
// trapezoidal quadrature with node doubling until successive values agree
// to 1e-11.  `nodes` is the starting node count (>= 16).
struct IntegralMeans {
    double alpha;
    double r;
    double value;
    int quadrature_nodes;
};
IntegralMeans integral_means(const AlphaParam& alpha, double r, int nodes = 64);

// Largest radius accepted by integral_means; the kernel spike at r -> 1
// defeats fixed node budgets beyond it.
inline constexpr double kIntegralMeansMaxRadius = 0.999;

} // namespace ahl

#endif
