#ifndef AHL_ANALYSIS_HPP
#define AHL_ANALYSIS_HPP

#include "ahl/dirichlet.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ahl {

// Wirtinger derivative pair with the derived matrix quantities
//   |Df| = |f_z| + |f_zbar|,  l(Df) = ||f_z| - |f_zbar||,  |J_f| = |Df| l(Df).
struct WirtingerPair {
    Complex fz;
    Complex fzbar;
    double norm_df;
    double little_l;
    double jacobian_abs;
};

WirtingerPair make_wirtinger(Complex fz, Complex fzbar);

// Analytic Wirtinger derivatives of f from its coefficients:
//   f_z    = sum_{k>=1} k c_k z^{k-1} + sum_{k>=1} c_{-k} P'_{alpha,k}(w) zbar^{k+1}
//   f_zbar = sum_{k>=1} c_{-k} [ k P_{alpha,k}(w) zbar^{k-1}
//                                + P'_{alpha,k}(w) z zbar^k ],   w = |z|^2.
WirtingerPair wirtinger(const AlphaHarmonicFunction& f, Complex z);

// Hyperbolic distance in the unit disk,
//   d(z1, z2) = log[(|1 - z1 conj(z2)| + |z1 - z2|)
//                 / (|1 - z1 conj(z2)| - |z1 - z2|)].
double hyperbolic_distance(Complex z1, Complex z2);

// One checked inequality instance; ratio = quantity / bound.
struct CheckItem {
    Complex z;
    double quantity;
    double bound;
    double ratio;
    bool pass;
};
struct CheckReport {
    std::vector<CheckItem> items;
    double worst_ratio;
    bool all_pass;
};

// Schwarz-Pick check: at each sample, |Df(z)| (1 - |z|) <= M (alpha+2)/c_alpha,
// jointly with the weaker form |Df(z)| (1 - |z|^2) <= 2 M (alpha+2)/c_alpha.
// Violations indicate an invalid declared M, and are reported, not thrown.
CheckReport schwarz_pick_check(const AlphaHarmonicFunction& f,
                               std::span<const Complex> samples, double sup_bound);

// Hyperbolic Lipschitz check for disk-into-disk f:
//   |f(z1) - f(z2)| <= (alpha+2)/c_alpha * d_h(z1, z2).
CheckReport lipschitz_check(const AlphaHarmonicFunction& f,
                            std::span<const std::pair<Complex, Complex>> pairs);

// Residual |d/dz g| at z, where g(w) = (1-|w|^2)^{-alpha} f_zbar(w) is
// evaluated analytically and differentiated by centered differences with
// the given step.  Near zero certifies alpha-harmonicity.
double alpha_harmonicity_residual(const AlphaHarmonicFunction& f, Complex z, double step);

} // namespace ahl

#endif
