#ifndef AHL_LANDAU_HPP
#define AHL_LANDAU_HPP

#include "ahl/analysis.hpp"

#include <cstdint>

namespace ahl {

// Inputs of the Landau-type theorem: alpha >= 0, sup bound M, and
// beta = |J_f(0)|.  Values of alpha in (-1, 0) are accepted only in
// relaxed (diagnostics-only) mode; the univalence guarantee is proved
// for alpha >= 0.
struct LandauInputs {
    AlphaParam alpha;
    double M;
    double beta;
    bool relaxed = false;

    LandauInputs(AlphaParam a, double m, double b, bool relax = false);
};

// phi(x) = beta c_alpha / (M (alpha+2)) + (M+5) x(x-2)/(1-x)^2,
// strictly decreasing on [0, 1) with a unique root.
double phi(double x, const LandauInputs& inputs);

// The normalized constant A = beta c_alpha / (M (alpha+2)).
double landau_constant(const LandauInputs& inputs);

struct LandauResult {
    double rho0;          // unique root of phi in (0, 1)
    double R0_lower;      // (M+5) (rho0/(1-rho0))^2
    double phi_residual;  // phi evaluated at rho0
};

// Root of phi by bisection on [0, 1 - 1e-9], cross-validated against the
// closed form rho0 = 1 - sqrt((M+5)/(A+M+5)); the two must agree to 1e-12.
LandauResult solve_rho0(const LandauInputs& inputs);

// Closed-form root (derived from x(2-x) = 1 - (1-x)^2); exposed so tests
// can treat bisection and algebra as independent routes.
double rho0_closed_form(const LandauInputs& inputs);

// Normalization (re-1): c_{-1} = 0, c_{-2} = 1, |c_{-k}| <= k-1 for k >= 3.
struct NormalizationFlags {
    bool re1_satisfied;
};
NormalizationFlags check_re1(const AlphaHarmonicFunction& f, double tol = 1e-12);

// Growth estimate under (re-1):
//   |f_z(z)-f_z(0)| + |f_zbar(z)-f_zbar(0)| <= (M+5) |z|(2-|z|)/(1-|z|)^2.
// Throws if the flags are not satisfied (the bound is only proved then).
CheckReport growth_bound_check(const AlphaHarmonicFunction& f,
                               const NormalizationFlags& flags,
                               std::span<const Complex> samples);

// beta extracted from a concrete function: |Df(0)| * l(Df(0)).
double beta_from_function(const AlphaHarmonicFunction& f);

// Randomized univalence/covering probe inside |z| < rho < rho0:
//  - separation: |f(z2)-f(z1)| >= [A - (M+5) rho(2-rho)/(1-rho)^2] |z2-z1|
//  - covering:   |f(zeta)-f(0)| >= A rho - (M+5) rho^2/(1-rho) on |zeta| = rho.
struct UnivalenceProbeReport {
    int trials;
    int separation_violations;
    int injectivity_violations;
    double min_separation_ratio; // min |f(z2)-f(z1)| / (sep * |z2-z1|)
    double min_boundary_margin;  // min |f(zeta)-f(0)| - covering bound
    bool all_pass;
};
UnivalenceProbeReport univalence_probe(const AlphaHarmonicFunction& f, double rho,
                                       const LandauInputs& inputs, int trials,
                                       std::uint64_t seed = 0);

} // namespace ahl

#endif
