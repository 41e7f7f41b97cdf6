#ifndef AHL_DIRICHLET_HPP
#define AHL_DIRICHLET_HPP

#include "ahl/alpha.hpp"
#include "ahl/kernel.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ahl {

// Angular resolution used to bound the boundary sup norm when the caller
// does not declare one, and the safety factor applied to the grid maximum.
inline constexpr int kSupNormGridSize = 4096;
inline constexpr double kSupNormSafetyFactor = 1.0 + 1e-6;

// Boundary data on the unit circle given as a finite two-sided Fourier
// coefficient table, f*(e^{i theta}) = sum_n fourier(n) e^{i n theta},
// together with a sup-norm bound M.
class BoundaryData {
public:
    // Sparse entries are normalized into a dense table indexed -N..N.
    // If sup_norm is absent it is computed as the grid maximum over
    // kSupNormGridSize angles times kSupNormSafetyFactor.  A declared
    // bound smaller than the grid maximum is rejected.
    BoundaryData(const std::map<int, Complex>& coefficients,
                 std::optional<double> sup_norm = std::nullopt);

    int degree() const { return degree_; }
    Complex coeff(int n) const;
    double sup_norm() const { return sup_norm_; }

    Complex value(double theta) const;

private:
    int degree_;
    std::vector<Complex> table_; // index n + degree_
    double sup_norm_;
};

// alpha plus the two-sided coefficient table {c_k} of the homogeneous
// series expansion f(z) = sum_{k>=0} c_k z^k
//                       + sum_{k>=1} c_{-k} P_{alpha,k}(|z|^2) zbar^k.
// Immutable after construction.
class AlphaHarmonicFunction {
public:
    AlphaHarmonicFunction(AlphaParam alpha, const std::map<int, Complex>& coefficients,
                          double declared_sup);

    const AlphaParam& alpha() const { return alpha_; }
    int degree() const { return degree_; }
    Complex coeff(int k) const;
    double declared_sup() const { return declared_sup_; }

private:
    AlphaParam alpha_;
    int degree_;
    std::vector<Complex> table_;
    double declared_sup_;
};

// Coefficient mapping of the Dirichlet solution:
// c_k = fhat(k) for k >= 0, c_{-k} = gamma_ratio(k, alpha) * fhat(-k).
AlphaHarmonicFunction solve_dirichlet(const AlphaParam& alpha, const BoundaryData& boundary);

// Finite series evaluation of f at z, |z| < 1.
Complex evaluate_series(const AlphaHarmonicFunction& f, Complex z);

// Poisson-type integral evaluation
//   f(z) = (1/2pi) int_0^{2pi} P_alpha(z e^{-i theta}) f*(e^{i theta}) dtheta
// by uniform trapezoid with node doubling to 1e-11 stability.  `nodes` is
// the starting node count and must be >= 4 (degree + 1).
Complex evaluate_poisson(const AlphaParam& alpha, const BoundaryData& boundary,
                         Complex z, int nodes = 0);

// Samples of the dilation f_r(e^{i theta}) = f(r e^{i theta}).
std::vector<Complex> radial_restriction(const AlphaHarmonicFunction& f, double r,
                                        std::span<const double> angles);

// Per-index report of the coefficient bounds
//   sun-1:  |c_k| <= M
//   sun-2:  |c_k| + |c_{-k}| B(k, alpha+1) <= 4M/pi
//   sat-2:  (|c_k| + |c_{-k}| P_{alpha,k}(r^2)) r^k <= 4M/pi on an r-grid.
// A violation means the declared M is not a true sup bound of f, not a
// library bug; the report records it instead of failing.
struct CoefficientBoundRow {
    int k;
    double sun1_lhs, sun1_bound;
    double sun2_lhs, sun2_bound; // k >= 1 only; 0 otherwise
    double sat2_worst_lhs, sat2_bound;
    bool pass;
};
struct CoefficientBoundReport {
    std::vector<CoefficientBoundRow> rows;
    bool all_pass;
};
CoefficientBoundReport check_coefficient_bounds(const AlphaHarmonicFunction& f);

// r-grid used for the sat-2 rows.
inline constexpr double kSat2RadiusStep = 0.1;

} // namespace ahl

#endif
