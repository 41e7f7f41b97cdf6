#ifndef AHL_SPECIAL_HPP
#define AHL_SPECIAL_HPP

#include "ahl/alpha.hpp"

namespace ahl {

// Gamma(s) for s > 0.  Throws std::domain_error otherwise.
double gamma_fn(double s);

// log Gamma(s) for s > 0.
double log_gamma(double s);

// Euler Beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p+q), p, q > 0.
double beta_fn(double p, double q);

// c_alpha = Gamma(alpha/2 + 1)^2 / Gamma(alpha + 1).
double c_alpha(const AlphaParam& alpha);

// Gamma(k + alpha + 1) / (Gamma(k) Gamma(alpha + 1)), the factor mapping
// negative-index boundary Fourier coefficients to series coefficients.
double gamma_ratio(int k, const AlphaParam& alpha);

// Kernel coefficient function P_{alpha,k}(w) = int_0^1 t^{k-1} (1-tw)^alpha dt
// together with its w-derivative.
struct PAlphaKEvaluation {
    double alpha;
    int k;
    double w;
    double value;
    double derivative;
};

// Evaluates P_{alpha,k} and d/dw P_{alpha,k} for k >= 1, 0 <= w < 1.
//
// Two branches: the binomial power series
//   P_{alpha,k}(w) = sum_j binom(alpha,j) (-w)^j / (k+j)
// for small w (and for all w when alpha is a nonnegative integer, where the
// series terminates), and adaptive quadrature of the defining integral
// otherwise.  The derivative comes from the series near w = 0 (the identity
// d/dw P = -(k/w) P + (1-w)^alpha / w is singular there) and from that
// identity on the quadrature branch.
PAlphaKEvaluation p_alpha_k(const AlphaParam& alpha, int k, double w);

// Series/quadrature switchover point for p_alpha_k.
inline constexpr double kPAlphaKSeriesCutoff = 0.5;

} // namespace ahl

#endif
