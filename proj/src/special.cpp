#include "ahl/special.hpp"

#include <cmath>
#include <limits>

namespace ahl {

double gamma_fn(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::domain_error("gamma_fn: argument must be positive");
    return std::tgamma(s);
}

double log_gamma(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(s);
}

double beta_fn(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("beta_fn: arguments must be positive");
    // Log form avoids overflow for large arguments.
    return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}

double c_alpha(const AlphaParam& alpha) {
    const double a = alpha.value();
    const double g = std::tgamma(a / 2.0 + 1.0);
    return g * g / std::tgamma(a + 1.0);
}

double gamma_ratio(int k, const AlphaParam& alpha) {
    if (k < 1)
        throw std::domain_error("gamma_ratio: k must be >= 1");
    const double a = alpha.value();
    return std::exp(std::lgamma(k + a + 1.0) - std::lgamma(static_cast<double>(k))
                    - std::lgamma(a + 1.0));
}

namespace {

// Adaptive Simpson on [a, b] with absolute tolerance.
template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth = 48) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

bool is_nonneg_integer(double a) {
    return a >= 0.0 && std::abs(a - std::round(a)) < 1e-12;
}

// Series branch: value and derivative of
//   P(w) = sum_{j>=0} a_j w^j / (k+j),  a_j = binom(alpha,j) (-1)^j,
//   P'(w) = sum_{j>=1} a_j j w^{j-1} / (k+j).
void p_alpha_k_series(double alpha, int k, double w, double& value, double& deriv) {
    double a = 1.0;       // binom(alpha, j) * (-1)^j
    double wj = 1.0;      // w^j
    double v = 1.0 / k;
    double d = 0.0;
    for (int j = 1; j < 4000; ++j) {
        a *= (static_cast<double>(j - 1) - alpha) / j;
        if (a == 0.0) break; // terminating series for integer alpha
        d += a * j * wj / (k + j);
        wj *= w;
        const double term = a * wj / (k + j);
        v += term;
        if (std::abs(term) < 1e-18 * std::abs(v) && j > alpha + 2) break;
    }
    value = v;
    deriv = d;
}

} // namespace

PAlphaKEvaluation p_alpha_k(const AlphaParam& alpha, int k, double w) {
    if (k < 1)
        throw std::domain_error("p_alpha_k: k must be >= 1");
    if (!(w >= 0.0) || !(w < 1.0))
        throw std::domain_error("p_alpha_k: w must lie in [0, 1)");
    const double a = alpha.value();

    PAlphaKEvaluation out{a, k, w, 0.0, 0.0};
    if (w <= kPAlphaKSeriesCutoff || is_nonneg_integer(a)) {
        p_alpha_k_series(a, k, w, out.value, out.derivative);
        return out;
    }

    const auto integrand = [a, k, w](double t) {
        return std::pow(t, k - 1) * std::pow(1.0 - t * w, a);
    };
    out.value = adaptive_simpson(integrand, 0.0, 1.0, 1e-15);
    // d/dw P = -(k/w) P + (1-w)^alpha / w  (regular for w bounded away from 0)
    out.derivative = (-k * out.value + std::pow(1.0 - w, a)) / w;
    return out;
}

} // namespace ahl
