#include "ahl/dirichlet.hpp"
#include "ahl/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ahl {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

int table_degree(const std::map<int, Complex>& coefficients) {
    int deg = 0;
    for (const auto& [n, c] : coefficients)
        deg = std::max(deg, std::abs(n));
    return deg;
}

std::vector<Complex> densify(const std::map<int, Complex>& coefficients, int degree) {
    std::vector<Complex> table(2 * degree + 1, Complex{0.0, 0.0});
    for (const auto& [n, c] : coefficients)
        table[n + degree] = c;
    return table;
}

} // namespace

BoundaryData::BoundaryData(const std::map<int, Complex>& coefficients,
                           std::optional<double> sup_norm)
    : degree_(table_degree(coefficients)), table_(densify(coefficients, degree_)) {
    double grid_max = 0.0;
    for (int j = 0; j < kSupNormGridSize; ++j)
        grid_max = std::max(grid_max, std::abs(value(two_pi * j / kSupNormGridSize)));
    if (sup_norm) {
        if (!(*sup_norm > 0.0))
            throw std::invalid_argument("BoundaryData: sup norm must be positive");
        if (grid_max > *sup_norm * (1.0 + 1e-9))
            throw std::invalid_argument(
                "BoundaryData: declared sup norm is exceeded on the angular grid");
        sup_norm_ = *sup_norm;
    } else {
        sup_norm_ = grid_max * kSupNormSafetyFactor;
    }
}

Complex BoundaryData::coeff(int n) const {
    if (std::abs(n) > degree_) return {0.0, 0.0};
    return table_[n + degree_];
}

Complex BoundaryData::value(double theta) const {
    // Horner in e^{i theta}: sum_n coeff(n) e^{i n theta}
    //   = e^{-i N theta} * sum_{m=0}^{2N} coeff(m - N) e^{i m theta}.
    const Complex eit = std::polar(1.0, theta);
    Complex acc{0.0, 0.0};
    for (int n = degree_; n >= -degree_; --n)
        acc = acc * eit + coeff(n);
    return acc * std::polar(1.0, -degree_ * theta);
}

AlphaHarmonicFunction::AlphaHarmonicFunction(AlphaParam alpha,
                                             const std::map<int, Complex>& coefficients,
                                             double declared_sup)
    : alpha_(alpha), degree_(table_degree(coefficients)),
      table_(densify(coefficients, degree_)), declared_sup_(declared_sup) {
    if (!(declared_sup > 0.0))
        throw std::invalid_argument("AlphaHarmonicFunction: declared sup must be positive");
}

Complex AlphaHarmonicFunction::coeff(int k) const {
    if (std::abs(k) > degree_) return {0.0, 0.0};
    return table_[k + degree_];
}

AlphaHarmonicFunction solve_dirichlet(const AlphaParam& alpha, const BoundaryData& boundary) {
    std::map<int, Complex> c;
    for (int n = 0; n <= boundary.degree(); ++n)
        c[n] = boundary.coeff(n);
    for (int k = 1; k <= boundary.degree(); ++k)
        c[-k] = gamma_ratio(k, alpha) * boundary.coeff(-k);
    return AlphaHarmonicFunction(alpha, c, boundary.sup_norm());
}

Complex evaluate_series(const AlphaHarmonicFunction& f, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("evaluate_series: |z| must be < 1");
    const double w = std::norm(z);
    const Complex zb = std::conj(z);

    Complex acc = f.coeff(0);
    Complex zp = 1.0, zbp = 1.0;
    for (int k = 1; k <= f.degree(); ++k) {
        zp *= z;
        zbp *= zb;
        acc += f.coeff(k) * zp;
        const Complex cm = f.coeff(-k);
        if (cm != Complex{0.0, 0.0})
            acc += cm * p_alpha_k(f.alpha(), k, w).value * zbp;
    }
    return acc;
}

Complex evaluate_poisson(const AlphaParam& alpha, const BoundaryData& boundary,
                         Complex z, int nodes) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("evaluate_poisson: |z| must be < 1");
    const int min_nodes = 4 * (boundary.degree() + 1);
    int n = std::max({nodes, min_nodes, 16});

    const auto mean = [&](int m) {
        Complex sum{0.0, 0.0}, carry{0.0, 0.0};
        for (int j = 0; j < m; ++j) {
            const double theta = two_pi * j / m;
            const Complex term = poisson_kernel(alpha, z, theta) * boundary.value(theta);
            const Complex y = term - carry;
            const Complex t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
        return sum / static_cast<double>(m);
    };

    Complex value = mean(n);
    while (n < (1 << 21)) {
        const Complex next = mean(2 * n);
        n *= 2;
        const bool converged = std::abs(next - value) < 1e-11;
        value = next;
        if (converged) break;
    }
    return value;
}

std::vector<Complex> radial_restriction(const AlphaHarmonicFunction& f, double r,
                                        std::span<const double> angles) {
    if (!(r >= 0.0) || !(r < 1.0))
        throw std::domain_error("radial_restriction: r must lie in [0, 1)");
    std::vector<Complex> samples;
    samples.reserve(angles.size());
    for (double theta : angles)
        samples.push_back(evaluate_series(f, r * std::polar(1.0, theta)));
    return samples;
}

CoefficientBoundReport check_coefficient_bounds(const AlphaHarmonicFunction& f) {
    const double M = f.declared_sup();
    const double four_m_over_pi = 4.0 * M / std::numbers::pi;
    constexpr double slack = 1.0 + 1e-9;

    CoefficientBoundReport report;
    report.all_pass = true;
    for (int k = 0; k <= f.degree(); ++k) {
        CoefficientBoundRow row{};
        row.k = k;
        row.sun1_lhs = std::abs(f.coeff(k));
        row.sun1_bound = M;
        bool ok = row.sun1_lhs <= M * slack;
        if (k >= 1) {
            const double cm = std::abs(f.coeff(-k));
            row.sun2_lhs = row.sun1_lhs + cm * beta_fn(k, f.alpha().value() + 1.0);
            row.sun2_bound = four_m_over_pi;
            ok = ok && row.sun2_lhs <= four_m_over_pi * slack;
            row.sat2_worst_lhs = 0.0;
            for (double r = kSat2RadiusStep; r < 0.95; r += kSat2RadiusStep) {
                const double lhs =
                    (row.sun1_lhs + cm * p_alpha_k(f.alpha(), k, r * r).value)
                    * std::pow(r, k);
                row.sat2_worst_lhs = std::max(row.sat2_worst_lhs, lhs);
            }
            row.sat2_bound = four_m_over_pi;
            ok = ok && row.sat2_worst_lhs <= four_m_over_pi * slack;
        }
        row.pass = ok;
        report.all_pass = report.all_pass && ok;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace ahl
