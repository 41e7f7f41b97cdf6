#include "ahl/analysis.hpp"
#include "ahl/special.hpp"

#include <algorithm>
#include <cmath>

namespace ahl {

WirtingerPair make_wirtinger(Complex fz, Complex fzbar) {
    WirtingerPair p;
    p.fz = fz;
    p.fzbar = fzbar;
    p.norm_df = std::abs(fz) + std::abs(fzbar);
    p.little_l = std::abs(std::abs(fz) - std::abs(fzbar));
    p.jacobian_abs = p.norm_df * p.little_l;
    return p;
}

WirtingerPair wirtinger(const AlphaHarmonicFunction& f, Complex z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("wirtinger: |z| must be < 1");
    const double w = std::norm(z);
    const Complex zb = std::conj(z);

    Complex fz{0.0, 0.0}, fzbar{0.0, 0.0};
    Complex zp = 1.0;  // z^{k-1}
    Complex zbp = 1.0; // zbar^{k-1}
    for (int k = 1; k <= f.degree(); ++k) {
        fz += static_cast<double>(k) * f.coeff(k) * zp;
        const Complex cm = f.coeff(-k);
        if (cm != Complex{0.0, 0.0}) {
            const auto p = p_alpha_k(f.alpha(), k, w);
            fz += cm * p.derivative * zbp * zb * zb;          // zbar^{k+1}
            fzbar += cm * (static_cast<double>(k) * p.value * zbp
                           + p.derivative * z * zbp * zb);    // z zbar^k
        }
        zp *= z;
        zbp *= zb;
    }
    return make_wirtinger(fz, fzbar);
}

double hyperbolic_distance(Complex z1, Complex z2) {
    if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
        throw std::domain_error("hyperbolic_distance: arguments must lie in the disk");
    const double num = std::abs(1.0 - z1 * std::conj(z2));
    const double d = std::abs(z1 - z2);
    if (d == 0.0) return 0.0;
    return std::log((num + d) / (num - d));
}

namespace {

CheckReport finalize(std::vector<CheckItem> items) {
    CheckReport report;
    report.items = std::move(items);
    report.worst_ratio = 0.0;
    report.all_pass = true;
    for (const auto& item : report.items) {
        report.worst_ratio = std::max(report.worst_ratio, item.ratio);
        report.all_pass = report.all_pass && item.pass;
    }
    return report;
}

} // namespace

CheckReport schwarz_pick_check(const AlphaHarmonicFunction& f,
                               std::span<const Complex> samples, double sup_bound) {
    const double a = f.alpha().value();
    const double bound = sup_bound * (a + 2.0) / c_alpha(f.alpha());
    constexpr double slack = 1.0 + 1e-9;

    std::vector<CheckItem> items;
    items.reserve(samples.size());
    for (Complex z : samples) {
        const auto p = wirtinger(f, z);
        const double quantity = p.norm_df * (1.0 - std::abs(z));
        const double weak = p.norm_df * (1.0 - std::norm(z));
        CheckItem item{z, quantity, bound, quantity / bound,
                       quantity <= bound * slack && weak <= 2.0 * bound * slack};
        items.push_back(item);
    }
    return finalize(std::move(items));
}

CheckReport lipschitz_check(const AlphaHarmonicFunction& f,
                            std::span<const std::pair<Complex, Complex>> pairs) {
    const double a = f.alpha().value();
    const double factor = (a + 2.0) / c_alpha(f.alpha());
    constexpr double slack = 1.0 + 1e-9;

    std::vector<CheckItem> items;
    items.reserve(pairs.size());
    for (const auto& [z1, z2] : pairs) {
        const double quantity = std::abs(evaluate_series(f, z1) - evaluate_series(f, z2));
        const double bound = factor * hyperbolic_distance(z1, z2);
        const double ratio = bound > 0.0 ? quantity / bound : 0.0;
        items.push_back(CheckItem{z1, quantity, bound, ratio,
                                  quantity <= bound * slack + 1e-12});
    }
    return finalize(std::move(items));
}

double alpha_harmonicity_residual(const AlphaHarmonicFunction& f, Complex z, double step) {
    if (!(step > 0.0))
        throw std::domain_error("alpha_harmonicity_residual: step must be positive");
    if (std::abs(z) + 2.0 * step >= 1.0)
        throw std::domain_error("alpha_harmonicity_residual: stencil exits the disk");
    const double a = f.alpha().value();
    const auto g = [&](Complex w) {
        return std::pow(1.0 - std::norm(w), -a) * wirtinger(f, w).fzbar;
    };
    const Complex h{step, 0.0};
    const Complex ih{0.0, step};
    const Complex gx = (g(z + h) - g(z - h)) / (2.0 * step);
    const Complex gy = (g(z + ih) - g(z - ih)) / (2.0 * step);
    return std::abs(0.5 * (gx - Complex{0.0, 1.0} * gy));
}

} // namespace ahl
