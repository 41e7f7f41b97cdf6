#include "ahl/landau.hpp"
#include "ahl/special.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace ahl {

LandauInputs::LandauInputs(AlphaParam a, double m, double b, bool relax)
    : alpha(a), M(m), beta(b), relaxed(relax) {
    if (!(M > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("LandauInputs: M and beta must be positive");
    if (alpha.value() < 0.0 && !relaxed)
        throw std::domain_error(
            "LandauInputs: alpha must be >= 0 (use relaxed mode for diagnostics)");
}

double landau_constant(const LandauInputs& inputs) {
    return inputs.beta * c_alpha(inputs.alpha) / (inputs.M * (inputs.alpha.value() + 2.0));
}

double phi(double x, const LandauInputs& inputs) {
    if (!(x >= 0.0) || !(x < 1.0))
        throw std::domain_error("phi: x must lie in [0, 1)");
    const double one_minus = 1.0 - x;
    return landau_constant(inputs) + (inputs.M + 5.0) * x * (x - 2.0) / (one_minus * one_minus);
}

double rho0_closed_form(const LandauInputs& inputs) {
    const double A = landau_constant(inputs);
    const double m5 = inputs.M + 5.0;
    return 1.0 - std::sqrt(m5 / (A + m5));
}

LandauResult solve_rho0(const LandauInputs& inputs) {
    // phi(0) = A > 0 and phi -> -inf as x -> 1^-, with phi' < 0 throughout,
    // so a sign change on [0, 1 - eps] brackets the unique root.
    double lo = 0.0, hi = 1.0 - 1e-9;
    if (!(phi(hi, inputs) < 0.0))
        throw std::runtime_error("solve_rho0: no sign change in the bracket");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at machine resolution
        if (phi(mid, inputs) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double rho = 0.5 * (lo + hi);

    const double closed = rho0_closed_form(inputs);
    if (std::abs(rho - closed) > 1e-12)
        throw std::runtime_error("solve_rho0: bisection and closed form disagree");

    LandauResult result;
    result.rho0 = rho;
    result.phi_residual = phi(rho, inputs);
    const double q = rho / (1.0 - rho);
    result.R0_lower = (inputs.M + 5.0) * q * q;
    return result;
}

NormalizationFlags check_re1(const AlphaHarmonicFunction& f, double tol) {
    bool ok = std::abs(f.coeff(-1)) <= tol
           && std::abs(f.coeff(-2) - Complex{1.0, 0.0}) <= tol;
    for (int k = 3; k <= f.degree() && ok; ++k)
        ok = std::abs(f.coeff(-k)) <= (k - 1) + tol;
    return NormalizationFlags{ok};
}

CheckReport growth_bound_check(const AlphaHarmonicFunction& f,
                               const NormalizationFlags& flags,
                               std::span<const Complex> samples) {
    if (!flags.re1_satisfied)
        throw std::invalid_argument(
            "growth_bound_check: normalization (re-1) must be satisfied");
    const double m5 = f.declared_sup() + 5.0;
    constexpr double slack = 1.0 + 1e-9;

    const auto at0 = wirtinger(f, {0.0, 0.0});
    std::vector<CheckItem> items;
    items.reserve(samples.size());
    for (Complex z : samples) {
        const auto p = wirtinger(f, z);
        const double quantity =
            std::abs(p.fz - at0.fz) + std::abs(p.fzbar - at0.fzbar);
        const double r = std::abs(z);
        const double bound = m5 * r * (2.0 - r) / ((1.0 - r) * (1.0 - r));
        const double ratio = bound > 0.0 ? quantity / bound : 0.0;
        items.push_back(CheckItem{z, quantity, bound, ratio,
                                  quantity <= bound * slack + 1e-12});
    }

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

double beta_from_function(const AlphaHarmonicFunction& f) {
    return wirtinger(f, {0.0, 0.0}).jacobian_abs;
}

UnivalenceProbeReport univalence_probe(const AlphaHarmonicFunction& f, double rho,
                                       const LandauInputs& inputs, int trials,
                                       std::uint64_t seed) {
    const LandauResult landau = solve_rho0(inputs);
    if (!(rho > 0.0) || !(rho < landau.rho0))
        throw std::invalid_argument("univalence_probe: rho must lie in (0, rho0)");

    const double A = landau_constant(inputs);
    const double m5 = inputs.M + 5.0;
    const double separation = A - m5 * rho * (2.0 - rho) / ((1.0 - rho) * (1.0 - rho));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto random_point = [&] {
        // sqrt transform gives the uniform area measure on the disk
        const double r = rho * std::sqrt(unit(rng));
        return r * std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
    };

    UnivalenceProbeReport report{};
    report.trials = trials;
    report.min_separation_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const Complex z1 = random_point();
        const Complex z2 = random_point();
        const double d = std::abs(z2 - z1);
        if (d < 1e-12) continue;
        const double image = std::abs(evaluate_series(f, z2) - evaluate_series(f, z1));
        if (image <= 1e-12)
            ++report.injectivity_violations;
        const double required = separation * d;
        if (image < required - 1e-12)
            ++report.separation_violations;
        report.min_separation_ratio =
            std::min(report.min_separation_ratio, image / required);
    }

    const double covering = A * rho - m5 * rho * rho / (1.0 - rho);
    const Complex f0 = evaluate_series(f, {0.0, 0.0});
    report.min_boundary_margin = std::numeric_limits<double>::infinity();
    constexpr int boundary_samples = 256;
    for (int j = 0; j < boundary_samples; ++j) {
        const Complex zeta =
            rho * std::polar(1.0, 2.0 * std::numbers::pi * j / boundary_samples);
        const double margin = std::abs(evaluate_series(f, zeta) - f0) - covering;
        report.min_boundary_margin = std::min(report.min_boundary_margin, margin);
    }

    report.all_pass = report.separation_violations == 0
                   && report.injectivity_violations == 0
                   && report.min_boundary_margin >= -1e-12;
    return report;
}

} // namespace ahl
