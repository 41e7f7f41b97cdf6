// ahc -- alpha-harmonic calculator.
//
// Subcommands: kernel, means, solve, eval, coeffs, bounds, landau, verify.
// Exit codes: 0 success, 1 mathematical invariant violation (library bug),
// 2 usage or data error.

#include "ahl/analysis.hpp"
#include "ahl/dirichlet.hpp"
#include "ahl/io.hpp"
#include "ahl/kernel.hpp"
#include "ahl/landau.hpp"
#include "ahl/special.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MathViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(output_path);
        if (!out) throw UsageError("cannot open output file: " + output_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

// Deterministic low-discrepancy points in |z| <= rmax (golden-angle spiral
// with the radius-sqrt transform for uniform area coverage).
std::vector<ahl::Complex> disk_grid(int count, double rmax) {
    constexpr double golden_angle = 2.0 * std::numbers::pi * 0.3819660112501051;
    std::vector<ahl::Complex> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double r = rmax * std::sqrt((i + 0.5) / count);
        pts.push_back(r * std::polar(1.0, golden_angle * i));
    }
    return pts;
}

int cmd_kernel(double alpha, double zre, double zim, double theta,
               const std::string& format, const std::string& output) {
    const ahl::AlphaParam a(alpha);
    const ahl::Complex value = ahl::poisson_kernel(a, {zre, zim}, theta);
    if (format == "csv") {
        emit(output, "re,im\n" + json(value.real()).dump() + "," + json(value.imag()).dump());
    } else {
        emit(output, json{{"value", {value.real(), value.imag()}}}.dump(2));
    }
    return 0;
}

int cmd_means(double alpha, const std::vector<double>& radii, int nodes,
              const std::string& format, const std::string& output) {
    const ahl::AlphaParam a(alpha);
    if (format == "csv") {
        std::string text = "r,value,nodes\n";
        for (double r : radii) {
            const auto m = ahl::integral_means(a, r, nodes);
            text += json(r).dump() + "," + json(m.value).dump() + ","
                  + std::to_string(m.quadrature_nodes) + "\n";
        }
        emit(output, text);
    } else {
        json arr = json::array();
        for (double r : radii) {
            const auto m = ahl::integral_means(a, r, nodes);
            arr.push_back({{"r", r}, {"value", m.value}, {"nodes", m.quadrature_nodes}});
        }
        emit(output, arr.dump(2));
    }
    return 0;
}

int cmd_solve(const std::string& input, const std::string& output, int grid_points) {
    const ahl::io::BoundaryFile b = ahl::io::read_boundary_file(input);
    const ahl::AlphaHarmonicFunction f = ahl::solve_dirichlet(b.alpha, b.data);
    if (!output.empty())
        ahl::io::write_function_file(output, f);

    double max_disagreement = 0.0;
    for (const ahl::Complex z : disk_grid(grid_points, 0.95)) {
        const double d = std::abs(ahl::evaluate_series(f, z)
                                  - ahl::evaluate_poisson(b.alpha, b.data, z));
        max_disagreement = std::max(max_disagreement, d);
    }
    std::cout << json{{"degree", f.degree()},
                      {"M", f.declared_sup()},
                      {"max_disagreement", max_disagreement}}
                     .dump(2)
              << '\n';
    // Dual-path agreement is a library guarantee, not a data property.
    if (max_disagreement > 1e-9)
        throw MathViolation("series and Poisson-integral paths disagree");
    return 0;
}

int cmd_eval(const std::string& input, double zre, double zim, bool use_poisson,
             const std::string& format, const std::string& output) {
    const ahl::Complex z{zre, zim};
    ahl::Complex value;
    if (use_poisson) {
        if (ahl::io::is_function_file(input))
            throw UsageError("--poisson requires a boundary-data file");
        const ahl::io::BoundaryFile b = ahl::io::read_boundary_file(input);
        value = ahl::evaluate_poisson(b.alpha, b.data, z);
    } else {
        value = ahl::evaluate_series(ahl::io::load_function(input), z);
    }
    if (format == "csv")
        emit(output, "re,im\n" + json(value.real()).dump() + "," + json(value.imag()).dump());
    else
        emit(output, json{{"value", {value.real(), value.imag()}}}.dump(2));
    return 0;
}

int cmd_coeffs(const std::string& input, const std::string& format,
               const std::string& output) {
    const ahl::AlphaHarmonicFunction f = ahl::io::load_function(input);
    if (format == "csv") {
        std::string text = "k,re,im\n";
        for (int k = -f.degree(); k <= f.degree(); ++k) {
            const ahl::Complex c = f.coeff(k);
            if (c == ahl::Complex{0.0, 0.0}) continue;
            text += std::to_string(k) + "," + json(c.real()).dump() + ","
                  + json(c.imag()).dump() + "\n";
        }
        emit(output, text);
    } else {
        json arr = json::array();
        for (int k = -f.degree(); k <= f.degree(); ++k) {
            const ahl::Complex c = f.coeff(k);
            if (c == ahl::Complex{0.0, 0.0}) continue;
            arr.push_back({{"n", k}, {"re", c.real()}, {"im", c.imag()}});
        }
        emit(output, json{{"alpha", f.alpha().value()},
                          {"M", f.declared_sup()},
                          {"coefficients", std::move(arr)}}
                         .dump(2));
    }
    return 0;
}

int cmd_bounds(const std::string& input, const std::string& output) {
    const ahl::AlphaHarmonicFunction f = ahl::io::load_function(input);
    const auto report = ahl::check_coefficient_bounds(f);
    emit(output, ahl::io::coefficient_report_to_json(report).dump(2));
    if (!report.all_pass)
        std::cerr << "warning: declared M is not a valid sup bound for these coefficients\n";
    return 0;
}

int cmd_landau(double alpha, double M, double beta, const std::string& input,
               bool relaxed, int probe_trials, double rho_frac, std::uint64_t seed,
               const std::string& output) {
    std::optional<ahl::AlphaHarmonicFunction> f;
    if (!input.empty()) {
        f = ahl::io::load_function(input);
        alpha = f->alpha().value();
        if (M <= 0.0) M = f->declared_sup();
        beta = ahl::beta_from_function(*f);
        if (!(beta > 0.0))
            throw UsageError("landau: function has |J_f(0)| = 0; beta must be positive");
    }
    if (alpha < 0.0 && !relaxed)
        throw UsageError("landau: alpha < 0 requires --relaxed (diagnostics only)");
    const ahl::LandauInputs inputs(ahl::AlphaParam(alpha), M, beta, relaxed);
    const ahl::LandauResult result = ahl::solve_rho0(inputs);

    json j = ahl::io::landau_result_to_json(inputs, result);
    if (probe_trials > 0) {
        if (!f) throw UsageError("landau: --probe requires a function file");
        const auto probe =
            ahl::univalence_probe(*f, rho_frac * result.rho0, inputs, probe_trials, seed);
        j["probe"] = {{"trials", probe.trials},
                      {"rho", rho_frac * result.rho0},
                      {"separation_violations", probe.separation_violations},
                      {"injectivity_violations", probe.injectivity_violations},
                      {"min_separation_ratio", probe.min_separation_ratio},
                      {"min_boundary_margin", probe.min_boundary_margin},
                      {"all_pass", probe.all_pass}};
        if (!probe.all_pass)
            throw MathViolation("univalence probe found a violation below rho0");
    }
    emit(output, j.dump(2));
    return 0;
}

int cmd_verify(const std::string& input, int samples, std::uint64_t seed,
               const std::string& output) {
    const bool from_boundary = !ahl::io::is_function_file(input);
    const ahl::AlphaHarmonicFunction f = ahl::io::load_function(input);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ahl::Complex> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double r = 0.9 * std::sqrt(unit(rng));
        pts.push_back(r * std::polar(1.0, 2.0 * std::numbers::pi * unit(rng)));
    }

    json j;
    bool math_ok = true;
    bool warnings = false;

    // Library-guaranteed: analytic derivatives certify alpha-harmonicity.
    double worst_residual = 0.0;
    for (const ahl::Complex z : pts)
        worst_residual = std::max(worst_residual,
                                  ahl::alpha_harmonicity_residual(f, z, 1e-4));
    j["harmonicity"] = {{"worst_residual", worst_residual}, {"pass", worst_residual <= 1e-6}};
    math_ok = math_ok && worst_residual <= 1e-6;

    if (from_boundary) {
        // Library-guaranteed: the two solution paths must agree.
        const ahl::io::BoundaryFile b = ahl::io::read_boundary_file(input);
        double max_disagreement = 0.0;
        for (const ahl::Complex z : disk_grid(50, 0.95))
            max_disagreement = std::max(
                max_disagreement, std::abs(ahl::evaluate_series(f, z)
                                           - ahl::evaluate_poisson(b.alpha, b.data, z)));
        j["dual_path"] = {{"max_disagreement", max_disagreement},
                          {"pass", max_disagreement <= 1e-9}};
        math_ok = math_ok && max_disagreement <= 1e-9;
    }

    // Hypothesis-dependent (trust the declared M): report, never fail.
    const auto sp = ahl::schwarz_pick_check(f, pts, f.declared_sup());
    j["schwarz_pick"] = {{"worst_ratio", sp.worst_ratio}, {"pass", sp.all_pass}};
    warnings = warnings || !sp.all_pass;

    const auto bounds = ahl::check_coefficient_bounds(f);
    j["coefficient_bounds"] = ahl::io::coefficient_report_to_json(bounds);
    warnings = warnings || !bounds.all_pass;

    if (f.declared_sup() <= 1.0) {
        std::vector<std::pair<ahl::Complex, ahl::Complex>> pairs;
        for (size_t i = 0; i + 1 < pts.size(); i += 2)
            pairs.emplace_back(pts[i], pts[i + 1]);
        const auto lip = ahl::lipschitz_check(f, pairs);
        j["lipschitz"] = {{"worst_ratio", lip.worst_ratio}, {"pass", lip.all_pass}};
        warnings = warnings || !lip.all_pass;
    }

    const auto flags = ahl::check_re1(f);
    if (flags.re1_satisfied) {
        const auto growth = ahl::growth_bound_check(f, flags, pts);
        j["growth_bound"] = {{"worst_ratio", growth.worst_ratio}, {"pass", growth.all_pass}};
        warnings = warnings || !growth.all_pass;
    }

    j["all_math_checks_pass"] = math_ok;
    emit(output, j.dump(2));
    if (warnings)
        std::cerr << "warning: a declared-bound check failed; "
                     "the declared M is likely not a true sup bound\n";
    if (!math_ok)
        throw MathViolation("a mathematically guaranteed check failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-harmonic functions on the unit disk: kernels, Dirichlet "
                 "solving, coefficient and derivative bounds, Landau radius"};
    app.require_subcommand(1);

    std::string input, output, format = "json";
    double alpha = 0.0, M = 0.0, beta = 0.0;
    double zre = 0.0, zim = 0.0, theta = 0.0;
    std::vector<double> radii;
    int nodes = 64, grid_points = 200, samples = 200, probe_trials = 0;
    double rho_frac = 0.9;
    bool relaxed = false, use_poisson = false;
    std::uint64_t seed = 0;

    auto* kernel = app.add_subcommand("kernel", "evaluate the Poisson-type kernel");
    kernel->add_option("--alpha", alpha)->required();
    kernel->add_option("--z-re", zre)->required();
    kernel->add_option("--z-im", zim);
    kernel->add_option("--theta", theta);
    kernel->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    kernel->add_option("--output", output);

    auto* means = app.add_subcommand("means", "circular integral means of K_alpha");
    means->add_option("--alpha", alpha)->required();
    means->add_option("--r", radii)->required();
    means->add_option("--nodes", nodes);
    means->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    means->add_option("--output", output);

    auto* solve = app.add_subcommand("solve", "solve the Dirichlet problem from boundary data");
    solve->add_option("--input", input)->required();
    solve->add_option("--output", output);
    solve->add_option("--grid-points", grid_points);

    auto* eval = app.add_subcommand("eval", "evaluate a solution at a point");
    eval->add_option("--input", input)->required();
    eval->add_option("--z-re", zre)->required();
    eval->add_option("--z-im", zim);
    eval->add_flag("--poisson", use_poisson, "use the Poisson-integral path");
    eval->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    eval->add_option("--output", output);

    auto* coeffs = app.add_subcommand("coeffs", "print series coefficients");
    coeffs->add_option("--input", input)->required();
    coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    coeffs->add_option("--output", output);

    auto* bounds = app.add_subcommand("bounds", "coefficient bound report");
    bounds->add_option("--input", input)->required();
    bounds->add_option("--output", output);

    auto* landau = app.add_subcommand("landau", "Landau radius and univalence probe");
    landau->add_option("--alpha", alpha);
    landau->add_option("--M", M);
    landau->add_option("--beta", beta);
    landau->add_option("--input", input);
    landau->add_flag("--relaxed", relaxed, "allow alpha in (-1, 0), diagnostics only");
    landau->add_option("--probe", probe_trials, "random pair trials inside rho");
    landau->add_option("--rho-frac", rho_frac, "probe radius as a fraction of rho0");
    landau->add_option("--seed", seed);
    landau->add_option("--output", output);

    auto* verify = app.add_subcommand("verify", "run the verification suite on a function");
    verify->add_option("--input", input)->required();
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    verify->add_option("--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kernel->parsed()) return cmd_kernel(alpha, zre, zim, theta, format, output);
        if (means->parsed()) return cmd_means(alpha, radii, nodes, format, output);
        if (solve->parsed()) return cmd_solve(input, output, grid_points);
        if (eval->parsed()) return cmd_eval(input, zre, zim, use_poisson, format, output);
        if (coeffs->parsed()) return cmd_coeffs(input, format, output);
        if (bounds->parsed()) return cmd_bounds(input, output);
        if (landau->parsed())
            return cmd_landau(alpha, M, beta, input, relaxed, probe_trials, rho_frac,
                              seed, output);
        if (verify->parsed()) return cmd_verify(input, samples, seed, output);
    } catch (const MathViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
