#include "ahl/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>

namespace ahl::io {

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

void dump_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

std::map<int, Complex> parse_coefficients(const json& j) {
    std::map<int, Complex> c;
    for (const auto& entry : j.at("coefficients")) {
        const int n = entry.at("n").get<int>();
        c[n] = Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
    }
    return c;
}

json coefficients_to_json(int degree, const std::function<Complex(int)>& coeff) {
    json arr = json::array();
    for (int n = -degree; n <= degree; ++n) {
        const Complex c = coeff(n);
        if (c == Complex{0.0, 0.0}) continue;
        arr.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
    }
    return arr;
}

} // namespace

BoundaryFile read_boundary_file(const std::string& path) {
    const json j = load_json(path);
    AlphaParam alpha(j.at("alpha").get<double>());
    std::optional<double> sup;
    if (j.contains("M")) sup = j.at("M").get<double>();
    return BoundaryFile{alpha, BoundaryData(parse_coefficients(j), sup)};
}

void write_boundary_file(const std::string& path, const AlphaParam& alpha,
                         const BoundaryData& data) {
    json j;
    j["alpha"] = alpha.value();
    j["M"] = data.sup_norm();
    j["type"] = "boundary";
    j["coefficients"] =
        coefficients_to_json(data.degree(), [&](int n) { return data.coeff(n); });
    dump_json(path, j);
}

bool is_function_file(const std::string& path) {
    const json j = load_json(path);
    return j.value("type", "boundary") == std::string("function");
}

AlphaHarmonicFunction read_function_file(const std::string& path) {
    const json j = load_json(path);
    AlphaParam alpha(j.at("alpha").get<double>());
    return AlphaHarmonicFunction(alpha, parse_coefficients(j), j.at("M").get<double>());
}

void write_function_file(const std::string& path, const AlphaHarmonicFunction& f) {
    json j;
    j["alpha"] = f.alpha().value();
    j["M"] = f.declared_sup();
    j["type"] = "function";
    j["coefficients"] =
        coefficients_to_json(f.degree(), [&](int n) { return f.coeff(n); });
    dump_json(path, j);
}

AlphaHarmonicFunction load_function(const std::string& path) {
    if (is_function_file(path))
        return read_function_file(path);
    const BoundaryFile b = read_boundary_file(path);
    return solve_dirichlet(b.alpha, b.data);
}

json check_report_to_json(const CheckReport& report) {
    json arr = json::array();
    for (const auto& item : report.items) {
        arr.push_back({{"z", {item.z.real(), item.z.imag()}},
                       {"quantity", item.quantity},
                       {"bound", item.bound},
                       {"ratio", item.ratio},
                       {"pass", item.pass}});
    }
    return arr;
}

json coefficient_report_to_json(const CoefficientBoundReport& report) {
    json arr = json::array();
    for (const auto& row : report.rows) {
        json r = {{"k", row.k},
                  {"sun1_lhs", row.sun1_lhs},
                  {"sun1_bound", row.sun1_bound},
                  {"pass", row.pass}};
        if (row.k >= 1) {
            r["sun2_lhs"] = row.sun2_lhs;
            r["sun2_bound"] = row.sun2_bound;
            r["sat2_worst_lhs"] = row.sat2_worst_lhs;
            r["sat2_bound"] = row.sat2_bound;
        }
        arr.push_back(std::move(r));
    }
    return json{{"rows", std::move(arr)}, {"all_pass", report.all_pass}};
}

json landau_result_to_json(const LandauInputs& inputs, const LandauResult& result) {
    return json{{"alpha", inputs.alpha.value()},
                {"M", inputs.M},
                {"beta", inputs.beta},
                {"rho0", result.rho0},
                {"R0_lower", result.R0_lower},
                {"phi_residual", result.phi_residual}};
}

} // namespace ahl::io
