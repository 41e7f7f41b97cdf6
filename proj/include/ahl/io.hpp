#ifndef AHL_IO_HPP
#define AHL_IO_HPP

#include "ahl/analysis.hpp"
#include "ahl/dirichlet.hpp"
#include "ahl/landau.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace ahl::io {

// Coefficient-table file:
//   { "alpha": real, "M": real (optional), "type": "boundary"|"function",
//     "coefficients": [ { "n": int, "re": real, "im": real } ] }
// "type" defaults to "boundary".  Writing then reading reproduces finite
// doubles bit-exactly.

struct BoundaryFile {
    AlphaParam alpha;
    BoundaryData data;
};

BoundaryFile read_boundary_file(const std::string& path);
void write_boundary_file(const std::string& path, const AlphaParam& alpha,
                         const BoundaryData& data);

bool is_function_file(const std::string& path);
AlphaHarmonicFunction read_function_file(const std::string& path);
void write_function_file(const std::string& path, const AlphaHarmonicFunction& f);

// Loads either kind; boundary files are solved into a function.
AlphaHarmonicFunction load_function(const std::string& path);

// Report serialization: JSON array of
//   { "z": [re, im], "quantity": real, "bound": real, "ratio": real,
//     "pass": boolean }.
nlohmann::json check_report_to_json(const CheckReport& report);
nlohmann::json coefficient_report_to_json(const CoefficientBoundReport& report);
nlohmann::json landau_result_to_json(const LandauInputs& inputs, const LandauResult& result);

} // namespace ahl::io

#endif
