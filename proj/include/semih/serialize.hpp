#pragma once

#include "semih/propsuite.hpp"

#include <json.hpp>

#include <string>

namespace semih {

using Json = nlohmann::ordered_json;

/// Serializes with floating-point numbers printed at 17 significant
/// digits, so every double round-trips bit-exactly and repeated runs emit
/// byte-identical reports.
std::string dump_json17(const Json& j, int indent = 2);

Json complex_to_json(const Complex& z);           // [re, im]
Complex complex_from_json(const Json& j);

Json matrix_to_json(const CMatrix& m);            // row-major nested arrays
CMatrix matrix_from_json(const Json& j);

Json spectrum_to_json(const SpectrumSet& s);      // values sorted by (re, im)

/// Parsed problem input: the weight A, the operator T, and optionally a
/// second pair for tensor commands.
struct ProblemFile {
  Eigen::Index dim = 0;
  CMatrix A;
  std::optional<CMatrix> T;
  std::optional<CMatrix> A2;
  std::optional<CMatrix> T2;
};

ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::string& path);

Json counterexample_to_json(const Counterexample& ce);
TheoremInstance instance_from_json(const Json& j);

Json report_to_json(const PropertyReport& rep);
PropertyReport report_from_json(const Json& j);

} // namespace semih
