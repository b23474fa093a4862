#include "semih/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

namespace semih {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw ValidationError("cannot serialize a non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep the float-ness visible so the value re-parses as a double.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

bool is_primitive(const Json& j) {
  return !j.is_structured();
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of primitives (e.g. [re, im] pairs) stay on one line.
      bool flat = true;
      for (const Json& item : j)
        if (!is_primitive(item)) flat = false;
      bool first = true;
      if (flat) {
        out += "[";
        for (const Json& item : j) {
          if (!first) out += ", ";
          first = false;
          dump_rec(item, out, indent, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (const Json& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_rec(item, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

CMatrix matrix_from_json_sized(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ValidationError(std::string(what) + ": expected a non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ValidationError(std::string(what) + ": ragged rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
  }
  if (!all_finite(m))
    throw ValidationError(std::string(what) + ": non-finite entries");
  return m;
}

} // namespace

std::string dump_json17(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError("complex entries must be [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j) {
  return matrix_from_json_sized(j, "matrix");
}

Json spectrum_to_json(const SpectrumSet& s) {
  Json values = Json::array();
  for (const Complex& z : s.sorted()) values.push_back(complex_to_json(z));
  Json out;
  out["values"] = std::move(values);
  out["tol"] = s.tol;
  return out;
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("problem file: expected a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw ValidationError("problem file: missing integer field 'dim'");
  ProblemFile pf;
  pf.dim = j.at("dim").get<Eigen::Index>();
  if (pf.dim < 1) throw ValidationError("problem file: dim must be positive");
  if (!j.contains("A")) throw ValidationError("problem file: missing matrix 'A'");
  pf.A = matrix_from_json_sized(j.at("A"), "A");
  auto check_dim = [&pf](const CMatrix& m, const char* what) {
    if (m.rows() != pf.dim || m.cols() != pf.dim)
      throw ValidationError(std::string(what) + ": size does not match 'dim'");
  };
  check_dim(pf.A, "A");
  if (j.contains("T")) {
    pf.T = matrix_from_json_sized(j.at("T"), "T");
    check_dim(*pf.T, "T");
  }
  if (j.contains("A2")) pf.A2 = matrix_from_json_sized(j.at("A2"), "A2");
  if (j.contains("T2")) pf.T2 = matrix_from_json_sized(j.at("T2"), "T2");
  if (pf.A2 && (pf.A2->rows() != pf.A2->cols()))
    throw ValidationError("A2 must be square");
  if (pf.T2 && pf.A2 && (pf.T2->rows() != pf.A2->rows() || pf.T2->cols() != pf.A2->cols()))
    throw ValidationError("T2 must match A2 in size");
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("problem file is not valid JSON: ") + e.what());
  }
  return problem_from_json(j);
}

Json counterexample_to_json(const Counterexample& ce) {
  Json j;
  j["seed"] = ce.seed;
  j["n"] = ce.n;
  j["r"] = ce.r;
  j["defect"] = ce.defect;
  j["A"] = matrix_to_json(ce.A);
  j["T"] = matrix_to_json(ce.T);
  if (ce.A2) j["A2"] = matrix_to_json(*ce.A2);
  if (ce.T2) j["T2"] = matrix_to_json(*ce.T2);
  return j;
}

TheoremInstance instance_from_json(const Json& j) {
  TheoremInstance inst;
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.n = j.at("n").get<int>();
  inst.r = j.at("r").get<int>();
  inst.A = matrix_from_json(j.at("A"));
  inst.T = matrix_from_json(j.at("T"));
  if (j.contains("A2")) inst.A2 = matrix_from_json(j.at("A2"));
  if (j.contains("T2")) inst.T2 = matrix_from_json(j.at("T2"));
  return inst;
}

Json report_to_json(const PropertyReport& rep) {
  Json j;
  j["theorem_id"] = rep.theorem_id;
  j["trials"] = rep.trials;
  j["failures"] = rep.failures;
  j["worst_residual"] = rep.worst_residual;
  Json ces = Json::array();
  for (const Counterexample& ce : rep.counterexamples)
    ces.push_back(counterexample_to_json(ce));
  j["counterexamples"] = std::move(ces);
  return j;
}

PropertyReport report_from_json(const Json& j) {
  PropertyReport rep;
  rep.theorem_id = j.at("theorem_id").get<std::string>();
  rep.trials = j.at("trials").get<int>();
  rep.failures = j.at("failures").get<int>();
  rep.worst_residual = j.at("worst_residual").get<double>();
  for (const Json& cj : j.at("counterexamples")) {
    Counterexample ce;
    const TheoremInstance inst = instance_from_json(cj);
    ce.seed = inst.seed;
    ce.n = inst.n;
    ce.r = inst.r;
    ce.A = inst.A;
    ce.T = inst.T;
    ce.A2 = inst.A2;
    ce.T2 = inst.T2;
    ce.defect = cj.at("defect").get<double>();
    rep.counterexamples.push_back(std::move(ce));
  }
  return rep;
}

} // namespace semih
