#include "homnorden/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace homnorden {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bail(const std::string& message, const std::string& pointer) {
  throw DocumentError(message, pointer);
}

// Accepts an expression string or a plain JSON integer.
ParamExpr read_expr(const Json& value, const std::string& pointer) {
  if (value.is_number_integer()) {
    return ParamExpr::constant(Rational(value.get<long long>()));
  }
  if (!value.is_string()) {
    bail("expected an expression string or integer", pointer);
  }
  try {
    return parse_expr(value.get<std::string>());
  } catch (const ParseError& e) {
    bail(std::string("bad expression: ") + e.what(), pointer);
  }
}

ParamMatrix read_matrix(const Json& value, int n, const std::string& pointer) {
  if (!value.is_array() || static_cast<int>(value.size()) != n) {
    bail("expected an array of " + std::to_string(n) + " rows", pointer);
  }
  ParamMatrix out;
  out.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const Json& row = value[static_cast<std::size_t>(r)];
    const std::string row_pointer = pointer + "/" + std::to_string(r);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      bail("expected an array of " + std::to_string(n) + " entries", row_pointer);
    }
    std::vector<ParamExpr> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      entries.push_back(
          read_expr(row[static_cast<std::size_t>(c)], row_pointer + "/" + std::to_string(c)));
    }
    out.push_back(std::move(entries));
  }
  return out;
}

int read_index(const Json& value, int n, const std::string& pointer) {
  if (!value.is_number_integer()) bail("expected an integer index", pointer);
  const long long index = value.get<long long>();
  if (index < 1 || index > n) {
    bail("index " + std::to_string(index) + " out of range 1.." + std::to_string(n), pointer);
  }
  return static_cast<int>(index);
}

StructureDocument from_json(const Json& root) {
  if (!root.is_object()) bail("document root must be an object", "");
  StructureDocument doc;

  if (!root.contains("name") || !root["name"].is_string()) {
    bail("expected a string", "/name");
  }
  doc.name = root["name"].get<std::string>();

  if (!root.contains("dimension") || !root["dimension"].is_number_integer()) {
    bail("expected an integer", "/dimension");
  }
  doc.dimension = root["dimension"].get<int>();
  if (doc.dimension < 1) bail("dimension must be positive", "/dimension");
  const int n = doc.dimension;

  if (root.contains("parameters")) {
    const Json& params = root["parameters"];
    if (!params.is_object()) bail("expected an object", "/parameters");
    for (const auto& [key, value] : params.items()) {
      const std::string pointer = "/parameters/" + key;
      ParamExpr expr = read_expr(value, pointer);
      if (!expr.is_constant()) {
        bail("default value must not reference parameters", pointer);
      }
      doc.parameters.emplace(key, std::move(expr));
    }
  }

  if (!root.contains("brackets") || !root["brackets"].is_array()) {
    bail("expected an array", "/brackets");
  }
  std::set<std::pair<int, int>> seen;
  const Json& brackets = root["brackets"];
  for (std::size_t index = 0; index < brackets.size(); ++index) {
    const Json& entry = brackets[index];
    const std::string pointer = "/brackets/" + std::to_string(index);
    if (!entry.is_object()) bail("expected an object", pointer);
    BracketEntry out;
    if (!entry.contains("i")) bail("missing \"i\"", pointer);
    if (!entry.contains("j")) bail("missing \"j\"", pointer);
    out.i = read_index(entry["i"], n, pointer + "/i");
    out.j = read_index(entry["j"], n, pointer + "/j");
    if (out.i == out.j) bail("diagonal bracket must be zero", pointer);
    if (out.i > out.j) bail("bracket entries require i < j", pointer);
    if (!seen.insert({out.i, out.j}).second) {
      bail("duplicate bracket pair (" + std::to_string(out.i) + ", " +
               std::to_string(out.j) + ")",
           pointer);
    }
    if (!entry.contains("coefficients") || !entry["coefficients"].is_object()) {
      bail("expected an object", pointer + "/coefficients");
    }
    for (const auto& [key, value] : entry["coefficients"].items()) {
      const std::string coeff_pointer = pointer + "/coefficients/" + key;
      int k = 0;
      try {
        std::size_t consumed = 0;
        k = std::stoi(key, &consumed);
        if (consumed != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bail("coefficient key must be a basis index", coeff_pointer);
      }
      if (k < 1 || k > n) {
        bail("index " + key + " out of range 1.." + std::to_string(n), coeff_pointer);
      }
      out.coefficients.emplace(k, read_expr(value, coeff_pointer));
    }
    doc.brackets.push_back(std::move(out));
  }
  std::sort(doc.brackets.begin(), doc.brackets.end(),
            [](const BracketEntry& a, const BracketEntry& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });

  if (!root.contains("phi")) bail("missing twisting-map matrix", "/phi");
  doc.phi = read_matrix(root["phi"], n, "/phi");

  if (root.contains("metric")) {
    doc.metric = read_matrix(root["metric"], n, "/metric");
  }
  if (root.contains("J")) {
    doc.complex_structure = read_matrix(root["J"], n, "/J");
  }

  static const std::set<std::string> known_keys = {
      "name", "dimension", "parameters", "brackets",
      "phi",  "metric",    "J"};
  for (const auto& [key, value] : root.items()) {
    if (!known_keys.count(key)) bail("unknown field", "/" + key);
  }
  return doc;
}

}  // namespace

std::set<std::string> StructureDocument::all_parameters() const {
  std::set<std::string> out;
  for (const auto& [name, expr] : parameters) {
    out.insert(name);
    (void)expr;
  }
  auto merge = [&out](const ParamExpr& expr) {
    for (const std::string& name : expr.parameters()) out.insert(name);
  };
  for (const BracketEntry& entry : brackets) {
    for (const auto& [k, expr] : entry.coefficients) {
      merge(expr);
      (void)k;
    }
  }
  auto merge_matrix = [&merge](const ParamMatrix& m) {
    for (const auto& row : m) {
      for (const ParamExpr& expr : row) merge(expr);
    }
  };
  merge_matrix(phi);
  if (metric) merge_matrix(*metric);
  if (complex_structure) merge_matrix(*complex_structure);
  return out;
}

StructureDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open file: " + path, "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

StructureDocument parse_document(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what(), "");
  }
  return from_json(root);
}

std::string document_to_json(const StructureDocument& doc) {
  Json root = Json::object();
  root["name"] = doc.name;
  root["dimension"] = doc.dimension;
  Json params = Json::object();
  for (const auto& [name, expr] : doc.parameters) params[name] = expr.to_string();
  root["parameters"] = std::move(params);
  Json brackets = Json::array();
  for (const BracketEntry& entry : doc.brackets) {
    Json item = Json::object();
    item["i"] = entry.i;
    item["j"] = entry.j;
    Json coefficients = Json::object();
    for (const auto& [k, expr] : entry.coefficients) {
      coefficients[std::to_string(k)] = expr.to_string();
    }
    item["coefficients"] = std::move(coefficients);
    brackets.push_back(std::move(item));
  }
  root["brackets"] = std::move(brackets);
  auto matrix_to_json = [](const ParamMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json cells = Json::array();
      for (const ParamExpr& expr : row) cells.push_back(expr.to_string());
      rows.push_back(std::move(cells));
    }
    return rows;
  };
  root["phi"] = matrix_to_json(doc.phi);
  if (doc.metric) root["metric"] = matrix_to_json(*doc.metric);
  if (doc.complex_structure) {
    root["J"] = matrix_to_json(*doc.complex_structure);
  }
  return root.dump(2) + "\n";
}

Instantiated instantiate(const StructureDocument& doc, const Binding& binding) {
  const int n = doc.dimension;
  auto eval_matrix = [&binding, n](const ParamMatrix& m) {
    Mat out = mat_zero(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) out[r][c] = eval_expr(m[r][c], binding);
    }
    return out;
  };

  std::map<std::pair<int, int>, HomLieAlgebra::BracketCoeffs> table;
  for (const BracketEntry& entry : doc.brackets) {
    HomLieAlgebra::BracketCoeffs coeffs;
    for (const auto& [k, expr] : entry.coefficients) {
      Rational value = eval_expr(expr, binding);
      if (!value.is_zero()) coeffs.emplace(k, std::move(value));
    }
    if (!coeffs.empty()) table.emplace(std::pair(entry.i, entry.j), std::move(coeffs));
  }

  Instantiated out{HomLieAlgebra(n, table, eval_matrix(doc.phi)), {}, {}};
  if (doc.metric) out.g = Metric{eval_matrix(*doc.metric)};
  if (doc.complex_structure) {
    out.j = ComplexStructure{eval_matrix(*doc.complex_structure)};
  }
  return out;
}

Binding default_binding(const StructureDocument& doc) {
  Binding out;
  for (const auto& [name, expr] : doc.parameters) {
    out.emplace(name, eval_expr(expr, Binding{}));
  }
  return out;
}

}  // namespace homnorden
