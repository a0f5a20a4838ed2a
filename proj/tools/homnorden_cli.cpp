// Command-line front end: validate / classify / connection / curvature /
// discover / corpus over JSON structure documents.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error,
// 3 I/O or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "homnorden/classify.hpp"
#include "homnorden/corpus.hpp"
#include "homnorden/curvature.hpp"
#include "homnorden/discovery.hpp"
#include "homnorden/document.hpp"
#include "homnorden/geometry.hpp"
#include "homnorden/homalg.hpp"

namespace {

using homnorden::Binding;
using homnorden::Rational;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_binding_value(const std::string& text) {
  const homnorden::ParamExpr expr = homnorden::parse_expr(text);
  return homnorden::eval_expr(expr, Binding{});
}

// "A=1,B=3/2" -> bindings; used for both --bind values and the
// HOMNORDEN_BINDINGS environment variable.
void parse_assignments(const std::string& text, Binding& into) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("binding must have the form NAME=VALUE: \"" + item + "\"");
    }
    try {
      into[item.substr(0, eq)] = parse_binding_value(item.substr(eq + 1));
    } catch (const std::exception& e) {
      throw UsageError("bad binding value in \"" + item + "\": " + e.what());
    }
  }
}

// Declared document defaults overlaid with HOMNORDEN_BINDINGS, then --bind.
Binding resolve_binding(const homnorden::StructureDocument& doc,
                        const Binding& overrides) {
  Binding binding = homnorden::default_binding(doc);
  if (const char* env = std::getenv("HOMNORDEN_BINDINGS")) {
    parse_assignments(env, binding);
  }
  for (const auto& [name, value] : overrides) binding[name] = value;
  return binding;
}

bool has_explicit_bindings(const Binding& overrides) {
  return !overrides.empty() || std::getenv("HOMNORDEN_BINDINGS") != nullptr;
}

const char* to_string(homnorden::Outcome outcome) {
  switch (outcome) {
    case homnorden::Outcome::Pass:
      return "pass";
    case homnorden::Outcome::Fail:
      return "fail";
    case homnorden::Outcome::NotApplicable:
      return "not_applicable";
  }
  return "not_applicable";
}

Json report_to_json(const homnorden::ValidationReport& report) {
  Json checks = Json::array();
  for (const homnorden::CheckResult& check : report.checks) {
    Json item = Json::object();
    item["name"] = check.name;
    item["outcome"] = to_string(check.outcome);
    Json witnesses = Json::array();
    for (const homnorden::Witness& witness : check.witnesses) {
      witnesses.push_back(witness.to_string());
    }
    item["witnesses"] = std::move(witnesses);
    item["note"] = check.note;
    checks.push_back(std::move(item));
  }
  return checks;
}

Json binding_to_json(const Binding& binding) {
  Json out = Json::object();
  for (const auto& [name, value] : binding) out[name] = value.to_string();
  return out;
}

int run_validate(const std::string& path, const Binding& overrides, bool json) {
  const homnorden::StructureDocument doc = homnorden::load(path);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);

  homnorden::ValidationReport report = homnorden::validate_algebra(inst.alg);
  const Rational det = homnorden::determinant(inst.alg.phi());
  if (det.is_zero()) {
    homnorden::CheckResult fail;
    fail.name = "twist_invertible";
    fail.outcome = homnorden::Outcome::Fail;
    fail.note = "det = 0";
    report.add(std::move(fail));
  } else {
    homnorden::CheckResult pass = homnorden::make_pass("twist_invertible");
    pass.note = "det = " + det.to_string();
    report.add(std::move(pass));
  }
  if (inst.g) report.absorb(homnorden::check_metric(inst.alg, *inst.g), "metric");
  if (inst.j) report.absorb(homnorden::check_complex(inst.alg, *inst.j), "complex");

  if (json) {
    Json root = Json::object();
    root["schema"] = "homnorden.validation/1";
    root["document"] = doc.name;
    root["binding"] = binding_to_json(binding);
    root["checks"] = report_to_json(report);
    root["all_pass"] = report.all_pass();
    std::cout << root.dump(2) << "\n";
  } else {
    std::cout << "document: " << doc.name << "\n";
    std::cout << "binding: {" << homnorden::binding_to_string(binding) << "}\n";
    std::cout << report.to_string();
  }
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_classify(const std::string& path, const Binding& overrides, bool json) {
  const homnorden::StructureDocument doc = homnorden::load(path);
  std::vector<Binding> bindings;
  if (has_explicit_bindings(overrides)) {
    bindings.push_back(resolve_binding(doc, overrides));
  }
  const homnorden::Classification result = homnorden::classify(doc, bindings);
  std::cout << homnorden::render_report(
      result, json ? homnorden::ReportFormat::Structured
                   : homnorden::ReportFormat::Text);
  return result.accepted() ? kExitPass : kExitCheckFailed;
}

int run_connection(const std::string& path, const Binding& overrides, bool json) {
  const homnorden::StructureDocument doc = homnorden::load(path);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.g) {
    std::cerr << "error: document has no metric; no canonical connection\n";
    return kExitCheckFailed;
  }
  homnorden::Connection conn = homnorden::Connection::zero(0);
  try {
    conn = homnorden::levi_civita(inst.alg, *inst.g);
  } catch (const homnorden::SingularSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  const int n = inst.alg.n();
  if (json) {
    Json entries = Json::array();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const homnorden::Vec& value = conn.at(i, j);
        if (homnorden::vec_is_zero(value)) continue;
        Json item = Json::object();
        item["i"] = i + 1;
        item["j"] = j + 1;
        Json coefficients = Json::object();
        for (int k = 0; k < n; ++k) {
          if (!value[k].is_zero()) {
            coefficients[std::to_string(k + 1)] = value[k].to_string();
          }
        }
        item["coefficients"] = std::move(coefficients);
        entries.push_back(std::move(item));
      }
    }
    Json root = Json::object();
    root["schema"] = "homnorden.connection/1";
    root["document"] = doc.name;
    root["binding"] = binding_to_json(binding);
    root["entries"] = std::move(entries);
    std::cout << root.dump(2) << "\n";
  } else {
    std::cout << "document: " << doc.name << "\n";
    std::cout << "binding: {" << homnorden::binding_to_string(binding) << "}\n";
    bool any = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const homnorden::Vec& value = conn.at(i, j);
        if (homnorden::vec_is_zero(value)) continue;
        any = true;
        std::cout << "∇_{e_" << (i + 1) << "} e_" << (j + 1) << " = "
                  << homnorden::format_basis_combo(value) << "\n";
      }
    }
    if (!any) std::cout << "all connection coefficients vanish\n";
  }
  return kExitPass;
}

int run_curvature(const std::string& path, const Binding& overrides, bool json) {
  const homnorden::StructureDocument doc = homnorden::load(path);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.g) {
    std::cerr << "error: document has no metric; no canonical connection\n";
    return kExitCheckFailed;
  }
  homnorden::Connection conn = homnorden::Connection::zero(0);
  try {
    conn = homnorden::levi_civita(inst.alg, *inst.g);
  } catch (const homnorden::SingularSystemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const homnorden::CurvatureTensor k = homnorden::curvature(inst.alg, *inst.g, conn);
  homnorden::ValidationReport identities;
  if (inst.j) {
    identities = homnorden::check_curvature_identities(inst.alg, *inst.g, *inst.j, k);
  }

  const int n = inst.alg.n();
  if (json) {
    Json components = Json::array();
    for (std::size_t offset = 0; offset < k.k04.size(); ++offset) {
      const Rational& value = k.k04.flat(offset);
      if (value.is_zero()) continue;
      std::vector<int> indices = k.k04.unflatten(offset);
      Json item = Json::object();
      Json where = Json::array();
      for (int index : indices) where.push_back(index + 1);
      item["indices"] = std::move(where);
      item["value"] = value.to_string();
      components.push_back(std::move(item));
    }
    Json root = Json::object();
    root["schema"] = "homnorden.curvature/1";
    root["document"] = doc.name;
    root["binding"] = binding_to_json(binding);
    root["components"] = std::move(components);
    root["identities"] = report_to_json(identities);
    root["all_pass"] = identities.all_pass();
    std::cout << root.dump(2) << "\n";
  } else {
    std::cout << "document: " << doc.name << "\n";
    std::cout << "binding: {" << homnorden::binding_to_string(binding) << "}\n";
    bool any = false;
    for (std::size_t offset = 0; offset < k.k04.size(); ++offset) {
      const Rational& value = k.k04.flat(offset);
      if (value.is_zero()) continue;
      any = true;
      std::vector<int> indices = k.k04.unflatten(offset);
      for (int& index : indices) ++index;
      std::cout << "K" << homnorden::format_index_tuple(indices) << " = "
                << value.to_string() << "\n";
    }
    if (!any) std::cout << "curvature vanishes identically\n";
    (void)n;
    if (inst.j) {
      std::cout << identities.to_string();
    } else {
      std::cout << "identity suite skipped: document has no complex structure\n";
    }
  }
  return identities.all_pass() ? kExitPass : kExitCheckFailed;
}

void print_matrix(const homnorden::Mat& m) {
  for (const homnorden::Vec& row : m) {
    std::cout << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) std::cout << ", ";
      std::cout << row[c].to_string();
    }
    std::cout << "]\n";
  }
}

Json matrix_to_json(const homnorden::Mat& m) {
  Json rows = Json::array();
  for (const homnorden::Vec& row : m) {
    Json cells = Json::array();
    for (const Rational& cell : row) cells.push_back(cell.to_string());
    rows.push_back(std::move(cells));
  }
  return rows;
}

int run_discover(const std::string& path, const Binding& overrides,
                 const std::vector<std::string>& predicate_names,
                 const std::string& metric_entries, bool json) {
  const homnorden::StructureDocument doc = homnorden::load(path);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);

  if (!metric_entries.empty()) {
    if (!inst.j) {
      std::cerr << "error: metric search needs a complex structure in the document\n";
      return kExitInput;
    }
    std::vector<Rational> entries;
    std::size_t pos = 0;
    while (pos < metric_entries.size()) {
      std::size_t comma = metric_entries.find(',', pos);
      if (comma == std::string::npos) comma = metric_entries.size();
      const std::string item = metric_entries.substr(pos, comma - pos);
      pos = comma + 1;
      if (item.empty()) continue;
      try {
        entries.push_back(parse_binding_value(item));
      } catch (const std::exception& e) {
        throw UsageError("bad metric entry \"" + item + "\": " + e.what());
      }
    }
    const homnorden::MetricSearchResult found =
        homnorden::search_metric(inst.alg, *inst.j, entries);
    if (json) {
      Json results = Json::array();
      for (const homnorden::Metric& metric : found.results) {
        results.push_back(matrix_to_json(metric.g));
      }
      Json root = Json::object();
      root["schema"] = "homnorden.discovery/1";
      root["document"] = doc.name;
      root["kind"] = "metric";
      root["candidates_examined"] = found.candidates_examined;
      root["results"] = std::move(results);
      std::cout << root.dump(2) << "\n";
    } else {
      std::cout << "examined " << found.candidates_examined << " candidates\n";
      std::cout << "found " << found.results.size() << " metrics\n";
      for (const homnorden::Metric& metric : found.results) {
        std::cout << "g =\n";
        print_matrix(metric.g);
      }
    }
    return kExitPass;
  }

  if (!inst.g) {
    std::cerr << "error: structure search needs a metric in the document\n";
    return kExitInput;
  }
  std::set<homnorden::Predicate> predicates;
  for (const std::string& name : predicate_names) {
    try {
      predicates.insert(homnorden::predicate_from_string(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (predicates.empty()) predicates.insert(homnorden::Predicate::Kahler);

  const homnorden::ComplexSearchResult found =
      homnorden::search_J(inst.alg, *inst.g, predicates);
  if (json) {
    Json results = Json::array();
    for (const homnorden::ComplexStructure& j : found.results) {
      results.push_back(matrix_to_json(j.j));
    }
    Json root = Json::object();
    root["schema"] = "homnorden.discovery/1";
    root["document"] = doc.name;
    root["kind"] = "complex_structure";
    root["candidates_examined"] = found.candidates_examined;
    root["results"] = std::move(results);
    std::cout << root.dump(2) << "\n";
  } else {
    std::cout << "examined " << found.candidates_examined << " candidates\n";
    std::cout << "found " << found.results.size() << " structures\n";
    for (const homnorden::ComplexStructure& j : found.results) {
      std::cout << "J =\n";
      print_matrix(j.j);
    }
  }
  return kExitPass;
}

int run_corpus(bool json) {
  const std::vector<homnorden::CorpusResult> results = homnorden::run_corpus();
  bool all_ok = true;
  if (json) {
    Json entries = Json::array();
    for (const homnorden::CorpusResult& result : results) {
      all_ok = all_ok && result.passed();
      Json item = Json::object();
      item["name"] = result.name;
      item["passed"] = result.passed();
      item["seconds"] = result.seconds;
      item["mismatches"] = result.mismatches;
      entries.push_back(std::move(item));
    }
    Json root = Json::object();
    root["schema"] = "homnorden.corpus/1";
    root["entries"] = std::move(entries);
    root["all_pass"] = all_ok;
    std::cout << root.dump(2) << "\n";
  } else {
    for (const homnorden::CorpusResult& result : results) {
      all_ok = all_ok && result.passed();
      std::cout << "entry " << result.name << ": "
                << (result.passed() ? "ok" : "MISMATCH");
      char timing[32];
      std::snprintf(timing, sizeof(timing), " (%.3f s)", result.seconds);
      std::cout << timing << "\n";
      for (const std::string& line : result.mismatches) {
        std::cout << "  " << line << "\n";
      }
    }
  }
  return all_ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for twisted Lie brackets with metrics and "
               "complex structures"};
  app.require_subcommand(1);

  std::string path;
  std::vector<std::string> bind_args;
  bool json = false;
  std::vector<std::string> predicate_names;
  std::string metric_entries;

  const auto add_common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file) {
      cmd->add_option("file", path, "structure document (JSON)")->required();
    }
    cmd->add_option("--bind", bind_args,
                    "parameter binding NAME=VALUE (repeatable)");
    cmd->add_flag("--json", json, "structured JSON output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the algebra axioms");
  add_common(validate, true);
  CLI::App* classify = app.add_subcommand("classify", "evaluate every structure flag");
  add_common(classify, true);
  CLI::App* connection =
      app.add_subcommand("connection", "print the canonical connection table");
  add_common(connection, true);
  CLI::App* curvature =
      app.add_subcommand("curvature", "print curvature components and identities");
  add_common(curvature, true);
  CLI::App* discover =
      app.add_subcommand("discover", "enumerate compatible structures");
  add_common(discover, true);
  discover->add_option("--predicate", predicate_names,
                       "required property: norden, kahler, holomorphic, abelian "
                       "(repeatable; default kahler)");
  discover->add_option("--metric-entries", metric_entries,
                       "search diagonal metrics over these comma-separated "
                       "values instead of complex structures");
  CLI::App* corpus =
      app.add_subcommand("corpus", "check every embedded example against its "
                                   "stored expectations");
  corpus->add_flag("--json", json, "structured JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    Binding overrides;
    for (const std::string& text : bind_args) parse_assignments(text, overrides);

    if (validate->parsed()) return run_validate(path, overrides, json);
    if (classify->parsed()) return run_classify(path, overrides, json);
    if (connection->parsed()) return run_connection(path, overrides, json);
    if (curvature->parsed()) return run_curvature(path, overrides, json);
    if (discover->parsed()) {
      return run_discover(path, overrides, predicate_names, metric_entries, json);
    }
    if (corpus->parsed()) return run_corpus(json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const homnorden::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const homnorden::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const homnorden::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
