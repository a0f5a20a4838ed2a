// Python bridge: every function takes document JSON text (plus an optional
// {name: value-string} binding) and returns a schema-tagged JSON string, the
// same payloads the command-line tool emits with --json.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "homnorden/classify.hpp"
#include "homnorden/corpus.hpp"
#include "homnorden/curvature.hpp"
#include "homnorden/discovery.hpp"
#include "json.hpp"

namespace {

using homnorden::Binding;
using homnorden::Rational;
using Json = nlohmann::ordered_json;
using PyBinding = std::map<std::string, std::string>;

Binding resolve_binding(const homnorden::StructureDocument& doc,
                        const PyBinding& overrides) {
  Binding binding = homnorden::default_binding(doc);
  for (const auto& [name, text] : overrides) {
    binding[name] = Rational::parse(text);
  }
  return binding;
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

Json matrix_to_json(const homnorden::Mat& m) {
  Json rows = Json::array();
  for (const homnorden::Vec& row : m) {
    Json cells = Json::array();
    for (const Rational& cell : row) cells.push_back(cell.to_string());
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string validate(const std::string& text, const PyBinding& overrides) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
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

  Json root = Json::object();
  root["schema"] = "homnorden.validation/1";
  root["document"] = doc.name;
  root["binding"] = binding_to_json(binding);
  root["checks"] = report_to_json(report);
  root["all_pass"] = report.all_pass();
  return root.dump(2);
}

std::string classify(const std::string& text, const PyBinding& overrides) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
  std::vector<Binding> bindings;
  if (!overrides.empty()) bindings.push_back(resolve_binding(doc, overrides));
  const homnorden::Classification result = homnorden::classify(doc, bindings);
  return homnorden::render_report(result, homnorden::ReportFormat::Structured);
}

std::string connection(const std::string& text, const PyBinding& overrides) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.g) {
    throw std::runtime_error("document has no metric; no canonical connection");
  }
  const homnorden::Connection conn = homnorden::levi_civita(inst.alg, *inst.g);

  const int n = inst.alg.n();
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
  return root.dump(2);
}

std::string curvature(const std::string& text, const PyBinding& overrides) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.g) {
    throw std::runtime_error("document has no metric; no canonical connection");
  }
  const homnorden::Connection conn = homnorden::levi_civita(inst.alg, *inst.g);
  const homnorden::CurvatureTensor k = homnorden::curvature(inst.alg, *inst.g, conn);
  homnorden::ValidationReport identities;
  if (inst.j) {
    identities = homnorden::check_curvature_identities(inst.alg, *inst.g, *inst.j, k);
  }

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
  return root.dump(2);
}

std::string discover_structures(const std::string& text, const PyBinding& overrides,
                                const std::vector<std::string>& predicate_names) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.g) {
    throw std::runtime_error("structure search needs a metric in the document");
  }
  std::set<homnorden::Predicate> predicates;
  for (const std::string& name : predicate_names) {
    predicates.insert(homnorden::predicate_from_string(name));
  }
  if (predicates.empty()) predicates.insert(homnorden::Predicate::Kahler);
  const homnorden::ComplexSearchResult found =
      homnorden::search_J(inst.alg, *inst.g, predicates);

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
  return root.dump(2);
}

std::string discover_metrics(const std::string& text, const PyBinding& overrides,
                             const std::vector<std::string>& entry_texts) {
  const homnorden::StructureDocument doc = homnorden::parse_document(text);
  const Binding binding = resolve_binding(doc, overrides);
  const homnorden::Instantiated inst = homnorden::instantiate(doc, binding);
  if (!inst.j) {
    throw std::runtime_error("metric search needs a complex structure in the document");
  }
  std::vector<Rational> entries;
  entries.reserve(entry_texts.size());
  for (const std::string& item : entry_texts) entries.push_back(Rational::parse(item));
  const homnorden::MetricSearchResult found =
      homnorden::search_metric(inst.alg, *inst.j, entries);

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
  return root.dump(2);
}

std::string corpus_report() {
  Json entries = Json::array();
  bool all_ok = true;
  for (const homnorden::CorpusResult& result : homnorden::run_corpus()) {
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
  return root.dump(2);
}

std::string evaluate(const std::string& expression, const PyBinding& overrides) {
  Binding binding;
  for (const auto& [name, text] : overrides) binding[name] = Rational::parse(text);
  return homnorden::eval_expr(homnorden::parse_expr(expression), binding).to_string();
}

std::string canonical_json(const std::string& text) {
  return homnorden::document_to_json(homnorden::parse_document(text));
}

}  // namespace

PYBIND11_MODULE(_homnorden, m) {
  m.doc() = "Exact-arithmetic structure analysis: validation, classification, "
            "canonical connections, curvature, and discovery searches.";
  m.def("validate", &validate, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        "Axiom and compatibility checks as a homnorden.validation/1 JSON string.");
  m.def("classify", &classify, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        "Flag verdicts as a homnorden.classification/1 JSON string; an empty "
        "binding classifies over the default binding grid.");
  m.def("connection", &connection, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        "Canonical connection table as a homnorden.connection/1 JSON string.");
  m.def("curvature", &curvature, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        "Curvature components and identity checks as a homnorden.curvature/1 "
        "JSON string.");
  m.def("discover_structures", &discover_structures, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        pybind11::arg("predicates") = std::vector<std::string>{},
        "Signed-permutation complex-structure search as a homnorden.discovery/1 "
        "JSON string; empty predicate list means kahler.");
  m.def("discover_metrics", &discover_metrics, pybind11::arg("document"),
        pybind11::arg("binding") = PyBinding{},
        pybind11::arg("entries") = std::vector<std::string>{},
        "Diagonal-metric search as a homnorden.discovery/1 JSON string.");
  m.def("corpus", &corpus_report,
        "Re-derives the embedded reference corpus; homnorden.corpus/1 JSON string.");
  m.def("evaluate", &evaluate, pybind11::arg("expression"),
        pybind11::arg("binding") = PyBinding{},
        "Evaluates a rational parameter expression exactly; returns the value "
        "as a string.");
  m.def("canonical_json", &canonical_json, pybind11::arg("document"),
        "Parses a document and returns its canonical serialization.");
  m.attr("__version__") = "1.0.0";
}
