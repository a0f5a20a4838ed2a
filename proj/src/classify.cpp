#include "homnorden/classify.hpp"

#include <json.hpp>

#include <array>

namespace homnorden {

namespace {

using Json = nlohmann::ordered_json;

const std::array<const char*, 13> kFlagNames = {
    "valid_hom_lie", "proper",        "involutive",  "regular",
    "metric_ok",     "almost_complex", "integrable",  "norden",
    "kahler_norden", "holomorphic",   "abelian_J",   "flat",
    "hom_left_symmetric"};

std::string first_failure(const ValidationReport& report) {
  for (const CheckResult& check : report.checks) {
    if (!check.failed()) continue;
    std::string out = check.name;
    if (!check.witnesses.empty()) {
      out += " " + check.witnesses.front().to_string();
    } else if (!check.note.empty()) {
      out += " (" + check.note + ")";
    }
    return out;
  }
  return "";
}

struct FlagAccumulator {
  bool any_fail = false;
  bool any_pass = false;
  std::string witness;  // first failure, with its binding

  void feed(FlagStatus status, const std::string& failure_witness) {
    if (status == FlagStatus::Fail) {
      if (!any_fail) witness = failure_witness;
      any_fail = true;
    } else if (status == FlagStatus::Pass) {
      any_pass = true;
    }
  }

  FlagStatus aggregate() const {
    if (any_fail) return FlagStatus::Fail;
    if (any_pass) return FlagStatus::Pass;
    return FlagStatus::NotEvaluated;
  }
};

struct BindingOutcome {
  std::map<std::string, FlagStatus> status;
  std::map<std::string, std::string> witness;

  void set(const std::string& flag, bool pass, const std::string& failure_witness = "") {
    status[flag] = pass ? FlagStatus::Pass : FlagStatus::Fail;
    if (!pass) witness[flag] = failure_witness;
  }
};

// All per-binding verdicts; binding-level problems are appended to the error
// lists instead of throwing.
std::optional<BindingOutcome> evaluate_binding(const StructureDocument& doc,
                                               const Binding& binding,
                                               std::vector<std::string>& binding_errors,
                                               std::vector<std::string>& consistency_errors) {
  const std::string where = "binding {" + binding_to_string(binding) + "}";
  std::optional<Instantiated> inst;
  try {
    inst = instantiate(doc, binding);
  } catch (const EvalError& e) {
    binding_errors.push_back(where + ": " + e.what());
    return std::nullopt;
  }
  const HomLieAlgebra& alg = inst->alg;
  BindingOutcome out;

  const ValidationReport structure = validate_algebra(alg);
  out.set("valid_hom_lie", structure.all_pass(), first_failure(structure));

  const PhiFlags phi = classify_phi(alg);
  out.set("proper", phi.proper, "twisting map equals the identity");
  out.set("involutive", phi.involutive, "twisting map does not square to the identity");
  out.set("regular", phi.regular, "twisting map is singular");

  bool metric_invertible = false;
  if (inst->g) {
    const ValidationReport metric_report = check_metric(alg, *inst->g);
    out.set("metric_ok", metric_report.all_pass(), first_failure(metric_report));
    metric_invertible = !determinant(inst->g->g).is_zero();
  }

  if (inst->j) {
    const ValidationReport complex_report = check_complex(alg, *inst->j);
    out.set("almost_complex", complex_report.all_pass(), first_failure(complex_report));

    const Tensor torsion = nijenhuis(alg, *inst->j);
    std::string torsion_witness;
    if (!torsion.is_zero()) {
      for (std::size_t k = 0; k < torsion.size(); ++k) {
        if (!torsion.flat(k).is_zero()) {
          std::vector<int> indices = torsion.unflatten(k);
          torsion_witness = "nonzero torsion at (" + std::to_string(indices[1] + 1) +
                            ", " + std::to_string(indices[2] + 1) + ")";
          break;
        }
      }
    }
    out.set("integrable", torsion.is_zero(), torsion_witness);

    const ValidationReport invariant = check_abelian(alg, *inst->j);
    out.set("abelian_J", invariant.all_pass(), first_failure(invariant));
  }

  if (inst->g && inst->j) {
    const ValidationReport norden_report = check_norden(alg, *inst->g, *inst->j);
    out.set("norden", norden_report.all_pass(), first_failure(norden_report));
    const CheckResult* agree = norden_report.find("norden_forms_agree");
    if (agree != nullptr && agree->failed()) {
      consistency_errors.push_back(
          where + ": anti-isometry and self-adjointness compatibility forms disagree");
    }

    const ValidationReport holo = check_holomorphic_metric(alg, *inst->g, *inst->j);
    out.set("holomorphic", holo.all_pass(), first_failure(holo));
  }

  const bool connection_available =
      inst->g && metric_invertible && phi.regular;
  if (inst->g && !connection_available) {
    binding_errors.push_back(where +
                             ": canonical connection unavailable (degenerate metric or "
                             "twisting map); connection-dependent flags skipped");
  }
  if (connection_available) {
    if (inst->j) {
      const ValidationReport kahler_report = check_kahler(alg, *inst->g, *inst->j);
      out.set("kahler_norden", kahler_report.all_pass(), first_failure(kahler_report));
    }
    const Connection conn = levi_civita(alg, *inst->g);
    const CurvatureTensor k = curvature(alg, *inst->g, conn);
    std::string flat_witness;
    if (!k.k13.is_zero()) {
      for (std::size_t offset = 0; offset < k.k13.size(); ++offset) {
        if (!k.k13.flat(offset).is_zero()) {
          std::vector<int> indices = k.k13.unflatten(offset);
          for (int& index : indices) ++index;
          flat_witness = "nonzero curvature component " + format_index_tuple(indices);
          break;
        }
      }
    }
    out.set("flat", k.k13.is_zero(), flat_witness);

    const ValidationReport lsym = check_left_symmetric(alg, conn);
    out.set("hom_left_symmetric", lsym.all_pass(), first_failure(lsym));
  }

  // Independently derived verdicts that must agree.
  const auto evaluated = [&out](const char* flag) {
    return out.status.count(flag) != 0;
  };
  if (evaluated("kahler_norden") && evaluated("holomorphic") &&
      out.status["kahler_norden"] != out.status["holomorphic"]) {
    consistency_errors.push_back(
        where + ": parallel-structure and holomorphic-metric verdicts disagree");
  }
  if (evaluated("kahler_norden") && evaluated("integrable") &&
      out.status["kahler_norden"] == FlagStatus::Pass &&
      out.status["integrable"] == FlagStatus::Fail) {
    consistency_errors.push_back(
        where + ": parallel structure with non-vanishing torsion");
  }
  return out;
}

bool binding_is_degenerate(const StructureDocument& doc, const Binding& binding) {
  try {
    const Instantiated inst = instantiate(doc, binding);
    if (determinant(inst.alg.phi()).is_zero()) return true;
    if (inst.g && determinant(inst.g->g).is_zero()) return true;
  } catch (const EvalError&) {
    return true;
  }
  return false;
}

}  // namespace

std::string to_string(FlagStatus status) {
  switch (status) {
    case FlagStatus::Pass:
      return "pass";
    case FlagStatus::Fail:
      return "fail";
    case FlagStatus::NotEvaluated:
      return "not_evaluated";
  }
  return "not_evaluated";
}

const std::vector<std::string>& classification_flag_names() {
  static const std::vector<std::string> names(kFlagNames.begin(), kFlagNames.end());
  return names;
}

const Flag* Classification::find(const std::string& name) const {
  for (const Flag& flag : flags) {
    if (flag.name == name) return &flag;
  }
  return nullptr;
}

bool Classification::accepted() const {
  const Flag* valid = find("valid_hom_lie");
  return valid != nullptr && valid->status == FlagStatus::Pass &&
         binding_errors.empty() && consistency_errors.empty();
}

std::vector<Binding> default_instantiations(const StructureDocument& doc) {
  const std::set<std::string> names = doc.all_parameters();
  if (names.empty()) return {Binding{}};

  // Fixed value list; rotation t assigns parameter m the value at
  // (t + m) mod size, so consecutive bindings are never proportional.
  static const std::array<int, 10> kValues = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23};

  std::vector<Binding> out;
  const Binding declared = default_binding(doc);
  bool declared_complete = true;
  for (const std::string& name : names) {
    if (!declared.count(name)) declared_complete = false;
  }
  if (declared_complete && !binding_is_degenerate(doc, declared)) {
    out.push_back(declared);
  }

  int kept = 0;
  for (std::size_t t = 0; t < kValues.size() && kept < 5; ++t) {
    Binding candidate;
    std::size_t m = 0;
    for (const std::string& name : names) {
      candidate.emplace(name, Rational(kValues[(t + m) % kValues.size()]));
      ++m;
    }
    if (binding_is_degenerate(doc, candidate)) continue;
    if (!out.empty() && candidate == out.front()) continue;  // duplicate of defaults
    out.push_back(std::move(candidate));
    ++kept;
  }
  return out;
}

Classification classify(const StructureDocument& doc,
                        const std::vector<Binding>& instantiations) {
  Classification result;
  result.document_name = doc.name;
  result.bindings = instantiations.empty() ? default_instantiations(doc) : instantiations;

  if (result.bindings.empty()) {
    result.binding_errors.push_back("no non-degenerate instantiation found");
  }

  std::map<std::string, FlagAccumulator> accumulators;
  for (const Binding& binding : result.bindings) {
    const std::optional<BindingOutcome> outcome =
        evaluate_binding(doc, binding, result.binding_errors, result.consistency_errors);
    if (!outcome) continue;
    const std::string where = "binding {" + binding_to_string(binding) + "}";
    for (const auto& [flag, status] : outcome->status) {
      std::string witness;
      if (status == FlagStatus::Fail) {
        auto it = outcome->witness.find(flag);
        witness = where;
        if (it != outcome->witness.end() && !it->second.empty()) {
          witness += ": " + it->second;
        }
      }
      accumulators[flag].feed(status, witness);
    }
  }

  for (const char* name : kFlagNames) {
    Flag flag;
    flag.name = name;
    const auto it = accumulators.find(name);
    if (it != accumulators.end()) {
      flag.status = it->second.aggregate();
      if (flag.status == FlagStatus::Fail) flag.witness = it->second.witness;
    }
    result.flags.push_back(std::move(flag));
  }
  return result;
}

std::string render_report(const Classification& c, ReportFormat format) {
  if (format == ReportFormat::Text) {
    std::string out = "document: " + c.document_name + "\n";
    out += "bindings:\n";
    if (c.bindings.empty()) out += "  (none)\n";
    for (const Binding& binding : c.bindings) {
      out += "  {" + binding_to_string(binding) + "}\n";
    }
    out += "flags:\n";
    for (const Flag& flag : c.flags) {
      out += "  " + flag.name + "=" + to_string(flag.status) + "\n";
      if (!flag.witness.empty()) out += "    " + flag.witness + "\n";
    }
    if (!c.binding_errors.empty()) {
      out += "binding errors:\n";
      for (const std::string& error : c.binding_errors) out += "  " + error + "\n";
    }
    if (!c.consistency_errors.empty()) {
      out += "consistency errors:\n";
      for (const std::string& error : c.consistency_errors) out += "  " + error + "\n";
    }
    return out;
  }

  Json root = Json::object();
  root["schema"] = "homnorden.classification/1";
  root["document"] = c.document_name;
  Json bindings = Json::array();
  for (const Binding& binding : c.bindings) {
    Json item = Json::object();
    for (const auto& [name, value] : binding) item[name] = value.to_string();
    bindings.push_back(std::move(item));
  }
  root["bindings"] = std::move(bindings);
  Json flags = Json::array();
  for (const Flag& flag : c.flags) {
    Json item = Json::object();
    item["name"] = flag.name;
    item["status"] = to_string(flag.status);
    item["witness"] = flag.witness;
    flags.push_back(std::move(item));
  }
  root["flags"] = std::move(flags);
  root["binding_errors"] = c.binding_errors;
  root["consistency_errors"] = c.consistency_errors;
  return root.dump(2) + "\n";
}

Classification parse_classification(const std::string& structured_json) {
  Json root;
  try {
    root = Json::parse(structured_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what(), "");
  }
  if (!root.is_object() || root.value("schema", "") != "homnorden.classification/1") {
    throw DocumentError("unrecognized classification schema", "/schema");
  }
  Classification out;
  out.document_name = root.value("document", "");
  if (root.contains("bindings")) {
    for (const Json& item : root["bindings"]) {
      Binding binding;
      for (const auto& [name, value] : item.items()) {
        binding.emplace(name, Rational::parse(value.get<std::string>()));
      }
      out.bindings.push_back(std::move(binding));
    }
  }
  if (root.contains("flags")) {
    for (const Json& item : root["flags"]) {
      Flag flag;
      flag.name = item.value("name", "");
      const std::string status = item.value("status", "not_evaluated");
      flag.status = status == "pass"  ? FlagStatus::Pass
                    : status == "fail" ? FlagStatus::Fail
                                       : FlagStatus::NotEvaluated;
      flag.witness = item.value("witness", "");
      out.flags.push_back(std::move(flag));
    }
  }
  if (root.contains("binding_errors")) {
    out.binding_errors = root["binding_errors"].get<std::vector<std::string>>();
  }
  if (root.contains("consistency_errors")) {
    out.consistency_errors = root["consistency_errors"].get<std::vector<std::string>>();
  }
  return out;
}

}  // namespace homnorden
