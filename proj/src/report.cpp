#include "homnorden/report.hpp"

namespace homnorden {

std::string format_basis_combo(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (c.is_zero()) continue;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "e_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string format_index_tuple(const std::vector<int>& indices) {
  std::string out = "(";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(indices[i]);
  }
  out += ")";
  return out;
}

std::string Witness::to_string() const {
  std::string out = "at " + format_index_tuple(indices);
  if (defect_vector) {
    out += ": defect " + format_basis_combo(*defect_vector);
  } else if (defect_scalar) {
    out += ": defect " + defect_scalar->to_string();
  }
  return out;
}

bool ValidationReport::all_pass() const {
  for (const CheckResult& check : checks) {
    if (check.failed()) return false;
  }
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const CheckResult& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

void ValidationReport::add(CheckResult result) {
  checks.push_back(std::move(result));
}

void ValidationReport::absorb(const ValidationReport& other, const std::string& prefix) {
  for (CheckResult check : other.checks) {
    check.name = prefix + "." + check.name;
    checks.push_back(std::move(check));
  }
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const CheckResult& check : checks) {
    out += check.name + ": ";
    switch (check.outcome) {
      case Outcome::Pass:
        out += "pass";
        break;
      case Outcome::Fail:
        out += "fail";
        break;
      case Outcome::NotApplicable:
        out += "not applicable";
        break;
    }
    if (!check.note.empty()) out += " (" + check.note + ")";
    out += "\n";
    for (const Witness& witness : check.witnesses) {
      out += "  " + witness.to_string() + "\n";
    }
  }
  return out;
}

CheckResult make_pass(std::string name) {
  CheckResult result;
  result.name = std::move(name);
  result.outcome = Outcome::Pass;
  return result;
}

CheckResult make_fail(std::string name, Witness witness, std::string note) {
  CheckResult result;
  result.name = std::move(name);
  result.outcome = Outcome::Fail;
  result.witnesses.push_back(std::move(witness));
  result.note = std::move(note);
  return result;
}

CheckResult make_not_applicable(std::string name, std::string note) {
  CheckResult result;
  result.name = std::move(name);
  result.outcome = Outcome::NotApplicable;
  result.note = std::move(note);
  return result;
}

}  // namespace homnorden
