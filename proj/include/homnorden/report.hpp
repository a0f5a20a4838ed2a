#pragma once

#include "homnorden/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homnorden {

/// Counterexample for a failed check: the 1-based basis indices at which the
/// identity broke, plus the defect (left side minus right side) when it is
/// vector-valued, or a scalar defect otherwise.
struct Witness {
  std::vector<int> indices;
  std::optional<Vec> defect_vector;
  std::optional<Rational> defect_scalar;

  std::string to_string() const;
};

enum class Outcome { Pass, Fail, NotApplicable };

/// One named verdict inside a ValidationReport.  `witnesses` holds the first
/// counterexample found (never an exhaustive list).  `note` carries free-form
/// context such as which precondition was missing.
struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return outcome == Outcome::Pass; }
  bool failed() const { return outcome == Outcome::Fail; }
};

/// Ordered list of named checks.  A report as a whole passes when no check
/// failed; checks marked NotApplicable do not count against it.
struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  void add(CheckResult result);
  /// Appends every check of `other`, prefixing names with "prefix.".
  void absorb(const ValidationReport& other, const std::string& prefix);

  std::string to_string() const;
};

CheckResult make_pass(std::string name);
CheckResult make_fail(std::string name, Witness witness, std::string note = "");
CheckResult make_not_applicable(std::string name, std::string note);

/// Renders a coordinate vector as a combination of basis vectors, e.g.
/// "e_1 - 3/2*e_4"; the zero vector renders as "0".
std::string format_basis_combo(const Vec& v);

/// "(i, j, k)" with the 1-based indices of a witness tuple.
std::string format_index_tuple(const std::vector<int>& indices);

}  // namespace homnorden
