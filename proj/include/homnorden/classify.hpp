#pragma once

#include "homnorden/curvature.hpp"
#include "homnorden/document.hpp"

namespace homnorden {

enum class FlagStatus { Pass, Fail, NotEvaluated };

std::string to_string(FlagStatus status);

/// One classification verdict.  A flag passes only if it passed at every
/// binding where it was evaluable; a single failing binding fails it and
/// `witness` records the first counterexample with its binding.  Flags whose
/// inputs are absent (no metric, no complex structure, or no invertible
/// metric/twist to build a connection from) are NotEvaluated.
struct Flag {
  std::string name;
  FlagStatus status = FlagStatus::NotEvaluated;
  std::string witness;

  friend bool operator==(const Flag& a, const Flag& b) = default;
};

/// Result of classifying a document across a set of bindings.
///
/// `binding_errors` records bindings that could not be evaluated (unbound
/// parameter, division by zero, degenerate metric or twisting map).
/// `consistency_errors` records disagreements between independently computed
/// verdicts that theory requires to coincide; they indicate a defect in the
/// engine or the input and are never reconciled silently.
struct Classification {
  std::string document_name;
  std::vector<Binding> bindings;
  std::vector<Flag> flags;
  std::vector<std::string> binding_errors;
  std::vector<std::string> consistency_errors;

  const Flag* find(const std::string& name) const;
  /// Structural acceptance: the algebra axioms hold everywhere and nothing
  /// went wrong while evaluating.  Geometric flags are findings, not errors.
  bool accepted() const;

  friend bool operator==(const Classification& a, const Classification& b) = default;
};

/// Fixed flag order used by every classification.
const std::vector<std::string>& classification_flag_names();

/// Deterministic instantiation grid for a document: the declared defaults
/// (when they bind every parameter and are non-degenerate) followed by
/// rotations through a fixed value list, keeping the first five
/// non-degenerate complete bindings.  Parameter-free documents get the
/// single empty binding.
std::vector<Binding> default_instantiations(const StructureDocument& doc);

/// Classifies a document at the given bindings, or at
/// default_instantiations(doc) when `instantiations` is empty.
Classification classify(const StructureDocument& doc,
                        const std::vector<Binding>& instantiations = {});

enum class ReportFormat { Text, Structured };

/// Text: human-readable summary.  Structured: canonical JSON with a fixed
/// key order, suitable for byte-for-byte comparison and round-tripping.
std::string render_report(const Classification& c, ReportFormat format);

/// Inverse of render_report(Structured).  Throws DocumentError on input
/// that does not conform to the schema.
Classification parse_classification(const std::string& structured_json);

}  // namespace homnorden
