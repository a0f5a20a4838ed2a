#pragma once

#include "homnorden/geometry.hpp"

#include <optional>
#include <string>

namespace homnorden {

/// Load/parse failure for a structure document.  `pointer()` is the
/// JSON-pointer-style path of the offending element ("/brackets/2/i"), or ""
/// for file-level problems.
class DocumentError : public std::runtime_error {
public:
  DocumentError(const std::string& message, std::string pointer)
      : std::runtime_error(pointer.empty() ? message : message + " at " + pointer),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

private:
  std::string pointer_;
};

/// Matrix of symbolic entries.
using ParamMatrix = std::vector<std::vector<ParamExpr>>;

/// One bracket value [e_i, e_j] with i < j (1-based), as a sparse map from
/// target basis index to symbolic coefficient.
struct BracketEntry {
  int i = 0;
  int j = 0;
  std::map<int, ParamExpr> coefficients;
};

/// Parametric description of a structure: dimension, named parameter
/// defaults, bracket table, twisting map, and optionally a metric and a
/// complex-structure candidate.  Everything numeric is symbolic until
/// instantiate() substitutes a binding.
struct StructureDocument {
  std::string name;
  int dimension = 0;
  std::map<std::string, ParamExpr> parameters;  // default values, constant exprs
  std::vector<BracketEntry> brackets;           // sorted by (i, j)
  ParamMatrix phi;
  std::optional<ParamMatrix> metric;
  std::optional<ParamMatrix> complex_structure;

  /// Union of parameter names occurring in any expression plus the declared
  /// defaults, sorted.
  std::set<std::string> all_parameters() const;
};

/// Everything in a document evaluated at one binding.
struct Instantiated {
  HomLieAlgebra alg;
  std::optional<Metric> g;
  std::optional<ComplexStructure> j;
};

/// Reads and validates a document from a JSON file.  Throws DocumentError
/// for I/O problems, malformed JSON, schema violations (with pointer), bad
/// indices, duplicate bracket pairs, and non-constant parameter defaults.
StructureDocument load(const std::string& path);

/// Same validation applied to in-memory JSON text.
StructureDocument parse_document(const std::string& json_text);

/// Canonical JSON serialization; parse_document(document_to_json(d)) is
/// field-for-field identical to d (expressions compare by rendered text).
std::string document_to_json(const StructureDocument& doc);

/// Evaluates every expression at `binding`.  Throws EvalError if a parameter
/// is unbound or a division hits zero.
Instantiated instantiate(const StructureDocument& doc, const Binding& binding);

/// The declared defaults, evaluated.  Parameters without defaults are simply
/// absent from the result.
Binding default_binding(const StructureDocument& doc);

}  // namespace homnorden
