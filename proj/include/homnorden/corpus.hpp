#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homnorden/classify.hpp"
#include "homnorden/exactnum.hpp"

namespace homnorden {

// Expected Levi-Civita table at one binding: nonzero entries only, keyed by
// the 1-based direction/argument pair; values map basis index -> coefficient.
struct ConnectionSnapshot {
  Binding binding;
  std::map<std::pair<int, int>, std::map<int, Rational>> nonzero;
};

// Expected metric curvature components at one binding: nonzero entries of the
// fully lowered tensor, keyed by 1-based (x, y, z, w). An empty map asserts
// the tensor vanishes identically.
struct CurvatureSnapshot {
  Binding binding;
  std::map<std::array<int, 4>, Rational> nonzero;
};

// One embedded reference structure with its independently derived verdicts.
struct CorpusEntry {
  std::string name;
  std::string json_text;  // complete document, same bytes as data/<name>.json
  std::vector<Binding> bindings;
  std::map<std::string, FlagStatus> expected_flags;
  std::vector<ConnectionSnapshot> connections;
  std::vector<CurvatureSnapshot> curvatures;
};

const std::vector<CorpusEntry>& corpus();

struct CorpusResult {
  std::string name;
  std::vector<std::string> mismatches;  // empty when the entry checks out
  double seconds = 0.0;

  bool passed() const { return mismatches.empty(); }
};

// Re-derives every entry's classification and snapshots from its embedded
// document and diffs them against the stored expectations.
std::vector<CorpusResult> run_corpus();

}  // namespace homnorden
