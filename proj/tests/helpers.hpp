#pragma once

#include <string>
#include <vector>

#include "homnorden/corpus.hpp"
#include "homnorden/document.hpp"

namespace homnorden::testing {

inline const CorpusEntry& entry(const std::string& name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no corpus entry named " + name);
}

/// Instantiates a corpus entry at one of its stored bindings.
inline Instantiated instantiate_entry(const std::string& name,
                                      std::size_t binding_index = 0) {
  const CorpusEntry& e = entry(name);
  const StructureDocument doc = parse_document(e.json_text);
  return instantiate(doc, e.bindings.at(binding_index));
}

inline Vec vec_of(const std::vector<long long>& values) {
  Vec out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline Mat mat_of(const std::vector<std::vector<long long>>& rows) {
  Mat out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(vec_of(row));
  return out;
}

}  // namespace homnorden::testing
