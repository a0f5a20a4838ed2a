#include "homnorden/corpus.hpp"

#include <chrono>
#include <sstream>

#include "homnorden/curvature.hpp"
#include "homnorden/document.hpp"
#include "homnorden/geometry.hpp"
#include "homnorden/linalg.hpp"

namespace homnorden {

namespace {

#include "corpus_data.inc"

Binding bind(std::initializer_list<std::pair<const char*, Rational>> values) {
  Binding out;
  for (const auto& [name, value] : values) out.emplace(name, value);
  return out;
}

// Shorthand: flag table in canonical order, 'P' pass / 'F' fail / '-' skipped.
std::map<std::string, FlagStatus> flag_row(const char (&row)[14]) {
  std::map<std::string, FlagStatus> out;
  const std::vector<std::string>& names = classification_flag_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    switch (row[i]) {
      case 'P':
        out[names[i]] = FlagStatus::Pass;
        break;
      case 'F':
        out[names[i]] = FlagStatus::Fail;
        break;
      default:
        out[names[i]] = FlagStatus::NotEvaluated;
        break;
    }
  }
  return out;
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  {
    CorpusEntry e;
    e.name = "norden4_nonholomorphic";
    e.json_text = kNorden4NonholomorphicJson;
    e.bindings = {bind({{"a", Rational(1)},
                        {"A", Rational(1)},
                        {"B", Rational(2)},
                        {"C", Rational(3)},
                        {"D", Rational(4)}})};
    // valid proper invol regular metric complex integrable norden kahler holo
    // abelian flat lsym
    e.expected_flags = flag_row("PPPPPPPPFFPFF");
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "norden4_nonintegrable";
    e.json_text = kNorden4NonintegrableJson;
    e.bindings = {bind({{"a", Rational(1)}})};
    e.expected_flags = flag_row("PPPPPPFPFFFFF");
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "kahler4";
    e.json_text = kKahler4Json;
    e.bindings = {bind({{"A", Rational(1)}, {"B", Rational(1)}}),
                  bind({{"A", Rational(2)}, {"B", Rational(3)}})};
    e.expected_flags = flag_row("PPPPPPPPPPFFF");

    ConnectionSnapshot c1;
    c1.binding = e.bindings[0];
    c1.nonzero = {
        {{2, 1}, {{3, Rational(1)}}},  {{2, 2}, {{4, Rational(-1)}}},
        {{2, 3}, {{1, Rational(-1)}}}, {{2, 4}, {{2, Rational(1)}}},
        {{3, 1}, {{2, Rational(-1)}}}, {{3, 2}, {{1, Rational(-1)}}},
        {{3, 3}, {{4, Rational(1)}}},  {{3, 4}, {{3, Rational(1)}}},
    };
    ConnectionSnapshot c2;
    c2.binding = e.bindings[1];
    c2.nonzero = {
        {{2, 1}, {{3, Rational(1)}}},     {{2, 2}, {{4, Rational(-3, 2)}}},
        {{2, 3}, {{1, Rational(-3, 2)}}}, {{2, 4}, {{2, Rational(1)}}},
        {{3, 1}, {{2, Rational(-1)}}},    {{3, 2}, {{1, Rational(-3, 2)}}},
        {{3, 3}, {{4, Rational(3, 2)}}},  {{3, 4}, {{3, Rational(1)}}},
    };
    e.connections = {std::move(c1), std::move(c2)};

    CurvatureSnapshot k;
    k.binding = e.bindings[0];
    k.nonzero = {
        {{1, 2, 1, 2}, Rational(-1)}, {{1, 2, 2, 1}, Rational(1)},
        {{1, 2, 3, 4}, Rational(1)},  {{1, 2, 4, 3}, Rational(-1)},
        {{1, 3, 1, 3}, Rational(1)},  {{1, 3, 2, 4}, Rational(1)},
        {{1, 3, 3, 1}, Rational(-1)}, {{1, 3, 4, 2}, Rational(-1)},
        {{2, 1, 1, 2}, Rational(1)},  {{2, 1, 2, 1}, Rational(-1)},
        {{2, 1, 3, 4}, Rational(-1)}, {{2, 1, 4, 3}, Rational(1)},
        {{2, 4, 1, 3}, Rational(1)},  {{2, 4, 2, 4}, Rational(1)},
        {{2, 4, 3, 1}, Rational(-1)}, {{2, 4, 4, 2}, Rational(-1)},
        {{3, 1, 1, 3}, Rational(-1)}, {{3, 1, 2, 4}, Rational(-1)},
        {{3, 1, 3, 1}, Rational(1)},  {{3, 1, 4, 2}, Rational(1)},
        {{3, 4, 1, 2}, Rational(1)},  {{3, 4, 2, 1}, Rational(-1)},
        {{3, 4, 3, 4}, Rational(-1)}, {{3, 4, 4, 3}, Rational(1)},
        {{4, 2, 1, 3}, Rational(-1)}, {{4, 2, 2, 4}, Rational(-1)},
        {{4, 2, 3, 1}, Rational(1)},  {{4, 2, 4, 2}, Rational(1)},
        {{4, 3, 1, 2}, Rational(-1)}, {{4, 3, 2, 1}, Rational(1)},
        {{4, 3, 3, 4}, Rational(1)},  {{4, 3, 4, 3}, Rational(-1)},
    };
    e.curvatures = {std::move(k)};
    out.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "kahler6_flat";
    e.json_text = kKahler6FlatJson;
    e.bindings = {bind({{"A", Rational(2)}})};
    e.expected_flags = flag_row("PPPPPPPPPPPPP");

    ConnectionSnapshot c;
    c.binding = e.bindings[0];
    c.nonzero = {
        {{5, 3}, {{2, Rational(1)}}},     {{5, 4}, {{1, Rational(-1)}}},
        {{5, 5}, {{4, Rational(1, 2)}}},  {{5, 6}, {{3, Rational(1, 2)}}},
        {{6, 3}, {{1, Rational(-1)}}},    {{6, 4}, {{2, Rational(-1)}}},
        {{6, 5}, {{3, Rational(-1, 2)}}}, {{6, 6}, {{4, Rational(1, 2)}}},
    };
    e.connections = {std::move(c)};

    CurvatureSnapshot k;
    k.binding = e.bindings[0];
    k.nonzero = {};  // flat: every component vanishes
    e.curvatures = {std::move(k)};
    out.push_back(std::move(e));
  }

  return out;
}

Vec snapshot_vector(int n, const std::map<int, Rational>& components) {
  Vec out = vec_zero(n);
  for (const auto& [index, value] : components) out[index - 1] = value;
  return out;
}

void check_connection(const StructureDocument& doc, const ConnectionSnapshot& snap,
                      std::vector<std::string>& mismatches) {
  const Instantiated inst = instantiate(doc, snap.binding);
  const std::string where = "connection at {" + binding_to_string(snap.binding) + "}";
  if (!inst.g) {
    mismatches.push_back(where + ": document has no metric");
    return;
  }
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const int n = inst.alg.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Vec expected = vec_zero(n);
      const auto it = snap.nonzero.find({i, j});
      if (it != snap.nonzero.end()) expected = snapshot_vector(n, it->second);
      const Vec& actual = conn.at(i - 1, j - 1);
      if (actual != expected) {
        mismatches.push_back(where + ": entry (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") is " +
                             format_basis_combo(actual) + ", expected " +
                             format_basis_combo(expected));
      }
    }
  }
}

void check_curvature(const StructureDocument& doc, const CurvatureSnapshot& snap,
                     std::vector<std::string>& mismatches) {
  const Instantiated inst = instantiate(doc, snap.binding);
  const std::string where = "curvature at {" + binding_to_string(snap.binding) + "}";
  if (!inst.g) {
    mismatches.push_back(where + ": document has no metric");
    return;
  }
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
  const int n = inst.alg.n();
  int reported = 0;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        for (int w = 1; w <= n; ++w) {
          Rational expected;
          const auto it = snap.nonzero.find({x, y, z, w});
          if (it != snap.nonzero.end()) expected = it->second;
          const Rational& actual = k.k04.at({x - 1, y - 1, z - 1, w - 1});
          if (actual != expected) {
            if (++reported <= 8) {
              mismatches.push_back(
                  where + ": component " + format_index_tuple({x, y, z, w}) +
                  " is " + actual.to_string() + ", expected " + expected.to_string());
            }
          }
        }
      }
    }
  }
  if (reported > 8) {
    mismatches.push_back(where + ": " + std::to_string(reported - 8) +
                         " further component mismatches suppressed");
  }
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

std::vector<CorpusResult> run_corpus() {
  std::vector<CorpusResult> results;
  for (const CorpusEntry& entry : corpus()) {
    CorpusResult result;
    result.name = entry.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const StructureDocument doc = parse_document(entry.json_text);
      if (doc.name != entry.name) {
        result.mismatches.push_back("document name is \"" + doc.name +
                                    "\", expected \"" + entry.name + "\"");
      }

      const Classification c = classify(doc, entry.bindings);
      for (const auto& [flag_name, expected] : entry.expected_flags) {
        const Flag* flag = c.find(flag_name);
        if (flag == nullptr) {
          result.mismatches.push_back("flag " + flag_name + " missing from report");
          continue;
        }
        if (flag->status != expected) {
          std::string line = "flag " + flag_name + " is " + to_string(flag->status) +
                             ", expected " + to_string(expected);
          if (!flag->witness.empty()) line += " (" + flag->witness + ")";
          result.mismatches.push_back(std::move(line));
        }
      }
      for (const std::string& error : c.binding_errors) {
        result.mismatches.push_back("unexpected binding error: " + error);
      }
      for (const std::string& error : c.consistency_errors) {
        result.mismatches.push_back("unexpected consistency error: " + error);
      }

      for (const ConnectionSnapshot& snap : entry.connections) {
        check_connection(doc, snap, result.mismatches);
      }
      for (const CurvatureSnapshot& snap : entry.curvatures) {
        check_curvature(doc, snap, result.mismatches);
      }
    } catch (const std::exception& e) {
      result.mismatches.push_back(std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace homnorden
