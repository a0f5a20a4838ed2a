#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "homnorden/corpus.hpp"

using namespace homnorden;

TEST_CASE("every embedded entry reproduces its expected verdicts") {
  const std::vector<CorpusResult> results = run_corpus();
  REQUIRE(results.size() == corpus().size());
  for (const CorpusResult& result : results) {
    CAPTURE(result.name);
    for (const std::string& mismatch : result.mismatches) {
      FAIL_CHECK(result.name << ": " << mismatch);
    }
    CHECK(result.passed());
    CHECK(result.seconds < 1.0);
  }
}

TEST_CASE("embedded documents match the files shipped on disk") {
  const std::string dir = HOMNORDEN_DATA_DIR;
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    std::ifstream in(dir + "/" + entry.name + ".json", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == entry.json_text);
  }
}

TEST_CASE("corpus entries carry expectations for every flag") {
  for (const CorpusEntry& entry : corpus()) {
    CAPTURE(entry.name);
    CHECK_FALSE(entry.bindings.empty());
    CHECK(entry.expected_flags.size() == 13);
  }
}
