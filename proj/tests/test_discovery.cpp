#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "homnorden/corpus.hpp"
#include "homnorden/discovery.hpp"

using namespace homnorden;
using homnorden::testing::instantiate_entry;
using homnorden::testing::mat_of;

TEST_CASE("predicate names round-trip") {
  for (const char* name : {"norden", "kahler", "holomorphic", "abelian"}) {
    CHECK(to_string(predicate_from_string(name)) == name);
  }
  CHECK_THROWS_WITH_AS(predicate_from_string("flat"),
                       doctest::Contains("unknown predicate"), std::invalid_argument);
}

TEST_CASE("signed-permutation search recovers the 4-dim structure") {
  const Instantiated inst = instantiate_entry("kahler4");
  const ComplexSearchResult found = search_J(inst.alg, *inst.g, {Predicate::Kahler});
  CHECK(found.candidates_examined == 384);  // 2^4 * 4!
  REQUIRE(found.results.size() == 2);

  const Mat expected = mat_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
  CHECK(found.results[0].j == expected);
  CHECK(found.results[1].j == mat_neg(expected));

  for (const ComplexStructure& j : found.results) {
    CHECK(check_complex(inst.alg, j).all_pass());
    CHECK(check_norden(inst.alg, *inst.g, j).all_pass());
    CHECK(check_kahler(inst.alg, *inst.g, j).all_pass());
  }
}

TEST_CASE("unconstrained search keeps every almost-complex candidate") {
  const Instantiated inst = instantiate_entry("kahler4");
  const ComplexSearchResult found = search_J(inst.alg, *inst.g, {});
  CHECK(found.candidates_examined == 384);
  CHECK(found.results.size() >= 2);
  const Mat expected = mat_of({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}});
  bool saw_plus = false;
  bool saw_minus = false;
  for (const ComplexStructure& j : found.results) {
    CHECK(check_complex(inst.alg, j).all_pass());
    if (j.j == expected) saw_plus = true;
    if (j.j == mat_neg(expected)) saw_minus = true;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
}

TEST_CASE("signed-permutation search recovers the 6-dim structure") {
  const Instantiated inst = instantiate_entry("kahler6_flat");
  const ComplexSearchResult found = search_J(inst.alg, *inst.g, {Predicate::Kahler});
  CHECK(found.candidates_examined == 46080);  // 2^6 * 6!
  REQUIRE(found.results.size() == 2);

  const Mat expected = mat_of({{0, 1, 0, 0, 0, 0},
                               {-1, 0, 0, 0, 0, 0},
                               {0, 0, 0, -1, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 1, 0}});
  // Enumeration order puts the sign-flipped copy first.
  CHECK(found.results[0].j == mat_neg(expected));
  CHECK(found.results[1].j == expected);
}

TEST_CASE("diagonal metric search over a signed entry list") {
  const Instantiated inst = instantiate_entry("kahler4");
  const std::vector<Rational> entries = {Rational(1), Rational(-1), Rational(2),
                                         Rational(-2)};
  const MetricSearchResult found = search_metric(inst.alg, *inst.j, entries);
  CHECK(found.candidates_examined == 256);  // 4^4
  REQUIRE(found.results.size() == 16);

  // Odometer order, last diagonal position varying fastest; every result has
  // the diag(a, b, -b, -a) shape.
  const std::vector<std::vector<long long>> expected = {
      {1, 1, -1, -1},   {1, -1, 1, -1},   {1, 2, -2, -1},   {1, -2, 2, -1},
      {-1, 1, -1, 1},   {-1, -1, 1, 1},   {-1, 2, -2, 1},   {-1, -2, 2, 1},
      {2, 1, -1, -2},   {2, -1, 1, -2},   {2, 2, -2, -2},   {2, -2, 2, -2},
      {-2, 1, -1, 2},   {-2, -1, 1, 2},   {-2, 2, -2, 2},   {-2, -2, 2, 2},
  };
  for (std::size_t index = 0; index < expected.size(); ++index) {
    CAPTURE(index);
    const Mat& g = found.results[index].g;
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        const Rational want = row == col ? Rational(expected[index][row]) : Rational(0);
        CHECK(g[row][col] == want);
      }
    }
    CHECK(check_metric(inst.alg, found.results[index]).all_pass());
    CHECK(check_norden(inst.alg, found.results[index], *inst.j).all_pass());
  }
}

TEST_CASE("metric search with no entries finds nothing") {
  const Instantiated inst = instantiate_entry("kahler4");
  const MetricSearchResult found = search_metric(inst.alg, *inst.j, {});
  CHECK(found.candidates_examined == 0);
  CHECK(found.results.empty());
}

TEST_CASE("metric search needs both signs") {
  const Instantiated inst = instantiate_entry("kahler4");
  const MetricSearchResult found =
      search_metric(inst.alg, *inst.j, {Rational(1), Rational(2)});
  CHECK(found.candidates_examined == 16);
  CHECK(found.results.empty());
}

TEST_CASE("searches refuse oversized spaces") {
  const HomLieAlgebra big(9, {}, mat_identity(9));
  CHECK_THROWS_AS(search_J(big, Metric{mat_identity(9)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(search_metric(big, ComplexStructure{mat_identity(9)}, {Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("metric-dependent predicates demand a valid metric") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Metric bad{mat_zero(4, 4)};
  CHECK_THROWS_WITH_AS(search_J(inst.alg, bad, {Predicate::Norden}),
                       doctest::Contains("metric must pass validation"),
                       std::invalid_argument);
  // Predicates that ignore the metric tolerate a degenerate one.
  const ComplexSearchResult found = search_J(inst.alg, bad, {Predicate::Abelian});
  CHECK(found.candidates_examined == 384);
}
