#include <doctest.h>

#include "helpers.hpp"
#include "homnorden/homalg.hpp"

using namespace homnorden;
using testing::instantiate_entry;
using testing::mat_of;
using testing::vec_of;

namespace {

HomLieAlgebra two_dim_example() {
  // [e1, e2] = e1 - e2; the swap twist maps this bracket to its negation,
  // exactly matching [e2, e1], so the twist is a morphism.
  return HomLieAlgebra(2, {{{1, 2}, {{1, Rational(1)}, {2, Rational(-1)}}}},
                       mat_of({{0, 1}, {1, 0}}));
}

}  // namespace

TEST_CASE("construction validates shapes and indices") {
  CHECK_THROWS_AS(HomLieAlgebra(2, {}, mat_of({{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(HomLieAlgebra(2, {{{2, 1}, {{1, Rational(1)}}}}, mat_identity(2)),
                  std::invalid_argument);  // needs i < j
  CHECK_THROWS_AS(HomLieAlgebra(2, {{{1, 1}, {{1, Rational(1)}}}}, mat_identity(2)),
                  std::invalid_argument);  // diagonal
  CHECK_THROWS_AS(HomLieAlgebra(2, {{{1, 3}, {{1, Rational(1)}}}}, mat_identity(2)),
                  std::invalid_argument);  // out of range
  CHECK_THROWS_AS(HomLieAlgebra(2, {{{1, 2}, {{5, Rational(1)}}}}, mat_identity(2)),
                  std::invalid_argument);  // target out of range
  // singular twist is allowed at construction; it is a reported property
  CHECK_NOTHROW(HomLieAlgebra(2, {}, mat_zero(2, 2)));
}

TEST_CASE("bracket is antisymmetric by construction") {
  const HomLieAlgebra alg = two_dim_example();
  CHECK(alg.structure(0, 1) == vec_of({1, -1}));
  CHECK(alg.structure(1, 0) == vec_of({-1, 1}));
  CHECK(alg.structure(0, 0) == vec_of({0, 0}));
  CHECK(alg.bracket(vec_of({1, 0}), vec_of({0, 1})) == vec_of({1, -1}));
  CHECK(alg.bracket(vec_of({0, 1}), vec_of({1, 0})) == vec_of({-1, 1}));
  // bilinearity spot check: [e1 + e2, e2] = [e1, e2]
  CHECK(alg.bracket(vec_of({1, 1}), vec_of({0, 1})) == vec_of({1, -1}));
}

TEST_CASE("twist application") {
  const HomLieAlgebra alg = two_dim_example();
  CHECK(alg.apply_phi(vec_of({1, 0})) == vec_of({0, 1}));
  CHECK(alg.phi_basis(1) == vec_of({1, 0}));
  CHECK(alg.apply_phi(vec_of({2, 3})) == vec_of({3, 2}));
}

TEST_CASE("twist property flags") {
  const PhiFlags swap_flags = classify_phi(two_dim_example());
  CHECK(swap_flags.proper);
  CHECK(swap_flags.involutive);
  CHECK(swap_flags.regular);

  const HomLieAlgebra identity_twist(2, {}, mat_identity(2));
  const PhiFlags id_flags = classify_phi(identity_twist);
  CHECK_FALSE(id_flags.proper);
  CHECK(id_flags.involutive);
  CHECK(id_flags.regular);

  const HomLieAlgebra singular(2, {}, mat_zero(2, 2));
  const PhiFlags zero_flags = classify_phi(singular);
  CHECK(zero_flags.proper);
  CHECK_FALSE(zero_flags.involutive);
  CHECK_FALSE(zero_flags.regular);
}

TEST_CASE("morphism check") {
  // phi = -Id is a morphism for any bracket only if the bracket vanishes:
  // phi[x,y] = -[x,y] but [phi x, phi y] = [x,y].
  const HomLieAlgebra bad(2, {{{1, 2}, {{1, Rational(1)}}}},
                          mat_scale(Rational(-1), mat_identity(2)));
  const ValidationReport report = check_morphism(bad);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].name == "bracket_morphism");
  CHECK(report.checks[0].failed());
  REQUIRE(report.checks[0].witnesses.size() == 1);
  CHECK(report.checks[0].witnesses[0].indices == std::vector<int>{1, 2});

  CHECK(check_morphism(two_dim_example()).all_pass());
}

TEST_CASE("twisted Jacobi identity") {
  CHECK(check_hom_jacobi(two_dim_example()).all_pass());
  CHECK(validate_algebra(two_dim_example()).all_pass());
}

TEST_CASE("corpus algebras satisfy the axioms") {
  for (const char* name :
       {"norden4_nonholomorphic", "norden4_nonintegrable", "kahler4", "kahler6_flat"}) {
    const Instantiated inst = instantiate_entry(name);
    CHECK_MESSAGE(validate_algebra(inst.alg).all_pass(), name);
  }
}

TEST_CASE("classical Jacobi comparison on the corpus") {
  // the twisted identity can hold where the untwisted one fails
  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const ValidationReport report = check_classical_jacobi(bent.alg);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].name == "classical_jacobi");
  CHECK(report.checks[0].failed());
  REQUIRE_FALSE(report.checks[0].witnesses.empty());
  const Witness& w = report.checks[0].witnesses.front();
  CHECK(w.indices == std::vector<int>{1, 3, 4});
  REQUIRE(w.defect_vector.has_value());
  CHECK(*w.defect_vector == testing::vec_of({1, 0, 0, 0}));

  const Instantiated second = instantiate_entry("norden4_nonintegrable");
  const ValidationReport second_report = check_classical_jacobi(second.alg);
  CHECK(second_report.checks[0].failed());
  const Witness& w2 = second_report.checks[0].witnesses.front();
  CHECK(w2.indices == std::vector<int>{1, 3, 4});
  CHECK(*w2.defect_vector == testing::vec_of({2, 2, 0, 0}));

  CHECK(check_classical_jacobi(instantiate_entry("kahler4").alg).all_pass());
  CHECK(check_classical_jacobi(instantiate_entry("kahler6_flat").alg).all_pass());
}
