#include <doctest.h>

#include "helpers.hpp"
#include "homnorden/geometry.hpp"

using namespace homnorden;
using testing::instantiate_entry;
using testing::mat_of;
using testing::vec_of;

namespace {

const std::vector<const char*> kAllEntries = {
    "norden4_nonholomorphic", "norden4_nonintegrable", "kahler4", "kahler6_flat"};

}  // namespace

TEST_CASE("metric axioms on the corpus") {
  for (const char* name : kAllEntries) {
    const Instantiated inst = instantiate_entry(name);
    const ValidationReport report = check_metric(inst.alg, *inst.g);
    CHECK_MESSAGE(report.all_pass(), name);
    const CheckResult* invertible = report.find("metric_invertible");
    REQUIRE(invertible != nullptr);
    CHECK(invertible->note.rfind("det = ", 0) == 0);
  }
}

TEST_CASE("metric axiom failures") {
  const Instantiated inst = instantiate_entry("kahler4");

  Metric asym{mat_of({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})};
  const ValidationReport asym_report = check_metric(inst.alg, asym);
  CHECK(asym_report.find("metric_symmetric")->failed());

  Metric singular{mat_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}})};
  const ValidationReport singular_report = check_metric(inst.alg, singular);
  CHECK(singular_report.find("metric_invertible")->failed());

  // identity is symmetric and invertible but not twist-invariant for the
  // nonholomorphic example's twist
  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const ValidationReport report = check_metric(bent.alg, Metric{mat_identity(4)});
  CHECK(report.find("metric_twist_invariant")->passed());  // involution: phi^T phi = Id
  Metric lopsided{mat_of({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})};
  CHECK(check_metric(bent.alg, lopsided).find("metric_twist_invariant")->failed());

  Metric wrong_shape{mat_of({{1, 0}, {0, 1}})};
  CHECK_FALSE(check_metric(inst.alg, wrong_shape).all_pass());
}

TEST_CASE("complex-structure axioms") {
  for (const char* name : kAllEntries) {
    const Instantiated inst = instantiate_entry(name);
    CHECK_MESSAGE(check_complex(inst.alg, *inst.j).all_pass(), name);
  }

  const Instantiated inst = instantiate_entry("kahler4");
  // J = Id does not square to -Id through the twist
  const ValidationReport bad = check_complex(inst.alg, ComplexStructure{mat_identity(4)});
  CHECK(bad.find("complex_square")->failed());

  // odd dimension cannot carry one
  const HomLieAlgebra odd(3, {}, mat_identity(3));
  const ValidationReport odd_report = check_complex(odd, ComplexStructure{mat_identity(3)});
  CHECK_FALSE(odd_report.all_pass());
}

TEST_CASE("twisted complex operator matrix") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Mat a = twisted_complex(inst.alg, *inst.j);
  CHECK(a == mat_of({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}));
  CHECK(mat_mul(a, a) == mat_scale(Rational(-1), mat_identity(4)));
}

TEST_CASE("integrability torsion values") {
  const Instantiated inst = instantiate_entry("norden4_nonintegrable");
  const Tensor n = nijenhuis(inst.alg, *inst.j);
  const auto value = [&n](int x, int y) {
    Vec out;
    for (int l = 0; l < 4; ++l) out.push_back(n.at({l, x - 1, y - 1}));
    return out;
  };
  CHECK(value(1, 2) == vec_of({0, 0, -1, 1}));
  CHECK(value(1, 4) == vec_of({-1, 1, 0, 0}));
  CHECK(value(2, 3) == vec_of({1, -1, 0, 0}));
  CHECK(value(3, 4) == vec_of({0, 0, 1, -1}));
  CHECK(value(1, 3) == vec_of({0, 0, 0, 0}));

  // antisymmetry
  for (int x = 1; x <= 4; ++x) {
    for (int y = 1; y <= 4; ++y) {
      CHECK(value(x, y) == vec_neg(value(y, x)));
    }
  }

  CHECK(nijenhuis(instantiate_entry("kahler4").alg,
                  *instantiate_entry("kahler4").j)
            .is_zero());
}

TEST_CASE("metric compatibility with the complex structure") {
  for (const char* name : kAllEntries) {
    const Instantiated inst = instantiate_entry(name);
    CHECK_MESSAGE(check_norden(inst.alg, *inst.g, *inst.j).all_pass(), name);
  }

  const Instantiated inst = instantiate_entry("kahler4");
  const ValidationReport bad = check_norden(inst.alg, Metric{mat_identity(4)}, *inst.j);
  CHECK(bad.find("norden_anti_isometry")->failed());
  CHECK(bad.find("norden_self_adjoint")->failed());
  CHECK(bad.find("norden_forms_agree")->passed());  // both forms fail together
}

TEST_CASE("canonical connection spot values") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  CHECK(conn.at(1, 0) == vec_of({0, 0, 1, 0}));   // direction e2, argument e1 -> e3
  CHECK(conn.at(0, 0) == vec_of({0, 0, 0, 0}));
  CHECK(conn.at(1, 1) == vec_of({0, 0, 0, -1}));

  CHECK(check_torsion_free(inst.alg, conn).all_pass());
  CHECK(check_metric_compat(inst.alg, *inst.g, conn).all_pass());
}

TEST_CASE("canonical connection requires a solvable system") {
  const HomLieAlgebra alg(2, {}, mat_identity(2));
  Metric degenerate{mat_of({{1, 0}, {0, 0}})};
  CHECK_THROWS_AS(levi_civita(alg, degenerate), SingularSystemError);
}

TEST_CASE("torsion check catches an arbitrary connection") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Connection zero = Connection::zero(4);
  const ValidationReport report = check_torsion_free(inst.alg, zero);
  CHECK(report.find("torsion_free")->failed());
}

TEST_CASE("parallel-structure verdicts") {
  CHECK(check_kahler(instantiate_entry("kahler4").alg, *instantiate_entry("kahler4").g,
                     *instantiate_entry("kahler4").j)
            .all_pass());
  CHECK(check_kahler(instantiate_entry("kahler6_flat").alg,
                     *instantiate_entry("kahler6_flat").g,
                     *instantiate_entry("kahler6_flat").j)
            .all_pass());

  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const ValidationReport report = check_kahler(bent.alg, *bent.g, *bent.j);
  CHECK_FALSE(report.all_pass());
  CHECK(report.find("kahler_preconditions")->passed());
  CHECK(report.find("phiJ_parallel")->failed());

  // broken preconditions are reported as such
  const Instantiated k4 = instantiate_entry("kahler4");
  const ValidationReport precondition_fail =
      check_kahler(k4.alg, Metric{mat_identity(4)}, *k4.j);
  CHECK(precondition_fail.find("kahler_preconditions")->failed());
}

TEST_CASE("bracket invariance of the twisted complex operator") {
  CHECK(check_abelian(instantiate_entry("norden4_nonholomorphic").alg,
                      *instantiate_entry("norden4_nonholomorphic").j)
            .all_pass());
  CHECK(check_abelian(instantiate_entry("kahler6_flat").alg,
                      *instantiate_entry("kahler6_flat").j)
            .all_pass());
  CHECK_FALSE(check_abelian(instantiate_entry("kahler4").alg,
                            *instantiate_entry("kahler4").j)
                  .all_pass());
  CHECK_FALSE(check_abelian(instantiate_entry("norden4_nonintegrable").alg,
                            *instantiate_entry("norden4_nonintegrable").j)
                  .all_pass());
}

TEST_CASE("invariant-bracket connection identities") {
  const Instantiated inst = instantiate_entry("kahler6_flat");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const ValidationReport report =
      abelian_kahler_checks(inst.alg, *inst.g, *inst.j, conn);
  CHECK(report.all_pass());
  CHECK(report.find("twisted_nabla_rule") != nullptr);
  CHECK(report.find("bracket_reconstruction") != nullptr);
  CHECK(report.find("second_order_symmetry") != nullptr);
}

TEST_CASE("companion metric") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Metric twin = twin_metric(inst.alg, *inst.g, *inst.j);
  CHECK(twin.g == mat_of({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));

  for (const char* name : kAllEntries) {
    const Instantiated entry = instantiate_entry(name);
    const Metric tw = twin_metric(entry.alg, *entry.g, *entry.j);
    // full metric axioms hold for the companion as well
    CHECK_MESSAGE(check_metric(entry.alg, tw).all_pass(), name);
    // it is compatible with the same complex structure
    CHECK_MESSAGE(check_norden(entry.alg, tw, *entry.j).all_pass(), name);
    // applying the construction twice negates the original
    const Metric twice = twin_metric(entry.alg, tw, *entry.j);
    CHECK_MESSAGE(twice.g == mat_scale(Rational(-1), entry.g->g), name);
  }
}

TEST_CASE("holomorphic-metric verdicts") {
  CHECK(check_holomorphic_metric(instantiate_entry("kahler4").alg,
                                 *instantiate_entry("kahler4").g,
                                 *instantiate_entry("kahler4").j)
            .all_pass());
  CHECK(check_holomorphic_metric(instantiate_entry("kahler6_flat").alg,
                                 *instantiate_entry("kahler6_flat").g,
                                 *instantiate_entry("kahler6_flat").j)
            .all_pass());

  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const ValidationReport bent_report =
      check_holomorphic_metric(bent.alg, *bent.g, *bent.j);
  CHECK_FALSE(bent_report.all_pass());
  CHECK(bent_report.find("complex_integrable")->passed());
  CHECK(bent_report.find("metric_twist_defect_vanishes")->failed());

  const Instantiated twisted = instantiate_entry("norden4_nonintegrable");
  const ValidationReport twisted_report =
      check_holomorphic_metric(twisted.alg, *twisted.g, *twisted.j);
  CHECK_FALSE(twisted_report.all_pass());
  const CheckResult* integrable = twisted_report.find("complex_integrable");
  REQUIRE(integrable != nullptr);
  CHECK(integrable->failed());
  REQUIRE_FALSE(integrable->witnesses.empty());
  CHECK(integrable->witnesses.front().indices == std::vector<int>{1, 4});
}
