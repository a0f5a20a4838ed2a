#include <doctest.h>

#include "helpers.hpp"
#include "homnorden/curvature.hpp"

using namespace homnorden;
using testing::instantiate_entry;

TEST_CASE("curvature spot values") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);

  const auto k04 = [&k](int x, int y, int z, int w) {
    return k.k04.at({x - 1, y - 1, z - 1, w - 1});
  };
  CHECK(k04(1, 2, 1, 2) == Rational(-1));
  CHECK(k04(1, 2, 2, 1) == Rational(1));
  CHECK(k04(1, 3, 1, 3) == Rational(1));
  CHECK(k04(3, 4, 3, 4) == Rational(-1));
  CHECK(k04(1, 4, 1, 4) == Rational(0));
  CHECK(k04(1, 1, 1, 1) == Rational(0));

  int nonzero13 = 0;
  int nonzero04 = 0;
  for (std::size_t offset = 0; offset < k.k13.size(); ++offset) {
    if (!k.k13.flat(offset).is_zero()) ++nonzero13;
  }
  for (std::size_t offset = 0; offset < k.k04.size(); ++offset) {
    if (!k.k04.flat(offset).is_zero()) ++nonzero04;
  }
  CHECK(nonzero13 == 32);
  CHECK(nonzero04 == 32);
}

TEST_CASE("curvature identity suite") {
  for (const char* name : {"kahler4", "kahler6_flat"}) {
    const Instantiated inst = instantiate_entry(name);
    const Connection conn = levi_civita(inst.alg, *inst.g);
    const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
    const ValidationReport report =
        check_curvature_identities(inst.alg, *inst.g, *inst.j, k);
    CHECK_MESSAGE(report.all_pass(), name);
    for (const char* check : {"antisymmetric_first_pair", "antisymmetric_last_pair",
                              "bianchi_first", "bianchi_second",
                              "contraction_consistent", "curvature_pure"}) {
      CHECK_MESSAGE(report.find(check) != nullptr, check);
    }
  }
}

TEST_CASE("curvature purity fails off the holomorphic locus") {
  const Instantiated inst = instantiate_entry("norden4_nonholomorphic");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
  const ValidationReport report =
      check_curvature_identities(inst.alg, *inst.g, *inst.j, k);
  // structural identities hold for any canonical connection
  CHECK(report.find("antisymmetric_first_pair")->passed());
  CHECK(report.find("antisymmetric_last_pair")->passed());
  CHECK(report.find("bianchi_first")->passed());
  CHECK(report.find("bianchi_second")->passed());
  CHECK(report.find("contraction_consistent")->passed());
  // but the tensor is not pure here
  const CheckResult* purity = report.find("curvature_pure");
  REQUIRE(purity != nullptr);
  CHECK(purity->failed());
  REQUIRE_FALSE(purity->witnesses.empty());
  const Witness& w = purity->witnesses.front();
  CHECK(w.indices == std::vector<int>{1, 1, 1, 2});
  REQUIRE(w.defect_scalar.has_value());
  CHECK(*w.defect_scalar == Rational(-33, 50));
}

TEST_CASE("twist defect of the curvature vanishes on parallel structures") {
  for (const char* name : {"kahler4", "kahler6_flat"}) {
    const Instantiated inst = instantiate_entry(name);
    const Connection conn = levi_civita(inst.alg, *inst.g);
    const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
    const TwistDefectResult defect = tachibana_curvature(inst.alg, *inst.j, k.k04);
    CHECK_MESSAGE(defect.value.is_zero(), name);
    CHECK(defect.purity_verified);
    CHECK(defect.pure);
  }

  const Instantiated inst = instantiate_entry("kahler4");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
  CHECK_THROWS_AS(tachibana_curvature(inst.alg, *inst.j, k.k13), std::invalid_argument);
}

TEST_CASE("associator defect equals negated curvature under zero torsion") {
  for (const char* name :
       {"norden4_nonholomorphic", "norden4_nonintegrable", "kahler4", "kahler6_flat"}) {
    const Instantiated inst = instantiate_entry(name);
    const Connection conn = levi_civita(inst.alg, *inst.g);
    const CurvatureTensor k = curvature(inst.alg, *inst.g, conn);
    const Tensor d = left_symmetric_defect(inst.alg, conn);
    bool equal = true;
    for (std::size_t offset = 0; offset < d.size(); ++offset) {
      if (d.flat(offset) != -k.k13.flat(offset)) equal = false;
    }
    CHECK_MESSAGE(equal, name);
  }
}

TEST_CASE("left-symmetry verdicts") {
  const Instantiated flat = instantiate_entry("kahler6_flat");
  const Connection flat_conn = levi_civita(flat.alg, *flat.g);
  const ValidationReport good = check_left_symmetric(flat.alg, flat_conn);
  CHECK(good.all_pass());
  CHECK(good.find("associator_symmetric")->passed());
  CHECK(good.find("commutator_recovers_bracket")->passed());

  const Instantiated curved = instantiate_entry("kahler4");
  const Connection curved_conn = levi_civita(curved.alg, *curved.g);
  const ValidationReport bad = check_left_symmetric(curved.alg, curved_conn);
  CHECK(bad.find("associator_symmetric")->failed());
  CHECK(bad.find("commutator_recovers_bracket")->passed());
}

TEST_CASE("flatness theorem report") {
  const Instantiated flat = instantiate_entry("kahler6_flat");
  const ValidationReport good = check_flat_theorem(flat.alg, *flat.g, *flat.j);
  CHECK(good.all_pass());
  CHECK(good.find("flatness_preconditions")->passed());
  CHECK(good.find("curvature_conjugation")->passed());
  CHECK(good.find("curvature_vanishes")->passed());
  CHECK(good.find("associator_symmetric")->passed());

  // bracket not preserved: preconditions are reported, nothing else claimed
  const Instantiated k4 = instantiate_entry("kahler4");
  const ValidationReport na = check_flat_theorem(k4.alg, *k4.g, *k4.j);
  REQUIRE(na.checks.size() == 1);
  CHECK(na.checks[0].name == "flatness_preconditions");
  CHECK(na.checks[0].outcome == Outcome::NotApplicable);

  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const ValidationReport na2 = check_flat_theorem(bent.alg, *bent.g, *bent.j);
  REQUIRE(na2.checks.size() == 1);
  CHECK(na2.checks[0].outcome == Outcome::NotApplicable);
}
