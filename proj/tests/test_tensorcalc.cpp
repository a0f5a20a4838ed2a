#include <doctest.h>

#include "helpers.hpp"
#include "homnorden/geometry.hpp"
#include "homnorden/tensorcalc.hpp"

using namespace homnorden;
using testing::instantiate_entry;
using testing::mat_of;

namespace {

Tensor metric_tensor(const Metric& g) {
  const int n = static_cast<int>(g.g.size());
  Tensor t(n, 0, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.at({i, j}) = g.g[i][j];
  }
  return t;
}

}  // namespace

TEST_CASE("tensor storage layout") {
  Tensor t(3, 1, 2);
  CHECK(t.n() == 3);
  CHECK(t.p() == 1);
  CHECK(t.q() == 2);
  CHECK(t.order() == 3);
  CHECK(t.size() == 27);
  CHECK(t.is_zero());

  t.at({1, 0, 2}) = Rational(5);
  CHECK(t.at({1, 0, 2}) == Rational(5));
  CHECK_FALSE(t.is_zero());
  // row-major: offset = (1*3 + 0)*3 + 2
  CHECK(t.flat(11) == Rational(5));
  CHECK(t.unflatten(11) == std::vector<int>{1, 0, 2});

  const std::vector<int> tuple = {1, 0, 2};
  CHECK(t.at(tuple) == Rational(5));

  Tensor same(3, 1, 2);
  same.at({1, 0, 2}) = Rational(5);
  CHECK(t == same);
  same.at({0, 0, 0}) = Rational(1);
  CHECK_FALSE(t == same);
}

TEST_CASE("pullback substitutes one covariant slot") {
  // t(y1, y2) with t = e^1 (x) e^2, pulled back through m on each slot
  Tensor t(2, 0, 2);
  t.at({0, 1}) = Rational(1);
  const Mat m = mat_of({{0, 1}, {1, 0}});  // swaps basis vectors

  const Tensor first = pullback_slot(t, 0, m);
  CHECK(first.at({1, 1}) == Rational(1));  // first(y1,y2) = t(m y1, y2)
  CHECK(first.at({0, 1}) == Rational(0));

  const Tensor second = pullback_slot(t, 1, m);
  CHECK(second.at({0, 0}) == Rational(1));
  CHECK(second.at({0, 1}) == Rational(0));
}

TEST_CASE("covariant derivative rejects unsupported shapes") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Connection conn = levi_civita(inst.alg, *inst.g);
  CHECK_THROWS_AS(cov_deriv_0q(inst.alg, conn, Tensor(4, 1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cov_deriv_0q(inst.alg, conn, Tensor(4, 0, 0)), std::invalid_argument);
}

TEST_CASE("canonical connection makes the metric parallel") {
  for (const char* name :
       {"norden4_nonholomorphic", "norden4_nonintegrable", "kahler4", "kahler6_flat"}) {
    const Instantiated inst = instantiate_entry(name);
    const Connection conn = levi_civita(inst.alg, *inst.g);
    const Tensor dg = cov_deriv_0q(inst.alg, conn, metric_tensor(*inst.g));
    CHECK_MESSAGE(dg.is_zero(), name);
  }
}

TEST_CASE("purity scan finds the first failing slot pair") {
  // The identity metric is not compatible with the twisted complex operator
  // of kahler4: moving the operator across the two slots changes the value
  // first at arguments (e_1, e_4).
  const Instantiated inst = instantiate_entry("kahler4");
  Metric identity{mat_identity(4)};
  const Endomorphism a{twisted_complex(inst.alg, *inst.j)};
  const PurityReport report = purity_check(metric_tensor(identity), a);
  CHECK_FALSE(report.pure);
  CHECK(report.slot_pair == 1);
  CHECK(report.indices == std::vector<int>{1, 4});

  // the document's own metric is pure
  const PurityReport good = purity_check(metric_tensor(*inst.g), a);
  CHECK(good.pure);
  CHECK(good.slot_pair == 0);
  CHECK(good.indices.empty());
}

TEST_CASE("purity scan requires at least two covariant slots") {
  CHECK_THROWS_AS(purity_check(Tensor(3, 0, 1), Endomorphism{mat_identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(purity_check(Tensor(3, 1, 2), Endomorphism{mat_identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("twist-defect operator on the metric") {
  // vanishes for the parallel entries, not for the non-holomorphic one
  const Instantiated flat = instantiate_entry("kahler6_flat");
  const TwistDefectResult zero =
      tachibana(flat.alg, *flat.j, metric_tensor(*flat.g));
  CHECK(zero.purity_verified);
  CHECK(zero.pure);
  CHECK(zero.value.is_zero());

  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const TwistDefectResult defect =
      tachibana(bent.alg, *bent.j, metric_tensor(*bent.g));
  CHECK(defect.purity_verified);
  CHECK(defect.pure);
  REQUIRE_FALSE(defect.value.is_zero());

  // spot values of the (0,3) defect, 1-based indices (x, y, z)
  const auto at = [&defect](int x, int y, int z) {
    return defect.value.at({x - 1, y - 1, z - 1});
  };
  CHECK(at(1, 1, 1) == Rational(2));
  CHECK(at(1, 1, 2) == Rational(2));
  CHECK(at(1, 1, 3) == Rational(3));
  CHECK(at(1, 1, 4) == Rational(8));
  CHECK(at(1, 2, 1) == Rational(2));
  CHECK(at(1, 2, 4) == Rational(-3));
  CHECK(at(1, 3, 1) == Rational(3));
  CHECK(at(1, 3, 4) == Rational(2));
  CHECK(at(1, 4, 1) == Rational(8));
  CHECK(at(1, 4, 2) == Rational(-3));

  int nonzero = 0;
  for (std::size_t offset = 0; offset < defect.value.size(); ++offset) {
    if (!defect.value.flat(offset).is_zero()) ++nonzero;
  }
  CHECK(nonzero == 48);
}

TEST_CASE("twist-defect purity policy") {
  const Instantiated inst = instantiate_entry("kahler4");
  const Tensor g = metric_tensor(*inst.g);
  const TwistDefectResult skipped = tachibana(inst.alg, *inst.j, g, PurityPolicy::Skip);
  CHECK_FALSE(skipped.purity_verified);
  CHECK_FALSE(skipped.purity.has_value());
  const TwistDefectResult verified = tachibana(inst.alg, *inst.j, g, PurityPolicy::Verify);
  CHECK(verified.purity_verified);
  CHECK(verified.value == skipped.value);
}

TEST_CASE("endomorphism derivative and parallelism") {
  const Instantiated parallel = instantiate_entry("kahler4");
  const Connection conn = levi_civita(parallel.alg, *parallel.g);
  const Mat a = twisted_complex(parallel.alg, *parallel.j);
  for (const Mat& direction : nabla_endo(parallel.alg, conn, a)) {
    CHECK(mat_is_zero(direction));
  }

  const Instantiated bent = instantiate_entry("norden4_nonholomorphic");
  const Connection bent_conn = levi_civita(bent.alg, *bent.g);
  const Mat bent_a = twisted_complex(bent.alg, *bent.j);
  bool any_nonzero = false;
  for (const Mat& direction : nabla_endo(bent.alg, bent_conn, bent_a)) {
    if (!mat_is_zero(direction)) any_nonzero = true;
  }
  CHECK(any_nonzero);
}
