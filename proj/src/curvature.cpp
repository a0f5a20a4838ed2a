#include "homnorden/curvature.hpp"

#include <stdexcept>

namespace homnorden {

namespace {

// K(e_i, e_j) e_k as a coordinate vector.
Vec curvature_vec(const HomLieAlgebra& alg, const Connection& conn, int i, int j, int k) {
  Vec out = nabla_vec(alg, conn, alg.phi_basis(i), conn.at(j, k));
  out = vec_sub(out, nabla_vec(alg, conn, alg.phi_basis(j), conn.at(i, k)));
  out = vec_sub(out, nabla_vec(alg, conn, alg.structure(i, j), alg.phi_basis(k)));
  return out;
}

CheckResult tensor_zero_check(std::string name, const Tensor& t) {
  for (std::size_t offset = 0; offset < t.size(); ++offset) {
    if (!t.flat(offset).is_zero()) {
      std::vector<int> indices = t.unflatten(offset);
      for (int& index : indices) ++index;
      return make_fail(std::move(name), Witness{indices, {}, t.flat(offset)});
    }
  }
  return make_pass(std::move(name));
}

}  // namespace

CurvatureTensor curvature(const HomLieAlgebra& alg, const Metric& g,
                          const Connection& conn) {
  const int n = alg.n();
  CurvatureTensor out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Vec value = curvature_vec(alg, conn, i, j, k);
        for (int l = 0; l < n; ++l) {
          out.k13.at({l, i, j, k}) = value[l];
          out.k13.at({l, j, i, k}) = -value[l];  // antisymmetric in (i, j)
        }
        for (int l = 0; l < n; ++l) {
          const Rational coeff = inner(g, value, vec_basis(n, l));
          out.k04.at({i, j, k, l}) = coeff;
          out.k04.at({j, i, k, l}) = -coeff;
        }
      }
    }
  }
  return out;
}

ValidationReport check_curvature_identities(const HomLieAlgebra& alg, const Metric& g,
                                            const ComplexStructure& j,
                                            const CurvatureTensor& k) {
  const int n = alg.n();
  ValidationReport report;

  // Antisymmetry in the first pair.
  CheckResult anti_first = make_pass("antisymmetric_first_pair");
  for (int a = 0; a < n && anti_first.passed(); ++a) {
    for (int b = 0; b < n && anti_first.passed(); ++b) {
      for (int c = 0; c < n && anti_first.passed(); ++c) {
        for (int d = 0; d < n; ++d) {
          const Rational defect = k.k04.at({a, b, c, d}) + k.k04.at({b, a, c, d});
          if (!defect.is_zero()) {
            anti_first = make_fail("antisymmetric_first_pair",
                                   Witness{{a + 1, b + 1, c + 1, d + 1}, {}, defect});
            break;
          }
        }
      }
    }
  }
  report.add(anti_first);

  // Antisymmetry in the last pair.
  CheckResult anti_last = make_pass("antisymmetric_last_pair");
  for (int a = 0; a < n && anti_last.passed(); ++a) {
    for (int b = 0; b < n && anti_last.passed(); ++b) {
      for (int c = 0; c < n && anti_last.passed(); ++c) {
        for (int d = 0; d < n; ++d) {
          const Rational defect = k.k04.at({a, b, c, d}) + k.k04.at({a, b, d, c});
          if (!defect.is_zero()) {
            anti_last = make_fail("antisymmetric_last_pair",
                                  Witness{{a + 1, b + 1, c + 1, d + 1}, {}, defect});
            break;
          }
        }
      }
    }
  }
  report.add(anti_last);

  // First Bianchi identity: cyclic sum over the three k13 arguments.
  CheckResult bianchi1 = make_pass("bianchi_first");
  for (int a = 0; a < n && bianchi1.passed(); ++a) {
    for (int b = a + 1; b < n && bianchi1.passed(); ++b) {
      for (int c = b + 1; c < n; ++c) {
        Vec sum = vec_zero(n);
        for (int l = 0; l < n; ++l) {
          sum[l] = k.k13.at({l, a, b, c}) + k.k13.at({l, b, c, a}) + k.k13.at({l, c, a, b});
        }
        if (!vec_is_zero(sum)) {
          bianchi1 = make_fail("bianchi_first", Witness{{a + 1, b + 1, c + 1}, sum, {}});
          break;
        }
      }
    }
  }
  report.add(bianchi1);

  // Second Bianchi identity on the covariant derivative of k04, cyclic in
  // the direction and the first two slots.
  const Connection conn = levi_civita(alg, g);
  const Tensor dk = cov_deriv_0q(alg, conn, k.k04);
  CheckResult bianchi2 = make_pass("bianchi_second");
  for (int x = 0; x < n && bianchi2.passed(); ++x) {
    for (int y = x + 1; y < n && bianchi2.passed(); ++y) {
      for (int z = y + 1; z < n && bianchi2.passed(); ++z) {
        for (int w = 0; w < n && bianchi2.passed(); ++w) {
          for (int t = 0; t < n; ++t) {
            const Rational defect = dk.at({x, y, z, w, t}) + dk.at({y, z, x, w, t}) +
                                    dk.at({z, x, y, w, t});
            if (!defect.is_zero()) {
              bianchi2 = make_fail("bianchi_second",
                                   Witness{{x + 1, y + 1, z + 1, w + 1, t + 1}, {}, defect});
              break;
            }
          }
        }
      }
    }
  }
  report.add(bianchi2);

  // k04 must be the metric contraction of k13.
  CheckResult contraction = make_pass("contraction_consistent");
  for (int a = 0; a < n && contraction.passed(); ++a) {
    for (int b = 0; b < n && contraction.passed(); ++b) {
      for (int c = 0; c < n && contraction.passed(); ++c) {
        Vec value = vec_zero(n);
        for (int l = 0; l < n; ++l) value[l] = k.k13.at({l, a, b, c});
        for (int d = 0; d < n; ++d) {
          const Rational defect =
              k.k04.at({a, b, c, d}) - inner(g, value, vec_basis(n, d));
          if (!defect.is_zero()) {
            contraction = make_fail("contraction_consistent",
                                    Witness{{a + 1, b + 1, c + 1, d + 1}, {}, defect});
            break;
          }
        }
      }
    }
  }
  report.add(contraction);

  // Purity of k04 under the twisted complex operator (adjacent slot pairs;
  // the rest follows by transitivity).
  const Mat a_op = twisted_complex(alg, j);
  const PurityReport purity = purity_check(k.k04, Endomorphism{a_op});
  if (purity.pure) {
    report.add(make_pass("curvature_pure"));
  } else {
    report.add(make_fail("curvature_pure",
                         Witness{purity.indices, {}, purity.defect},
                         "slot pair (" + std::to_string(purity.slot_pair) + ", " +
                             std::to_string(purity.slot_pair + 1) + ")"));
  }
  return report;
}

TwistDefectResult tachibana_curvature(const HomLieAlgebra& alg, const ComplexStructure& j,
                                      const Tensor& k04) {
  if (k04.p() != 0 || k04.q() != 4) {
    throw std::invalid_argument("expected a (0,4) curvature tensor");
  }
  return tachibana(alg, j, k04, PurityPolicy::Verify);
}

namespace {

// ass(u, v, w) = D_{D_u v}(tw w) - D_{tw u}(D_v w) on basis vectors.
Vec associator(const HomLieAlgebra& alg, const Connection& conn, int u, int v, int w) {
  Vec out = nabla_vec(alg, conn, conn.at(u, v), alg.phi_basis(w));
  out = vec_sub(out, nabla_vec(alg, conn, alg.phi_basis(u), conn.at(v, w)));
  return out;
}

}  // namespace

Tensor left_symmetric_defect(const HomLieAlgebra& alg, const Connection& conn) {
  const int n = alg.n();
  Tensor out(n, 1, 3);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        const Vec value =
            vec_sub(associator(alg, conn, u, v, w), associator(alg, conn, v, u, w));
        for (int l = 0; l < n; ++l) {
          out.at({l, u, v, w}) = value[l];
          out.at({l, v, u, w}) = -value[l];
        }
      }
    }
  }
  return out;
}

ValidationReport check_left_symmetric(const HomLieAlgebra& alg, const Connection& conn) {
  ValidationReport report;
  report.add(tensor_zero_check("associator_symmetric",
                               left_symmetric_defect(alg, conn)));

  const int n = alg.n();
  CheckResult commutator = make_pass("commutator_recovers_bracket");
  for (int i = 0; i < n && commutator.passed(); ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec defect =
          vec_sub(vec_sub(conn.at(i, j), conn.at(j, i)), alg.structure(i, j));
      if (!vec_is_zero(defect)) {
        commutator =
            make_fail("commutator_recovers_bracket", Witness{{i + 1, j + 1}, defect, {}});
        break;
      }
    }
  }
  report.add(commutator);
  return report;
}

ValidationReport check_flat_theorem(const HomLieAlgebra& alg, const Metric& g,
                                    const ComplexStructure& j) {
  ValidationReport report;
  const bool holomorphic = check_holomorphic_metric(alg, g, j).all_pass();
  const bool invariant = check_abelian(alg, j).all_pass();
  if (!holomorphic || !invariant) {
    std::string missing;
    if (!holomorphic) missing += "pair is not holomorphic";
    if (!invariant) {
      if (!missing.empty()) missing += "; ";
      missing += "operator does not preserve the bracket";
    }
    report.add(make_not_applicable("flatness_preconditions", missing));
    return report;
  }
  report.add(make_pass("flatness_preconditions"));

  const Connection conn = levi_civita(alg, g);
  const CurvatureTensor k = curvature(alg, g, conn);
  const Mat a = twisted_complex(alg, j);
  const int n = alg.n();

  // Conjugation identity K(A x, A y) z = -K(x, y) z, by multilinearity over
  // basis tuples.
  CheckResult conjugation = make_pass("curvature_conjugation");
  for (int x = 0; x < n && conjugation.passed(); ++x) {
    const Vec ax = mat_col(a, x);
    for (int y = x + 1; y < n && conjugation.passed(); ++y) {
      const Vec ay = mat_col(a, y);
      for (int z = 0; z < n; ++z) {
        Vec lhs = vec_zero(n);
        for (int p = 0; p < n; ++p) {
          if (ax[p].is_zero()) continue;
          for (int q = 0; q < n; ++q) {
            if (ay[q].is_zero()) continue;
            const Rational c = ax[p] * ay[q];
            for (int l = 0; l < n; ++l) {
              const Rational& entry = k.k13.at({l, p, q, z});
              if (!entry.is_zero()) lhs[l] += c * entry;
            }
          }
        }
        Vec rhs = vec_zero(n);
        for (int l = 0; l < n; ++l) rhs[l] = -k.k13.at({l, x, y, z});
        const Vec defect = vec_sub(lhs, rhs);
        if (!vec_is_zero(defect)) {
          conjugation =
              make_fail("curvature_conjugation", Witness{{x + 1, y + 1, z + 1}, defect, {}});
          break;
        }
      }
    }
  }
  report.add(conjugation);

  report.add(tensor_zero_check("curvature_vanishes", k.k13));
  report.add(tensor_zero_check("associator_symmetric",
                               left_symmetric_defect(alg, conn)));
  return report;
}

}  // namespace homnorden
