#include "homnorden/geometry.hpp"

#include <stdexcept>

namespace homnorden {

Connection Connection::zero(int n) {
  Connection conn;
  conn.n = n;
  conn.gamma.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), vec_zero(n));
  return conn;
}

const Vec& Connection::at(int i, int j) const {
  return gamma.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j));
}

Vec& Connection::at(int i, int j) {
  return gamma.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j));
}

Mat twisted_complex(const HomLieAlgebra& alg, const ComplexStructure& j) {
  return mat_mul(alg.phi(), j.j);
}

Rational inner(const Metric& g, const Vec& x, const Vec& y) {
  const int n = mat_rows(g.g);
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw std::invalid_argument("inner product dimension mismatch");
  }
  Rational out = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int k = 0; k < n; ++k) {
      if (g.g[i][k].is_zero() || y[k].is_zero()) continue;
      out += x[i] * g.g[i][k] * y[k];
    }
  }
  return out;
}

Vec nabla_vec(const HomLieAlgebra& alg, const Connection& conn, const Vec& x, const Vec& y) {
  const int n = alg.n();
  if (conn.n != n || static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw std::invalid_argument("connection application dimension mismatch");
  }
  Vec out = vec_zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      const Vec& image = conn.at(i, j);
      for (int k = 0; k < n; ++k) {
        if (!image[k].is_zero()) out[k] += c * image[k];
      }
    }
  }
  return out;
}

namespace {

// First nonzero entry of a matrix, as a witness at its (1-based) position.
bool first_nonzero(const Mat& m, Witness& witness) {
  for (int i = 0; i < mat_rows(m); ++i) {
    for (int j = 0; j < mat_cols(m); ++j) {
      if (!m[i][j].is_zero()) {
        witness.indices = {i + 1, j + 1};
        witness.defect_scalar = m[i][j];
        return true;
      }
    }
  }
  return false;
}

CheckResult matrix_identity_check(std::string name, const Mat& defect) {
  Witness witness;
  if (first_nonzero(defect, witness)) {
    return make_fail(std::move(name), std::move(witness));
  }
  return make_pass(std::move(name));
}

}  // namespace

ValidationReport check_metric(const HomLieAlgebra& alg, const Metric& g) {
  const int n = alg.n();
  ValidationReport report;
  if (mat_rows(g.g) != n || mat_cols(g.g) != n || !mat_is_square(g.g)) {
    report.add(make_fail("metric_shape", Witness{{mat_rows(g.g), mat_cols(g.g)}, {}, {}},
                         "matrix must be n x n"));
    return report;
  }
  report.add(matrix_identity_check("metric_symmetric", mat_sub(g.g, mat_transpose(g.g))));
  const Rational det = determinant(g.g);
  if (det.is_zero()) {
    report.add(make_fail("metric_invertible", Witness{{}, {}, Rational(0)},
                         "determinant is zero"));
  } else {
    CheckResult invertible = make_pass("metric_invertible");
    invertible.note = "det = " + det.to_string();
    report.add(std::move(invertible));
  }
  // Twisting map is an isometry: tw^T g tw = g.
  const Mat pulled = mat_mul(mat_transpose(alg.phi()), mat_mul(g.g, alg.phi()));
  report.add(matrix_identity_check("metric_twist_invariant", mat_sub(pulled, g.g)));
  return report;
}

ValidationReport check_complex(const HomLieAlgebra& alg, const ComplexStructure& j) {
  const int n = alg.n();
  ValidationReport report;
  if (mat_rows(j.j) != n || mat_cols(j.j) != n || !mat_is_square(j.j)) {
    report.add(make_fail("complex_shape", Witness{{mat_rows(j.j), mat_cols(j.j)}, {}, {}},
                         "matrix must be n x n"));
    return report;
  }
  if (n % 2 != 0) {
    report.add(make_fail("complex_square", Witness{{n}, {}, {}},
                         "odd dimension admits no almost complex structure"));
    return report;
  }
  const Mat a = twisted_complex(alg, j);
  report.add(matrix_identity_check("complex_square",
                                   mat_add(mat_mul(a, a), mat_identity(n))));
  report.add(matrix_identity_check("complex_twist_commutes",
                                   mat_sub(mat_mul(alg.phi(), j.j), mat_mul(j.j, alg.phi()))));
  return report;
}

Tensor nijenhuis(const HomLieAlgebra& alg, const ComplexStructure& j) {
  const int n = alg.n();
  const Mat a = twisted_complex(alg, j);
  Tensor out(n, 1, 2);
  for (int x = 0; x < n; ++x) {
    const Vec ax = mat_col(a, x);
    for (int y = x + 1; y < n; ++y) {
      const Vec ay = mat_col(a, y);
      Vec value = alg.bracket(ax, ay);
      value = vec_sub(value, mat_vec(a, alg.bracket(ax, vec_basis(n, y))));
      value = vec_sub(value, mat_vec(a, alg.bracket(vec_basis(n, x), ay)));
      value = vec_sub(value, alg.structure(x, y));
      for (int k = 0; k < n; ++k) {
        out.at({k, x, y}) = value[k];
        out.at({k, y, x}) = -value[k];  // antisymmetric by construction
      }
    }
  }
  return out;
}

ValidationReport check_norden(const HomLieAlgebra& alg, const Metric& g,
                              const ComplexStructure& j) {
  ValidationReport report;
  const Mat a = twisted_complex(alg, j);
  const Mat at_g_a = mat_mul(mat_transpose(a), mat_mul(g.g, a));
  const CheckResult anti =
      matrix_identity_check("norden_anti_isometry", mat_add(at_g_a, g.g));
  const CheckResult selfadj = matrix_identity_check(
      "norden_self_adjoint", mat_sub(mat_mul(mat_transpose(a), g.g), mat_mul(g.g, a)));
  const bool agree = anti.passed() == selfadj.passed();
  report.add(anti);
  report.add(selfadj);
  if (agree) {
    report.add(make_pass("norden_forms_agree"));
  } else {
    report.add(make_fail("norden_forms_agree", Witness{},
                         "anti-isometry and self-adjointness forms disagree; "
                         "check the complex-structure axioms"));
  }
  return report;
}

Connection levi_civita(const HomLieAlgebra& alg, const Metric& g) {
  const int n = alg.n();
  if (mat_rows(g.g) != n || mat_cols(g.g) != n) {
    throw std::invalid_argument("metric shape mismatch");
  }
  // System matrix: row l, column k of 2 * (g . tw)^T, so that
  // sum_k 2 <e_k, tw e_l> Gamma^k = rhs_l.
  const Mat m = mat_mul(g.g, alg.phi());
  const LUSolver solver(mat_scale(Rational(2), mat_transpose(m)));

  Connection conn = Connection::zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec rhs = vec_zero(n);
      for (int l = 0; l < n; ++l) {
        rhs[l] = inner(g, alg.structure(i, j), alg.phi_basis(l)) +
                 inner(g, alg.structure(l, j), alg.phi_basis(i)) +
                 inner(g, alg.structure(l, i), alg.phi_basis(j));
      }
      conn.at(i, j) = solver.solve(rhs);
    }
  }
  return conn;
}

ValidationReport check_torsion_free(const HomLieAlgebra& alg, const Connection& conn) {
  const int n = alg.n();
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec defect =
          vec_sub(vec_sub(conn.at(i, j), conn.at(j, i)), alg.structure(i, j));
      if (!vec_is_zero(defect)) {
        report.add(make_fail("torsion_free", Witness{{i + 1, j + 1}, defect, {}}));
        return report;
      }
    }
  }
  report.add(make_pass("torsion_free"));
  return report;
}

ValidationReport check_metric_compat(const HomLieAlgebra& alg, const Metric& g,
                                     const Connection& conn) {
  const int n = alg.n();
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Rational defect = inner(g, conn.at(i, j), alg.phi_basis(k)) +
                                inner(g, alg.phi_basis(j), conn.at(i, k));
        if (!defect.is_zero()) {
          report.add(
              make_fail("metric_compatible", Witness{{i + 1, j + 1, k + 1}, {}, defect}));
          return report;
        }
      }
    }
  }
  report.add(make_pass("metric_compatible"));
  return report;
}

ValidationReport check_kahler(const HomLieAlgebra& alg, const Metric& g,
                              const ComplexStructure& j) {
  ValidationReport report;
  const ValidationReport metric_report = check_metric(alg, g);
  const ValidationReport complex_report = check_complex(alg, j);
  const ValidationReport norden_report = check_norden(alg, g, j);
  const bool structural = metric_report.all_pass() && complex_report.all_pass();
  if (!structural) {
    report.add(make_fail("kahler_preconditions", Witness{},
                         "metric or complex-structure axioms fail"));
    report.add(make_not_applicable("phiJ_parallel", "preconditions unmet"));
    report.add(make_not_applicable("kahler_anticommutation", "preconditions unmet"));
    return report;
  }
  if (!norden_report.all_pass()) {
    report.add(make_fail("kahler_preconditions", Witness{},
                         "pair is not compatible in the check_norden sense"));
  } else {
    report.add(make_pass("kahler_preconditions"));
  }

  const Connection conn = levi_civita(alg, g);
  const Mat a = twisted_complex(alg, j);
  const std::vector<Mat> deriv = nabla_endo(alg, conn, a);
  const int n = alg.n();

  CheckResult parallel = make_pass("phiJ_parallel");
  for (int i = 0; i < n && parallel.passed(); ++i) {
    Witness witness;
    if (first_nonzero(deriv[i], witness)) {
      witness.indices.insert(witness.indices.begin(), i + 1);
      parallel = make_fail("phiJ_parallel", std::move(witness),
                           "nonzero derivative in direction e_" + std::to_string(i + 1));
    }
  }
  report.add(parallel);

  // Equivalent anticommutation form: D_{A e_i}(A) = -A . (D_{e_i} A).
  CheckResult anticomm = make_pass("kahler_anticommutation");
  for (int i = 0; i < n && anticomm.passed(); ++i) {
    Mat lhs = mat_zero(n, n);
    const Vec a_ei = mat_col(a, i);
    for (int m = 0; m < n; ++m) {
      if (a_ei[m].is_zero()) continue;
      lhs = mat_add(lhs, mat_scale(a_ei[m], deriv[m]));
    }
    const Mat rhs = mat_neg(mat_mul(a, deriv[i]));
    Witness witness;
    if (first_nonzero(mat_sub(lhs, rhs), witness)) {
      witness.indices.insert(witness.indices.begin(), i + 1);
      anticomm = make_fail("kahler_anticommutation", std::move(witness));
    }
  }
  report.add(anticomm);
  return report;
}

ValidationReport check_abelian(const HomLieAlgebra& alg, const ComplexStructure& j) {
  const int n = alg.n();
  const Mat a = twisted_complex(alg, j);
  ValidationReport report;
  for (int x = 0; x < n; ++x) {
    const Vec ax = mat_col(a, x);
    for (int y = x + 1; y < n; ++y) {
      const Vec defect = vec_sub(alg.bracket(ax, mat_col(a, y)), alg.structure(x, y));
      if (!vec_is_zero(defect)) {
        report.add(make_fail("bracket_invariant", Witness{{x + 1, y + 1}, defect, {}}));
        return report;
      }
    }
  }
  report.add(make_pass("bracket_invariant"));
  return report;
}

ValidationReport abelian_kahler_checks(const HomLieAlgebra& alg, const Metric& g,
                                       const ComplexStructure& j, const Connection& conn) {
  (void)g;  // the metric enters through `conn`, already canonical for it
  const int n = alg.n();
  const Mat a = twisted_complex(alg, j);
  ValidationReport report;

  CheckResult rule = make_pass("twisted_nabla_rule");
  for (int x = 0; x < n && rule.passed(); ++x) {
    const Vec ax = mat_col(a, x);
    for (int y = 0; y < n; ++y) {
      const Vec lhs = nabla_vec(alg, conn, ax, vec_basis(n, y));
      const Vec rhs = vec_neg(mat_vec(a, conn.at(x, y)));
      const Vec defect = vec_sub(lhs, rhs);
      if (!vec_is_zero(defect)) {
        rule = make_fail("twisted_nabla_rule", Witness{{x + 1, y + 1}, defect, {}});
        break;
      }
    }
  }
  report.add(rule);

  CheckResult product = make_pass("bracket_reconstruction");
  for (int x = 0; x < n && product.passed(); ++x) {
    for (int y = 0; y < n; ++y) {
      const Vec lhs = vec_scale(Rational(2), conn.at(x, y));
      const Vec rhs = vec_sub(alg.structure(x, y),
                              mat_vec(a, alg.bracket(vec_basis(n, x), mat_col(a, y))));
      const Vec defect = vec_sub(lhs, rhs);
      if (!vec_is_zero(defect)) {
        product = make_fail("bracket_reconstruction", Witness{{x + 1, y + 1}, defect, {}});
        break;
      }
    }
  }
  report.add(product);

  CheckResult symmetry = make_pass("second_order_symmetry");
  for (int x = 0; x < n && symmetry.passed(); ++x) {
    for (int y = x + 1; y < n && symmetry.passed(); ++y) {
      for (int z = 0; z < n; ++z) {
        const Vec lhs =
            nabla_vec(alg, conn, alg.phi_basis(x), conn.at(y, z));
        const Vec rhs =
            nabla_vec(alg, conn, alg.phi_basis(y), conn.at(x, z));
        const Vec defect = vec_sub(lhs, rhs);
        if (!vec_is_zero(defect)) {
          symmetry =
              make_fail("second_order_symmetry", Witness{{x + 1, y + 1, z + 1}, defect, {}});
          break;
        }
      }
    }
  }
  report.add(symmetry);
  return report;
}

Metric twin_metric(const HomLieAlgebra& alg, const Metric& g, const ComplexStructure& j) {
  const Mat a = twisted_complex(alg, j);
  // <A x, y> in coordinates is x^T (A^T g) y.
  return Metric{mat_mul(mat_transpose(a), g.g)};
}

ValidationReport check_holomorphic_metric(const HomLieAlgebra& alg, const Metric& g,
                                          const ComplexStructure& j) {
  ValidationReport report;
  const ValidationReport metric_report = check_metric(alg, g);
  const ValidationReport complex_report = check_complex(alg, j);
  const ValidationReport norden_report = check_norden(alg, g, j);
  if (!metric_report.all_pass() || !complex_report.all_pass() ||
      !norden_report.all_pass()) {
    report.add(make_fail("holomorphic_preconditions", Witness{},
                         "pair fails metric, complex, or compatibility axioms"));
  } else {
    report.add(make_pass("holomorphic_preconditions"));
  }

  CheckResult integrable = make_pass("complex_integrable");
  const Tensor torsion = nijenhuis(alg, j);
  if (!torsion.is_zero()) {
    for (std::size_t k = 0; k < torsion.size(); ++k) {
      if (!torsion.flat(k).is_zero()) {
        std::vector<int> indices = torsion.unflatten(k);
        integrable = make_fail(
            "complex_integrable",
            Witness{{indices[1] + 1, indices[2] + 1}, {}, torsion.flat(k)},
            "first nonzero torsion component (target e_" +
                std::to_string(indices[0] + 1) + ")");
        break;
      }
    }
  }
  report.add(integrable);

  // Metric as a (0,2) tensor, fed to the twist-defect operator.
  const int n = alg.n();
  Tensor metric_tensor(n, 0, 2);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) metric_tensor.at({x, y}) = g.g[x][y];
  }
  const TwistDefectResult defect = tachibana(alg, j, metric_tensor, PurityPolicy::Verify);
  if (defect.value.is_zero()) {
    report.add(make_pass("metric_twist_defect_vanishes"));
  } else {
    for (std::size_t k = 0; k < defect.value.size(); ++k) {
      if (!defect.value.flat(k).is_zero()) {
        std::vector<int> indices = defect.value.unflatten(k);
        for (int& index : indices) ++index;
        report.add(make_fail("metric_twist_defect_vanishes",
                             Witness{indices, {}, defect.value.flat(k)}));
        break;
      }
    }
  }
  return report;
}

}  // namespace homnorden
