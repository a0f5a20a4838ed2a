#include "homnorden/homalg.hpp"

#include <stdexcept>

namespace homnorden {

HomLieAlgebra::HomLieAlgebra(
    int n, const std::map<std::pair<int, int>, BracketCoeffs>& upper_brackets,
    Mat twist)
    : n_(n), phi_(std::move(twist)) {
  if (n <= 0) throw std::invalid_argument("dimension must be positive");
  if (mat_rows(phi_) != n || mat_cols(phi_) != n || !mat_is_square(phi_)) {
    throw std::invalid_argument("twisting-map matrix must be n x n");
  }
  table_.assign(n, std::vector<Vec>(n, vec_zero(n)));
  for (const auto& [pair, coeffs] : upper_brackets) {
    const auto [i, j] = pair;
    if (i < 1 || j < 1 || i > n || j > n) {
      throw std::invalid_argument("bracket index out of range");
    }
    if (i >= j) {
      throw std::invalid_argument("bracket entries must have i < j");
    }
    for (const auto& [k, coeff] : coeffs) {
      if (k < 1 || k > n) throw std::invalid_argument("bracket target out of range");
      table_[i - 1][j - 1][k - 1] = coeff;
      table_[j - 1][i - 1][k - 1] = -coeff;
    }
  }
  phi_cols_.reserve(n);
  for (int i = 0; i < n; ++i) phi_cols_.push_back(mat_col(phi_, i));
}

const Vec& HomLieAlgebra::structure(int i, int j) const {
  return table_.at(i).at(j);
}

Vec HomLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
    throw std::invalid_argument("bracket argument dimension mismatch");
  }
  Vec out = vec_zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      const Vec& value = table_[i][j];
      for (int k = 0; k < n_; ++k) {
        if (!value[k].is_zero()) out[k] += c * value[k];
      }
    }
  }
  return out;
}

Vec HomLieAlgebra::apply_phi(const Vec& x) const { return mat_vec(phi_, x); }

const Vec& HomLieAlgebra::phi_basis(int i) const { return phi_cols_.at(i); }

PhiFlags classify_phi(const HomLieAlgebra& alg) {
  const int n = alg.n();
  PhiFlags flags;
  const Mat identity = mat_identity(n);
  flags.proper = !(alg.phi() == identity);
  flags.involutive = mat_mul(alg.phi(), alg.phi()) == identity;
  flags.regular = !determinant(alg.phi()).is_zero();
  return flags;
}

ValidationReport check_morphism(const HomLieAlgebra& alg) {
  const int n = alg.n();
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec lhs = alg.apply_phi(alg.structure(i, j));
      const Vec rhs = alg.bracket(alg.phi_basis(i), alg.phi_basis(j));
      const Vec defect = vec_sub(lhs, rhs);
      if (!vec_is_zero(defect)) {
        report.add(make_fail("bracket_morphism", Witness{{i + 1, j + 1}, defect, {}}));
        return report;
      }
    }
  }
  report.add(make_pass("bracket_morphism"));
  return report;
}

namespace {

// Cyclic sum [phi e_i, [e_j, e_k]] + [phi e_j, [e_k, e_i]] + [phi e_k, [e_i, e_j]].
Vec twisted_jacobiator(const HomLieAlgebra& alg, int i, int j, int k) {
  Vec sum = alg.bracket(alg.phi_basis(i), alg.structure(j, k));
  sum = vec_add(sum, alg.bracket(alg.phi_basis(j), alg.structure(k, i)));
  sum = vec_add(sum, alg.bracket(alg.phi_basis(k), alg.structure(i, j)));
  return sum;
}

Vec plain_jacobiator(const HomLieAlgebra& alg, int i, int j, int k) {
  const int n = alg.n();
  Vec sum = alg.bracket(vec_basis(n, i), alg.structure(j, k));
  sum = vec_add(sum, alg.bracket(vec_basis(n, j), alg.structure(k, i)));
  sum = vec_add(sum, alg.bracket(vec_basis(n, k), alg.structure(i, j)));
  return sum;
}

template <typename Jacobiator>
ValidationReport jacobi_scan(const HomLieAlgebra& alg, const std::string& name,
                             Jacobiator&& jacobiator) {
  const int n = alg.n();
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Vec defect = jacobiator(alg, i, j, k);
        if (!vec_is_zero(defect)) {
          report.add(make_fail(name, Witness{{i + 1, j + 1, k + 1}, defect, {}}));
          return report;
        }
      }
    }
  }
  report.add(make_pass(name));
  return report;
}

}  // namespace

ValidationReport check_hom_jacobi(const HomLieAlgebra& alg) {
  return jacobi_scan(alg, "twisted_jacobi", twisted_jacobiator);
}

ValidationReport check_classical_jacobi(const HomLieAlgebra& alg) {
  return jacobi_scan(alg, "classical_jacobi", plain_jacobiator);
}

ValidationReport validate_algebra(const HomLieAlgebra& alg) {
  ValidationReport report = check_morphism(alg);
  const ValidationReport jacobi = check_hom_jacobi(alg);
  report.checks.insert(report.checks.end(), jacobi.checks.begin(), jacobi.checks.end());
  return report;
}

}  // namespace homnorden
