#include "homnorden/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace homnorden {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Vec vec_zero(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec vec_basis(int n, int index) {
  require(index >= 0 && index < n, "basis index out of range");
  Vec v = vec_zero(n);
  v[static_cast<std::size_t>(index)] = 1;
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const Rational& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_neg(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

Mat mat_zero(int rows, int cols) {
  return Mat(static_cast<std::size_t>(rows), vec_zero(cols));
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int mat_rows(const Mat& m) { return static_cast<int>(m.size()); }

int mat_cols(const Mat& m) {
  return m.empty() ? 0 : static_cast<int>(m.front().size());
}

bool mat_is_square(const Mat& m) {
  const int n = mat_rows(m);
  for (const Vec& row : m) {
    if (static_cast<int>(row.size()) != n) return false;
  }
  return true;
}

bool mat_is_zero(const Mat& m) {
  for (const Vec& row : m) {
    if (!vec_is_zero(row)) return false;
  }
  return true;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require(a.size() == b.size(), "matrix size mismatch");
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_add(a[i], b[i]);
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require(a.size() == b.size(), "matrix size mismatch");
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_sub(a[i], b[i]);
  return out;
}

Mat mat_neg(const Mat& a) {
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_neg(a[i]);
  return out;
}

Mat mat_scale(const Rational& c, const Mat& a) {
  Mat out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = vec_scale(c, a[i]);
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int ar = mat_rows(a), ac = mat_cols(a);
  const int br = mat_rows(b), bc = mat_cols(b);
  require(ac == br, "matrix product shape mismatch");
  Mat out = mat_zero(ar, bc);
  for (int i = 0; i < ar; ++i) {
    for (int k = 0; k < ac; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < bc; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  const int rows = mat_rows(m), cols = mat_cols(m);
  require(static_cast<int>(v.size()) == cols, "matrix-vector shape mismatch");
  Vec out = vec_zero(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (m[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

Mat mat_transpose(const Mat& m) {
  const int rows = mat_rows(m), cols = mat_cols(m);
  Mat out = mat_zero(cols, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out[j][i] = m[i][j];
  }
  return out;
}

Vec mat_col(const Mat& m, int index) {
  const int rows = mat_rows(m);
  require(index >= 0 && index < mat_cols(m), "column index out of range");
  Vec out = vec_zero(rows);
  for (int i = 0; i < rows; ++i) out[i] = m[i][index];
  return out;
}

Rational determinant(Mat m) {
  require(mat_is_square(m), "determinant of non-square matrix");
  const int n = mat_rows(m);
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational f = m[row][col] / m[col][col];
      for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  return det;
}

LUSolver::LUSolver(Mat m) : n_(mat_rows(m)), lu_(std::move(m)) {
  require(mat_is_square(lu_), "LU factorization of non-square matrix");
  perm_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) perm_[i] = i;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row) {
      if (!lu_[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw SingularSystemError("singular linear system");
    if (pivot != col) {
      std::swap(lu_[pivot], lu_[col]);
      std::swap(perm_[pivot], perm_[col]);
    }
    for (int row = col + 1; row < n_; ++row) {
      if (lu_[row][col].is_zero()) continue;
      const Rational f = lu_[row][col] / lu_[col][col];
      lu_[row][col] = f;  // unit-lower factor entry
      for (int j = col + 1; j < n_; ++j) lu_[row][j] -= f * lu_[col][j];
    }
  }
}

Vec LUSolver::solve(const Vec& rhs) const {
  require(static_cast<int>(rhs.size()) == n_, "solve: rhs size mismatch");
  Vec x(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) x[i] = rhs[perm_[i]];
  // Forward substitution with the unit-lower factor.
  for (int i = 1; i < n_; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!lu_[i][j].is_zero()) x[i] -= lu_[i][j] * x[j];
    }
  }
  // Back substitution with the upper factor.
  for (int i = n_ - 1; i >= 0; --i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!lu_[i][j].is_zero()) x[i] -= lu_[i][j] * x[j];
    }
    x[i] /= lu_[i][i];
  }
  return x;
}

}  // namespace homnorden
