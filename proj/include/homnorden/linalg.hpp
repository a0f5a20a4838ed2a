#pragma once

#include "homnorden/exactnum.hpp"

#include <cstddef>
#include <vector>

namespace homnorden {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Dense row-major matrix: m[row][col].  All rows must have equal length.
using Mat = std::vector<Vec>;

Vec vec_zero(int n);
Vec vec_basis(int n, int index);  // 0-based standard basis vector
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rational& c, const Vec& a);

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
int mat_rows(const Mat& m);
int mat_cols(const Mat& m);
bool mat_is_square(const Mat& m);
bool mat_is_zero(const Mat& m);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
Mat mat_scale(const Rational& c, const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_transpose(const Mat& m);

/// Column `index` of `m`, read as the image of the 0-based basis vector.
Vec mat_col(const Mat& m, int index);

/// Exact determinant by Gaussian elimination with exact pivots.
Rational determinant(Mat m);

/// Raised when a linear system that an internal invariant guarantees to be
/// solvable turns out singular.
class SingularSystemError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact PLU factorization of a square matrix, factored once and reused for
/// many right-hand sides.  Construction throws SingularSystemError if the
/// matrix is singular.
class LUSolver {
public:
  explicit LUSolver(Mat m);

  /// Solves m*x = rhs exactly.
  Vec solve(const Vec& rhs) const;

  int size() const { return n_; }

private:
  int n_;
  Mat lu_;                 // packed unit-lower / upper factors
  std::vector<int> perm_;  // row permutation applied before factoring
};

}  // namespace homnorden
