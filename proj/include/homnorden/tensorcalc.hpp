#pragma once

#include "homnorden/homalg.hpp"

#include <initializer_list>
#include <optional>

namespace homnorden {

struct Connection;        // geometry.hpp
struct ComplexStructure;  // geometry.hpp

/// Dense coordinate tensor with `p` contravariant slots followed by `q`
/// covariant slots, each running over a dimension-n basis.  Entries are
/// stored row-major over the (p+q)-tuple of 0-based indices, contravariant
/// indices first.
class Tensor {
public:
  Tensor(int n, int p, int q);  // zero-filled

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int order() const { return p_ + q_; }
  std::size_t size() const { return data_.size(); }

  const Rational& at(std::initializer_list<int> indices) const;
  Rational& at(std::initializer_list<int> indices);
  const Rational& at(const std::vector<int>& indices) const;
  Rational& at(const std::vector<int>& indices);

  const Rational& flat(std::size_t offset) const { return data_.at(offset); }
  Rational& flat(std::size_t offset) { return data_.at(offset); }

  /// 0-based index tuple addressed by a flat offset.
  std::vector<int> unflatten(std::size_t offset) const;

  bool is_zero() const;

  friend bool operator==(const Tensor& a, const Tensor& b);

private:
  std::size_t offset_of(const int* indices, std::size_t count) const;

  int n_, p_, q_;
  std::vector<Rational> data_;
};

/// Linear map recorded by its matrix; used where a map is consumed as a
/// (1,1)-tensor argument rather than as structure data.
struct Endomorphism {
  Mat m;
};

/// Substitutes M into one covariant slot:
/// out(..., y, ...) = t(..., M y, ...) on slot `slot` (0-based among the
/// covariant slots).
Tensor pullback_slot(const Tensor& t, int slot, const Mat& m);

/// Covariant derivative of a purely covariant tensor along the connection.
/// The result has one extra covariant slot, the direction, in first
/// position:
///   out(x, y_1..y_q) = - sum_i t(tw y_1, ..., D_x y_i, ..., tw y_q)
/// where `tw` is the algebra's twisting map and D the connection.  Inputs
/// with contravariant slots or q = 0 are rejected with invalid_argument.
Tensor cov_deriv_0q(const HomLieAlgebra& alg, const Connection& conn, const Tensor& t);

/// Derivative of an endomorphism along each basis direction: entry i is the
/// matrix of y -> D_{e_i}(A y) - A(D_{e_i} y).  All zero exactly when A is
/// parallel.
std::vector<Mat> nabla_endo(const HomLieAlgebra& alg, const Connection& conn, const Mat& a);

/// Verdict of a purity scan: whether substituting the map into adjacent
/// covariant slots is slot-independent.  (Adjacent pairs suffice: equality
/// across every pair follows by transitivity.)  On failure, `slot_pair` is
/// the 1-based left slot of the first differing adjacent pair, `indices` the
/// first argument tuple (1-based) where the two substitutions differ, and
/// `defect` their difference there (left slot minus right slot).
struct PurityReport {
  bool pure = true;
  int slot_pair = 0;
  std::vector<int> indices;
  Rational defect;
};

PurityReport purity_check(const Tensor& t, const Endomorphism& a);

enum class PurityPolicy { Verify, Skip };

/// Value of the twisted derivation-defect operator together with the purity
/// status of its input.
struct TwistDefectResult {
  Tensor value;
  bool purity_verified = false;  // false when the caller skipped the scan
  bool pure = false;             // meaningful only when verified
  std::optional<PurityReport> purity;
};

/// Measures how far the composite map A = tw . J is from acting as a
/// derivation-compatible symmetry of `t`:
///   out(x, y_1..y_q) = sum_i t(tw y_1, ..., [y_i, A x] - A [y_i, x], ..., tw y_q).
/// Vanishes identically on pure tensors preserved by the twisted structure.
/// With PurityPolicy::Verify the input is purity-scanned first and the
/// report attached; Skip computes the value and marks it unverified.
TwistDefectResult tachibana(const HomLieAlgebra& alg, const ComplexStructure& j,
                            const Tensor& t, PurityPolicy policy = PurityPolicy::Verify);

}  // namespace homnorden
