#pragma once

#include "homnorden/report.hpp"

#include <map>
#include <utility>

namespace homnorden {

/// Finite-dimensional algebra with an antisymmetric bracket and a twisting
/// endomorphism, both given in coordinates over a fixed basis e_1..e_n.
///
/// Construction takes the bracket through its upper-triangular structure
/// coefficients ([e_i, e_j] for i < j, 1-based keys) and stores the full
/// antisymmetric table, so antisymmetry holds by construction; diagonal
/// brackets are zero.  Whether the twisting map is actually a morphism for
/// the bracket, and whether the twisted Jacobi identity holds, are separate
/// checks — the constructor validates shapes and index ranges only.
class HomLieAlgebra {
public:
  /// coefficient-vector-by-target-index form of one bracket value.
  using BracketCoeffs = std::map<int, Rational>;  // 1-based k -> coefficient

  HomLieAlgebra(int n,
                const std::map<std::pair<int, int>, BracketCoeffs>& upper_brackets,
                Mat twist);

  int n() const { return n_; }
  const Mat& phi() const { return phi_; }

  /// Structure coefficients of [e_i, e_j], 0-based arguments.
  const Vec& structure(int i, int j) const;

  /// Bracket of arbitrary coordinate vectors (bilinear extension).
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Image of a coordinate vector under the twisting endomorphism.
  Vec apply_phi(const Vec& x) const;

  /// Image of the 0-based basis vector e_i under the twisting map.
  const Vec& phi_basis(int i) const;

private:
  int n_;
  Mat phi_;
  std::vector<Vec> phi_cols_;            // phi applied to each basis vector
  std::vector<std::vector<Vec>> table_;  // table_[i][j] = structure of [e_i, e_j]
};

/// Flags describing the twisting endomorphism alone.
struct PhiFlags {
  bool proper = false;      // differs from the identity
  bool involutive = false;  // squares to the identity
  bool regular = false;     // invertible
};

PhiFlags classify_phi(const HomLieAlgebra& alg);

/// phi([e_i, e_j]) == [phi e_i, phi e_j] for all pairs.
ValidationReport check_morphism(const HomLieAlgebra& alg);

/// Twisted Jacobi identity: the cyclic sum of [phi e_i, [e_j, e_k]]
/// vanishes for every triple.
ValidationReport check_hom_jacobi(const HomLieAlgebra& alg);

/// Untwisted Jacobi identity, for comparison; not required for validity.
ValidationReport check_classical_jacobi(const HomLieAlgebra& alg);

/// Everything a structure must satisfy to be accepted: morphism property
/// and the twisted Jacobi identity.
ValidationReport validate_algebra(const HomLieAlgebra& alg);

}  // namespace homnorden
