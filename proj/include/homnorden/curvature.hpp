#pragma once

#include "homnorden/geometry.hpp"

namespace homnorden {

/// Curvature of a connection in both index positions:
///   k13(l; i, j, k) = coordinate l of
///     D_{tw e_i}(D_{e_j} e_k) - D_{tw e_j}(D_{e_i} e_k) - D_{[e_i, e_j]}(tw e_k)
///   k04(i, j, k, l) = <K(e_i, e_j) e_k, e_l>
/// k04 is always the metric contraction of k13 and is recomputable from it.
struct CurvatureTensor {
  Tensor k13;
  Tensor k04;

  CurvatureTensor(int n) : k13(n, 1, 3), k04(n, 0, 4) {}
};

CurvatureTensor curvature(const HomLieAlgebra& alg, const Metric& g, const Connection& conn);

/// Identity suite for a curvature tensor:
///   - antisymmetry in the first and in the last index pair of k04,
///   - first Bianchi identity (cyclic sum of k13 over its three arguments),
///   - second Bianchi identity (cyclic sum of the covariant derivative of
///     k04 over the direction and first two slots),
///   - contraction consistency between k13 and k04,
///   - purity of k04 with respect to the twisted complex operator
///     (all four slot pairs including the (2,4) pair).
/// The connection used for the second Bianchi identity is recomputed from g.
ValidationReport check_curvature_identities(const HomLieAlgebra& alg, const Metric& g,
                                            const ComplexStructure& j,
                                            const CurvatureTensor& k);

/// Twist-defect operator applied to the (0,4) curvature; the purity report
/// of the input rides along.  Vanishes on parallel-complex structures.
TwistDefectResult tachibana_curvature(const HomLieAlgebra& alg, const ComplexStructure& j,
                                      const Tensor& k04);

/// Associator-symmetry defect of the product u * v = D_u v:
///   out(l; u, v, w) = coordinate l of ass(u, v, w) - ass(v, u, w), where
///   ass(u, v, w) = D_{D_u v}(tw w) - D_{tw u}(D_v w).
/// Zero exactly when the product is left-symmetric; for a torsion-free
/// connection it equals the negated curvature k13.
Tensor left_symmetric_defect(const HomLieAlgebra& alg, const Connection& conn);

/// Passes iff the associator-symmetry defect vanishes and the product's
/// commutator returns the bracket (u * v - v * u = [u, v]).
ValidationReport check_left_symmetric(const HomLieAlgebra& alg, const Connection& conn);

/// Flatness criterion for a bracket-invariant, holomorphic pair: when the
/// preconditions hold (reported NotApplicable otherwise), verifies the
/// conjugation identity K(A x, A y) = -K(x, y), the vanishing of the full
/// curvature, and the vanishing of the associator-symmetry defect.
ValidationReport check_flat_theorem(const HomLieAlgebra& alg, const Metric& g,
                                    const ComplexStructure& j);

}  // namespace homnorden
