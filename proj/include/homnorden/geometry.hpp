#pragma once

#include "homnorden/tensorcalc.hpp"

namespace homnorden {

/// Symmetric bilinear form in coordinates: entry (i,j) is <e_i, e_j>.
struct Metric {
  Mat g;
};

/// Almost complex structure candidate in coordinates.  The defining
/// conditions ((tw . J)^2 = -Id and commutation with the twisting map) are
/// verified by check_complex, not by construction.
struct ComplexStructure {
  Mat j;
};

/// Bilinear connection given by its coefficient table:
/// at(i, j) holds the coordinates of D_{e_i} e_j.
struct Connection {
  int n = 0;
  std::vector<Vec> gamma;  // row-major over (i, j)

  static Connection zero(int n);
  const Vec& at(int i, int j) const;
  Vec& at(int i, int j);

  friend bool operator==(const Connection& a, const Connection& b) = default;
};

/// Composite map tw . J as a matrix; the operative almost-complex operator
/// throughout this library.
Mat twisted_complex(const HomLieAlgebra& alg, const ComplexStructure& j);

/// <x, y> under the metric.
Rational inner(const Metric& g, const Vec& x, const Vec& y);

/// Bilinear extension of the connection: D_x y for coordinate vectors.
Vec nabla_vec(const HomLieAlgebra& alg, const Connection& conn, const Vec& x, const Vec& y);

/// Metric axioms relative to the algebra: symmetry, invertibility, and
/// compatibility with the twisting map (tw^T g tw = g).
ValidationReport check_metric(const HomLieAlgebra& alg, const Metric& g);

/// Almost-complex axioms: (tw J)^2 = -Id and tw J = J tw.  Odd dimension is
/// reported as a failure of the square condition's precondition.
ValidationReport check_complex(const HomLieAlgebra& alg, const ComplexStructure& j);

/// Torsion tensor of the twisted complex operator A = tw . J:
///   N(e_i, e_j) = [A e_i, A e_j] - A [A e_i, e_j] - A [e_i, A e_j] - [e_i, e_j],
/// returned as a (1,2) tensor (target slot first).  Zero iff integrable.
Tensor nijenhuis(const HomLieAlgebra& alg, const ComplexStructure& j);

/// Compatibility of metric and complex structure in the anti-isometry
/// sense: A^T g A = -g, together with the equivalent self-adjointness form
/// A^T g = g A; a disagreement between the two is reported explicitly.
ValidationReport check_norden(const HomLieAlgebra& alg, const Metric& g,
                              const ComplexStructure& j);

/// Unique connection determined by torsion-freeness and twisted metric
/// compatibility, via the linear system
///   2 <D_{e_i} e_j, tw e_l> = <[e_i,e_j], tw e_l> + <[e_l,e_j], tw e_i>
///                           + <[e_l,e_i], tw e_j>.
/// The system matrix (g . tw, transposed) is factored once and reused for
/// all n^2 right-hand sides.  Requires det(g) != 0 and det(tw) != 0; a
/// singular system throws SingularSystemError (callers validate first).
Connection levi_civita(const HomLieAlgebra& alg, const Metric& g);

/// D_{e_i} e_j - D_{e_j} e_i == [e_i, e_j] for all pairs.
ValidationReport check_torsion_free(const HomLieAlgebra& alg, const Connection& conn);

/// Twisted product rule for the metric:
///   <D_{e_i} e_j, tw e_k> + <tw e_j, D_{e_i} e_k> == 0 for all triples.
ValidationReport check_metric_compat(const HomLieAlgebra& alg, const Metric& g,
                                     const Connection& conn);

/// Parallelism of the twisted complex operator under the canonical
/// connection (recomputed internally from g): passes iff nabla_endo of
/// A = tw . J vanishes in every direction.  Also records the equivalent
/// anticommutation form (D_{A x} A) = -A (D_x A) as a second check.
/// Preconditions (metric, complex, compatibility) are re-verified and
/// reported; a precondition failure fails the report as a whole.
ValidationReport check_kahler(const HomLieAlgebra& alg, const Metric& g,
                              const ComplexStructure& j);

/// Bracket invariance of the twisted complex operator:
/// [A e_i, A e_j] == [e_i, e_j] for all pairs.
ValidationReport check_abelian(const HomLieAlgebra& alg, const ComplexStructure& j);

/// Identities tying an invariant bracket to the canonical connection:
///   D_{A x} y == -A (D_x y)
///   2 D_x y == [x, y] - A [x, A y]
///   D_{tw x} . D_y == D_{tw y} . D_x   (second-order symmetry)
/// Evaluated on all basis pairs; meaningful when the operator is
/// bracket-invariant and parallel.
ValidationReport abelian_kahler_checks(const HomLieAlgebra& alg, const Metric& g,
                                       const ComplexStructure& j, const Connection& conn);

/// Companion form <x, y>' = <A x, y>.  Symmetric when the pair is
/// compatible in the check_norden sense; applying the construction twice
/// returns the negated original metric.
Metric twin_metric(const HomLieAlgebra& alg, const Metric& g, const ComplexStructure& j);

/// Passes iff the pair is check_norden-compatible, the structure is
/// integrable, and the tachibana defect of the metric vanishes.
ValidationReport check_holomorphic_metric(const HomLieAlgebra& alg, const Metric& g,
                                          const ComplexStructure& j);

}  // namespace homnorden
