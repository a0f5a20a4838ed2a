#pragma once

#include "homnorden/geometry.hpp"

#include <set>

namespace homnorden {

/// Properties a discovered structure can be required to satisfy, checked in
/// increasing order of cost.
enum class Predicate { Norden, Kahler, Holomorphic, Abelian };

Predicate predicate_from_string(const std::string& name);  // throws invalid_argument
std::string to_string(Predicate predicate);

struct ComplexSearchResult {
  long long candidates_examined = 0;  // always 2^n * n!
  std::vector<ComplexStructure> results;
};

/// Enumerates every signed permutation matrix (columns are +-basis vectors)
/// and keeps the candidates that pass check_complex plus all requested
/// predicates.  Permutations advance lexicographically with all 2^n sign
/// masks tried per permutation; results keep enumeration order.
///
/// Requires n <= 8 (the space is 2^n * n!) and a metric that passes
/// check_metric whenever a metric-dependent predicate is requested.
ComplexSearchResult search_J(const HomLieAlgebra& alg, const Metric& g,
                             const std::set<Predicate>& predicates);

struct MetricSearchResult {
  long long candidates_examined = 0;  // always |entries|^n
  std::vector<Metric> results;
};

/// Enumerates diagonal metrics with every diagonal entry drawn from
/// `entries` (odometer order: last position varies fastest) and keeps those
/// that pass check_metric and are check_norden-compatible with the given
/// complex structure.  Requires n <= 8; an empty entry list yields an empty
/// result.
MetricSearchResult search_metric(const HomLieAlgebra& alg, const ComplexStructure& j,
                                 const std::vector<Rational>& entries);

}  // namespace homnorden
