#include "homnorden/discovery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homnorden {

Predicate predicate_from_string(const std::string& name) {
  if (name == "norden") return Predicate::Norden;
  if (name == "kahler") return Predicate::Kahler;
  if (name == "holomorphic") return Predicate::Holomorphic;
  if (name == "abelian") return Predicate::Abelian;
  throw std::invalid_argument("unknown predicate: " + name);
}

std::string to_string(Predicate predicate) {
  switch (predicate) {
    case Predicate::Norden:
      return "norden";
    case Predicate::Kahler:
      return "kahler";
    case Predicate::Holomorphic:
      return "holomorphic";
    case Predicate::Abelian:
      return "abelian";
  }
  return "?";
}

ComplexSearchResult search_J(const HomLieAlgebra& alg, const Metric& g,
                             const std::set<Predicate>& predicates) {
  const int n = alg.n();
  if (n > 8) throw std::invalid_argument("search space too large: n must be <= 8");

  const bool needs_metric = predicates.count(Predicate::Norden) ||
                            predicates.count(Predicate::Kahler) ||
                            predicates.count(Predicate::Holomorphic);
  if (needs_metric && !check_metric(alg, g).all_pass()) {
    throw std::invalid_argument("metric must pass validation for the requested predicates");
  }

  ComplexSearchResult out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ++out.candidates_examined;
      ComplexStructure candidate{mat_zero(n, n)};
      for (int col = 0; col < n; ++col) {
        const int sign = (mask >> col) & 1u ? -1 : 1;
        candidate.j[perm[col]][col] = Rational(sign);
      }
      if (!check_complex(alg, candidate).all_pass()) continue;
      if (predicates.count(Predicate::Norden) ||
          predicates.count(Predicate::Kahler) ||
          predicates.count(Predicate::Holomorphic)) {
        if (!check_norden(alg, g, candidate).all_pass()) continue;
      }
      if (predicates.count(Predicate::Abelian) &&
          !check_abelian(alg, candidate).all_pass()) {
        continue;
      }
      if (predicates.count(Predicate::Holomorphic) &&
          !check_holomorphic_metric(alg, g, candidate).all_pass()) {
        continue;
      }
      if (predicates.count(Predicate::Kahler) &&
          !check_kahler(alg, g, candidate).all_pass()) {
        continue;
      }
      out.results.push_back(std::move(candidate));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MetricSearchResult search_metric(const HomLieAlgebra& alg, const ComplexStructure& j,
                                 const std::vector<Rational>& entries) {
  const int n = alg.n();
  if (n > 8) throw std::invalid_argument("search space too large: n must be <= 8");
  if (entries.empty()) return MetricSearchResult{};  // |entries|^n = 0 candidates

  MetricSearchResult out;
  const std::size_t base = entries.size();
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);

  for (;;) {
    ++out.candidates_examined;
    Metric candidate{mat_zero(n, n)};
    for (int i = 0; i < n; ++i) candidate.g[i][i] = entries[digits[i]];
    if (check_metric(alg, candidate).all_pass() &&
        check_norden(alg, candidate, j).all_pass()) {
      out.results.push_back(std::move(candidate));
    }
    // Odometer step, last digit fastest.
    int pos = n - 1;
    while (pos >= 0) {
      if (++digits[pos] < base) break;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace homnorden
