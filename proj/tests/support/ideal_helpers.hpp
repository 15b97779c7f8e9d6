#pragma once

// Builders shared by the graded-algebra tests and the acceptance suite.

#include <random>
#include <set>

#include "sperner/graded_algebra.hpp"

namespace sperner::testing {

/// I spanned by the unit vectors of the given standard monomials.
inline IdealHandle ideal_of_monomial_set(const AlgebraTable& A, const std::set<Monomial>& s) {
  std::vector<Matrix> parts;
  for (int d = 0; d <= A.top_degree(); ++d) parts.emplace_back(A.field(), 0, A.dim(d));
  for (const auto& m : s) {
    const auto k = A.index_of(m);
    if (!k) continue;
    std::vector<Scalar> row(A.dim(m.degree()), A.field().zero());
    row[*k] = A.field().one();
    parts[static_cast<std::size_t>(m.degree())].append_row(row);
  }
  return IdealHandle(std::move(parts));
}

/// Sum of 1..3 ideals generated by random subspaces in random degrees.
inline IdealHandle random_ideal(const AlgebraTable& A, std::mt19937_64& rng, int min_degree = 1) {
  const int c = A.top_degree();
  IdealHandle I = zero_ideal(A);
  if (min_degree > c) return I;
  std::uniform_int_distribution<int> pieces(1, 3), deg(min_degree, c);
  const int k = pieces(rng);
  for (int t = 0; t < k; ++t) {
    const int d = deg(rng);
    std::uniform_int_distribution<std::size_t> rows(1, A.dim(d));
    I = ideal_sum(I, ideal_from_subspace(A, random_subspace(A, d, rows(rng), rng)));
  }
  return I;
}

/// Ideal generated by a random subspace of A_d of random dimension >= 1.
inline IdealHandle random_single_degree_ideal(const AlgebraTable& A, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> rows(1, A.dim(d));
  return ideal_from_subspace(A, random_subspace(A, d, rows(rng), rng));
}

}  // namespace sperner::testing
