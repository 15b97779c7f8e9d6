#pragma once

// The monomial complete intersection B = K[x1..xn]/(x1^a1, ..., xn^an) and
// its monomial basis, the exponent box prod [0, ai - 1] ordered by
// divisibility (isomorphic to the divisor lattice of N = prod pi^(ai-1)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperner/degree_vector.hpp"
#include "sperner/monomial.hpp"

namespace sperner {

/// Box size above which explicit layers are refused.
inline constexpr std::uint64_t kMaxMaterializedMonomials = 1'000'000;

/// H(0..c); values past c are 0.
struct HilbertFunction {
  std::vector<std::uint64_t> values;

  int top_degree() const noexcept { return static_cast<int>(values.size()) - 1; }
  std::uint64_t at(int d) const {
    return d < 0 || d > top_degree() ? 0 : values[static_cast<std::size_t>(d)];
  }
  std::uint64_t max() const;
  std::uint64_t total() const;
  bool is_symmetric() const;
  /// "1 3 3 1".
  std::string to_string() const;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Coefficients of prod (1 + t + ... + t^(ai-1)).
HilbertFunction hilbert_of_monomial_ci(const DegreeVector& a);

struct Unimodality {
  bool unimodal = false;
  /// min{ j : H(j) > H(j+1) }, always <= c since H(c+1) = 0.
  int first_descent = 0;
};

Unimodality is_unimodal(const HilbertFunction& h);

/// P_j: box monomials of degree j.
struct LatticeLayer {
  int rank = 0;
  std::vector<Monomial> monomials;  // lex-descending
};

/// Throws SizeLimitExceeded above kMaxMaterializedMonomials.
LatticeLayer layer(const DegreeVector& a, int j);

/// True iff every exponent ei <= ai - 1.
bool in_box(const Monomial& m, const DegreeVector& a);

/// Throws SizeLimitExceeded when a.product() exceeds the guardrail.
void require_materializable(const DegreeVector& a);

}  // namespace sperner
