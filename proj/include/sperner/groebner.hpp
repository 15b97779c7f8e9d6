#pragma once

#include <cstddef>
#include <vector>

#include "sperner/degree_vector.hpp"
#include "sperner/polynomial.hpp"

namespace sperner {

/// Reduced Groebner basis of a homogeneous ideal, truncated at a degree cap:
/// it contains exactly the reduced-basis elements of degree <= degree_cap,
/// so it decides ideal membership and leading terms in every degree
/// <= degree_cap.
struct GroebnerBasis {
  Field field;
  std::size_t nvars = 0;
  MonomialOrder order;
  int degree_cap = 0;
  /// Monic, sorted ascending by leading monomial.
  std::vector<Polynomial> generators;

  std::vector<Monomial> leading_monomials() const;
  /// True iff some leading monomial divides m.
  bool leading_divides(const Monomial& m) const;
};

/// Minimal monomial generators of In(I), an antichain under divisibility,
/// sorted structurally.
struct InitialIdeal {
  std::size_t nvars = 0;
  std::vector<Monomial> generators;

  bool contains(const Monomial& m) const;
};

/// Full reduction of p by g. Throws std::invalid_argument when p's ring or
/// order differs from g's.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Degree-truncated Buchberger (normal selection strategy, product and chain
/// criteria). Inputs are converted to `order`. Throws std::invalid_argument
/// for an empty list, a zero generator or a generator above `degree_cap`,
/// NotHomogeneous for inhomogeneous input.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         int degree_cap);

InitialIdeal initial_ideal(const GroebnerBasis& g);

/// True iff xi^ai lies in the initial ideal for every i.
bool contains_pure_powers(const InitialIdeal& in, const DegreeVector& a);

/// Degree-d monomials outside the initial ideal, lex-descending. Valid for
/// d <= g.degree_cap.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g, int degree);

/// H(R/I, d) for d = 0..max_degree, counted from standard monomials.
/// Requires max_degree <= g.degree_cap.
std::vector<std::uint64_t> quotient_hilbert(const GroebnerBasis& g, int max_degree);

}  // namespace sperner
