#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/field.hpp"
#include "sperner/monomial.hpp"

namespace sperner {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of R = K[x1, ..., xn]. Terms are kept sorted strictly descending
/// under the polynomial's monomial order with no zero coefficients, so two
/// polynomials with the same order compare equal iff they are equal.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars,
             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial monomial(Field field, const Monomial& m, const Scalar& c,
                             MonomialOrder order = MonomialOrder::degrevlex());
  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  /// Highest total degree of a term; -1 for zero.
  int total_degree() const;
  /// True for the zero polynomial as well.
  bool is_homogeneous() const;
  /// Degree when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  Polynomial homogeneous_component(int degree) const;

  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  /// All terms but the leading one.
  Polynomial tail() const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Scalar coefficient(const Monomial& m) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text syntax: "3*x1^2*x2 - x3^3 + 1".
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;
  void normalize();

  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

/// Parses the text syntax. Coefficients are integers or fractions a/b;
/// variables are x1..xn. `line` only labels ParseError positions.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const Field& field,
                            const MonomialOrder& order = MonomialOrder::degrevlex(),
                            std::size_t line = 1);

/// Product of degree-1 forms. Throws std::invalid_argument on an empty list,
/// a zero factor or a factor that is not homogeneous of degree 1.
Polynomial product_of_linear_forms(const std::vector<Polynomial>& forms);

}  // namespace sperner
