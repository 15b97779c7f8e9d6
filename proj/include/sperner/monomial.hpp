#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace sperner {

/// Exponent vector in n variables. Variable i (0-based) prints as x{i+1}.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// Throws std::invalid_argument on a negative exponent.
  explicit Monomial(std::vector<int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Structural (lexicographic on exponents) comparison for containers;
  /// not a monomial order on its own.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// "1", "x1", "x1^2*x3".
  std::string to_string() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << m.to_string();
}

/// All monomials of total degree d in n variables, lex-descending
/// (x1 > x2 > ... > xn).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

class MonomialOrder {
 public:
  enum class Kind { kLex, kDegRevLex };

  /// Identity priority: x1 > x2 > ... > xn.
  explicit MonomialOrder(Kind kind = Kind::kDegRevLex) : kind_(kind) {}
  /// priority[0] is the most significant variable. Throws
  /// std::invalid_argument unless priority is a permutation.
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  static MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::kDegRevLex); }

  Kind kind() const noexcept { return kind_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  std::string name() const;

 private:
  std::size_t variable_at(std::size_t rank) const {
    return priority_.empty() ? rank : priority_[rank];
  }

  Kind kind_;
  std::vector<std::size_t> priority_;  // empty means identity
};

}  // namespace sperner
