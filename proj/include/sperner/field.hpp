#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace sperner {

class Scalar;

/// Coefficient field K: a prime field GF(p) with p prime and p < 2^31, or
/// the rationals. Cheap to copy; compared by value.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }
  static Field default_field() { return prime(kDefaultPrime); }

  bool is_prime_field() const noexcept { return modulus_ != 0; }
  bool is_rational() const noexcept { return modulus_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Throws std::domain_error for den == 0.
  Scalar from_fraction(long long num, long long den) const;
  Scalar from_rational(const mpq_class& q) const;

  /// Uniform over GF(p); uniform integer in [-5, 5] over the rationals.
  Scalar random(std::mt19937_64& rng) const;

  /// "GF(p)" or "QQ".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Element of a Field in canonical form: residue in [0, p) or a fully
/// reduced fraction with positive denominator. Equality is structural.
class Scalar {
 public:
  /// Rational zero; prefer Field::zero().
  Scalar() : modulus_(0), value_(mpq_class(0)) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws std::domain_error on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Residue for prime fields; throws for rationals.
  std::uint32_t residue() const;
  /// Exact value for rationals; throws for prime fields.
  const mpq_class& rational() const;

  std::string to_string() const;

 private:
  friend class Field;
  Scalar(std::uint32_t modulus, std::uint32_t residue)
      : modulus_(modulus), value_(residue) {}
  explicit Scalar(mpq_class q) : modulus_(0), value_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  std::uint32_t modulus_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sperner
