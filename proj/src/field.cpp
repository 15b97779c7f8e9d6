#include "sperner/field.hpp"

#include <ostream>
#include <stdexcept>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_signed(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_prime_field()) return Scalar(modulus_, reduce_signed(v, modulus_));
  return Scalar(mpq_class(static_cast<long>(v)));
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (is_prime_field()) return from_int(num) / from_int(den);
  mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(std::move(c));
  }
  const mpz_class p(modulus_);
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo p");
  if (num < 0) num += p;
  if (den < 0) den += p;
  return Scalar(modulus_, static_cast<std::uint32_t>(num.get_ui())) /
         Scalar(modulus_, static_cast<std::uint32_t>(den.get_ui()));
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, modulus_ - 1);
    return Scalar(modulus_, dist(rng));
  }
  std::uniform_int_distribution<int> dist(-5, 5);
  return from_int(dist(rng));
}

std::string Field::name() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(modulus_) + ")";
}

Field Scalar::field() const { return Field(modulus_); }

bool Scalar::is_zero() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (modulus_ != o.modulus_) {
    throw FieldMismatch("scalars from different fields");
  }
}

Scalar Scalar::operator-() const {
  if (modulus_ != 0) {
    const auto v = std::get<std::uint32_t>(value_);
    return Scalar(modulus_, v == 0 ? 0 : modulus_ - v);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (modulus_ != 0) {
    return Scalar(modulus_, mod_inverse(std::get<std::uint32_t>(value_), modulus_));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ != 0) {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                            std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ != 0) {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                            modulus_ - std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ != 0) {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} *
                            std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % modulus_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.modulus_ == b.modulus_ && a.value_ == b.value_;
}

std::uint32_t Scalar::residue() const {
  if (modulus_ == 0) throw std::logic_error("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw std::logic_error("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace sperner
