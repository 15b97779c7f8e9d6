#include "sperner/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("monomials in different rings");
}

void fill_degree(std::vector<int>& current, std::size_t pos, int remaining,
                 std::vector<Monomial>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    fill_degree(current, pos + 1, remaining - e, out);
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (const int e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw std::invalid_argument("monomial does not divide");
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_arity(*this, other);
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  std::vector<int> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  std::vector<int> current(nvars, 0);
  fill_degree(current, 0, degree, out);
  return out;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("variable priority is not a permutation");
  }
  std::vector<std::size_t> identity(priority_.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (priority_ == identity) priority_.clear();
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_arity(a, b);
  const std::size_t n = a.nvars();
  if (!priority_.empty() && priority_.size() != n) {
    throw DimensionMismatch("monomial order arity mismatch");
  }
  if (kind_ == Kind::kLex) {
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t v = variable_at(r);
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t r = n; r-- > 0;) {
    const std::size_t v = variable_at(r);
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  std::string s = kind_ == Kind::kLex ? "lex" : "degrevlex";
  if (!priority_.empty()) {
    s += '[';
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ',';
      s += 'x' + std::to_string(priority_[i] + 1);
    }
    s += ']';
  }
  return s;
}

}  // namespace sperner
