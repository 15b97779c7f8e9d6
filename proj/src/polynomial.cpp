#include "sperner/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "sperner/errors.hpp"

namespace sperner {

Polynomial::Polynomial(Field field, std::size_t nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(std::move(order)) {}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c,
                                MonomialOrder order) {
  return monomial(field, Monomial(nvars), c, std::move(order));
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const Scalar& c,
                                MonomialOrder order) {
  Polynomial p(field, m.nvars(), std::move(order));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(field, nvars, std::move(order));
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw DimensionMismatch("term arity mismatch");
    if (!(t.coeff.field() == field)) throw FieldMismatch("term coefficient field");
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.greater(a.monomial, b.monomial);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different rings");
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (!(order_ == o.order_)) throw std::invalid_argument("polynomials under different orders");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().monomial.degree();
  for (const auto& t : terms_) {
    if (t.monomial.degree() != d) return std::nullopt;
  }
  return d;
}

Polynomial Polynomial::homogeneous_component(int degree) const {
  Polynomial p(field_, nvars_, order_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  Polynomial p(field_, nvars_, order);
  p.terms_ = terms_;
  p.normalize();
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return leading_coeff().inverse() * *this;
}

Polynomial Polynomial::tail() const {
  Polynomial p(field_, nvars_, order_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(field_, nvars_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the term order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return field_.zero();
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point arity");
  Scalar sum = field_.zero();
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial p(a.field_, a.nvars_, a.order_);
  p.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.order_.greater(a.terms_[i].monomial, b.terms_[j].monomial))) {
      p.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() ||
               a.order_.greater(b.terms_[j].monomial, a.terms_[i].monomial)) {
      p.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) p.terms_.push_back({a.terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  std::map<Monomial, Scalar> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto m = s.monomial * t.monomial;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), s.coeff * t.coeff);
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial::from_terms(a.field_, a.nvars_, std::move(terms), a.order_);
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  return p.mul_term(Monomial(p.nvars()), s);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (k == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      s += c;
    } else if (c == "1") {
      s += t.monomial.to_string();
    } else {
      s += c + '*' + t.monomial.to_string();
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, const Field& field,
             const MonomialOrder& order, std::size_t line)
      : text_(text), nvars_(nvars), field_(field), order_(order), line_(line) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return Polynomial::from_terms(field_, nvars_, std::move(terms), order_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, pos_ + 1);
  }

  long long parse_integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000000000000LL) fail("integer too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  Term parse_term() {
    Scalar coeff = field_.one();
    std::vector<int> exps(nvars_, 0);
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        const long long num = parse_integer();
        long long den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          den = parse_integer();
          if (den == 0) fail("zero denominator");
        }
        try {
          coeff *= field_.from_fraction(num, den);
        } catch (const std::domain_error&) {
          fail("denominator vanishes in this field");
        }
      } else if (ch == 'x') {
        ++pos_;
        const std::size_t start = pos_;
        const long long idx = parse_integer();
        if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) {
          pos_ = start;
          fail("variable index out of range 1.." + std::to_string(nvars_));
        }
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          const long long pe = parse_integer();
          if (pe > 1000000) fail("exponent too large");
          e = static_cast<int>(pe);
        }
        exps[static_cast<std::size_t>(idx - 1)] += e;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(exps)), coeff};
  }

  std::string_view text_;
  std::size_t nvars_;
  const Field& field_;
  const MonomialOrder& order_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const Field& field,
                            const MonomialOrder& order, std::size_t line) {
  return PolyParser(text, nvars, field, order, line).parse();
}

Polynomial product_of_linear_forms(const std::vector<Polynomial>& forms) {
  if (forms.empty()) throw std::invalid_argument("no linear forms given");
  for (const auto& f : forms) {
    if (f.is_zero()) throw std::invalid_argument("zero linear form");
    if (f.homogeneous_degree() != 1) throw std::invalid_argument("factor is not a linear form");
  }
  Polynomial p = forms.front();
  for (std::size_t i = 1; i < forms.size(); ++i) p = p * forms[i];
  return p;
}

}  // namespace sperner
