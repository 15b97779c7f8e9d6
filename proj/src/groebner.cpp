#include "sperner/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

// Full reduction; every basis element must be monic.
Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis) {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lead = p.leading_term();
    if (const Polynomial* g = find_reducer(lead.monomial, basis)) {
      p = p - g->mul_term(g->leading_monomial().quotient_of(lead.monomial), lead.coeff);
    } else {
      remainder.push_back(lead);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(p.field(), p.nvars(), std::move(remainder), p.order());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Field& k = f.field();
  return f.mul_term(f.leading_monomial().quotient_of(l), k.one()) -
         g.mul_term(g.leading_monomial().quotient_of(l), k.one());
}

struct Pair {
  std::size_t i;
  std::size_t j;
  int degree;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::leading_divides(const Monomial& m) const {
  return find_reducer(m, generators) != nullptr;
}

bool InitialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (p.nvars() != g.nvars) throw std::invalid_argument("normal form: ring mismatch");
  if (!(p.order() == g.order)) throw std::invalid_argument("normal form: order mismatch");
  if (!(p.field() == g.field)) throw std::invalid_argument("normal form: field mismatch");
  return reduce(p, g.generators);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         int degree_cap) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  const Field field = gens.front().field();
  const std::size_t n = gens.front().nvars();

  std::vector<Polynomial> inputs;
  inputs.reserve(gens.size());
  for (const auto& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (f.nvars() != n) throw DimensionMismatch("buchberger: generators in different rings");
    if (!(f.field() == field)) throw FieldMismatch("buchberger: mixed fields");
    const auto d = f.homogeneous_degree();
    if (!d) throw NotHomogeneous("buchberger: generator " + f.to_string() + " is not homogeneous");
    if (*d > degree_cap) {
      throw std::invalid_argument("buchberger: degree cap below a generator degree");
    }
    inputs.push_back(f.with_order(order).monic());
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.leading_monomial().degree() < b.leading_monomial().degree();
  });

  std::vector<Polynomial> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  const auto add_to_basis = [&](Polynomial p) {
    const std::size_t k = basis.size();
    basis.push_back(p.monic());
    for (std::size_t i = 0; i < k; ++i) {
      const int deg = basis[i].leading_monomial().lcm(basis[k].leading_monomial()).degree();
      if (deg > degree_cap) continue;
      pending.push_back({i, k, deg});
      pending_keys.emplace(i, k);
    }
  };
  const auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  // Buchberger's chain criterion.
  const auto chain_redundant = [&](const Pair& pr, const Monomial& l) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(l)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  };

  std::size_t next_input = 0;
  const int min_degree = inputs.front().leading_monomial().degree();
  for (int d = min_degree; d <= degree_cap; ++d) {
    while (next_input < inputs.size() &&
           inputs[next_input].leading_monomial().degree() == d) {
      Polynomial r = reduce(inputs[next_input++], basis);
      if (!r.is_zero()) add_to_basis(std::move(r));
    }
    while (true) {
      // Normal strategy: pairs of the current lcm degree, oldest first.
      auto it = std::find_if(pending.begin(), pending.end(),
                             [d](const Pair& p) { return p.degree == d; });
      if (it == pending.end()) break;
      const Pair pr = *it;
      pending.erase(it);
      pending_keys.erase({pr.i, pr.j});
      const Monomial& li = basis[pr.i].leading_monomial();
      const Monomial& lj = basis[pr.j].leading_monomial();
      if (li.coprime(lj)) continue;
      if (chain_redundant(pr, li.lcm(lj))) continue;
      Polynomial r = reduce(s_polynomial(basis[pr.i], basis[pr.j]), basis);
      if (!r.is_zero()) add_to_basis(std::move(r));
    }
  }

  // Auto-reduction: minimal leading terms, then tails.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      redundant = lj.divides(li) && (lj != li || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial& g = minimal[i];
    Polynomial lead = Polynomial::monomial(field, g.leading_monomial(), g.leading_coeff(), order);
    reduced.push_back(lead + reduce(g.tail(), others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  return GroebnerBasis{field, n, order, degree_cap, std::move(reduced)};
}

InitialIdeal initial_ideal(const GroebnerBasis& g) {
  InitialIdeal in{g.nvars, {}};
  const auto lms = g.leading_monomials();
  for (std::size_t i = 0; i < lms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lms.size() && !redundant; ++j) {
      redundant = i != j && lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i);
    }
    if (!redundant) in.generators.push_back(lms[i]);
  }
  std::sort(in.generators.begin(), in.generators.end());
  return in;
}

bool contains_pure_powers(const InitialIdeal& in, const DegreeVector& a) {
  if (a.size() != in.nvars) throw DimensionMismatch("degree vector arity");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!in.contains(Monomial::variable(in.nvars, i, a[i]))) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g, int degree) {
  if (degree > g.degree_cap) {
    throw std::invalid_argument("standard monomials requested above the degree cap");
  }
  auto all = monomials_of_degree(g.nvars, degree);
  std::erase_if(all, [&](const Monomial& m) { return g.leading_divides(m); });
  return all;
}

std::vector<std::uint64_t> quotient_hilbert(const GroebnerBasis& g, int max_degree) {
  std::vector<std::uint64_t> h;
  for (int d = 0; d <= max_degree; ++d) h.push_back(standard_monomials(g, d).size());
  return h;
}

}  // namespace sperner
