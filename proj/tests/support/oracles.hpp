#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls rref, Buchberger or the chain/matching code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sperner/degree_vector.hpp"
#include "sperner/matrix.hpp"
#include "sperner/monomial.hpp"
#include "sperner/polynomial.hpp"

namespace sperner::oracle {

/// Determinant by cofactor expansion.
inline Scalar determinant(const std::vector<std::vector<Scalar>>& m, const Field& k) {
  const std::size_t n = m.size();
  if (n == 0) return k.one();
  if (n == 1) return m[0][0];
  Scalar det = k.zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][c] * determinant(minor, k);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

/// Rank as the largest size of a nonvanishing minor.
inline std::size_t minor_rank(const Matrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = top; k > 0; --k) {
    bool found = false;
    std::vector<std::size_t> rows, cols;
    choose(m.rows(), k, 0, rows, [&](const std::vector<std::size_t>& rs) {
      if (found) return;
      choose(m.cols(), k, 0, cols, [&](const std::vector<std::size_t>& cs) {
        if (found) return;
        std::vector<std::vector<Scalar>> sub;
        for (auto r : rs) {
          std::vector<Scalar> row;
          for (auto c : cs) row.push_back(m(r, c));
          sub.push_back(std::move(row));
        }
        if (!determinant(sub, m.field()).is_zero()) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Every vector of the row space over GF(p), enumerated as residue tuples.
inline std::set<std::vector<std::uint32_t>> span_vectors(const Matrix& m) {
  const std::uint32_t p = m.field().characteristic();
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> coeffs(m.rows(), 0);
  while (true) {
    std::vector<std::uint32_t> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t{coeffs[r]} * m(r, c).residue()) % p);
      }
    }
    out.insert(std::move(v));
    std::size_t i = 0;
    while (i < coeffs.size() && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
  }
  return out;
}

/// log_p |span|.
inline std::size_t span_dimension(const Matrix& m) {
  const auto count = span_vectors(m).size();
  std::size_t d = 0;
  for (std::size_t s = 1; s < count; s *= m.field().characteristic()) ++d;
  return d;
}

/// Every exponent vector of the box, by odometer.
inline std::vector<Monomial> box_monomials(const DegreeVector& a) {
  std::vector<Monomial> out;
  std::vector<int> e(a.size(), 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == a[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

inline std::vector<std::uint64_t> box_layer_sizes(const DegreeVector& a) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(a.socle_degree()) + 1, 0);
  for (const auto& m : box_monomials(a)) ++h[static_cast<std::size_t>(m.degree())];
  return h;
}

/// dim of the degree-d slice of the ideal (gens): span of all m * g with
/// deg m = d - deg g, measured by the minor-free rank of the coefficient
/// matrix over the degree-d monomial basis. Uses Matrix rank only through
/// an independent Gaussian elimination written here.
inline std::size_t ideal_slice_dimension(const std::vector<Polynomial>& gens, int d) {
  const std::size_t n = gens.front().nvars();
  const Field k = gens.front().field();
  const auto basis = monomials_of_degree(n, d);
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    const int e = d - g.total_degree();
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(n, e)) {
      std::vector<Scalar> row(basis.size(), k.zero());
      for (const auto& t : g.terms()) row[idx.at(t.monomial * m)] += t.coeff;
      rows.push_back(std::move(row));
    }
  }
  // Plain forward elimination, no pivoting rules shared with rref().
  std::size_t rank = 0;
  for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Scalar f = rows[r][c] / rows[rank][c];
      for (std::size_t cc = c; cc < basis.size(); ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// H(R/(gens), d) by raw linear algebra.
inline std::uint64_t quotient_hilbert_by_rank(const std::vector<Polynomial>& gens, int d) {
  const std::size_t n = gens.front().nvars();
  return binomial(static_cast<std::uint64_t>(d) + n - 1, n - 1) - ideal_slice_dimension(gens, d);
}

/// Random homogeneous polynomial of degree d.
inline Polynomial random_form(const Field& k, std::size_t n, int d, std::mt19937_64& rng,
                              double density = 1.0) {
  std::vector<Term> terms;
  std::bernoulli_distribution keep(density);
  for (const auto& m : monomials_of_degree(n, d)) {
    if (keep(rng)) terms.push_back({m, k.random(rng)});
  }
  return Polynomial::from_terms(k, n, std::move(terms));
}

using MonomialSet = std::set<Monomial>;

inline bool in_box_oracle(const Monomial& m, const DegreeVector& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (m[i] >= a[i]) return false;
  }
  return true;
}

/// Every up-closed subset of the box (the monomial ideals of B), found by
/// testing all 2^|box| subsets. Includes the zero and unit ideals.
inline std::vector<MonomialSet> monomial_ideals_by_subsets(const DegreeVector& a) {
  const auto box = box_monomials(a);
  std::vector<MonomialSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << box.size()); ++mask) {
    MonomialSet s;
    for (std::size_t i = 0; i < box.size(); ++i) {
      if (mask >> i & 1u) s.insert(box[i]);
    }
    bool closed = true;
    for (const auto& m : s) {
      for (std::size_t v = 0; v < a.size() && closed; ++v) {
        const Monomial up = m * Monomial::variable(a.size(), v);
        if (in_box_oracle(up, a) && !s.count(up)) closed = false;
      }
    }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

/// Elements of s not divisible by another element of s.
inline MonomialSet minimal_elements(const MonomialSet& s) {
  MonomialSet out;
  for (const auto& m : s) {
    bool minimal = true;
    for (const auto& o : s) {
      if (!(o == m) && o.divides(m)) minimal = false;
    }
    if (minimal) out.insert(m);
  }
  return out;
}

/// { m in box : x_i m in s or outside the box, for all i }.
inline MonomialSet colon_maximal_oracle(const MonomialSet& s, const DegreeVector& a) {
  MonomialSet out;
  for (const auto& m : box_monomials(a)) {
    bool ok = true;
    for (std::size_t v = 0; v < a.size(); ++v) {
      const Monomial up = m * Monomial::variable(a.size(), v);
      if (in_box_oracle(up, a) && !s.count(up)) ok = false;
    }
    if (ok) out.insert(m);
  }
  return out;
}

/// { m in box : m * g leaves the box for every g in s }.
inline MonomialSet annihilator_oracle(const MonomialSet& s, const DegreeVector& a) {
  MonomialSet out;
  for (const auto& m : box_monomials(a)) {
    bool ok = true;
    for (const auto& g : s) {
      if (in_box_oracle(m * g, a)) ok = false;
    }
    if (ok) out.insert(m);
  }
  return out;
}

}  // namespace sperner::oracle
