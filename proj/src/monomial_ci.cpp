#include "sperner/monomial_ci.hpp"

#include <algorithm>
#include <numeric>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

void box_degree(const DegreeVector& a, std::vector<int>& current, std::size_t pos,
                int remaining, std::vector<Monomial>& out) {
  if (pos == a.size()) {
    if (remaining == 0) out.emplace_back(current);
    return;
  }
  int tail_capacity = 0;
  for (std::size_t i = pos + 1; i < a.size(); ++i) tail_capacity += a[i] - 1;
  const int hi = std::min(remaining, a[pos] - 1);
  for (int e = hi; e >= 0 && remaining - e <= tail_capacity; --e) {
    current[pos] = e;
    box_degree(a, current, pos + 1, remaining - e, out);
  }
  current[pos] = 0;
}

}  // namespace

std::uint64_t HilbertFunction::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::uint64_t HilbertFunction::total() const {
  return std::accumulate(values.begin(), values.end(), std::uint64_t{0});
}

bool HilbertFunction::is_symmetric() const {
  return std::equal(values.begin(), values.end(), values.rbegin());
}

std::string HilbertFunction::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

HilbertFunction hilbert_of_monomial_ci(const DegreeVector& a) {
  std::vector<std::uint64_t> h{1};
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::uint64_t> next(h.size() + static_cast<std::size_t>(a[i] - 1), 0);
    for (std::size_t d = 0; d < h.size(); ++d) {
      for (int e = 0; e < a[i]; ++e) next[d + static_cast<std::size_t>(e)] += h[d];
    }
    h = std::move(next);
  }
  return {std::move(h)};
}

Unimodality is_unimodal(const HilbertFunction& h) {
  const int c = h.top_degree();
  int j0 = 0;
  while (j0 <= c && h.at(j0) <= h.at(j0 + 1)) ++j0;
  Unimodality u;
  u.first_descent = j0;
  u.unimodal = true;
  for (int j = j0; j < c; ++j) {
    if (h.at(j + 1) > h.at(j)) u.unimodal = false;
  }
  return u;
}

void require_materializable(const DegreeVector& a) {
  if (a.product() > kMaxMaterializedMonomials) {
    throw SizeLimitExceeded("monomial box of size " + std::to_string(a.product()) +
                            " exceeds the materialization limit");
  }
}

LatticeLayer layer(const DegreeVector& a, int j) {
  require_materializable(a);
  LatticeLayer out{j, {}};
  if (j < 0 || j > a.socle_degree()) return out;
  std::vector<int> current(a.size(), 0);
  box_degree(a, current, 0, j, out.monomials);
  return out;
}

bool in_box(const Monomial& m, const DegreeVector& a) {
  if (m.nvars() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (m[i] > a[i] - 1) return false;
  }
  return true;
}

}  // namespace sperner
