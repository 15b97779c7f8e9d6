#include "sperner/chains.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& layer) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < layer.size(); ++i) idx.emplace(layer[i], i);
  return idx;
}

// Upper covers of m inside the box.
std::vector<Monomial> covers(const Monomial& m, const DegreeVector& a) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (m[i] + 1 <= a[i] - 1) out.push_back(m * Monomial::variable(a.size(), i));
  }
  return out;
}

/// Hopcroft–Karp on a left/right bipartite graph, starting from a partial
/// matching.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::vector<std::vector<std::size_t>> adj, std::size_t right_size)
      : adj_(std::move(adj)),
        match_left_(adj_.size(), kFree),
        match_right_(right_size, kFree),
        dist_(adj_.size()) {}

  void seed(std::size_t u, std::size_t v) {
    if (match_left_[u] == kFree && match_right_[v] == kFree) {
      match_left_[u] = v;
      match_right_[v] = u;
    }
  }

  std::size_t run() {
    std::size_t augmentations = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++augmentations;
      }
    }
    return augmentations;
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kFree;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (const std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kFree) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (const std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kFree;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

ChainDecomposition symmetric_chain_decomposition(const DegreeVector& a) {
  require_materializable(a);
  const std::size_t n = a.size();
  std::vector<Chain> chains{Chain{{Monomial(n)}}};
  for (std::size_t var = 0; var < n; ++var) {
    const int m = a[var];
    std::vector<Chain> next;
    for (const auto& c : chains) {
      const int len = static_cast<int>(c.elements.size());
      const auto cell = [&](int i, int t) {
        return c.elements[static_cast<std::size_t>(i)] * Monomial::variable(n, var, t);
      };
      for (int k = 0; k < std::min(len, m); ++k) {
        Chain out;
        for (int i = 0; i <= len - 1 - k; ++i) out.elements.push_back(cell(i, k));
        for (int t = k + 1; t < m; ++t) out.elements.push_back(cell(len - 1 - k, t));
        next.push_back(std::move(out));
      }
    }
    chains = std::move(next);
  }
  return {a, std::move(chains)};
}

ChainDecompositionAudit audit(const ChainDecomposition& scd) {
  const DegreeVector& a = scd.a;
  const HilbertFunction h = hilbert_of_monomial_ci(a);
  const int c = a.socle_degree();
  ChainDecompositionAudit r;

  std::set<Monomial> seen;
  bool duplicate = false, outside = false;
  r.saturated = true;
  r.symmetric = true;
  for (const auto& chain : scd.chains) {
    if (chain.elements.empty()) {
      r.saturated = false;
      continue;
    }
    for (std::size_t i = 0; i < chain.elements.size(); ++i) {
      const auto& m = chain.elements[i];
      if (!in_box(m, a)) outside = true;
      if (!seen.insert(m).second) duplicate = true;
      if (i > 0) {
        const auto& prev = chain.elements[i - 1];
        if (!prev.divides(m) || m.degree() != prev.degree() + 1) r.saturated = false;
      }
    }
    if (chain.start_rank() + chain.end_rank() != c) r.symmetric = false;
  }
  r.partition = !duplicate && !outside && seen.size() == a.product();
  r.count_ok = scd.chains.size() == h.max();
  return r;
}

std::vector<Monomial> neighbor_set(const std::vector<Monomial>& s, const DegreeVector& a) {
  if (s.empty()) return {};
  const int j = s.front().degree();
  std::set<Monomial> out;
  for (const auto& x : s) {
    if (!in_box(x, a)) throw std::invalid_argument("monomial " + x.to_string() + " outside the box");
    if (x.degree() != j) throw std::invalid_argument("neighbor set of mixed-rank monomials");
    for (auto& y : covers(x, a)) out.insert(std::move(y));
  }
  std::vector<Monomial> v(out.rbegin(), out.rend());
  return v;
}

MatchingCertificate layer_matching(const DegreeVector& a, int j, MatchingOptions options) {
  const LatticeLayer lower = layer(a, j);
  const LatticeLayer upper = layer(a, j + 1);
  MatchingCertificate cert;
  cert.j = j;
  cert.upward = lower.monomials.size() <= upper.monomials.size();
  cert.derived_by_duality = !cert.upward;
  const auto& small = cert.upward ? lower.monomials : upper.monomials;
  const auto& large = cert.upward ? upper.monomials : lower.monomials;
  if (small.empty()) return cert;

  const auto large_idx = index_of(large);
  std::vector<std::vector<std::size_t>> adj(small.size());
  for (std::size_t u = 0; u < small.size(); ++u) {
    for (std::size_t v = 0; v < large.size(); ++v) {
      const bool related = cert.upward ? small[u].divides(large[v]) : large[v].divides(small[u]);
      if (related) adj[u].push_back(v);
    }
  }
  BipartiteMatcher matcher(std::move(adj), large.size());
  if (options.warm_start) {
    const auto small_idx = index_of(small);
    for (const auto& chain : symmetric_chain_decomposition(a).chains) {
      if (chain.start_rank() > j || chain.end_rank() < j + 1) continue;
      const auto pos = static_cast<std::size_t>(j - chain.start_rank());
      const Monomial& lo = chain.elements[pos];
      const Monomial& hi = chain.elements[pos + 1];
      const Monomial& s = cert.upward ? lo : hi;
      const Monomial& l = cert.upward ? hi : lo;
      matcher.seed(small_idx.at(s), large_idx.at(l));
    }
  }
  cert.augmentations = matcher.run();
  for (std::size_t u = 0; u < small.size(); ++u) {
    const std::size_t v = matcher.match_left()[u];
    if (v == kFree) {
      throw Falsification("layer matching for degrees " + a.to_string() + " at j=" +
                          std::to_string(j) + " does not saturate the smaller layer");
    }
    cert.pairs.emplace_back(small[u], large[v]);
  }
  return cert;
}

bool verify_certificate(const MatchingCertificate& cert, const DegreeVector& a) {
  const auto lower = layer(a, cert.j).monomials;
  const auto upper = layer(a, cert.j + 1).monomials;
  const auto& small = cert.upward ? lower : upper;
  std::set<Monomial> sources, targets;
  for (const auto& [s, l] : cert.pairs) {
    if (!in_box(s, a) || !in_box(l, a)) return false;
    const Monomial& lo = cert.upward ? s : l;
    const Monomial& hi = cert.upward ? l : s;
    if (lo.degree() != cert.j || hi.degree() != cert.j + 1 || !lo.divides(hi)) return false;
    if (!sources.insert(s).second || !targets.insert(l).second) return false;
  }
  return sources.size() == small.size();
}

MonomialMatchingCheck monomial_matching_check(const std::vector<Monomial>& s,
                                              const DegreeVector& a, int j) {
  for (const auto& x : s) {
    if (x.degree() != j) throw std::invalid_argument("monomial not in layer " + std::to_string(j));
  }
  const HilbertFunction h = hilbert_of_monomial_ci(a);
  MonomialMatchingCheck r;
  r.s_size = std::set<Monomial>(s.begin(), s.end()).size();
  r.neighbor_size = neighbor_set(s, a).size();
  r.asserted = h.at(j) <= h.at(j + 1);
  r.pass = !r.asserted || r.s_size <= r.neighbor_size;
  return r;
}

kernels::NeighborMasks layer_adjacency(const DegreeVector& a, int j) {
  const auto lower = layer(a, j).monomials;
  const auto upper = layer(a, j + 1).monomials;
  const auto upper_idx = index_of(upper);
  kernels::NeighborMasks adj(lower.size(), upper.size());
  for (std::size_t u = 0; u < lower.size(); ++u) {
    for (const auto& y : covers(lower[u], a)) adj.set(u, upper_idx.at(y));
  }
  return adj;
}

HallReport exhaustive_hall_check(const DegreeVector& a, int j, bool parallel) {
  const HilbertFunction h = hilbert_of_monomial_ci(a);
  HallReport r;
  r.j = j;
  r.lower_size = h.at(j);
  r.upper_size = h.at(j + 1);
  if (r.lower_size > kExhaustiveHallLimit) {
    throw SizeLimitExceeded("exhaustive Hall check limited to layers of size " +
                            std::to_string(kExhaustiveHallLimit));
  }
  r.asserted = h.at(j) <= h.at(j + 1);
  const auto adj = layer_adjacency(a, j);
  r.scan = parallel ? kernels::hall_scan_parallel(adj) : kernels::hall_scan_serial(adj);
  return r;
}

}  // namespace sperner
