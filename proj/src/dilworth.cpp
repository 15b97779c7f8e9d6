#include "sperner/dilworth.hpp"

#include <map>
#include <random>

#include "sperner/chains.hpp"
#include "sperner/errors.hpp"

namespace sperner {

namespace {

constexpr std::string_view kModeNames[] = {"monomial_exhaustive", "gf2_all_graded",
                                           "random_sampled", "theorem_certified"};

void charge(std::uint64_t& used, std::uint64_t budget) {
  if (++used > budget) {
    throw BudgetExceeded("enumeration budget of " + std::to_string(budget) + " ideals exceeded");
  }
}

// Every subspace of GF(2)^q, each given by its reduced row basis.
template <class F>
void for_each_gf2_subspace(const Field& k, std::size_t q, F&& f) {
  for (std::size_t r = 0; r <= q; ++r) {
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::vector<bool> is_pivot(q, false);
      for (const auto p : pivots) is_pivot[p] = true;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = pivots[i] + 1; j < q; ++j) {
          if (!is_pivot[j]) free.emplace_back(i, j);
        }
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        Matrix m(k, r, q);
        for (std::size_t i = 0; i < r; ++i) m(i, pivots[i]) = k.one();
        for (std::size_t b = 0; b < free.size(); ++b) {
          if (mask >> b & 1u) m(free[b].first, free[b].second) = k.one();
        }
        f(m);
      }
      // Next r-combination of [0, q).
      std::size_t i = r;
      while (i > 0 && pivots[i - 1] == q - r + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t t = i; t < r; ++t) pivots[t] = pivots[t - 1] + 1;
    }
  }
}

IdealHandle random_sampled_ideal(const AlgebraTable& A, std::mt19937_64& rng) {
  const int c = A.top_degree();
  std::uniform_int_distribution<int> pieces(1, 3), deg(1, c);
  IdealHandle I = zero_ideal(A);
  const int count = pieces(rng);
  for (int t = 0; t < count; ++t) {
    const int d = deg(rng);
    std::uniform_int_distribution<std::size_t> rows(1, A.dim(d));
    I = ideal_sum(I, ideal_from_subspace(A, random_subspace(A, d, rows(rng), rng)));
  }
  return I;
}

void require_unimodal(const AlgebraTable& A) {
  if (!is_unimodal(A.hilbert()).unimodal) {
    throw HypothesisViolated("Hilbert function " + A.hilbert().to_string() + " is not unimodal");
  }
}

void require_matching(const AlgebraTable& A, bool external) {
  if (A.is_monomial()) {
    if (!verify_monomial_matching(A.degrees()).verified) {
      throw HypothesisViolated("layer matchings failed to verify");
    }
    return;
  }
  if (!external) throw HypothesisViolated("matching property not verified for this algebra");
}

DilworthReport finish(const AlgebraTable& A, SearchMode mode, std::string universe) {
  DilworthReport r;
  r.mode = mode;
  r.max_h = A.hilbert().max();
  r.universe = std::move(universe);
  return r;
}

void consider(const AlgebraTable& A, const IdealHandle& I, DilworthReport& r) {
  const std::size_t m = mu(A, I);
  if (!r.witness || m > r.d) {
    r.d = m;
    r.witness = I;
  }
}

}  // namespace

std::string to_string(SearchMode mode) {
  return std::string(kModeNames[static_cast<std::size_t>(mode)]);
}

std::optional<SearchMode> parse_search_mode(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kModeNames); ++i) {
    if (kModeNames[i] == name) return static_cast<SearchMode>(i);
  }
  return std::nullopt;
}

std::vector<IdealHandle> monomial_ideal_universe(const AlgebraTable& A, std::uint64_t budget) {
  if (!A.is_monomial()) {
    throw std::invalid_argument("monomial ideal enumeration needs a monomial algebra");
  }
  std::vector<Monomial> elems;
  for (int d = 1; d <= A.top_degree(); ++d) {
    for (const auto& m : A.basis(d)) elems.push_back(m);
  }
  std::vector<IdealHandle> out;
  std::uint64_t used = 0;
  std::vector<Monomial> chosen;
  // Antichains by include/exclude over a fixed element order.
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == elems.size()) {
      if (chosen.empty()) return;
      charge(used, budget);
      out.push_back(ideal_from_monomials(A, chosen));
      return;
    }
    self(self, i + 1);
    for (const auto& m : chosen) {
      if (m.divides(elems[i]) || elems[i].divides(m)) return;
    }
    chosen.push_back(elems[i]);
    self(self, i + 1);
    chosen.pop_back();
  };
  rec(rec, 0);
  return out;
}

std::vector<IdealHandle> gf2_graded_ideal_universe(const AlgebraTable& A, std::uint64_t budget) {
  const Field& k = A.field();
  if (k.characteristic() != 2) throw std::invalid_argument("GF(2) enumeration over " + k.name());
  const int c = A.top_degree();
  std::vector<IdealHandle> out;
  std::uint64_t used = 0;
  std::vector<Matrix> parts;
  for (int d = 0; d <= c; ++d) parts.emplace_back(k, 0, A.dim(d));
  const auto rec = [&](auto&& self, int d) -> void {
    if (d > c) {
      IdealHandle I(parts);
      if (I.is_zero()) return;
      charge(used, budget);
      out.push_back(std::move(I));
      return;
    }
    const std::size_t sd = static_cast<std::size_t>(d);
    const Matrix lower = mul_subspace(A, SubspaceBasis(d - 1, parts[sd - 1])).coords;
    const auto red = rref(lower);
    std::vector<bool> pivot(A.dim(d), false);
    for (const auto p : red.pivots) pivot[p] = true;
    Matrix complement(k, 0, A.dim(d));
    for (std::size_t col = 0; col < A.dim(d); ++col) {
      if (pivot[col]) continue;
      std::vector<Scalar> e(A.dim(d), k.zero());
      e[col] = k.one();
      complement.append_row(e);
    }
    for_each_gf2_subspace(k, complement.rows(), [&](const Matrix& w) {
      parts[sd] = w.rows() ? vstack(lower, w * complement) : lower;
      self(self, d + 1);
    });
    parts[sd] = Matrix(k, 0, A.dim(d));
  };
  // I_0 = 0: the unit ideal is excluded.
  if (c >= 1) rec(rec, 1);
  return out;
}

DilworthReport dilworth_number(const AlgebraTable& A, SearchMode mode,
                               const DilworthOptions& options) {
  const int c = A.top_degree();
  if (c == 0) {
    auto r = finish(A, mode, "no proper nonzero ideals");
    r.d = 0;
    r.sperner = false;
    return r;
  }
  switch (mode) {
    case SearchMode::kMonomialExhaustive: {
      const auto universe = monomial_ideal_universe(A, options.budget);
      auto r = finish(A, mode, "all monomial ideals of B (" + std::to_string(universe.size()) +
                                   " proper nonzero)");
      for (const auto& I : universe) consider(A, I, r);
      r.ideals_examined = universe.size();
      r.sperner = r.d == r.max_h;
      return r;
    }
    case SearchMode::kGf2AllGraded: {
      const auto universe = gf2_graded_ideal_universe(A, options.budget);
      auto r = finish(A, mode, "all graded ideals over GF(2) (" + std::to_string(universe.size()) +
                                   " proper nonzero)");
      for (const auto& I : universe) consider(A, I, r);
      r.ideals_examined = universe.size();
      r.sperner = r.d == r.max_h;
      return r;
    }
    case SearchMode::kRandomSampled: {
      std::mt19937_64 rng(options.seed);
      auto r = finish(A, mode, "powers m^j plus " + std::to_string(options.budget) +
                                   " random graded ideals (lower bound)");
      for (int j = 1; j <= c; ++j) consider(A, maximal_power(A, j), r);
      for (std::uint64_t s = 0; s < options.budget; ++s) {
        const auto I = random_sampled_ideal(A, rng);
        if (!I.is_zero()) consider(A, I, r);
      }
      r.ideals_examined = options.budget + static_cast<std::uint64_t>(c);
      r.exact = false;
      r.sperner = r.d == r.max_h;
      return r;
    }
    case SearchMode::kTheoremCertified: {
      require_unimodal(A);
      std::string evidence;
      if (A.is_monomial()) {
        const auto ev = verify_monomial_matching(A.degrees());
        if (!ev.verified) throw HypothesisViolated("layer matchings failed to verify");
        evidence = ev.description;
      } else if (options.matching_verified) {
        evidence = options.matching_evidence.empty() ? "external" : options.matching_evidence;
      } else {
        throw HypothesisViolated("matching property not verified for this algebra");
      }
      const int j0 = is_unimodal(A.hilbert()).first_descent;
      auto r = finish(A, mode, "all ideals, via unimodality and the matching property (" +
                                   evidence + ")");
      r.witness = maximal_power(A, j0);
      r.d = mu(A, *r.witness);
      r.sperner = r.d == r.max_h;
      r.ideals_examined = 1;
      return r;
    }
  }
  throw std::invalid_argument("unknown search mode");
}

MatchingEvidence verify_monomial_matching(const DegreeVector& a) {
  MatchingEvidence ev;
  ev.verified = true;
  const auto h = hilbert_of_monomial_ci(a);
  for (int j = 0; j < a.socle_degree(); ++j) {
    if (h.at(j) > h.at(j + 1)) continue;
    ev.degrees.push_back(j);
    try {
      if (!verify_certificate(layer_matching(a, j), a)) ev.verified = false;
    } catch (const Falsification&) {
      ev.verified = false;
    }
  }
  ev.description = "saturating layer matchings at " + std::to_string(ev.degrees.size()) +
                   " ascending degrees";
  return ev;
}

TruncationCheck truncation_check(const AlgebraTable& A, const IdealHandle& I,
                                 bool matching_known) {
  const auto alpha = I.initial_degree();
  if (!alpha) throw std::invalid_argument("truncation of the zero ideal");
  TruncationCheck t;
  t.alpha = *alpha;
  t.first_descent = is_unimodal(A.hilbert()).first_descent;
  t.mu_before = mu(A, I);
  t.mu_after = mu(A, truncate_above(A, I, *alpha));
  const SubspaceBasis v(*alpha, I.part(*alpha));
  t.growth = static_cast<std::int64_t>(mul_subspace(A, v).dim()) - static_cast<std::int64_t>(v.dim());
  t.identity_holds = static_cast<std::int64_t>(t.mu_after) - static_cast<std::int64_t>(t.mu_before) ==
                     t.growth;
  t.asserted = matching_known && t.alpha < t.first_descent;
  t.inequality_holds = t.mu_before <= t.mu_after;
  return t;
}

std::string to_string(WalkStepKind kind) {
  switch (kind) {
    case WalkStepKind::kStart:
      return "start";
    case WalkStepKind::kTruncate:
      return "truncate";
    case WalkStepKind::kDualize:
      return "dualize";
  }
  return "?";
}

std::vector<WalkStep> sperner_walk(const AlgebraTable& A, const IdealHandle& I, std::size_t d,
                                   bool matching_verified) {
  require_unimodal(A);
  require_matching(A, matching_verified);
  if (I.is_zero() || I.is_unit()) throw HypothesisViolated("walk needs a proper nonzero ideal");
  const std::size_t m0 = mu(A, I);
  if (m0 != d) {
    throw HypothesisViolated("mu(I) = " + std::to_string(m0) + " but d(A) = " + std::to_string(d));
  }
  const int j0 = is_unimodal(A.hilbert()).first_descent;
  const IdealHandle target = maximal_power(A, j0);
  std::vector<WalkStep> steps{{WalkStepKind::kStart, I, *I.initial_degree(), m0}};
  const int guard = 2 * A.top_degree() + 4;
  for (int it = 0; !(steps.back().ideal == target); ++it) {
    if (it > guard) throw Falsification("walk did not reach m^" + std::to_string(j0));
    const WalkStep& cur = steps.back();
    WalkStep next{WalkStepKind::kTruncate, cur.ideal, 0, 0};
    if (cur.initial_degree < j0) {
      next.ideal = truncate_above(A, cur.ideal, cur.initial_degree);
    } else {
      next.kind = WalkStepKind::kDualize;
      next.ideal = annihilator(A, maximal_times(A, cur.ideal));
    }
    if (next.ideal.is_zero() || next.ideal.is_unit()) {
      throw Falsification(to_string(next.kind) + " step left the proper nonzero ideals");
    }
    next.initial_degree = *next.ideal.initial_degree();
    next.mu = mu(A, next.ideal);
    if (next.mu != d) {
      throw Falsification(to_string(next.kind) + " step changed mu from " + std::to_string(d) +
                          " to " + std::to_string(next.mu));
    }
    if (next.kind == WalkStepKind::kTruncate && next.initial_degree <= cur.initial_degree) {
      throw Falsification("truncation did not raise the initial degree");
    }
    steps.push_back(std::move(next));
  }
  return steps;
}

bool LatticeFamilyReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds()) return false;
  }
  return true;
}

LatticeFamilyReport lattice_family_check(const AlgebraTable& A,
                                         const std::vector<IdealHandle>& universe,
                                         std::string universe_name, std::size_t max_universe) {
  if (universe.size() > max_universe) {
    throw SizeLimitExceeded("universe of " + std::to_string(universe.size()) + " ideals exceeds " +
                            std::to_string(max_universe));
  }
  LatticeFamilyReport rep;
  rep.universe = std::move(universe_name);
  rep.universe_size = universe.size();

  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> mus, taus;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    index.emplace(universe[i].key(), i);
    mus.push_back(mu(A, universe[i]));
    taus.push_back(tau(A, universe[i]));
    rep.d = std::max(rep.d, mus.back());
  }
  std::vector<std::size_t> f, g;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mus[i] == rep.d) {
      f.push_back(i);
      rep.f_family.push_back(universe[i]);
    }
    if (taus[i] == rep.d) {
      g.push_back(i);
      rep.g_family.push_back(universe[i]);
    }
  }
  const auto in_f = [&](const IdealHandle& I) {
    const auto it = index.find(I.key());
    return it != index.end() && mus[it->second] == rep.d;
  };
  const auto in_g = [&](const IdealHandle& I) {
    const auto it = index.find(I.key());
    return it != index.end() && taus[it->second] == rep.d;
  };
  const auto check = [&](std::string name, const std::vector<std::size_t>& fam, auto&& pred) {
    LatticeCheck c{std::move(name), 0, 0};
    for (const auto i : fam) {
      ++c.cases;
      if (!pred(universe[i])) ++c.failures;
    }
    rep.checks.push_back(std::move(c));
  };
  const auto pair_check = [&](std::string name, const std::vector<std::size_t>& fam, auto&& pred) {
    LatticeCheck c{std::move(name), 0, 0};
    for (std::size_t x = 0; x < fam.size(); ++x) {
      for (std::size_t y = x; y < fam.size(); ++y) {
        ++c.cases;
        if (!pred(universe[fam[x]], universe[fam[y]])) ++c.failures;
      }
    }
    rep.checks.push_back(std::move(c));
  };

  pair_check("F closed under sum", f, [&](const auto& a, const auto& b) { return in_f(ideal_sum(a, b)); });
  pair_check("F closed under intersection", f,
             [&](const auto& a, const auto& b) { return in_f(ideal_intersect(a, b)); });
  pair_check("G closed under sum", g, [&](const auto& a, const auto& b) { return in_g(ideal_sum(a, b)); });
  pair_check("G closed under intersection", g,
             [&](const auto& a, const auto& b) { return in_g(ideal_intersect(a, b)); });
  check("m*a lies in G for a in F", f, [&](const auto& a) { return in_g(maximal_times(A, a)); });
  check("c:m lies in F for c in G", g, [&](const auto& c) { return in_f(colon_maximal(A, c)); });
  check("(m*a):m = a for a in F", f,
        [&](const auto& a) { return colon_maximal(A, maximal_times(A, a)) == a; });
  check("m*(c:m) = c for c in G", g,
        [&](const auto& c) { return maximal_times(A, colon_maximal(A, c)) == c; });
  check("0:a lies in G for a in F", f, [&](const auto& a) { return in_g(annihilator(A, a)); });
  check("0:c lies in F for c in G", g, [&](const auto& c) { return in_f(annihilator(A, c)); });

  std::vector<std::size_t> all(universe.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<IdealHandle> ann;
  for (const auto& I : universe) ann.push_back(annihilator(A, I));
  check("0:(0:a) = a", all, [&](const auto& a) { return annihilator(A, ann[index.at(a.key())]) == a; });
  pair_check("0: reverses inclusion", all, [&](const auto& a, const auto& b) {
    const auto& za = ann[index.at(a.key())];
    const auto& zb = ann[index.at(b.key())];
    return (!a.contains(b) || zb.contains(za)) && (!b.contains(a) || za.contains(zb));
  });
  return rep;
}

}  // namespace sperner
