#include "sperner/egh.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sperner/chains.hpp"
#include "sperner/errors.hpp"

namespace sperner {

namespace {

using MonomialSet = std::set<Monomial>;

// Elements of an up-closed set of box monomials with no divisor in the set.
std::vector<Monomial> minimal_elements(const MonomialSet& s) {
  std::vector<Monomial> out;
  for (const auto& m : s) {
    bool minimal = true;
    for (std::size_t i = 0; i < m.nvars() && minimal; ++i) {
      if (m[i] == 0) continue;
      auto e = m.exponents();
      --e[i];
      if (s.count(Monomial(std::move(e)))) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return y < x;
  });
  return out;
}

std::vector<Monomial> box_shadow(const std::vector<Monomial>& prev, const DegreeVector& a) {
  return neighbor_set(prev, a);
}

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

struct LayerTargets {
  std::vector<std::vector<Monomial>> layers;  // lex-descending
  std::vector<std::int64_t> target;           // |J_d| = H(B,d) - h(d)
  bool feasible = true;
};

LayerTargets layer_targets(const EGHInstance& inst) {
  LayerTargets t;
  const int c = inst.a.socle_degree();
  for (int d = 0; d <= c; ++d) {
    t.layers.push_back(layer(inst.a, d).monomials);
    const std::int64_t want =
        as_signed(t.layers.back().size()) - as_signed(inst.h[static_cast<std::size_t>(d)]);
    if (want < 0) t.feasible = false;
    t.target.push_back(want);
  }
  return t;
}

bool validates(const EGHInstance& inst, const std::vector<Monomial>& gens) {
  return monomial_quotient_hilbert(inst.a, gens) == inst.h;
}

std::optional<std::vector<Monomial>> lex_plus_powers(const EGHInstance& inst,
                                                     const LayerTargets& t) {
  MonomialSet all;
  std::vector<Monomial> prev;
  for (std::size_t d = 0; d < t.layers.size(); ++d) {
    const auto shadow = box_shadow(prev, inst.a);
    const MonomialSet forced(shadow.begin(), shadow.end());
    if (as_signed(forced.size()) > t.target[d]) return std::nullopt;
    std::vector<Monomial> cur(shadow.begin(), shadow.end());
    for (const auto& m : t.layers[d]) {
      if (as_signed(cur.size()) == t.target[d]) break;
      if (!forced.count(m)) cur.push_back(m);
    }
    all.insert(cur.begin(), cur.end());
    prev = std::move(cur);
  }
  return minimal_elements(all);
}

class WitnessSearch {
 public:
  WitnessSearch(const EGHInstance& inst, const LayerTargets& t, std::uint64_t budget)
      : inst_(inst), t_(t), budget_(budget) {}

  std::optional<std::vector<Monomial>> run() {
    if (dfs(0, {})) return minimal_elements(chosen_);
    return std::nullopt;
  }
  bool exhausted_budget() const { return out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t d, const std::vector<Monomial>& prev) {
    if (d == t_.layers.size()) return validates(inst_, minimal_elements(chosen_));
    const auto shadow = box_shadow(prev, inst_.a);
    const MonomialSet forced(shadow.begin(), shadow.end());
    const std::int64_t free_picks = t_.target[d] - as_signed(forced.size());
    if (free_picks < 0) return false;
    std::vector<Monomial> pool;
    for (const auto& m : t_.layers[d]) {
      if (!forced.count(m)) pool.push_back(m);
    }
    const auto k = static_cast<std::size_t>(free_picks);
    if (k > pool.size()) return false;
    // Combinations in lex order of positions, so the first leaf visited is
    // the lex-plus-powers choice.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (++nodes_ > budget_) {
        out_of_budget_ = true;
        return false;
      }
      std::vector<Monomial> cur(shadow.begin(), shadow.end());
      for (const auto p : pick) cur.push_back(pool[p]);
      for (const auto& m : cur) chosen_.insert(m);
      if (dfs(d + 1, cur)) return true;
      for (const auto& m : cur) chosen_.erase(m);
      if (out_of_budget_) return false;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) return false;
      ++pick[i - 1];
      for (std::size_t r = i; r < k; ++r) pick[r] = pick[r - 1] + 1;
    }
  }

  const EGHInstance& inst_;
  const LayerTargets& t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  MonomialSet chosen_;
};

// Leading monomials of the row space of `part` (coordinates over basis)
// under `order`.
std::vector<Monomial> leading_monomials(const Matrix& part, const std::vector<Monomial>& basis,
                                        const MonomialOrder& order) {
  if (part.rows() == 0) return {};
  std::vector<std::size_t> perm(basis.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return order.greater(basis[x], basis[y]); });
  Matrix permuted(part.field(), part.rows(), part.cols());
  for (std::size_t r = 0; r < part.rows(); ++r) {
    for (std::size_t c = 0; c < perm.size(); ++c) permuted(r, c) = part(r, perm[c]);
  }
  std::vector<Monomial> out;
  for (const auto p : rref(permuted).pivots) out.push_back(basis[perm[p]]);
  return out;
}

}  // namespace

std::string to_string(WitnessStrategy s) {
  switch (s) {
    case WitnessStrategy::kInitialIdeal: return "initial_ideal";
    case WitnessStrategy::kLexPlusPowers: return "lex_plus_powers";
    case WitnessStrategy::kDfsSearch: return "dfs";
  }
  return "unknown";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFalsified: return "falsified";
    case CheckStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

EGHInstance egh_instance(const DegreeVector& a, std::vector<std::uint64_t> h) {
  const auto len = static_cast<std::size_t>(a.socle_degree()) + 1;
  for (std::size_t d = len; d < h.size(); ++d) {
    if (h[d] != 0) {
      throw std::invalid_argument("h(" + std::to_string(d) + ") must vanish above the socle degree");
    }
  }
  h.resize(len, 0);
  EGHInstance inst;
  inst.a = a;
  inst.h = std::move(h);
  return inst;
}

EGHInstance egh_instance(const AlgebraTable& A, const IdealHandle& I) {
  EGHInstance inst = egh_instance(A.degrees(), quotient_hilbert(A, I));
  inst.from_ideal = true;
  const auto& a = A.degrees();
  const int c = a.socle_degree();
  const auto& order = A.groebner().order;

  // In(b)_d is the nonstandard monomials of degree d together with the
  // leading monomials of I_d.
  std::vector<MonomialSet> pivots(static_cast<std::size_t>(c) + 1);
  for (int d = 0; d <= c; ++d) {
    const auto lm = leading_monomials(I.part(d), A.basis(d), order);
    pivots[static_cast<std::size_t>(d)].insert(lm.begin(), lm.end());
  }
  const auto in_initial = [&](const Monomial& m) {
    if (m.degree() > c) return true;
    if (!A.index_of(m)) return true;
    return pivots[static_cast<std::size_t>(m.degree())].count(m) > 0;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!in_initial(Monomial::variable(a.size(), i, a[i]))) return inst;
  }
  std::vector<Monomial> box_part;
  for (int d = 0; d <= c; ++d) {
    for (const auto& m : layer(a, d).monomials) {
      if (in_initial(m)) box_part.push_back(m);
    }
  }
  inst.initial_monomials = std::move(box_part);
  return inst;
}

std::string EGHWitness::to_string() const {
  if (generators.empty()) return "J=0";
  std::string out = "J=(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ',';
    out += generators[i].to_string();
  }
  return out + ")";
}

bool EGHResult::refutation() const {
  return status == WitnessStatus::kExhaustiveFailure && !witness && from_ideal;
}

std::vector<std::uint64_t> monomial_quotient_hilbert(const DegreeVector& a,
                                                     const std::vector<Monomial>& generators) {
  for (const auto& g : generators) {
    if (g.nvars() != a.size()) throw DimensionMismatch("generator in the wrong number of variables");
  }
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= a.socle_degree(); ++d) {
    std::uint64_t count = 0;
    for (const auto& m : layer(a, d).monomials) {
      const bool in_j = std::any_of(generators.begin(), generators.end(),
                                    [&](const Monomial& g) { return g.divides(m); });
      if (!in_j) ++count;
    }
    out.push_back(count);
  }
  return out;
}

EGHResult egh_witness(const EGHInstance& inst, const std::vector<WitnessStrategy>& strategies,
                      std::uint64_t budget) {
  EGHResult res;
  res.from_ideal = inst.from_ideal;
  const auto found = [&](std::vector<Monomial> gens, WitnessStrategy s) {
    res.status = WitnessStatus::kFound;
    res.witness = EGHWitness{std::move(gens), s};
  };
  const LayerTargets t = layer_targets(inst);
  if (!t.feasible) {
    res.status = WitnessStatus::kExhaustiveFailure;
    return res;
  }
  bool exhaustive = false;
  bool budget_hit = false;
  for (const auto s : strategies) {
    res.tried.push_back(s);
    switch (s) {
      case WitnessStrategy::kInitialIdeal: {
        if (!inst.initial_monomials) break;
        const MonomialSet in(inst.initial_monomials->begin(), inst.initial_monomials->end());
        auto gens = minimal_elements(in);
        if (validates(inst, gens)) {
          found(std::move(gens), s);
          return res;
        }
        break;
      }
      case WitnessStrategy::kLexPlusPowers: {
        auto gens = lex_plus_powers(inst, t);
        if (gens && validates(inst, *gens)) {
          found(std::move(*gens), s);
          return res;
        }
        break;
      }
      case WitnessStrategy::kDfsSearch: {
        WitnessSearch search(inst, t, budget);
        auto gens = search.run();
        res.dfs_nodes = search.nodes();
        if (gens) {
          found(std::move(*gens), s);
          return res;
        }
        if (search.exhausted_budget()) {
          budget_hit = true;
        } else {
          exhaustive = true;
        }
        break;
      }
    }
  }
  res.status = exhaustive && !budget_hit ? WitnessStatus::kExhaustiveFailure
                                         : WitnessStatus::kBudgetExhausted;
  return res;
}

MatchingStepReport matching_step_check(const AlgebraTable& A, const SubspaceBasis& V,
                                       std::uint64_t witness_budget) {
  const int j = V.degree;
  const int c = A.top_degree();
  if (j < 0 || j >= c || A.dim(j) > A.dim(j + 1)) {
    throw HypothesisViolated("matching step needs H(j) <= H(j+1) at j = " + std::to_string(j));
  }
  const auto& a = A.degrees();
  MatchingStepReport r;
  r.j = j;
  r.dim_v = V.dim();
  const SubspaceBasis W = mul_subspace(A, V);
  r.dim_image = W.dim();

  const IdealHandle I = ideal_from_subspace(A, V);
  const IdealHandle mI = maximal_times(A, I);
  r.mu_i = mu(A, I);
  r.mu_mi = mu(A, mI);
  const auto q = quotient_hilbert(A, I);
  r.hilbert_drop_j = as_signed(A.dim(j)) - as_signed(q[static_cast<std::size_t>(j)]);
  r.hilbert_drop_j1 = as_signed(A.dim(j + 1)) - as_signed(q[static_cast<std::size_t>(j + 1)]);
  r.generators_identity = r.mu_i == r.dim_v && as_signed(r.dim_v) == r.hilbert_drop_j;
  r.image_identity = r.mu_mi == r.dim_image && as_signed(r.dim_image) == r.hilbert_drop_j1;
  r.final_inequality = r.dim_v <= r.dim_image;

  r.witness = egh_witness(egh_instance(A, I), kAllStrategies, witness_budget);
  bool witness_checks = true;
  if (r.witness.witness) {
    const HilbertFunction hb = hilbert_of_monomial_ci(a);
    const auto& gens = r.witness.witness->generators;
    const auto hj = monomial_quotient_hilbert(a, gens);
    const auto drop = [&](const std::vector<std::uint64_t>& h, int d) {
      return as_signed(hb.at(d)) - as_signed(h[static_cast<std::size_t>(d)]);
    };
    r.witness_identity =
        as_signed(r.mu_mi) - as_signed(r.mu_i) == drop(hj, j + 1) - drop(hj, j);

    std::vector<Monomial> s;
    for (const auto& m : layer(a, j).monomials) {
      if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) {
        s.push_back(m);
      }
    }
    const auto check = monomial_matching_check(s, a, j);
    r.s_size = check.s_size;
    r.neighbor_size = check.neighbor_size;
    const auto hs = monomial_quotient_hilbert(a, s);
    r.restricted_identity = as_signed(r.neighbor_size) - as_signed(r.s_size) ==
                            drop(hs, j + 1) - drop(hs, j);
    r.restricted_nonnegative = check.pass;
    r.inclusion_bound = as_signed(r.neighbor_size) <= drop(hj, j + 1);
    witness_checks = r.witness_identity && r.restricted_identity && r.restricted_nonnegative &&
                     r.inclusion_bound && as_signed(r.s_size) == r.hilbert_drop_j;
  }
  if (!r.generators_identity || !r.image_identity || !r.final_inequality || !witness_checks ||
      r.witness.refutation()) {
    r.status = CheckStatus::kFalsified;
  } else if (!r.witness.witness) {
    r.status = CheckStatus::kInconclusive;
  } else {
    r.status = CheckStatus::kPass;
  }
  return r;
}

CheckStatus VerifyReport::status() const {
  if (falsifications > 0) return CheckStatus::kFalsified;
  if (inconclusive > 0 || !unimodal) return CheckStatus::kInconclusive;
  return CheckStatus::kPass;
}

VerifyReport sperner_verify_ci(const Field& field, const std::vector<Polynomial>& gens,
                               const DegreeVector& a, const VerifyOptions& options) {
  return sperner_verify_ci(AlgebraTable::build(field, gens, a), options);
}

VerifyReport sperner_verify_ci(const AlgebraTable& A, const VerifyOptions& options) {
  constexpr std::size_t kKeptFailures = 5;
  VerifyReport rep;
  const HilbertFunction h = A.hilbert();
  rep.unimodal = is_unimodal(h).unimodal;
  if (!rep.unimodal) return rep;
  std::mt19937_64 rng(options.seed);

  const auto record = [&](const SubspaceBasis& V) {
    const auto r = matching_step_check(A, V, options.witness_budget);
    ++rep.checks;
    if (r.witness.witness) {
      switch (r.witness.witness->strategy) {
        case WitnessStrategy::kInitialIdeal: ++rep.by_initial_ideal; break;
        case WitnessStrategy::kLexPlusPowers: ++rep.by_lex_plus_powers; break;
        case WitnessStrategy::kDfsSearch: ++rep.by_dfs; break;
      }
    }
    if (!r.generators_identity || !r.image_identity ||
        (r.witness.witness && !r.restricted_identity)) {
      ++rep.identity_failures;
    }
    if (r.status == CheckStatus::kFalsified) ++rep.falsifications;
    if (r.status == CheckStatus::kInconclusive) ++rep.inconclusive;
    if (r.status != CheckStatus::kPass && rep.failures.size() < kKeptFailures) {
      rep.failures.push_back(r);
    }
  };

  for (int j = 0; j < A.top_degree(); ++j) {
    if (h.at(j) > h.at(j + 1)) continue;
    rep.degrees.push_back(j);
    const std::size_t n = A.dim(j);
    if (n <= options.coordinate_limit) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Matrix rows(A.field(), 0, n);
        for (std::size_t i = 0; i < n; ++i) {
          if (!((mask >> i) & 1)) continue;
          std::vector<Scalar> e(n, A.field().zero());
          e[i] = A.field().one();
          rows.append_row(e);
        }
        record(SubspaceBasis(j, rows));
        ++rep.coordinate_checks;
      }
    }
    std::uniform_int_distribution<std::size_t> dim_dist(1, n);
    for (std::size_t s = 0; s < options.sampling_budget; ++s) {
      record(random_subspace(A, j, dim_dist(rng), rng));
      ++rep.random_checks;
    }
  }

  if (rep.status() == CheckStatus::kPass) {
    std::ostringstream ev;
    ev << "matching checked on " << rep.coordinate_checks << " coordinate and "
       << rep.random_checks << " random subspaces";
    rep.certified = dilworth_number(A, SearchMode::kTheoremCertified,
                                    {.matching_verified = true, .matching_evidence = ev.str()});
  }
  return rep;
}

LinearFormsCI linear_forms_ci_generator(std::size_t n, const DegreeVector& a, const Field& field,
                                        std::uint64_t seed, LinearFormSampler sampler) {
  if (a.size() != n) {
    throw DimensionMismatch("need one degree per variable, got " + std::to_string(a.size()));
  }
  if (!sampler) {
    sampler = [n, field](std::size_t, int, std::mt19937_64& rng) {
      while (true) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < n; ++i) {
          terms.push_back({Monomial::variable(n, i), field.random(rng)});
        }
        auto p = Polynomial::from_terms(field, n, std::move(terms));
        if (!p.is_zero()) return p;
      }
    };
  }
  std::mt19937_64 rng(seed);
  LinearFormsCI out;
  for (std::size_t attempt = 0; attempt <= kLinearFormRetries; ++attempt) {
    std::vector<Polynomial> gens;
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<Polynomial> forms;
      for (int f = 0; f < a[g]; ++f) forms.push_back(sampler(g, f, rng));
      gens.push_back(product_of_linear_forms(forms));
    }
    try {
      AlgebraTable::build(field, gens, a);
    } catch (const NotRegularSequence&) {
      ++out.retries;
      continue;
    }
    out.generators = std::move(gens);
    return out;
  }
  throw NotRegularSequence("no regular sequence of linear-form products after " +
                           std::to_string(kLinearFormRetries) + " retries");
}

}  // namespace sperner
