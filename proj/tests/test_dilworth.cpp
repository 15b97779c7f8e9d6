#include <gtest/gtest.h>

#include <random>

#include "ideal_helpers.hpp"
#include "oracles.hpp"
#include "sperner/dilworth.hpp"
#include "sperner/errors.hpp"

using namespace sperner;
using sperner::testing::ideal_of_monomial_set;
using sperner::testing::random_ideal;

namespace {

const Field kP = Field::prime(32003);
const Field kTwo = Field::prime(2);

AlgebraTable box(std::vector<int> a, const Field& k = kP) {
  return AlgebraTable::monomial(k, DegreeVector(std::move(a)));
}

// Graded ideals of GF(2)[x,y]/(x^2,y^2) by hand: I_1 is 0, one of three
// lines, or A_1, and I_2 = A_2 is forced once I_1 != 0. Without 0 and A
// that leaves the socle, three line ideals and m.
constexpr std::size_t kGradedIdealsOf22 = 5;

}  // namespace

TEST(SearchMode, Names) {
  for (const auto m : {SearchMode::kMonomialExhaustive, SearchMode::kGf2AllGraded,
                       SearchMode::kRandomSampled, SearchMode::kTheoremCertified}) {
    EXPECT_EQ(parse_search_mode(to_string(m)), m);
  }
  EXPECT_FALSE(parse_search_mode("bogus").has_value());
}

TEST(Universe, MonomialIdealCountsMatchSubsetOracle) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 3}, {2, 2, 2}, {3, 3}, {2, 2, 2, 2}, {4, 2}}) {
    const auto B = box(a);
    const auto universe = monomial_ideal_universe(B);
    // The oracle also lists the zero and unit ideals.
    EXPECT_EQ(universe.size() + 2, oracle::monomial_ideals_by_subsets(DegreeVector(a)).size());
    std::set<std::string> keys;
    for (const auto& I : universe) {
      EXPECT_TRUE(is_ideal(B, I));
      EXPECT_FALSE(I.is_zero());
      EXPECT_FALSE(I.is_unit());
      keys.insert(I.key());
    }
    EXPECT_EQ(keys.size(), universe.size());
  }
  // The 2x3 box has C(5,2) = 10 antichains, so 8 proper nonzero ideals.
  EXPECT_EQ(monomial_ideal_universe(box({2, 3})).size(), 8u);
  EXPECT_EQ(monomial_ideal_universe(box({2, 2, 2})).size(), 18u);
}

TEST(Universe, Gf2GradedIdeals) {
  const auto A = box({2, 2}, kTwo);
  const auto universe = gf2_graded_ideal_universe(A);
  EXPECT_EQ(universe.size(), kGradedIdealsOf22);
  for (const auto& I : universe) EXPECT_TRUE(is_ideal(A, I));
  // Every monomial ideal is a graded ideal.
  const auto mono = monomial_ideal_universe(A);
  std::set<std::string> keys;
  for (const auto& I : universe) keys.insert(I.key());
  for (const auto& I : mono) EXPECT_TRUE(keys.count(I.key()));
  EXPECT_THROW(gf2_graded_ideal_universe(box({2, 2})), std::invalid_argument);
}

TEST(Universe, BudgetExceeded) {
  EXPECT_THROW(monomial_ideal_universe(box({2, 2, 2}), 5), BudgetExceeded);
  EXPECT_THROW(dilworth_number(box({2, 2, 2}), SearchMode::kMonomialExhaustive, {.budget = 5}),
               BudgetExceeded);
}

TEST(DilworthNumber, Examples) {
  const auto B = box({2, 3});
  const auto r = dilworth_number(B, SearchMode::kMonomialExhaustive);
  EXPECT_EQ(r.d, 2u);
  EXPECT_EQ(r.max_h, 2u);
  EXPECT_TRUE(r.sperner);
  EXPECT_TRUE(r.exact);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(mu(B, *r.witness), 2u);

  const auto cube = dilworth_number(box({2, 2, 2}), SearchMode::kMonomialExhaustive);
  EXPECT_EQ(cube.d, 3u);
  EXPECT_TRUE(cube.sperner);
}

TEST(DilworthNumber, TrivialAlgebra) {
  const auto K = box({1, 1});
  for (const auto mode : {SearchMode::kMonomialExhaustive, SearchMode::kRandomSampled,
                          SearchMode::kTheoremCertified}) {
    const auto r = dilworth_number(K, mode);
    EXPECT_EQ(r.d, 0u);
    EXPECT_EQ(r.max_h, 1u);
    EXPECT_FALSE(r.sperner);
    EXPECT_FALSE(r.witness);
  }
}

TEST(DilworthNumber, ModesAgreeOnSmallBoxes) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {4, 2}, {5}}) {
    const auto B = box(a);
    const auto ex = dilworth_number(B, SearchMode::kMonomialExhaustive);
    const auto th = dilworth_number(B, SearchMode::kTheoremCertified);
    const auto rs = dilworth_number(B, SearchMode::kRandomSampled, {.budget = 50, .seed = 3});
    EXPECT_EQ(ex.d, ex.max_h);
    EXPECT_EQ(th.d, ex.d);
    EXPECT_LE(rs.d, ex.d);
    EXPECT_GE(rs.d, rs.max_h);
    EXPECT_FALSE(rs.exact);
  }
}

TEST(DilworthNumber, Gf2AllGraded) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    const auto A = box(a, kTwo);
    const auto r = dilworth_number(A, SearchMode::kGf2AllGraded);
    EXPECT_EQ(r.d, r.max_h);
    EXPECT_TRUE(r.sperner);
  }
}

TEST(DilworthNumber, ModeRequirements) {
  const auto Q = AlgebraTable::build(
      kP, {parse_polynomial("x1^2+x1*x2", 2, kP), parse_polynomial("x2^2-x1*x2", 2, kP)},
      DegreeVector({2, 2}));
  EXPECT_THROW(dilworth_number(Q, SearchMode::kMonomialExhaustive), std::invalid_argument);
  EXPECT_THROW(dilworth_number(Q, SearchMode::kTheoremCertified), HypothesisViolated);
  const auto r = dilworth_number(Q, SearchMode::kTheoremCertified,
                                 {.matching_verified = true, .matching_evidence = "checked"});
  EXPECT_EQ(r.d, 2u);
  EXPECT_NE(r.universe.find("checked"), std::string::npos);
  EXPECT_GE(dilworth_number(Q, SearchMode::kRandomSampled, {.budget = 20}).d, 2u);
}

TEST(MatchingEvidence, Boxes) {
  const auto ev = verify_monomial_matching(DegreeVector({3, 3}));
  EXPECT_TRUE(ev.verified);
  EXPECT_EQ(ev.degrees, (std::vector<int>{0, 1}));
}

TEST(Truncation, ExactIdentityAndInequality) {
  std::mt19937_64 rng(17);
  for (const auto& a : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 2, 2}, {3, 2, 2}}) {
    const auto B = box(a);
    for (int t = 0; t < 30; ++t) {
      const auto I = random_ideal(B, rng);
      if (I.is_zero()) continue;
      const auto r = truncation_check(B, I, true);
      EXPECT_TRUE(r.identity_holds);
      if (r.asserted) {
        EXPECT_TRUE(r.inequality_holds);
        EXPECT_GE(r.growth, 0);
      }
    }
  }
  EXPECT_THROW(truncation_check(box({2, 2}), zero_ideal(box({2, 2})), true), std::invalid_argument);
}

TEST(SpernerWalk, Examples) {
  const auto B = box({2, 3});
  const auto m2 = maximal_power(B, 2);
  const auto trivial = sperner_walk(B, m2, 2);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0].kind, WalkStepKind::kStart);

  const auto x = ideal_from_monomials(B, {Monomial({1, 0})});
  EXPECT_THROW(sperner_walk(B, x, 2), HypothesisViolated);

  const auto steps = sperner_walk(B, maximal_power(B, 1), 2);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[1].kind, WalkStepKind::kTruncate);
  EXPECT_EQ(steps[1].ideal, m2);
  EXPECT_EQ(steps[1].mu, 2u);
}

TEST(SpernerWalk, EveryMaximizerReachesTheMiddlePower) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 3}, {3, 3}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}}) {
    const auto B = box(a);
    const auto r = dilworth_number(B, SearchMode::kMonomialExhaustive);
    const int j0 = is_unimodal(B.hilbert()).first_descent;
    for (const auto& I : monomial_ideal_universe(B)) {
      if (mu(B, I) != r.d) continue;
      const auto steps = sperner_walk(B, I, r.d);
      EXPECT_EQ(steps.back().ideal, maximal_power(B, j0));
      for (const auto& s : steps) EXPECT_EQ(s.mu, r.d);
    }
  }
}

TEST(SpernerWalk, NeedsMatchingEvidenceOffMonomialAlgebras) {
  const auto Q = AlgebraTable::build(
      kP, {parse_polynomial("x1^2+x1*x2", 2, kP), parse_polynomial("x2^2-x1*x2", 2, kP)},
      DegreeVector({2, 2}));
  EXPECT_THROW(sperner_walk(Q, maximal_power(Q, 1), 2), HypothesisViolated);
  EXPECT_EQ(sperner_walk(Q, maximal_power(Q, 1), 2, true).back().ideal, maximal_power(Q, 1));
}

TEST(LatticeFamily, CorrespondencesOnMonomialUniverses) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}}) {
    const auto B = box(a);
    const auto rep = lattice_family_check(B, monomial_ideal_universe(B), "monomial ideals");
    EXPECT_TRUE(rep.all_hold());
    for (const auto& c : rep.checks) EXPECT_TRUE(c.holds()) << c.name;
    EXPECT_EQ(rep.d, B.hilbert().max());
  }
}

TEST(LatticeFamily, TwoByThreeFamilies) {
  const auto B = box({2, 3});
  const auto rep = lattice_family_check(B, monomial_ideal_universe(B), "monomial ideals");
  const auto has = [](const std::vector<IdealHandle>& fam, const IdealHandle& I) {
    return std::find(fam.begin(), fam.end(), I) != fam.end();
  };
  EXPECT_TRUE(has(rep.f_family, maximal_power(B, 1)));
  EXPECT_TRUE(has(rep.f_family, maximal_power(B, 2)));
  EXPECT_TRUE(has(rep.g_family, maximal_power(B, 2)));
  EXPECT_EQ(tau(B, maximal_power(B, 2)), 2u);
}

TEST(LatticeFamily, Gf2Universe) {
  const auto A = box({2, 3}, kTwo);
  const auto rep = lattice_family_check(A, gf2_graded_ideal_universe(A), "graded ideals over GF(2)");
  for (const auto& c : rep.checks) EXPECT_TRUE(c.holds()) << c.name;
}

TEST(LatticeFamily, DetectsANonClosedUniverse) {
  const auto B = box({2, 3});
  auto universe = monomial_ideal_universe(B);
  // Removing m^2 breaks closure: m*m is no longer found in G.
  universe.erase(std::find(universe.begin(), universe.end(), maximal_power(B, 2)));
  EXPECT_FALSE(lattice_family_check(B, universe, "damaged").all_hold());
  EXPECT_THROW(lattice_family_check(B, universe, "x", 3), SizeLimitExceeded);
}
