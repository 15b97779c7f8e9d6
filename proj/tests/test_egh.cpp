#include <gtest/gtest.h>

#include <random>

#include "ideal_helpers.hpp"
#include "sperner/egh.hpp"
#include "sperner/errors.hpp"

using namespace sperner;
using sperner::testing::random_ideal;

namespace {

const Field kP = Field::prime(32003);

AlgebraTable box(std::vector<int> a, const Field& k = kP) {
  return AlgebraTable::monomial(k, DegreeVector(std::move(a)));
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

std::vector<Polynomial> split_quadrics(const Field& k) {
  return {parse_polynomial("x1^2+x1*x2", 2, k), parse_polynomial("x1*x2-x2^2", 2, k)};
}

std::vector<AlgebraTable> sample_cis() {
  std::vector<AlgebraTable> out;
  out.push_back(box({2, 3}));
  out.push_back(box({3, 2, 2}));
  out.push_back(AlgebraTable::build(
      kP, {parse_polynomial("x1^2+x1*x2", 2, kP), parse_polynomial("x2^2-x1*x2", 2, kP)},
      DegreeVector({2, 2})));
  for (const auto& a : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}, {3, 2, 2}}) {
    const DegreeVector d(a);
    out.push_back(AlgebraTable::build(kP, linear_forms_ci_generator(a.size(), d, kP, 5).generators, d));
  }
  return out;
}

}  // namespace

TEST(MonomialQuotientHilbert, MatchesLinearAlgebra) {
  const DegreeVector a({3, 2, 2});
  const auto B = box({3, 2, 2});
  const std::vector<std::vector<Monomial>> cases{
      {},
      {mono({1, 0, 0})},
      {mono({0, 1, 1}), mono({2, 0, 0})},
      {mono({1, 1, 0}), mono({0, 0, 1})},
      {mono({0, 0, 0})},
  };
  for (const auto& gens : cases) {
    EXPECT_EQ(monomial_quotient_hilbert(a, gens), quotient_hilbert(B, ideal_from_monomials(B, gens)));
  }
}

TEST(EGHWitness, PurePowersGiveTheZeroIdeal) {
  const auto B = box({2, 2});
  const auto inst = egh_instance(B, zero_ideal(B));
  EXPECT_EQ(inst.h, (std::vector<std::uint64_t>{1, 2, 1}));
  ASSERT_TRUE(inst.initial_monomials);
  const auto r = egh_witness(inst);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->strategy, WitnessStrategy::kInitialIdeal);
  EXPECT_EQ(r.witness->to_string(), "J=0");
}

TEST(EGHWitness, LexPlusPowersFromBareTargets) {
  const DegreeVector a({2, 2});
  const auto r = egh_witness(egh_instance(a, {1, 1, 0}));
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->strategy, WitnessStrategy::kLexPlusPowers);
  EXPECT_EQ(r.witness->to_string(), "J=(x1)");

  const auto top = egh_witness(egh_instance(a, {1, 2}));
  ASSERT_TRUE(top.witness);
  EXPECT_EQ(top.witness->to_string(), "J=(x1*x2)");
  EXPECT_EQ(monomial_quotient_hilbert(a, top.witness->generators),
            (std::vector<std::uint64_t>{1, 2, 0}));
}

TEST(EGHWitness, DfsAgreesWithLexPlusPowers) {
  const DegreeVector a({3, 2, 2});
  const auto B = box({3, 2, 2});
  std::mt19937_64 rng(4);
  for (int t = 0; t < 25; ++t) {
    const auto inst = egh_instance(a, quotient_hilbert(B, random_ideal(B, rng)));
    const auto dfs = egh_witness(inst, {WitnessStrategy::kDfsSearch});
    const auto lex = egh_witness(inst, {WitnessStrategy::kLexPlusPowers});
    ASSERT_TRUE(dfs.witness);
    ASSERT_TRUE(lex.witness);
    EXPECT_EQ(dfs.witness->generators, lex.witness->generators);
  }
}

TEST(EGHWitness, UnattainableTargets) {
  const DegreeVector a({2, 2});
  const auto too_big = egh_witness(egh_instance(a, {1, 3, 0}));
  EXPECT_EQ(too_big.status, WitnessStatus::kExhaustiveFailure);
  EXPECT_FALSE(too_big.refutation());

  // J_1 = P_1 forces x1*x2 into J_2.
  const auto inst = egh_instance(a, {1, 0, 1});
  const auto r = egh_witness(inst);
  EXPECT_EQ(r.status, WitnessStatus::kExhaustiveFailure);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(egh_witness(inst, {WitnessStrategy::kDfsSearch}, 0).status,
            WitnessStatus::kBudgetExhausted);
  EXPECT_EQ(egh_witness(inst, {WitnessStrategy::kLexPlusPowers}).status,
            WitnessStatus::kBudgetExhausted);

  EXPECT_THROW(egh_instance(a, {1, 2, 1, 1}), std::invalid_argument);
  EXPECT_EQ(egh_instance(a, {1, 2}).h, (std::vector<std::uint64_t>{1, 2, 0}));
}

TEST(EGHWitness, InitialIdealOfAMonomialIdealIsItself) {
  const auto B = box({2, 3});
  const auto I = ideal_from_monomials(B, {mono({1, 1}), mono({0, 2})});
  const auto r = egh_witness(egh_instance(B, I), {WitnessStrategy::kInitialIdeal});
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->to_string(), "J=(x1*x2,x2^2)");
}

TEST(EGHWitness, FoundForRandomIdealsOfCompleteIntersections) {
  std::mt19937_64 rng(21);
  for (const auto& A : sample_cis()) {
    for (int t = 0; t < 15; ++t) {
      const auto I = random_ideal(A, rng);
      const auto r = egh_witness(egh_instance(A, I));
      ASSERT_TRUE(r.witness) << A.degrees().to_string();
      EXPECT_EQ(monomial_quotient_hilbert(A.degrees(), r.witness->generators), quotient_hilbert(A, I));
    }
  }
}

TEST(MatchingStep, ZeroSubspace) {
  const auto B = box({2, 2});
  const auto r = matching_step_check(B, SubspaceBasis(0, Matrix(kP, 0, 1)));
  EXPECT_EQ(r.dim_v, 0u);
  EXPECT_EQ(r.dim_image, 0u);
  EXPECT_TRUE(r.final_inequality);
  EXPECT_EQ(r.status, CheckStatus::kPass);
  EXPECT_THROW(matching_step_check(B, SubspaceBasis(1, Matrix(kP, 0, 2))), HypothesisViolated);
}

TEST(MatchingStep, AllIdentitiesOnRandomSubspaces) {
  std::mt19937_64 rng(8);
  for (const auto& A : sample_cis()) {
    const auto h = A.hilbert();
    for (int j = 0; j < A.top_degree(); ++j) {
      if (h.at(j) > h.at(j + 1)) {
        EXPECT_THROW(matching_step_check(A, random_subspace(A, j, 1, rng)), HypothesisViolated);
        continue;
      }
      for (std::size_t rows = 1; rows <= A.dim(j); ++rows) {
        const auto r = matching_step_check(A, random_subspace(A, j, rows, rng));
        EXPECT_EQ(r.status, CheckStatus::kPass);
        EXPECT_TRUE(r.generators_identity);
        EXPECT_TRUE(r.image_identity);
        EXPECT_TRUE(r.witness_identity);
        EXPECT_TRUE(r.restricted_identity);
        EXPECT_TRUE(r.restricted_nonnegative);
        EXPECT_TRUE(r.inclusion_bound);
        EXPECT_EQ(r.s_size, r.dim_v);
      }
    }
  }
}

TEST(MatchingStep, EverySubspaceOverGF3) {
  const Field k = Field::prime(3);
  // x1(x1+x2) and x2(x1-x2)^2 have no common factor, so H = 1 2 2 1.
  const auto A = AlgebraTable::build(
      k, {parse_polynomial("x1^2+x1*x2", 2, k), parse_polynomial("x1^2*x2-2*x1*x2^2+x2^3", 2, k)},
      DegreeVector({2, 3}));
  std::size_t checked = 0;
  // Every pair of vectors of A_1 = GF(3)^2 spans one of its subspaces.
  for (int code = 0; code < 81; ++code) {
    int c = code;
    Matrix m(k, 2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t col = 0; col < 2; ++col) {
        m(r, col) = k.from_int(c % 3);
        c /= 3;
      }
    }
    const auto r = matching_step_check(A, SubspaceBasis(1, m));
    EXPECT_EQ(r.status, CheckStatus::kPass);
    EXPECT_LE(r.dim_v, r.dim_image);
    ++checked;
  }
  EXPECT_EQ(checked, 81u);
}

TEST(VerifyCI, SplitQuadrics) {
  const auto rep = sperner_verify_ci(kP, split_quadrics(kP), DegreeVector({2, 2}));
  EXPECT_EQ(rep.status(), CheckStatus::kPass);
  EXPECT_EQ(rep.degrees, (std::vector<int>{0}));
  EXPECT_EQ(rep.checks, rep.coordinate_checks + rep.random_checks);
  EXPECT_EQ(rep.coordinate_checks, 1u);
  ASSERT_TRUE(rep.certified);
  EXPECT_EQ(rep.certified->d, 2u);
  EXPECT_EQ(rep.certified->mode, SearchMode::kTheoremCertified);
  EXPECT_TRUE(rep.certified->sperner);
}

TEST(VerifyCI, SplitQuadricsAreNotRegularInCharacteristicTwo) {
  const Field two = Field::prime(2);
  EXPECT_THROW(sperner_verify_ci(two, split_quadrics(two), DegreeVector({2, 2})), NotRegularSequence);
}

TEST(VerifyCI, RandomLinearFormProducts) {
  for (const auto& a : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {3, 3}}) {
    const DegreeVector d(a);
    const auto ci = linear_forms_ci_generator(a.size(), d, kP, 11);
    const auto rep = sperner_verify_ci(kP, ci.generators, d, {.sampling_budget = 5, .seed = 2});
    EXPECT_EQ(rep.status(), CheckStatus::kPass);
    EXPECT_EQ(rep.falsifications, 0u);
    ASSERT_TRUE(rep.certified);
    EXPECT_EQ(rep.certified->d, hilbert_of_monomial_ci(d).max());
  }
}

TEST(LinearFormsGenerator, DeterministicProducts) {
  const DegreeVector a({3, 2, 1});
  const auto x = linear_forms_ci_generator(3, a, kP, 7);
  const auto y = linear_forms_ci_generator(3, a, kP, 7);
  ASSERT_EQ(x.generators.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(x.generators[i], y.generators[i]);
    EXPECT_EQ(x.generators[i].homogeneous_degree(), a[i]);
  }
  EXPECT_NO_THROW(AlgebraTable::build(kP, x.generators, a));
  EXPECT_THROW(linear_forms_ci_generator(2, a, kP, 7), DimensionMismatch);
}

TEST(LinearFormsGenerator, RetriesOnCollisions) {
  const DegreeVector a({2, 2});
  const auto x1 = parse_polynomial("x1", 2, kP);
  std::size_t calls = 0;
  // The first draw makes L1 = L2 = x1^2; later draws are random.
  const LinearFormSampler sampler = [&](std::size_t, int, std::mt19937_64& rng) {
    if (calls++ < 4) return x1;
    return Polynomial::from_terms(kP, 2,
                                  {{Monomial::variable(2, 0), kP.random(rng)},
                                   {Monomial::variable(2, 1), kP.random(rng) + kP.one()}});
  };
  const auto ci = linear_forms_ci_generator(2, a, kP, 3, sampler);
  EXPECT_EQ(ci.retries, 1u);
  EXPECT_NE(ci.generators[0], ci.generators[1]);

  const LinearFormSampler stuck = [&](std::size_t, int, std::mt19937_64&) { return x1; };
  EXPECT_THROW(linear_forms_ci_generator(2, a, kP, 3, stuck), NotRegularSequence);
}
