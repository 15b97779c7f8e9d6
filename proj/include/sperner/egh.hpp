#pragma once
// Monomial witnesses for Hilbert functions of ideals containing a regular
// sequence, the degree-j matching check built on them, and end-to-end
// verification for complete intersections cut out by products of linear
// forms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sperner/dilworth.hpp"
#include "sperner/graded_algebra.hpp"

namespace sperner {

enum class WitnessStrategy { kInitialIdeal, kLexPlusPowers, kDfsSearch };
std::string to_string(WitnessStrategy s);

struct EGHInstance {
  DegreeVector a;
  /// Target h(d) = H(R/I, d) for d = 0..c.
  std::vector<std::uint64_t> h;
  /// Box monomials of In(I) when the instance comes from an ideal and In(I)
  /// contains the pure powers; this feeds the initial-ideal strategy.
  std::optional<std::vector<Monomial>> initial_monomials;
  /// True when h is the Hilbert function of an actual ideal, so that an
  /// exhaustive failure would be a counterexample rather than a bad input.
  bool from_ideal = false;
};

/// Instance from a bare target h (padded with zeros up to c). Throws
/// std::invalid_argument when h is longer than c + 1 with nonzero tail.
EGHInstance egh_instance(const DegreeVector& a, std::vector<std::uint64_t> h);
/// Instance for A/I, with the initial ideal of the preimage of I in R
/// read off degreewise.
EGHInstance egh_instance(const AlgebraTable& A, const IdealHandle& I);

struct EGHWitness {
  /// Minimal monomial generators of J inside the box, sorted by degree then
  /// lex-descending; the pure powers are implicit.
  std::vector<Monomial> generators;
  WitnessStrategy strategy = WitnessStrategy::kInitialIdeal;
  /// "J=(x2)" or "J=0".
  std::string to_string() const;
};

enum class WitnessStatus { kFound, kBudgetExhausted, kExhaustiveFailure };

struct EGHResult {
  WitnessStatus status = WitnessStatus::kFound;
  std::optional<EGHWitness> witness;
  std::vector<WitnessStrategy> tried;
  std::uint64_t dfs_nodes = 0;
  /// Copied from the instance.
  bool from_ideal = false;
  /// Exhaustive failure on an instance that comes from an ideal.
  bool refutation() const;
};

inline const std::vector<WitnessStrategy> kAllStrategies{
    WitnessStrategy::kInitialIdeal, WitnessStrategy::kLexPlusPowers, WitnessStrategy::kDfsSearch};

/// Tries the strategies in order; every returned witness has been checked
/// with monomial_quotient_hilbert. `budget` bounds the DFS node count.
EGHResult egh_witness(const EGHInstance& inst,
                      const std::vector<WitnessStrategy>& strategies = kAllStrategies,
                      std::uint64_t budget = 200'000);

/// H(B/J, d) for d = 0..c by counting box monomials outside J.
std::vector<std::uint64_t> monomial_quotient_hilbert(const DegreeVector& a,
                                                     const std::vector<Monomial>& generators);

enum class CheckStatus { kPass, kFalsified, kInconclusive };
std::string to_string(CheckStatus s);

/// Every quantity in the argument that dim V <= dim A1*V for V in A_j,
/// through a monomial witness J for A/(V).
struct MatchingStepReport {
  int j = 0;
  std::size_t dim_v = 0;
  std::size_t dim_image = 0;  // dim A1*V
  std::size_t mu_i = 0;       // I = (V)
  std::size_t mu_mi = 0;
  std::int64_t hilbert_drop_j = 0;   // H(A, j) - H(A/I, j)
  std::int64_t hilbert_drop_j1 = 0;  // H(A, j+1) - H(A/I, j+1)
  /// mu(I) = dim V = H(A,j) - H(A/I,j).
  bool generators_identity = false;
  /// mu(mI) = dim A1*V = H(A,j+1) - H(A/I,j+1).
  bool image_identity = false;

  EGHResult witness;
  /// mu(mI) - mu(I) equals the same difference computed in B/J.
  bool witness_identity = false;
  /// S = J ∩ P_j and J' = (S).
  std::size_t s_size = 0;
  std::size_t neighbor_size = 0;
  /// |N(S)| - |S| equals the difference computed from H(B/J').
  bool restricted_identity = false;
  /// |S| <= |N(S)|.
  bool restricted_nonnegative = false;
  /// |N(S)| <= dim J_{j+1}, from J' ⊆ J.
  bool inclusion_bound = false;
  bool final_inequality = false;  // dim V <= dim A1*V
  CheckStatus status = CheckStatus::kPass;
};

/// Requires H(A,j) <= H(A,j+1) (HypothesisViolated otherwise).
MatchingStepReport matching_step_check(const AlgebraTable& A, const SubspaceBasis& V,
                                       std::uint64_t witness_budget = 200'000);

struct VerifyOptions {
  /// Random subspaces checked per ascending degree.
  std::size_t sampling_budget = 20;
  std::uint64_t seed = 1;
  /// All 2^H(j) coordinate subspaces are checked when H(j) <= this.
  std::size_t coordinate_limit = 10;
  std::uint64_t witness_budget = 200'000;
};

struct VerifyReport {
  bool unimodal = false;
  std::size_t checks = 0;
  std::size_t coordinate_checks = 0;
  std::size_t random_checks = 0;
  std::size_t falsifications = 0;
  std::size_t inconclusive = 0;
  /// Checks where the generator, image or restricted identity failed.
  std::size_t identity_failures = 0;
  std::vector<int> degrees;
  /// Strategy tallies of the witnesses found.
  std::size_t by_initial_ideal = 0;
  std::size_t by_lex_plus_powers = 0;
  std::size_t by_dfs = 0;
  /// Present when every check passed; mode theorem_certified.
  std::optional<DilworthReport> certified;
  /// The first few failing checks, for audit.
  std::vector<MatchingStepReport> failures;
  CheckStatus status() const;
};

/// Builds A = R/(gens), then runs matching_step_check on coordinate and
/// seeded random subspaces at every ascending degree. Throws what
/// AlgebraTable::build throws.
VerifyReport sperner_verify_ci(const Field& field, const std::vector<Polynomial>& gens,
                               const DegreeVector& a, const VerifyOptions& options = {});
VerifyReport sperner_verify_ci(const AlgebraTable& A, const VerifyOptions& options = {});

/// Produces factor `factor` of generator `gen`.
using LinearFormSampler =
    std::function<Polynomial(std::size_t gen, int factor, std::mt19937_64& rng)>;

struct LinearFormsCI {
  std::vector<Polynomial> generators;
  /// Rejected attempts before the accepted one.
  std::size_t retries = 0;
};

inline constexpr std::size_t kLinearFormRetries = 32;

/// L_j = product of a_j linear forms, resampled until the L_j form a regular
/// sequence. The default sampler draws uniform coefficients (nonzero form).
/// Throws NotRegularSequence when the first draw and kLinearFormRetries
/// redraws are all rejected.
LinearFormsCI linear_forms_ci_generator(std::size_t n, const DegreeVector& a, const Field& field,
                                        std::uint64_t seed, LinearFormSampler sampler = {});

}  // namespace sperner
