#pragma once
// Dilworth number d(A) = max mu(I) over proper nonzero ideals, the Sperner
// property, the families F(A), G(A) and the walk from an F(A) member down to
// m^j0.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/graded_algebra.hpp"

namespace sperner {

enum class SearchMode { kMonomialExhaustive, kGf2AllGraded, kRandomSampled, kTheoremCertified };

std::string to_string(SearchMode mode);
std::optional<SearchMode> parse_search_mode(std::string_view name);

struct DilworthReport {
  std::size_t d = 0;
  /// An ideal attaining d; empty when A has no proper nonzero ideal.
  std::optional<IdealHandle> witness;
  std::uint64_t max_h = 0;
  bool sperner = false;
  SearchMode mode = SearchMode::kMonomialExhaustive;
  /// False when d is only a lower bound (sampled mode).
  bool exact = true;
  /// What was searched, e.g. "monomial ideals of B (20 antichains)".
  std::string universe;
  std::uint64_t ideals_examined = 0;
};

struct DilworthOptions {
  /// Maximum number of ideals enumerated (exhaustive modes) or sampled.
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  /// Theorem mode on a non-monomial algebra needs the matching property to
  /// have been established elsewhere; `matching_evidence` says how.
  bool matching_verified = false;
  std::string matching_evidence;
};

/// Throws BudgetExceeded, HypothesisViolated (theorem mode without
/// unimodality or matching evidence) and std::invalid_argument for a mode
/// that does not apply (monomial mode on a non-monomial algebra, GF(2) mode
/// over another field).
DilworthReport dilworth_number(const AlgebraTable& A, SearchMode mode,
                               const DilworthOptions& options = {});

/// All proper nonzero monomial ideals of a monomial algebra, one per
/// nonempty antichain of the box other than {1}.
std::vector<IdealHandle> monomial_ideal_universe(const AlgebraTable& A,
                                                 std::uint64_t budget = 1'000'000);
/// All proper nonzero graded ideals of an algebra over GF(2).
std::vector<IdealHandle> gf2_graded_ideal_universe(const AlgebraTable& A,
                                                   std::uint64_t budget = 1'000'000);

struct MatchingEvidence {
  bool verified = false;
  /// Degrees j with H(j) <= H(j+1) that were checked.
  std::vector<int> degrees;
  std::string description;
};
/// Saturating layer matchings of B at every ascending degree.
MatchingEvidence verify_monomial_matching(const DegreeVector& a);

struct TruncationCheck {
  int alpha = 0;
  int first_descent = 0;
  std::size_t mu_before = 0;
  std::size_t mu_after = 0;
  /// dim A1 * I_alpha - dim I_alpha.
  std::int64_t growth = 0;
  /// mu_after - mu_before == growth.
  bool identity_holds = false;
  /// mu_before <= mu_after; only claimed when alpha < j0 and the matching
  /// property is known at degree alpha.
  bool asserted = false;
  bool inequality_holds = false;
};
/// Compares I with its truncation above the initial degree. Throws
/// std::invalid_argument for the zero ideal.
TruncationCheck truncation_check(const AlgebraTable& A, const IdealHandle& I,
                                 bool matching_known);

enum class WalkStepKind { kStart, kTruncate, kDualize };
std::string to_string(WalkStepKind kind);

struct WalkStep {
  WalkStepKind kind = WalkStepKind::kStart;
  IdealHandle ideal;
  int initial_degree = 0;
  std::size_t mu = 0;
};

/// Starting from I with mu(I) = d, truncates while the initial degree is
/// below j0 and otherwise replaces I by 0 : mI, until reaching m^j0.
/// Throws HypothesisViolated when H is not unimodal, the matching property
/// is unknown (non-monomial A without `matching_verified`) or mu(I) != d;
/// Falsification when a step leaves F(A).
std::vector<WalkStep> sperner_walk(const AlgebraTable& A, const IdealHandle& I, std::size_t d,
                                   bool matching_verified = false);

struct LatticeCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool holds() const { return failures == 0; }
};

struct LatticeFamilyReport {
  std::string universe;
  std::size_t universe_size = 0;
  std::size_t d = 0;
  std::vector<IdealHandle> f_family;
  std::vector<IdealHandle> g_family;
  std::vector<LatticeCheck> checks;
  bool all_hold() const;
};

/// F and G relative to `universe` (which must be closed under +, ∩, m·,
/// :m and 0:), and every correspondence between them checked directly.
/// Throws SizeLimitExceeded for universes above `max_universe`.
LatticeFamilyReport lattice_family_check(const AlgebraTable& A,
                                         const std::vector<IdealHandle>& universe,
                                         std::string universe_name,
                                         std::size_t max_universe = 2000);

}  // namespace sperner
