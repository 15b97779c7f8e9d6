#pragma once

// Combinatorics on the divisor lattice of a monomial complete intersection:
// neighbor sets, the symmetric chain decomposition, layer matchings and
// Hall-condition scans.

#include <cstddef>
#include <utility>
#include <vector>

#include "sperner/kernels.hpp"
#include "sperner/monomial_ci.hpp"

namespace sperner {

struct Chain {
  /// Each element divides the next and has rank one higher.
  std::vector<Monomial> elements;

  int start_rank() const { return elements.front().degree(); }
  int end_rank() const { return elements.back().degree(); }
};

struct ChainDecomposition {
  DegreeVector a;
  std::vector<Chain> chains;
};

/// de Bruijn–Tengbergen–Kruyswijk construction: decompose the box on the
/// first k variables, then split each chain times {1, x, ..., x^(a-1)} by
/// peeling the top row plus right column off the grid. Variables are
/// processed in index order. Throws SizeLimitExceeded past the guardrail.
ChainDecomposition symmetric_chain_decomposition(const DegreeVector& a);

struct ChainDecompositionAudit {
  bool partition = false;   // every box monomial in exactly one chain
  bool saturated = false;   // consecutive elements differ by one variable
  bool symmetric = false;   // start + end = c for every chain
  bool count_ok = false;    // number of chains = max H(B, j)

  bool ok() const { return partition && saturated && symmetric && count_ok; }
};

ChainDecompositionAudit audit(const ChainDecomposition& scd);

/// N(S) = { y in P_{j+1} : x | y for some x in S }, lex-descending.
/// Throws std::invalid_argument if S mixes ranks or leaves the box.
std::vector<Monomial> neighbor_set(const std::vector<Monomial>& s, const DegreeVector& a);

struct MatchingCertificate {
  int j = 0;
  /// True when P_j is injected into P_{j+1}; false when P_{j+1} is the
  /// smaller layer and is injected into P_j.
  bool upward = true;
  /// The downward direction follows from the upward statement by lattice
  /// self-duality rather than being quoted directly.
  bool derived_by_duality = false;
  /// (element of the smaller layer, its partner in the larger layer).
  std::vector<std::pair<Monomial, Monomial>> pairs;
  /// Augmentations performed on top of the chain-decomposition warm start.
  std::size_t augmentations = 0;
};

struct MatchingOptions {
  /// Seed the augmenting-path search with the matching read off the
  /// symmetric chain decomposition.
  bool warm_start = true;
};

/// Maximum matching between P_j and P_{j+1} saturating the smaller layer.
/// Throws Falsification if saturation fails, SizeLimitExceeded past the
/// guardrail.
MatchingCertificate layer_matching(const DegreeVector& a, int j,
                                   MatchingOptions options = {});

/// Injectivity, divisibility, rank difference and saturation of the smaller layer.
bool verify_certificate(const MatchingCertificate& cert, const DegreeVector& a);

struct MonomialMatchingCheck {
  std::size_t s_size = 0;
  std::size_t neighbor_size = 0;
  /// H(j) <= H(j+1): the inequality is only claimed in this case.
  bool asserted = false;
  bool pass = true;
};

/// Raw sizes |S|, |N(S)| and pass = (|S| <= |N(S)|) when asserted.
MonomialMatchingCheck monomial_matching_check(const std::vector<Monomial>& s,
                                              const DegreeVector& a, int j);

/// Largest lower layer for which all 2^|P_j| subsets are enumerated.
inline constexpr std::size_t kExhaustiveHallLimit = 15;

struct HallReport {
  int j = 0;
  std::size_t lower_size = 0;
  std::size_t upper_size = 0;
  bool asserted = false;
  kernels::HallScan scan;

  bool pass() const { return !asserted || scan.violations == 0; }
};

/// Adjacency P_j -> P_{j+1} as bitmasks, layers in lex-descending order.
kernels::NeighborMasks layer_adjacency(const DegreeVector& a, int j);

/// Exhaustive |S| <= |N(S)| over every S in P_j. Throws SizeLimitExceeded
/// when |P_j| > kExhaustiveHallLimit.
HallReport exhaustive_hall_check(const DegreeVector& a, int j, bool parallel = true);

}  // namespace sperner
