#include "sperner/kernels.hpp"

#include <bit>
#include <limits>
#include <utility>

#include "sperner/errors.hpp"

namespace sperner::kernels {

namespace {

// Elimination is only worth threading once a pivot touches many entries.
constexpr std::size_t kParallelMinEntries = 4096;

template <bool Parallel>
RrefResult rref_impl(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RrefResult out{m, 0, {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(r, k));
    }
    const Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;

    const auto eliminate = [&](std::size_t i) {
      if (i == r || m(i, c).is_zero()) return;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
      }
    };
    if constexpr (Parallel) {
      const auto n = static_cast<std::ptrdiff_t>(rows);
      const bool big = rows * (cols - c) >= kParallelMinEntries;
#pragma omp parallel for schedule(static) if (big)
      for (std::ptrdiff_t i = 0; i < n; ++i) eliminate(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < rows; ++i) eliminate(i);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

void require_hall_size(const NeighborMasks& adj) {
  if (adj.lower_size() > kMaxHallLower) {
    throw SizeLimitExceeded("exhaustive Hall scan limited to " +
                            std::to_string(kMaxHallLower) + " lower elements");
  }
}

bool violates(const NeighborMasks& adj, std::uint64_t subset,
              std::vector<std::uint64_t>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (std::uint64_t s = subset; s != 0; s &= s - 1) {
    const std::uint64_t* mk = adj.mask(static_cast<std::size_t>(std::countr_zero(s)));
    for (std::size_t w = 0; w < scratch.size(); ++w) scratch[w] |= mk[w];
  }
  int neighbors = 0;
  for (const auto w : scratch) neighbors += std::popcount(w);
  return std::popcount(subset) > neighbors;
}

}  // namespace

RrefResult rref_serial(const Matrix& m) { return rref_impl<false>(m); }
RrefResult rref_parallel(const Matrix& m) { return rref_impl<true>(m); }

NeighborMasks::NeighborMasks(std::size_t lower_size, std::size_t upper_size)
    : lower_size_(lower_size),
      upper_size_(upper_size),
      words_((upper_size + 63) / 64),
      bits_(lower_size * words_, 0) {}

void NeighborMasks::set(std::size_t lower, std::size_t upper) {
  bits_[lower * words_ + upper / 64] |= std::uint64_t{1} << (upper % 64);
}

bool NeighborMasks::test(std::size_t lower, std::size_t upper) const {
  return (bits_[lower * words_ + upper / 64] >> (upper % 64)) & 1u;
}

HallScan hall_scan_serial(const NeighborMasks& adj) {
  require_hall_size(adj);
  const std::uint64_t total = std::uint64_t{1} << adj.lower_size();
  std::vector<std::uint64_t> scratch(adj.words());
  HallScan scan;
  scan.subsets_checked = total;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (violates(adj, s, scratch)) {
      if (!scan.first_violation) scan.first_violation = s;
      ++scan.violations;
    }
  }
  return scan;
}

HallScan hall_scan_parallel(const NeighborMasks& adj) {
  require_hall_size(adj);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << adj.lower_size());
  std::uint64_t violations = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel reduction(+ : violations) reduction(min : first)
  {
    std::vector<std::uint64_t> scratch(adj.words());
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < total; ++s) {
      const auto subset = static_cast<std::uint64_t>(s);
      if (violates(adj, subset, scratch)) {
        ++violations;
        if (subset < first) first = subset;
      }
    }
  }
  HallScan scan;
  scan.subsets_checked = static_cast<std::uint64_t>(total);
  scan.violations = violations;
  if (violations != 0) scan.first_violation = first;
  return scan;
}

}  // namespace sperner::kernels
