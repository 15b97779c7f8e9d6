#pragma once

// Data-parallel inner loops. Every OpenMP kernel keeps a serial reference
// with identical results; the unit tests compare the two and bench/ times
// them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sperner/matrix.hpp"

namespace sperner::kernels {

RrefResult rref_serial(const Matrix& m);
RrefResult rref_parallel(const Matrix& m);

/// Bipartite adjacency from a lower layer (one row per element) into an
/// upper layer, packed as 64-bit words.
class NeighborMasks {
 public:
  NeighborMasks(std::size_t lower_size, std::size_t upper_size);

  void set(std::size_t lower, std::size_t upper);
  bool test(std::size_t lower, std::size_t upper) const;

  std::size_t lower_size() const noexcept { return lower_size_; }
  std::size_t upper_size() const noexcept { return upper_size_; }
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* mask(std::size_t lower) const {
    return bits_.data() + lower * words_;
  }

 private:
  std::size_t lower_size_;
  std::size_t upper_size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct HallScan {
  std::uint64_t subsets_checked = 0;
  std::uint64_t violations = 0;
  /// Smallest subset bitmask S with |S| > |N(S)|.
  std::optional<std::uint64_t> first_violation;

  friend bool operator==(const HallScan&, const HallScan&) = default;
};

/// Maximum lower layer size accepted by the exhaustive scans.
inline constexpr std::size_t kMaxHallLower = 30;

/// Checks |S| <= |N(S)| for every subset S of the lower layer.
/// Throws SizeLimitExceeded when lower_size() > kMaxHallLower.
HallScan hall_scan_serial(const NeighborMasks& adj);
HallScan hall_scan_parallel(const NeighborMasks& adj);

}  // namespace sperner::kernels
