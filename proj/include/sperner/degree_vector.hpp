#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sperner {

/// Degrees (a1, ..., an), each >= 1, of the generators of a complete
/// intersection; for the monomial CI these are the pure powers xi^ai.
class DegreeVector {
 public:
  DegreeVector() = default;
  /// Throws std::invalid_argument if some entry is < 1.
  explicit DegreeVector(std::vector<int> degrees);

  std::size_t size() const noexcept { return a_.size(); }
  int operator[](std::size_t i) const { return a_[i]; }
  const std::vector<int>& values() const noexcept { return a_; }

  /// c = sum(ai - 1).
  int socle_degree() const noexcept;
  /// prod(ai), the vector space dimension of the complete intersection.
  std::uint64_t product() const noexcept;

  /// "2,3".
  std::string to_string() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<int> a_;
};

}  // namespace sperner
