#include "sperner/degree_vector.hpp"

#include <stdexcept>

namespace sperner {

DegreeVector::DegreeVector(std::vector<int> degrees) : a_(std::move(degrees)) {
  for (const int d : a_) {
    if (d < 1) throw std::invalid_argument("degrees must be >= 1");
  }
}

int DegreeVector::socle_degree() const noexcept {
  int c = 0;
  for (const int d : a_) c += d - 1;
  return c;
}

std::uint64_t DegreeVector::product() const noexcept {
  std::uint64_t p = 1;
  for (const int d : a_) p *= static_cast<std::uint64_t>(d);
  return p;
}

std::string DegreeVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s;
}

}  // namespace sperner
