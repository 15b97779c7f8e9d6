#pragma once
// Degreewise model of an Artinian complete intersection A = R/(f1, ..., fn)
// and the calculus of graded ideals of A stored as one subspace per degree.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sperner/degree_vector.hpp"
#include "sperner/groebner.hpp"
#include "sperner/matrix.hpp"
#include "sperner/monomial_ci.hpp"

namespace sperner {

class AlgebraTable {
 public:
  /// Requires exactly n homogeneous generators of degrees a1..an (n = number
  /// of variables). Regularity is checked by comparing H(A) with the Hilbert
  /// function of the monomial complete intersection of the same degrees.
  /// Throws DimensionMismatch on arity or degree mismatch, NotHomogeneous,
  /// NotRegularSequence, SizeLimitExceeded past the guardrail.
  static AlgebraTable build(const Field& field, const std::vector<Polynomial>& gens,
                            const DegreeVector& a);
  /// B = R/(x1^a1, ..., xn^an).
  static AlgebraTable monomial(const Field& field, const DegreeVector& a);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return a_.size(); }
  const DegreeVector& degrees() const noexcept { return a_; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// True when every generator is a monomial, i.e. A is B itself.
  bool is_monomial() const noexcept { return monomial_; }

  int top_degree() const noexcept { return a_.socle_degree(); }
  std::size_t dim(int d) const;
  HilbertFunction hilbert() const;

  /// Standard monomials of degree d, lex-descending; empty outside [0, c].
  const std::vector<Monomial>& basis(int d) const;
  /// Position of a standard monomial in basis(m.degree()).
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Multiplication by x_var from A_d to A_{d+1} as a dim(d) x dim(d+1)
  /// matrix acting on row vectors. Zero columns for d = c.
  const Matrix& mul_map(std::size_t var, int d) const;
  /// rows * (multiplication by the monomial m) from A_d to A_{d+deg m}.
  Matrix multiply_by_monomial(const Matrix& rows, int d, const Monomial& m) const;
  /// Multiplication by an element of A_e given in coordinates over basis(e),
  /// as a dim(d) x dim(d+e) matrix.
  Matrix multiplication_matrix(std::span<const Scalar> element, int e, int d) const;

  /// Coordinates of the image of p in A; p must be homogeneous.
  std::vector<Scalar> coordinates(const Polynomial& p) const;
  /// The element of R spelled by coordinates over basis(d).
  Polynomial lift(std::span<const Scalar> coords, int d) const;

 private:
  AlgebraTable(Field field, DegreeVector a, GroebnerBasis gb, std::vector<Polynomial> gens);
  void build_tables();

  Field field_;
  DegreeVector a_;
  GroebnerBasis gb_;
  std::vector<Polynomial> gens_;
  bool monomial_ = false;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::map<Monomial, std::size_t>> index_;
  std::vector<std::vector<Matrix>> mul_;  // mul_[var][d]
};

/// Subspace of A_degree; rows of coords form the reduced row basis.
struct SubspaceBasis {
  int degree = 0;
  Matrix coords;

  SubspaceBasis(int degree, const Matrix& rows);
  std::size_t dim() const noexcept { return coords.rows(); }
  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

/// Graded ideal of A as subspaces I_d of A_d, d = 0..c, each in reduced row
/// form so equal ideals compare equal.
class IdealHandle {
 public:
  /// The zero ideal.
  explicit IdealHandle(const AlgebraTable& algebra);
  /// parts[d] spans I_d; each part is brought to reduced row form.
  explicit IdealHandle(std::vector<Matrix> parts);

  int top_degree() const noexcept { return static_cast<int>(parts_.size()) - 1; }
  const Matrix& part(int d) const { return parts_[static_cast<std::size_t>(d)]; }
  std::size_t dim(int d) const;
  std::size_t total_dim() const;
  bool is_zero() const;
  bool is_unit() const { return dim(0) == 1; }
  /// min{ d : I_d != 0 }; nullopt for the zero ideal.
  std::optional<int> initial_degree() const;
  bool contains(const IdealHandle& other) const;
  /// Dimension vector "0 1 2 1" for reports.
  std::string to_string() const;
  /// Canonical text of all parts; equal keys iff equal ideals.
  std::string key() const;

  friend bool operator==(const IdealHandle& a, const IdealHandle& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Matrix> parts_;
};

IdealHandle zero_ideal(const AlgebraTable& A);
IdealHandle unit_ideal(const AlgebraTable& A);
/// m^k = sum of A_d for d >= k.
IdealHandle maximal_power(const AlgebraTable& A, int k);
/// Ideal generated by homogeneous polynomials (their images in A).
IdealHandle ideal_from_generators(const AlgebraTable& A, const std::vector<Polynomial>& gens);
/// Ideal generated by monomials (of R; divisible-by images in A).
IdealHandle ideal_from_monomials(const AlgebraTable& A, const std::vector<Monomial>& gens);
/// Ideal V*A generated by a subspace.
IdealHandle ideal_from_subspace(const AlgebraTable& A, const SubspaceBasis& V);

/// A1 * V in degree j+1; the zero space when j = c.
SubspaceBasis mul_subspace(const AlgebraTable& A, const SubspaceBasis& V);
/// True iff A1 * I_d ⊆ I_{d+1} for all d.
bool is_ideal(const AlgebraTable& A, const IdealHandle& I);

IdealHandle maximal_times(const AlgebraTable& A, const IdealHandle& I);
/// I : m.
IdealHandle colon_maximal(const AlgebraTable& A, const IdealHandle& I);
/// 0 : I, through the multiplication maps of a minimal generating set.
IdealHandle annihilator(const AlgebraTable& A, const IdealHandle& I);
IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J);
/// I with every degree <= alpha removed.
IdealHandle truncate_above(const AlgebraTable& A, const IdealHandle& I, int alpha);

/// Minimal generators in degree d: a complement of A1 * I_{d-1} inside I_d.
Matrix minimal_generators(const AlgebraTable& A, const IdealHandle& I, int d);
/// dim I/mI.
std::size_t mu(const AlgebraTable& A, const IdealHandle& I);
/// dim (I:m)/I.
std::size_t tau(const AlgebraTable& A, const IdealHandle& I);
/// H(A/I, d) for d = 0..c.
std::vector<std::uint64_t> quotient_hilbert(const AlgebraTable& A, const IdealHandle& I);

struct PowerGeneratorCheck {
  int alpha = 0;
  int i = 0;
  std::size_t lhs = 0;         // mu(m^i I)
  std::int64_t rhs = 0;        // H(A, alpha+i) - H(A/I, alpha+i)
  bool holds = false;
};
/// mu(m^i I) = H(A, alpha+i) - H(A/I, alpha+i) for I generated in the single
/// degree alpha. Throws std::invalid_argument otherwise.
PowerGeneratorCheck power_generator_check(const AlgebraTable& A, const IdealHandle& I, int i);

/// Rank of the pairing A_d x A_{c-d} -> A_c.
std::size_t pairing_rank(const AlgebraTable& A, int d);
/// x_i x_j = x_j x_i as maps A_d -> A_{d+2}, for all i, j, d.
bool multiplication_commutes(const AlgebraTable& A);

/// Row space of `rows` random vectors of A_d (entries from Field::random).
SubspaceBasis random_subspace(const AlgebraTable& A, int d, std::size_t rows,
                              std::mt19937_64& rng);

}  // namespace sperner
