#include "sperner/graded_algebra.hpp"

#include <sstream>

#include "sperner/errors.hpp"

namespace sperner {

namespace {

const std::vector<Monomial> kNoMonomials;

void require_same_shape(const AlgebraTable& A, const IdealHandle& I) {
  if (I.top_degree() != A.top_degree()) throw DimensionMismatch("ideal belongs to another algebra");
  for (int d = 0; d <= A.top_degree(); ++d) {
    if (I.part(d).cols() != A.dim(d)) throw DimensionMismatch("ideal belongs to another algebra");
  }
}

Matrix empty_rows(const Field& k, std::size_t cols) { return Matrix(k, 0, cols); }

std::vector<Matrix> zero_parts(const AlgebraTable& A) {
  std::vector<Matrix> parts;
  for (int d = 0; d <= A.top_degree(); ++d) parts.push_back(empty_rows(A.field(), A.dim(d)));
  return parts;
}

Matrix stacked_images(const AlgebraTable& A, const Matrix& v, int d) {
  Matrix out(A.field(), 0, A.dim(d + 1));
  if (v.rows() == 0) return out;
  for (std::size_t i = 0; i < A.nvars(); ++i) out = vstack(out, v * A.mul_map(i, d));
  return out;
}

}  // namespace

AlgebraTable::AlgebraTable(Field field, DegreeVector a, GroebnerBasis gb,
                           std::vector<Polynomial> gens)
    : field_(std::move(field)), a_(std::move(a)), gb_(std::move(gb)), gens_(std::move(gens)) {}

AlgebraTable AlgebraTable::build(const Field& field, const std::vector<Polynomial>& gens,
                                 const DegreeVector& a) {
  const std::size_t n = a.size();
  if (gens.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " generators, got " +
                            std::to_string(gens.size()));
  }
  require_materializable(a);
  std::vector<Polynomial> converted;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& f = gens[i];
    if (f.nvars() != n) throw DimensionMismatch("generator lives in a ring with another variable count");
    if (!(f.field() == field)) throw FieldMismatch("generator over another field");
    if (f.is_zero()) throw NotRegularSequence("zero generator");
    const auto deg = f.homogeneous_degree();
    if (!deg) throw NotHomogeneous("generator " + f.to_string() + " is not homogeneous");
    if (*deg != a[i]) {
      throw DimensionMismatch("generator " + std::to_string(i + 1) + " has degree " +
                              std::to_string(*deg) + ", expected " + std::to_string(a[i]));
    }
    converted.push_back(f.with_order(MonomialOrder::degrevlex()));
  }
  auto gb = buchberger(converted, MonomialOrder::degrevlex(), a.socle_degree() + 1);
  AlgebraTable t(field, a, std::move(gb), std::move(converted));
  t.build_tables();
  return t;
}

AlgebraTable AlgebraTable::monomial(const Field& field, const DegreeVector& a) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    gens.push_back(Polynomial::monomial(field, Monomial::variable(a.size(), i, a[i]), field.one()));
  }
  return build(field, gens, a);
}

void AlgebraTable::build_tables() {
  const int c = top_degree();
  const auto expected = hilbert_of_monomial_ci(a_);
  for (int d = 0; d <= c; ++d) {
    basis_.push_back(standard_monomials(gb_, d));
    if (basis_.back().size() != expected.at(d)) {
      throw NotRegularSequence("H(A, " + std::to_string(d) + ") = " +
                               std::to_string(basis_.back().size()) + " but the monomial complete "
                               "intersection has " + std::to_string(expected.at(d)));
    }
    std::map<Monomial, std::size_t> idx;
    for (std::size_t k = 0; k < basis_.back().size(); ++k) idx.emplace(basis_.back()[k], k);
    index_.push_back(std::move(idx));
  }
  if (!standard_monomials(gb_, c + 1).empty()) {
    throw NotRegularSequence("quotient does not vanish in degree " + std::to_string(c + 1));
  }
  monomial_ = true;
  for (const auto& g : gens_) monomial_ = monomial_ && g.size() == 1;

  const std::size_t n = nvars();
  mul_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (int d = 0; d <= c; ++d) {
      Matrix m(field_, dim(d), dim(d + 1));
      if (d < c) {
        for (std::size_t r = 0; r < basis_[d].size(); ++r) {
          const Monomial xm = basis_[d][r] * Monomial::variable(n, i);
          if (const auto k = index_of(xm)) {
            m(r, *k) = field_.one();
            continue;
          }
          const auto coords = coordinates(Polynomial::monomial(field_, xm, field_.one()));
          for (std::size_t k = 0; k < coords.size(); ++k) m(r, k) = coords[k];
        }
      }
      mul_[i].push_back(std::move(m));
    }
  }
}

std::size_t AlgebraTable::dim(int d) const {
  return d < 0 || d > top_degree() ? 0 : basis_[static_cast<std::size_t>(d)].size();
}

HilbertFunction AlgebraTable::hilbert() const {
  HilbertFunction h;
  for (int d = 0; d <= top_degree(); ++d) h.values.push_back(dim(d));
  return h;
}

const std::vector<Monomial>& AlgebraTable::basis(int d) const {
  return d < 0 || d > top_degree() ? kNoMonomials : basis_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> AlgebraTable::index_of(const Monomial& m) const {
  const int d = m.degree();
  if (d > top_degree()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  const auto it = idx.find(m);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const Matrix& AlgebraTable::mul_map(std::size_t var, int d) const {
  if (var >= nvars() || d < 0 || d > top_degree()) {
    throw std::out_of_range("multiplication map index");
  }
  return mul_[var][static_cast<std::size_t>(d)];
}

Matrix AlgebraTable::multiply_by_monomial(const Matrix& rows, int d, const Monomial& m) const {
  if (d + m.degree() > top_degree()) return Matrix(field_, rows.rows(), 0);
  Matrix cur = rows;
  int deg = d;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    for (int e = 0; e < m[i]; ++e) cur = cur * mul_map(i, deg++);
  }
  return cur;
}

Matrix AlgebraTable::multiplication_matrix(std::span<const Scalar> element, int e, int d) const {
  Matrix out(field_, dim(d), dim(d + e));
  if (out.empty()) return out;
  const Matrix id = Matrix::identity(field_, dim(d));
  for (std::size_t k = 0; k < element.size(); ++k) {
    if (element[k].is_zero()) continue;
    out = out + scale(multiply_by_monomial(id, d, basis(e)[k]), element[k]);
  }
  return out;
}

std::vector<Scalar> AlgebraTable::coordinates(const Polynomial& p) const {
  const auto deg = p.homogeneous_degree();
  if (!p.is_zero() && !deg) throw NotHomogeneous("coordinates of " + p.to_string());
  const int d = deg.value_or(0);
  std::vector<Scalar> out(dim(d), field_.zero());
  if (p.is_zero() || d > top_degree()) return out;
  const Polynomial r = normal_form(p.with_order(gb_.order), gb_);
  for (const auto& t : r.terms()) out[*index_of(t.monomial)] = t.coeff;
  return out;
}

Polynomial AlgebraTable::lift(std::span<const Scalar> coords, int d) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coords.size(); ++k) terms.push_back({basis(d)[k], coords[k]});
  return Polynomial::from_terms(field_, nvars(), std::move(terms), gb_.order);
}

SubspaceBasis::SubspaceBasis(int degree, const Matrix& rows) : degree(degree), coords(row_basis(rows)) {}

IdealHandle::IdealHandle(const AlgebraTable& algebra) : parts_(zero_parts(algebra)) {}

IdealHandle::IdealHandle(std::vector<Matrix> parts) {
  for (auto& p : parts) parts_.push_back(row_basis(p));
}

std::size_t IdealHandle::dim(int d) const {
  return d < 0 || d > top_degree() ? 0 : part(d).rows();
}

std::size_t IdealHandle::total_dim() const {
  std::size_t s = 0;
  for (const auto& p : parts_) s += p.rows();
  return s;
}

bool IdealHandle::is_zero() const { return total_dim() == 0; }

std::optional<int> IdealHandle::initial_degree() const {
  for (int d = 0; d <= top_degree(); ++d) {
    if (dim(d) > 0) return d;
  }
  return std::nullopt;
}

bool IdealHandle::contains(const IdealHandle& other) const {
  if (other.top_degree() != top_degree()) throw DimensionMismatch("ideals of different algebras");
  for (int d = 0; d <= top_degree(); ++d) {
    if (!row_space_contains(part(d), other.part(d))) return false;
  }
  return true;
}

std::string IdealHandle::to_string() const {
  std::ostringstream os;
  for (int d = 0; d <= top_degree(); ++d) os << (d ? " " : "") << dim(d);
  return os.str();
}

std::string IdealHandle::key() const {
  std::string k;
  for (const auto& p : parts_) k += p.to_string() + ";";
  return k;
}

IdealHandle zero_ideal(const AlgebraTable& A) { return IdealHandle(A); }

IdealHandle unit_ideal(const AlgebraTable& A) { return maximal_power(A, 0); }

IdealHandle maximal_power(const AlgebraTable& A, int k) {
  std::vector<Matrix> parts;
  for (int d = 0; d <= A.top_degree(); ++d) {
    parts.push_back(d >= k ? Matrix::identity(A.field(), A.dim(d)) : empty_rows(A.field(), A.dim(d)));
  }
  return IdealHandle(std::move(parts));
}

IdealHandle ideal_from_generators(const AlgebraTable& A, const std::vector<Polynomial>& gens) {
  auto parts = zero_parts(A);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto d = g.homogeneous_degree();
    if (!d) throw NotHomogeneous("ideal generator " + g.to_string() + " is not homogeneous");
    if (*d > A.top_degree()) continue;
    const auto coords = A.coordinates(g);
    parts[static_cast<std::size_t>(*d)].append_row(coords);
  }
  for (int d = 1; d <= A.top_degree(); ++d) {
    auto& p = parts[static_cast<std::size_t>(d)];
    p = vstack(p, stacked_images(A, parts[static_cast<std::size_t>(d - 1)], d - 1));
  }
  return IdealHandle(std::move(parts));
}

IdealHandle ideal_from_monomials(const AlgebraTable& A, const std::vector<Monomial>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& m : gens) polys.push_back(Polynomial::monomial(A.field(), m, A.field().one()));
  return ideal_from_generators(A, polys);
}

IdealHandle ideal_from_subspace(const AlgebraTable& A, const SubspaceBasis& V) {
  auto parts = zero_parts(A);
  if (V.degree < 0 || V.degree > A.top_degree()) return IdealHandle(std::move(parts));
  if (V.coords.cols() != A.dim(V.degree)) throw DimensionMismatch("subspace of another algebra");
  parts[static_cast<std::size_t>(V.degree)] = V.coords;
  for (int d = V.degree + 1; d <= A.top_degree(); ++d) {
    parts[static_cast<std::size_t>(d)] =
        stacked_images(A, parts[static_cast<std::size_t>(d - 1)], d - 1);
  }
  return IdealHandle(std::move(parts));
}

SubspaceBasis mul_subspace(const AlgebraTable& A, const SubspaceBasis& V) {
  if (V.degree >= A.top_degree()) return SubspaceBasis(V.degree + 1, empty_rows(A.field(), 0));
  if (V.coords.cols() != A.dim(V.degree)) throw DimensionMismatch("subspace of another algebra");
  return SubspaceBasis(V.degree + 1, stacked_images(A, V.coords, V.degree));
}

bool is_ideal(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  for (int d = 0; d < A.top_degree(); ++d) {
    if (!row_space_contains(I.part(d + 1), stacked_images(A, I.part(d), d))) return false;
  }
  return true;
}

IdealHandle maximal_times(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  auto parts = zero_parts(A);
  for (int d = 1; d <= A.top_degree(); ++d) {
    parts[static_cast<std::size_t>(d)] = stacked_images(A, I.part(d - 1), d - 1);
  }
  return IdealHandle(std::move(parts));
}

IdealHandle colon_maximal(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  const Field& k = A.field();
  std::vector<Matrix> parts;
  for (int d = 0; d <= A.top_degree(); ++d) {
    if (d == A.top_degree()) {
      parts.push_back(Matrix::identity(k, A.dim(d)));
      continue;
    }
    // v * M_i lies in I_{d+1} iff it is orthogonal to every y with I_{d+1} y^T = 0.
    const Matrix dual = right_kernel(I.part(d + 1)).transpose();
    if (dual.cols() == 0) {
      parts.push_back(Matrix::identity(k, A.dim(d)));
      continue;
    }
    Matrix conditions(k, A.dim(d), 0);
    for (std::size_t i = 0; i < A.nvars(); ++i) {
      conditions = hstack(conditions, A.mul_map(i, d) * dual);
    }
    parts.push_back(left_kernel(conditions));
  }
  return IdealHandle(std::move(parts));
}

Matrix minimal_generators(const AlgebraTable& A, const IdealHandle& I, int d) {
  require_same_shape(A, I);
  Matrix cur = d > 0 ? row_basis(stacked_images(A, I.part(d - 1), d - 1))
                     : empty_rows(A.field(), A.dim(0));
  std::size_t r = cur.rows();
  Matrix gens(A.field(), 0, A.dim(d));
  for (std::size_t i = 0; i < I.part(d).rows(); ++i) {
    Matrix next = cur;
    next.append_row(I.part(d).row(i));
    const std::size_t nr = rank(next);
    if (nr > r) {
      gens.append_row(I.part(d).row(i));
      cur = std::move(next);
      r = nr;
    }
  }
  return gens;
}

IdealHandle annihilator(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  const int c = A.top_degree();
  const Field& k = A.field();
  std::vector<Matrix> gens;
  for (int e = 0; e <= c; ++e) gens.push_back(minimal_generators(A, I, e));
  std::vector<Matrix> parts;
  for (int d = 0; d <= c; ++d) {
    Matrix conditions(k, A.dim(d), 0);
    for (int e = 0; d + e <= c; ++e) {
      const Matrix& g = gens[static_cast<std::size_t>(e)];
      for (std::size_t r = 0; r < g.rows(); ++r) {
        conditions = hstack(conditions, A.multiplication_matrix(g.row(r), e, d));
      }
    }
    parts.push_back(conditions.cols() == 0 ? Matrix::identity(k, A.dim(d)) : left_kernel(conditions));
  }
  return IdealHandle(std::move(parts));
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
  if (I.top_degree() != J.top_degree()) throw DimensionMismatch("ideals of different algebras");
  std::vector<Matrix> parts;
  for (int d = 0; d <= I.top_degree(); ++d) parts.push_back(row_space_sum(I.part(d), J.part(d)));
  return IdealHandle(std::move(parts));
}

IdealHandle ideal_intersect(const IdealHandle& I, const IdealHandle& J) {
  if (I.top_degree() != J.top_degree()) throw DimensionMismatch("ideals of different algebras");
  std::vector<Matrix> parts;
  for (int d = 0; d <= I.top_degree(); ++d) {
    parts.push_back(row_space_intersect(I.part(d), J.part(d)));
  }
  return IdealHandle(std::move(parts));
}

IdealHandle truncate_above(const AlgebraTable& A, const IdealHandle& I, int alpha) {
  require_same_shape(A, I);
  std::vector<Matrix> parts;
  for (int d = 0; d <= A.top_degree(); ++d) {
    parts.push_back(d <= alpha ? empty_rows(A.field(), A.dim(d)) : I.part(d));
  }
  return IdealHandle(std::move(parts));
}

std::size_t mu(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  std::size_t total = I.dim(0);
  for (int d = 1; d <= A.top_degree(); ++d) {
    total += I.dim(d) - rank(stacked_images(A, I.part(d - 1), d - 1));
  }
  return total;
}

std::size_t tau(const AlgebraTable& A, const IdealHandle& I) {
  const IdealHandle colon = colon_maximal(A, I);
  return colon.total_dim() - I.total_dim();
}

std::vector<std::uint64_t> quotient_hilbert(const AlgebraTable& A, const IdealHandle& I) {
  require_same_shape(A, I);
  std::vector<std::uint64_t> h;
  for (int d = 0; d <= A.top_degree(); ++d) h.push_back(A.dim(d) - I.dim(d));
  return h;
}

PowerGeneratorCheck power_generator_check(const AlgebraTable& A, const IdealHandle& I, int i) {
  const auto alpha = I.initial_degree();
  if (!alpha) throw std::invalid_argument("generator count identity needs a nonzero ideal");
  for (int d = *alpha + 1; d <= A.top_degree(); ++d) {
    if (minimal_generators(A, I, d).rows() != 0) {
      throw std::invalid_argument("ideal is not generated in a single degree");
    }
  }
  PowerGeneratorCheck r;
  r.alpha = *alpha;
  r.i = i;
  IdealHandle power = I;
  for (int s = 0; s < i; ++s) power = maximal_times(A, power);
  r.lhs = mu(A, power);
  const int d = *alpha + i;
  const auto hq = quotient_hilbert(A, I);
  const std::int64_t quotient = d <= A.top_degree() ? static_cast<std::int64_t>(hq[static_cast<std::size_t>(d)]) : 0;
  r.rhs = static_cast<std::int64_t>(A.dim(d)) - quotient;
  r.holds = static_cast<std::int64_t>(r.lhs) == r.rhs;
  return r;
}

std::size_t pairing_rank(const AlgebraTable& A, int d) {
  const int c = A.top_degree();
  if (d < 0 || d > c) return 0;
  const Matrix id = Matrix::identity(A.field(), A.dim(d));
  Matrix pairing(A.field(), A.dim(d), 0);
  for (const auto& m : A.basis(c - d)) pairing = hstack(pairing, A.multiply_by_monomial(id, d, m));
  return rank(pairing);
}

bool multiplication_commutes(const AlgebraTable& A) {
  for (int d = 0; d + 1 <= A.top_degree(); ++d) {
    for (std::size_t i = 0; i < A.nvars(); ++i) {
      for (std::size_t j = i + 1; j < A.nvars(); ++j) {
        if (!(A.mul_map(i, d) * A.mul_map(j, d + 1) == A.mul_map(j, d) * A.mul_map(i, d + 1))) {
          return false;
        }
      }
    }
  }
  return true;
}

SubspaceBasis random_subspace(const AlgebraTable& A, int d, std::size_t rows,
                              std::mt19937_64& rng) {
  Matrix m(A.field(), rows, A.dim(d));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < A.dim(d); ++c) m(r, c) = A.field().random(rng);
  }
  return SubspaceBasis(d, m);
}

}  // namespace sperner
