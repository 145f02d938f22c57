#include "gcell/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcell/error.hpp"

namespace gcell {

std::shared_ptr<const Algebra> Algebra::make(const Field& field, std::vector<std::string> labels,
                                             const std::vector<ProductEntry>& mult, std::vector<int> degrees,
                                             Matrix involution, Checks checks) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::validation_error, "the zero algebra is not allowed");
  if (degrees.size() != n) throw Error(ErrorCode::dimension_mismatch, "degree list length differs from basis size");
  if (involution.rows() != n || involution.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch, "involution must be a " + std::to_string(n) + "x" +
                                                   std::to_string(n) + " matrix");
  }
  if (!(involution.field() == field)) throw Error(ErrorCode::field_mismatch, "involution over a different field");

  std::shared_ptr<Algebra> alg(new Algebra());
  alg->field_ = field;
  alg->labels_ = std::move(labels);
  alg->degrees_ = std::move(degrees);
  alg->involution_ = std::move(involution);
  alg->table_.assign(n * n, {});

  for (const auto& e : mult) {
    if (e.i >= n || e.j >= n || e.k >= n) {
      throw Error(ErrorCode::validation_error, "structure constant index out of range (" + std::to_string(e.i) +
                                                   ", " + std::to_string(e.j) + ", " + std::to_string(e.k) + ")");
    }
    if (!(e.coeff.field() == field)) throw Error(ErrorCode::field_mismatch, "structure constant over another field");
    auto& terms = alg->table_[e.i * n + e.j];
    auto it = std::find_if(terms.begin(), terms.end(), [&](const StructureTerm& t) { return t.k == e.k; });
    if (it == terms.end()) {
      terms.push_back({e.k, e.coeff});
    } else {
      it->coeff += e.coeff;
    }
  }
  for (auto& terms : alg->table_) {
    std::erase_if(terms, [](const StructureTerm& t) { return t.coeff.is_zero(); });
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  }

  if (auto v = alg->associativity_violation()) {
    const auto& [i, j, k] = *v;
    throw Error(ErrorCode::non_associative, "(" + alg->label(i) + " " + alg->label(j) + ") " + alg->label(k) +
                                                " != " + alg->label(i) + " (" + alg->label(j) + " " + alg->label(k) +
                                                ")");
  }

  // Identity: e x_i = x_i and x_i e = x_i, linear in the coordinates of e.
  Matrix system(field, 2 * n * n, n);
  Matrix rhs(field, 2 * n * n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& t : alg->product_terms(a, i)) system((i * n) + t.k, a) += t.coeff;
      for (const auto& t : alg->product_terms(i, a)) system(n * n + (i * n) + t.k, a) += t.coeff;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    rhs(i * n + i, 0) = Scalar::one(field);
    rhs(n * n + i * n + i, 0) = Scalar::one(field);
  }
  auto identity = solve(system, rhs);
  if (!identity) throw Error(ErrorCode::no_identity, "no element e with e x = x e = x for all basis x");
  alg->identity_ = identity->column(0);

  if (checks.grading) {
    if (auto v = alg->grading_violation()) throw Error(ErrorCode::not_graded, *v);
  }
  if (checks.involution) {
    if (auto v = alg->involution_violation()) throw Error(ErrorCode::bad_involution, *v);
  }
  return alg;
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product_terms(i, j)) {
    if (t.k == k) return t.coeff;
  }
  return Scalar::zero(field_);
}

std::vector<ProductEntry> Algebra::product_entries() const {
  std::vector<ProductEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& t : product_terms(i, j)) out.push_back({i, j, t.k, t.coeff});
    }
  }
  return out;
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorCode::dimension_mismatch, "element length");
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : product_terms(i, j)) out[t.k] += ab * t.coeff;
    }
  }
  return out;
}

Vector Algebra::left_multiply(std::size_t i, const Vector& v) const {
  Vector out = zero();
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& t : product_terms(i, j)) out[t.k] += v[j] * t.coeff;
  }
  return out;
}

Vector Algebra::right_multiply(const Vector& v, std::size_t j) const {
  Vector out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : product_terms(i, j)) out[t.k] += v[i] * t.coeff;
  }
  return out;
}

std::vector<int> Algebra::degree_values() const {
  std::set<int> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::optional<int> Algebra::homogeneous_degree(const Vector& v) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (deg && *deg != degrees_[i]) return std::nullopt;
    deg = degrees_[i];
  }
  return deg.value_or(0);
}

std::optional<std::array<std::size_t, 3>> Algebra::associativity_violation() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = zero();
      for (const auto& t : product_terms(i, j)) ij[t.k] += t.coeff;
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = right_multiply(ij, k);
        Vector jk = zero();
        for (const auto& t : product_terms(j, k)) jk[t.k] += t.coeff;
        if (!(left == left_multiply(i, jk))) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> Algebra::grading_violation() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& t : product_terms(i, j)) {
        if (degrees_[t.k] != degrees_[i] + degrees_[j]) {
          return label(i) + " * " + label(j) + " has a term on " + label(t.k) + " of degree " +
                 std::to_string(degrees_[t.k]) + ", expected " + std::to_string(degrees_[i] + degrees_[j]);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> Algebra::involution_violation() const {
  const std::size_t n = dim();
  if (!(involution_ * involution_).is_identity()) return std::string("* is not an involution: (a*)* != a");
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      if (!involution_(r, j).is_zero() && degrees_[r] != degrees_[j]) {
        return "* does not preserve degree: " + label(j) + "* has a term on " + label(r);
      }
    }
  }
  std::vector<Vector> star(n);
  for (std::size_t i = 0; i < n; ++i) star[i] = involution_.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = zero();
      for (const auto& t : product_terms(i, j)) prod[t.k] += t.coeff;
      if (!(apply_involution(prod) == multiply(star[j], star[i]))) {
        return "(" + label(i) + " " + label(j) + ")* != " + label(j) + "* " + label(i) + "*";
      }
    }
  }
  return std::nullopt;
}

AlgElement::AlgElement(AlgebraPtr algebra, Vector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim()) {
    throw Error(ErrorCode::dimension_mismatch, "coefficient vector length differs from algebra dimension");
  }
}

AlgElement AlgElement::basis(AlgebraPtr algebra, std::size_t i) {
  Vector v = algebra->basis_vector(i);
  return AlgElement(std::move(algebra), std::move(v));
}

AlgElement AlgElement::one(AlgebraPtr algebra) {
  Vector v = algebra->identity();
  return AlgElement(std::move(algebra), std::move(v));
}

namespace {
void require_same_algebra(const AlgElement& a, const AlgElement& b) {
  if (a.algebra() != b.algebra()) throw Error(ErrorCode::algebra_mismatch, "elements of different algebras");
}
}  // namespace

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b);
  return AlgElement(a.algebra(), a.algebra()->multiply(a.coeffs(), b.coeffs()));
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) { return multiply(a, b); }

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b);
  return AlgElement(a.algebra_, a.coeffs_ + b.coeffs_);
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b);
  return AlgElement(a.algebra_, a.coeffs_ - b.coeffs_);
}

AlgElement operator*(const Scalar& c, const AlgElement& a) { return AlgElement(a.algebra_, c * a.coeffs_); }

bool operator==(const AlgElement& a, const AlgElement& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

std::string AlgElement::to_string() const { return format_element(*algebra_, coeffs_); }

std::string format_element(const Algebra& alg, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!v[i].is_one()) os << v[i] << '*';
    os << alg.label(i);
  }
  if (first) os << '0';
  return os.str();
}

Subspace degree_component(const Algebra& alg, int i) {
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    if (alg.degree(k) == i) gens.push_back(alg.basis_vector(k));
  }
  return Subspace::span(alg.field(), alg.dim(), gens);
}

Subspace centralizer(const Algebra& alg, const Subspace& s) {
  const std::size_t n = alg.dim();
  if (s.ambient_dim() != n) throw Error(ErrorCode::dimension_mismatch, "subspace does not live in the algebra");
  std::vector<Vector> gens = s.basis_vectors();
  if (gens.empty()) return Subspace::full(alg.field(), n);
  // Column k of the system is x_k b - b x_k, stacked over generators b.
  Matrix system(alg.field(), n * gens.size(), n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector comm = alg.left_multiply(k, gens[g]) - alg.right_multiply(gens[g], k);
      for (std::size_t r = 0; r < n; ++r) system(g * n + r, k) = comm[r];
    }
  }
  return Subspace::span(alg.field(), n, nullspace(system));
}

Subspace center(const Algebra& alg) { return centralizer(alg, Subspace::full(alg.field(), alg.dim())); }

bool is_central(const Algebra& alg, const Vector& z) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!(alg.left_multiply(i, z) == alg.right_multiply(z, i))) return false;
  }
  return true;
}

}  // namespace gcell
