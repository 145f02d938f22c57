#include "gcell/trace.hpp"

#include "gcell/error.hpp"

namespace gcell {

TraceForm::TraceForm(AlgebraPtr algebra, Vector values) : algebra_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != algebra_->dim()) throw Error(ErrorCode::dimension_mismatch, "trace needs one value per basis element");
  for (const auto& v : values_) {
    if (!(v.field() == algebra_->field())) throw Error(ErrorCode::field_mismatch, "trace value over another field");
  }
}

Scalar TraceForm::operator()(const Vector& v) const {
  Scalar s = Scalar::zero(algebra_->field());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero() && !values_[i].is_zero()) s += v[i] * values_[i];
  }
  return s;
}

std::optional<int> TraceForm::degree() const {
  std::optional<int> support;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    if (support && *support != algebra_->degree(i)) return std::nullopt;
    support = algebra_->degree(i);
  }
  if (!support) return std::nullopt;
  return -*support;
}

Matrix TraceForm::gram() const {
  const Algebra& alg = *algebra_;
  Matrix t(alg.field(), alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      for (const auto& term : alg.product_terms(i, j)) t(i, j) += term.coeff * values_[term.k];
    }
  }
  return t;
}

int trace_degree(const TraceForm& t) {
  if (is_zero(t.values())) throw Error(ErrorCode::zero_trace, "the trace vanishes identically");
  auto d = t.degree();
  if (!d) throw Error(ErrorCode::not_homogeneous, "the trace is nonzero on two distinct degree components");
  return *d;
}

SymmetrizingCheck is_symmetrizing(const TraceForm& t) {
  SymmetrizingCheck out;
  Matrix g = t.gram();
  for (std::size_t i = 0; i < g.rows() && out.symmetric; ++i) {
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      if (!(g(i, j) == g(j, i))) {
        out.symmetric = false;
        out.asymmetric_pair = {i, j};
        break;
      }
    }
  }
  out.nondegenerate = rank(g) == g.rows();
  return out;
}

TraceForm twist_trace(const TraceForm& t, const AlgElement& z) {
  const Algebra& alg = *t.algebra();
  if (z.algebra() != t.algebra()) throw Error(ErrorCode::algebra_mismatch, "twisting element from another algebra");
  if (!is_central(alg, z.coeffs())) throw Error(ErrorCode::not_central, z.to_string() + " is not central");
  Vector values = zero_vector(alg.field(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) values[i] = t(alg.right_multiply(z.coeffs(), i));
  TraceForm twisted(t.algebra(), std::move(values));
  if (!is_symmetrizing(twisted).nondegenerate) {
    throw Error(ErrorCode::degenerate, "twist by " + z.to_string() + " is degenerate");
  }
  return twisted;
}

}  // namespace gcell
