#include "gcell/cellular.hpp"

#include <sstream>

#include "gcell/error.hpp"

namespace gcell {

CellDatum CellDatum::make(AlgebraPtr algebra, std::vector<std::string> lambdas,
                          std::vector<std::pair<std::size_t, std::size_t>> less,
                          std::vector<std::vector<Tableau>> tableaux, const std::vector<MapEntry>& map) {
  const std::size_t cells = lambdas.size();
  if (tableaux.size() != cells) throw Error(ErrorCode::validation_error, "one tableaux list is needed per cell label");
  CellDatum cd;
  cd.algebra_ = std::move(algebra);
  cd.lambdas_ = std::move(lambdas);
  cd.tableaux_ = std::move(tableaux);

  cd.closure_.assign(cells * cells, false);
  for (const auto& [a, b] : less) {
    if (a >= cells || b >= cells) throw Error(ErrorCode::validation_error, "poset pair index out of range");
    cd.closure_[a * cells + b] = true;
  }
  cd.less_pairs_ = std::move(less);
  for (std::size_t k = 0; k < cells; ++k) {
    for (std::size_t i = 0; i < cells; ++i) {
      if (!cd.closure_[i * cells + k]) continue;
      for (std::size_t j = 0; j < cells; ++j) {
        if (cd.closure_[k * cells + j]) cd.closure_[i * cells + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < cells; ++i) {
    if (cd.closure_[i * cells + i]) {
      throw Error(ErrorCode::validation_error, "poset relation has a cycle through " + cd.lambdas_[i]);
    }
  }

  std::size_t total = 0;
  for (const auto& members : cd.tableaux_) {
    if (members.empty()) throw Error(ErrorCode::validation_error, "empty tableaux set");
    cd.offsets_.push_back(total);
    total += members.size() * members.size();
  }
  const std::size_t n = cd.algebra_->dim();
  if (total != n) {
    throw Error(ErrorCode::validation_error, "GC1: cells account for " + std::to_string(total) +
                                                 " basis elements, algebra has " + std::to_string(n));
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  cd.index_.assign(n, unset);
  cd.labels_.assign(n, CellLabel{unset, 0, 0});
  for (const auto& e : map) {
    if (e.lambda >= cells || e.s >= cd.size(e.lambda) || e.t >= cd.size(e.lambda) || e.basis >= n) {
      throw Error(ErrorCode::validation_error, "cell map entry index out of range");
    }
    std::size_t slot = cd.offsets_[e.lambda] + e.s * cd.size(e.lambda) + e.t;
    if (cd.index_[slot] != unset || cd.labels_[e.basis].lambda != unset) {
      throw Error(ErrorCode::validation_error, "GC1: cell map is not a bijection (basis index " +
                                                   std::to_string(e.basis) + ")");
    }
    cd.index_[slot] = e.basis;
    cd.labels_[e.basis] = CellLabel{e.lambda, e.s, e.t};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cd.index_[i] == unset) throw Error(ErrorCode::validation_error, "GC1: cell map does not cover every label");
  }
  return cd;
}

std::size_t CellDatum::index(std::size_t lambda, std::size_t s, std::size_t t) const {
  return index_[offsets_.at(lambda) + s * size(lambda) + t];
}

std::vector<CellDatum::MapEntry> CellDatum::map_entries() const {
  std::vector<MapEntry> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back({labels_[i].lambda, labels_[i].s, labels_[i].t, i});
  return out;
}

std::string CellDatum::format(const CellLabel& l, const std::string& symbol) const {
  return symbol + "^" + name(l.lambda) + "_{" + members(l.lambda)[l.s].name + "," + members(l.lambda)[l.t].name + "}";
}

CellularFamily CellularFamily::standard(const CellDatum& cd) {
  const Algebra& alg = *cd.algebra();
  std::vector<Vector> elements;
  for (std::size_t i = 0; i < alg.dim(); ++i) elements.push_back(alg.basis_vector(i));
  std::vector<std::vector<int>> degrees;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    std::vector<int> d;
    for (const auto& m : cd.members(l)) d.push_back(m.degree);
    degrees.push_back(std::move(d));
  }
  CellularFamily f(cd, std::move(elements), false, std::move(degrees), "C");
  return f;
}

CellularFamily::CellularFamily(const CellDatum& cd, std::vector<Vector> elements, bool reversed_order,
                               std::optional<std::vector<std::vector<int>>> member_degrees, std::string symbol)
    : datum_(cd),
      elements_(std::move(elements)),
      reversed_(reversed_order),
      degrees_(std::move(member_degrees)),
      symbol_(std::move(symbol)) {
  const Algebra& alg = *cd.algebra();
  if (elements_.size() != alg.dim()) throw Error(ErrorCode::dimension_mismatch, "family size differs from dimension");
  Matrix columns = Matrix::from_columns(alg.field(), alg.dim(), elements_);
  standard_ = columns.is_identity();
  if (!standard_) inverse_ = invert(columns);
}

Vector CellularFamily::coordinates(const Vector& v) const {
  if (standard_) return v;
  if (!inverse_) throw Error(ErrorCode::validation_error, "family is not a basis");
  return *inverse_ * v;
}

namespace {

std::string family_name(const CellularFamily& f, const CellLabel& l) { return f.datum().format(l, f.symbol()); }

std::optional<std::string> check_gc2(const CellularFamily& f) {
  const CellDatum& cd = f.datum();
  const Algebra& alg = *cd.algebra();
  if (auto v = alg.involution_violation()) return *v;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    for (std::size_t s = 0; s < cd.size(l); ++s) {
      for (std::size_t t = 0; t < cd.size(l); ++t) {
        if (!(alg.apply_involution(f.element(l, s, t)) == f.element(l, t, s))) {
          return "(" + family_name(f, {l, s, t}) + ")* != " + family_name(f, {l, t, s});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_gc3(const CellularFamily& f) {
  const CellDatum& cd = f.datum();
  const Algebra& alg = *cd.algebra();
  const Field& field = alg.field();
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      const std::size_t m = cd.size(l);
      for (std::size_t s = 0; s < m; ++s) {
        std::optional<Vector> reference;  // r_a(S', S) read from the first column T
        for (std::size_t t = 0; t < m; ++t) {
          Vector coords = f.coordinates(alg.left_multiply(a, f.element(l, s, t)));
          Vector r = zero_vector(field, m);
          for (std::size_t q = 0; q < coords.size(); ++q) {
            if (coords[q].is_zero()) continue;
            const CellLabel& lab = cd.label(q);
            if (f.below(lab.lambda, l)) continue;
            if (lab.lambda == l && lab.t == t) {
              r[lab.s] = coords[q];
              continue;
            }
            return alg.label(a) + " * " + family_name(f, {l, s, t}) + " has coefficient " + coords[q].to_string() +
                   " on " + family_name(f, lab) + " outside the allowed span";
          }
          if (!reference) {
            reference = r;
          } else if (!(*reference == r)) {
            return "coefficients r_" + alg.label(a) + "(S', " + cd.members(l)[s].name + ") in cell " + cd.name(l) +
                   " depend on T: " + to_string(*reference) + " vs " + to_string(r) + " at T = " + cd.members(l)[t].name;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_gcd(const CellularFamily& f) {
  const CellDatum& cd = f.datum();
  const Algebra& alg = *cd.algebra();
  if (auto v = alg.grading_violation()) return "algebra is not graded: " + *v;
  if (!f.member_degrees()) return std::string("no integer degree function exists for the family members");
  const auto& deg = *f.member_degrees();
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    for (std::size_t s = 0; s < cd.size(l); ++s) {
      for (std::size_t t = 0; t < cd.size(l); ++t) {
        const Vector& e = f.element(l, s, t);
        auto d = alg.homogeneous_degree(e);
        int expected = deg[l][s] + deg[l][t];
        if (!d) return family_name(f, {l, s, t}) + " is not homogeneous";
        if (*d != expected) {
          return family_name(f, {l, s, t}) + " has degree " + std::to_string(*d) + ", expected " +
                 std::to_string(expected);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Report validate_family(const CellularFamily& f) {
  const std::string sym = f.symbol();
  Report r;
  r.add("GC1", sym + "-family is a basis indexed bijectively by (lambda, S, T)", f.is_basis(),
        f.is_basis() ? "" : "family elements are linearly dependent");
  if (!f.is_basis()) {
    r.skip("GC2", "* is an anti-automorphism with (" + sym + "_{S,T})* = " + sym + "_{T,S}", "GC1 failed");
    r.skip("GC3", "left multiplication is triangular with coefficients independent of T", "GC1 failed");
    r.skip("GC_d", "deg " + sym + "_{S,T} = deg(S) + deg(T) in a graded algebra", "GC1 failed");
    return r;
  }
  auto gc2 = check_gc2(f);
  r.add("GC2", "* is an anti-automorphism with (" + sym + "_{S,T})* = " + sym + "_{T,S}", !gc2, gc2.value_or(""));
  auto gc3 = check_gc3(f);
  r.add("GC3", "left multiplication is triangular with coefficients independent of T", !gc3, gc3.value_or(""));
  auto gcd = check_gcd(f);
  r.add("GC_d", "deg " + sym + "_{S,T} = deg(S) + deg(T) in a graded algebra", !gcd, gcd.value_or(""));
  return r;
}

Report validate_cell_datum(const CellDatum& cd) { return validate_family(CellularFamily::standard(cd)); }

Scalar CellularExpansion::coefficient(const CellLabel& l, const Field& f) const {
  for (const auto& [lab, c] : terms) {
    if (lab == l) return c;
  }
  return Scalar::zero(f);
}

CellularExpansion expand(const CellDatum& cd, const CellLabel& a, const CellLabel& b) {
  const Algebra& alg = *cd.algebra();
  CellularExpansion out;
  for (const auto& t : alg.product_terms(cd.index(a), cd.index(b))) out.terms.emplace_back(cd.label(t.k), t.coeff);
  return out;
}

Matrix gram_of_family(const CellularFamily& f, std::size_t lambda) {
  const CellDatum& cd = f.datum();
  const Algebra& alg = *cd.algebra();
  const std::size_t m = cd.size(lambda);
  Matrix g(alg.field(), m, m);
  std::vector<bool> seen(m * m, false);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
          Vector coords = f.coordinates(alg.multiply(f.element(lambda, s, t), f.element(lambda, u, v)));
          Scalar phi = Scalar::zero(alg.field());
          for (std::size_t q = 0; q < coords.size(); ++q) {
            if (coords[q].is_zero()) continue;
            const CellLabel& lab = cd.label(q);
            if (f.below(lab.lambda, lambda)) continue;
            if (lab == CellLabel{lambda, s, v}) {
              phi = coords[q];
              continue;
            }
            throw Error(ErrorCode::inconsistent_phi,
                        family_name(f, {lambda, s, t}) + " * " + family_name(f, {lambda, u, v}) +
                            " has a surviving term on " + family_name(f, lab));
          }
          if (!seen[t * m + u]) {
            g(t, u) = phi;
            seen[t * m + u] = true;
          } else if (!(g(t, u) == phi)) {
            throw Error(ErrorCode::inconsistent_phi, "Phi(" + cd.members(lambda)[t].name + "," +
                                                         cd.members(lambda)[u].name + ") depends on the outer indices");
          }
        }
      }
    }
  }
  return g;
}

Matrix gram(const CellDatum& cd, std::size_t lambda) { return gram_of_family(CellularFamily::standard(cd), lambda); }

Matrix CellModule::act(const Vector& a) const {
  const std::size_t m = basis.size();
  Matrix out(action.front().field(), m, m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) out = out + a[i] * action[i];
  }
  return out;
}

CellModule cell_module(const CellDatum& cd, std::size_t lambda) {
  const Algebra& alg = *cd.algebra();
  const std::size_t m = cd.size(lambda);
  CellModule mod;
  mod.lambda = lambda;
  for (const auto& member : cd.members(lambda)) mod.basis.push_back("C_" + member.name);
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    Matrix act(alg.field(), m, m);
    for (std::size_t s = 0; s < m; ++s) {
      for (const auto& t : alg.product_terms(a, cd.index(lambda, s, 0))) {
        const CellLabel& lab = cd.label(t.k);
        if (lab.lambda == lambda && lab.t == 0) act(lab.s, s) = t.coeff;
      }
    }
    mod.action.push_back(std::move(act));
  }
  return mod;
}

}  // namespace gcell
