#include "gcell/builders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcell/error.hpp"

namespace gcell {

const CellDatum& Instance::require_cells() const {
  if (!cells) throw Error(ErrorCode::missing_data, name + " has no cell datum");
  return *cells;
}

const TraceForm& Instance::require_trace() const {
  if (!trace) throw Error(ErrorCode::missing_data, name + " has no trace");
  return *trace;
}

Instance build_dual_numbers(const Field& field) {
  auto one = Scalar::one(field);
  std::vector<ProductEntry> mult = {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}};
  auto alg = Algebra::make(field, {"1", "x"}, mult, {0, 2}, Matrix::identity(field, 2));
  auto cd = CellDatum::make(alg, {"l1", "l2"}, {{0, 1}}, {{{"1", 1}}, {{"1", 0}}}, {{0, 0, 0, 1}, {1, 0, 0, 0}});
  TraceForm tau(alg, {Scalar::zero(field), one});
  return {"dual-numbers", alg, std::move(cd), std::move(tau)};
}

namespace {

std::string arrow(std::size_t i) { return "a" + std::to_string(i); }
std::string coarrow(std::size_t i) { return "a" + std::to_string(i) + "'"; }

}  // namespace

QuiverPresentation zigzag_quiver(std::size_t n) {
  QuiverPresentation q;
  q.vertices = n;
  // a_i' first so that a_{i+1} a_{i+1}' is the larger side of each
  // commutativity relation and rewrites to a_i' a_i.
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back({i, i - 1, coarrow(i), 1});
  for (std::size_t i = 1; i < n; ++i) q.arrows.push_back({i - 1, i, arrow(i), 1});
  auto co = [&](std::size_t i) { return i - 1; };
  auto ar = [&](std::size_t i) { return n - 2 + i; };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    q.relations.push_back({{"1", {co(i), ar(i)}}, {"-1", {ar(i + 1), co(i + 1)}}});
    q.relations.push_back({{"1", {ar(i), ar(i + 1)}}});
    q.relations.push_back({{"1", {co(i + 1), co(i)}}});
  }
  q.truncate_at = 3;
  for (std::size_t i = 1; i < n; ++i) q.arrow_involution.push_back(ar(i));
  for (std::size_t i = 1; i < n; ++i) q.arrow_involution.push_back(co(i));
  return q;
}

Instance build_zigzag(const Field& field, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::validation_error, "the zigzag algebra needs n >= 2");
  if (field.characteristic() != 0 && (n + 1) % field.characteristic() == 0) {
    throw Error(ErrorCode::bad_characteristic, "characteristic " + std::to_string(field.characteristic()) +
                                                   " divides n + 1 = " + std::to_string(n + 1));
  }
  AlgebraPtr raw = build_path_algebra(zigzag_quiver(n), field);

  // The loop at vertex k+1 (1 <= k <= n-2) is stored as a_k' a_k; the cell
  // datum names it a_{k+1} a_{k+1}'.
  std::vector<std::string> labels = raw->labels();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    auto it = std::find(labels.begin(), labels.end(), coarrow(k) + arrow(k));
    *it = arrow(k + 1) + coarrow(k + 1);
  }
  auto alg = Algebra::make(field, labels, raw->product_entries(), raw->degrees(), raw->involution());
  if (alg->dim() != 4 * n - 2) {
    throw Error(ErrorCode::validation_error, "zigzag quotient has dimension " + std::to_string(alg->dim()));
  }
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < labels.size(); ++i) at[labels[i]] = i;

  std::vector<std::string> lambdas;
  std::vector<std::vector<Tableau>> tableaux;
  std::vector<CellDatum::MapEntry> map;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  lambdas.push_back("l1");
  tableaux.push_back({{"1", 0}});
  map.push_back({0, 0, 0, at.at("e1")});
  for (std::size_t k = 1; k < n; ++k) {
    lambdas.push_back("l" + std::to_string(k + 1));
    tableaux.push_back({{"1", 1}, {"2", 0}});
    map.push_back({k, 0, 0, at.at(arrow(k) + coarrow(k))});
    map.push_back({k, 0, 1, at.at(arrow(k))});
    map.push_back({k, 1, 0, at.at(coarrow(k))});
    map.push_back({k, 1, 1, at.at("e" + std::to_string(k + 1))});
  }
  lambdas.push_back("l" + std::to_string(n + 1));
  tableaux.push_back({{"1", 1}});
  map.push_back({n, 0, 0, at.at(coarrow(n - 1) + arrow(n - 1))});
  for (std::size_t k = 0; k < n; ++k) less.emplace_back(k + 1, k);

  Vector values = zero_vector(field, alg->dim());
  for (std::size_t k = 1; k < n; ++k) values[at.at(arrow(k) + coarrow(k))] = Scalar::one(field);
  values[at.at(coarrow(n - 1) + arrow(n - 1))] = Scalar::one(field);

  auto cd = CellDatum::make(alg, lambdas, less, tableaux, map);
  return {"zigzag-n" + std::to_string(n), alg, std::move(cd), TraceForm(alg, std::move(values))};
}

MatrixCellSpec MatrixCellSpec::canonical(std::size_t n) {
  MatrixCellSpec s;
  s.n = n;
  s.sigma1.resize(n);
  std::iota(s.sigma1.begin(), s.sigma1.end(), 0);
  for (std::size_t i = 0; i < n; ++i) s.sigma2.push_back(n - 1 - i);
  const int m = static_cast<int>(n);
  for (int i = 1; i <= m; ++i) {
    if (2 * i == m + 1) {
      s.deg.push_back(0);
    } else {
      s.deg.push_back(2 * i <= m ? i : i - m - 1);
    }
  }
  return s;
}

namespace {

std::vector<std::size_t> inverse_permutation(const std::vector<std::size_t>& p, const char* what) {
  std::vector<std::size_t> inv(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= p.size() || inv[p[i]] != p.size()) {
      throw Error(ErrorCode::validation_error, std::string(what) + " is not a permutation");
    }
    inv[p[i]] = i;
  }
  return inv;
}

}  // namespace

std::vector<std::size_t> MatrixCellSpec::sigma() const {
  auto inv2 = inverse_permutation(sigma2, "sigma2");
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = sigma1.at(inv2[i]);
  return s;
}

bool MatrixCellSpec::satisfies_criterion() const {
  auto s = sigma();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[s[i]] != i || deg[i] != -deg[s[i]]) return false;
  }
  return true;
}

Instance build_matrix_algebra(const Field& field, const MatrixCellSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw Error(ErrorCode::validation_error, "M_0 is not allowed");
  if (spec.sigma1.size() != n || spec.sigma2.size() != n || spec.deg.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "matrix cell spec lists must have length n");
  }
  auto inv1 = inverse_permutation(spec.sigma1, "sigma1");
  auto inv2 = inverse_permutation(spec.sigma2, "sigma2");

  // Basis position r*n + c holds the matrix unit e_{rc}; C_{a,b} = e_{inv1[a], inv2[b]}.
  auto unit = [n](std::size_t r, std::size_t c) { return r * n + c; };
  auto sep = n >= 10 ? "," : "";
  std::vector<std::string> labels;
  std::vector<int> degrees(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) labels.push_back("e" + std::to_string(r + 1) + sep + std::to_string(c + 1));
  }
  std::vector<CellDatum::MapEntry> map;
  Matrix star(field, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t idx = unit(inv1[a], inv2[b]);
      degrees[idx] = spec.deg[a] + spec.deg[b];
      map.push_back({0, a, b, idx});
      star(unit(inv1[b], inv2[a]), idx) = Scalar::one(field);
    }
  }
  std::vector<ProductEntry> mult;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t d = 0; d < n; ++d) mult.push_back({unit(r, c), unit(c, d), unit(r, d), Scalar::one(field)});
    }
  }
  auto alg = Algebra::make(field, labels, mult, degrees, std::move(star), {.grading = false, .involution = false});

  std::vector<Tableau> members;
  for (std::size_t i = 0; i < n; ++i) members.push_back({std::to_string(i + 1), spec.deg[i]});
  auto cd = CellDatum::make(alg, {"M"}, {}, {members}, map);

  Vector values = zero_vector(field, n * n);
  for (std::size_t r = 0; r < n; ++r) values[unit(r, r)] = Scalar::one(field);

  const auto canon = MatrixCellSpec::canonical(n);
  if (spec.sigma1 == canon.sigma1 && spec.sigma2 == canon.sigma2 && spec.deg == canon.deg) {
    for (std::size_t i = 0; i < n * n; ++i) {
      Scalar expected = degrees[i] == 0 ? Scalar::one(field) : Scalar::zero(field);
      if (!(values[i] == expected)) {
        throw Error(ErrorCode::validation_error, "canonical trace differs from the matrix trace at " + labels[i]);
      }
    }
  }
  return {"matrix-n" + std::to_string(n), alg, std::move(cd), TraceForm(alg, std::move(values))};
}

Instance build_direct_sum(const std::vector<Instance>& parts) {
  if (parts.empty()) throw Error(ErrorCode::validation_error, "a direct sum needs at least one part");
  const Field field = parts.front().algebra->field();
  std::optional<int> d;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (!(parts[p].algebra->field() == field)) {
      throw Error(ErrorCode::mixed_fields, parts[p].name + " is over " + parts[p].algebra->field().name() +
                                               ", expected " + field.name());
    }
    int dp = trace_degree(parts[p].require_trace());
    if (d && *d != dp) {
      throw Error(ErrorCode::mixed_trace_degrees, parts[p].name + " has trace degree " + std::to_string(dp) +
                                                      ", expected " + std::to_string(*d));
    }
    d = dp;
  }
  if (parts.size() == 1) return parts.front();

  std::size_t total = 0;
  for (const auto& p : parts) total += p.algebra->dim();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::vector<ProductEntry> mult;
  Matrix star(field, total, total);
  Vector values;
  std::vector<std::string> lambdas;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  std::vector<std::vector<Tableau>> tableaux;
  std::vector<CellDatum::MapEntry> map;
  std::string name = "sum(";
  std::size_t offset = 0;
  std::size_t cell_offset = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Algebra& a = *parts[p].algebra;
    const CellDatum& cd = parts[p].require_cells();
    const std::string prefix = "p" + std::to_string(p + 1) + ".";
    name += (p ? "," : "") + parts[p].name;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      labels.push_back(prefix + a.label(i));
      degrees.push_back(a.degree(i));
      values.push_back(parts[p].trace->values()[i]);
      for (std::size_t j = 0; j < a.dim(); ++j) star(offset + j, offset + i) = a.involution()(j, i);
    }
    for (const auto& e : a.product_entries()) mult.push_back({offset + e.i, offset + e.j, offset + e.k, e.coeff});
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      lambdas.push_back(prefix + cd.name(l));
      tableaux.push_back(cd.members(l));
    }
    for (const auto& [lo, hi] : cd.less_pairs()) less.emplace_back(cell_offset + lo, cell_offset + hi);
    for (const auto& e : cd.map_entries()) map.push_back({cell_offset + e.lambda, e.s, e.t, offset + e.basis});
    offset += a.dim();
    cell_offset += cd.cell_count();
  }
  auto alg = Algebra::make(field, labels, mult, degrees, std::move(star));
  auto cd = CellDatum::make(alg, lambdas, less, tableaux, map);
  return {name + ")", alg, std::move(cd), TraceForm(alg, std::move(values))};
}

}  // namespace gcell
