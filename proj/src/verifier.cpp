#include "gcell/verifier.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "gcell/dual.hpp"
#include "gcell/error.hpp"
#include "gcell/ideals.hpp"

namespace gcell {

namespace {

struct Skip {
  std::string reason;
};

const std::string kBounded = "bounded verification: ";

// Lazily computed data shared by the claims of one run.
class Context {
 public:
  explicit Context(const Instance& inst) : inst_(inst) {}

  const Instance& instance() const { return inst_; }
  const Algebra& algebra() const { return *inst_.algebra; }

  const CellDatum& cells() {
    if (!inst_.cells) throw Skip{"instance has no cell datum"};
    return *inst_.cells;
  }

  const Report& validation() {
    if (!validation_) validation_ = validate_cell_datum(cells());
    return *validation_;
  }

  const CellDatum& valid_cells() {
    const CellDatum& cd = cells();
    if (!validation().all_passed()) throw Skip{"hypothesis not met: the cell datum is not graded cellular"};
    return cd;
  }

  const TraceForm& trace() {
    if (!inst_.trace) throw Skip{"instance has no trace"};
    return *inst_.trace;
  }

  bool symmetrizing() { return is_symmetrizing(trace()).ok(); }

  const DualBasis& dual() {
    if (!db_) {
      const CellDatum& cd = valid_cells();
      if (!symmetrizing()) throw Skip{"hypothesis not met: the trace is not symmetrizing"};
      db_.emplace(trace(), cd);
    }
    return *db_;
  }

  int degree() {
    dual();
    auto d = trace().degree();
    if (!d) throw Skip{"hypothesis not met: the trace is not homogeneous"};
    return *d;
  }

  int nonzero_degree() {
    int d = degree();
    if (d == 0) throw Skip{"hypothesis d != 0 not met (d = 0)"};
    return d;
  }

  const IdealFamily& ideals() {
    degree();
    if (!ideals_) ideals_ = ideal_family(dual());
    return *ideals_;
  }

  const KLambdaTable& k() {
    if (!k_) k_ = k_lambda(dual());
    return *k_;
  }

  const SemisimpleVerdict& verdict() {
    if (!verdict_) verdict_ = semisimple_verdict(dual());
    return *verdict_;
  }

  bool semisimple() { return verdict().semisimple; }

 private:
  const Instance& inst_;
  std::optional<Report> validation_;
  std::optional<DualBasis> db_;
  std::optional<IdealFamily> ideals_;
  std::optional<KLambdaTable> k_;
  std::optional<SemisimpleVerdict> verdict_;
};

// Outcome of one claim body: pass/fail plus witness.
struct Outcome {
  bool passed = true;
  std::string witness;
};

struct Claim {
  std::string id;
  std::string statement;
  std::function<Outcome(Context&)> body;
};

// Collects the first counterexample of an exhaustive check.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++count_;
    if (!ok && !failure_) failure_ = describe();
  }
  Outcome outcome(const std::string& what) const {
    if (failure_) return {false, *failure_};
    return {true, std::to_string(count_) + " " + what + " checked"};
  }

 private:
  std::size_t count_ = 0;
  std::optional<std::string> failure_;
};

std::string describe(const Algebra& alg, const Vector& v) { return format_element(alg, v); }

Outcome containment(const Algebra& alg, const Subspace& big, const Subspace& small, const std::string& small_name,
                    const std::string& big_name) {
  if (auto v = containment_witness(big, small)) {
    return {false, describe(alg, *v) + " lies in " + small_name + " but not in " + big_name};
  }
  std::string w = small_name + " (dim " + std::to_string(small.dim()) + ") in " + big_name + " (dim " +
                  std::to_string(big.dim()) + ")";
  for (const auto& v : small.basis_vectors()) w += "\n" + describe(alg, v) + " -> " + to_string(*big.coordinates(v));
  return {true, w};
}

bool nilpotent(const Algebra& alg, const Vector& v) {
  Vector p = v;
  for (std::size_t i = 0; i < alg.dim() && !is_zero(p); ++i) p = alg.multiply(p, v);
  return is_zero(p);
}

// A central twist of tau that is not a scalar multiple of tau. Candidates
// are 1 + b for central nilpotent b first, then b and 1 + b for the other
// central basis vectors b.
std::optional<std::pair<std::string, TraceForm>> alternative_trace(Context& ctx, bool homogeneous) {
  const Algebra& alg = ctx.algebra();
  AlgebraPtr ptr = ctx.instance().algebra;
  const Vector& tau = ctx.trace().values();
  std::vector<Vector> candidates;
  std::vector<Vector> rest;
  for (const auto& b : center(alg).basis_vectors()) {
    if (nilpotent(alg, b)) {
      candidates.push_back(alg.identity() + b);
    } else {
      rest.push_back(b);
      rest.push_back(alg.identity() + b);
    }
  }
  candidates.insert(candidates.end(), rest.begin(), rest.end());
  Matrix base = Matrix::from_rows(alg.field(), alg.dim(), {tau});
  for (const auto& c : candidates) {
    try {
      TraceForm t = twist_trace(ctx.trace(), AlgElement(ptr, c));
      if (rank(Matrix::from_rows(alg.field(), alg.dim(), {tau, t.values()})) == rank(base)) continue;
      if (homogeneous && !t.degree()) continue;
      return std::make_pair(describe(alg, c), std::move(t));
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::pair<std::string, TraceForm> alt_or_skip(Context& ctx, bool homogeneous) {
  auto alt = alternative_trace(ctx, homogeneous);
  if (!alt) {
    throw Skip{homogeneous ? "no homogeneous central twist of tau is a new trace" : "every central twist of tau is a scalar multiple of tau"};
  }
  return std::move(*alt);
}

struct MatrixCell {
  std::vector<std::size_t> sigma;
};

// A single cell whose elements multiply as matrix units up to a permutation:
// C_{S,T} C_{U,V} = delta_{U, sigma(T)} C_{S,V}.
std::optional<MatrixCell> matrix_unit_cell(const CellDatum& cd) {
  const Algebra& alg = *cd.algebra();
  if (cd.cell_count() != 1) return std::nullopt;
  const std::size_t m = cd.size(0);
  MatrixCell out;
  for (std::size_t t = 0; t < m; ++t) {
    std::optional<std::size_t> hit;
    for (std::size_t u = 0; u < m; ++u) {
      if (!alg.product_terms(cd.index(0, 0, t), cd.index(0, u, 0)).empty()) {
        if (hit) return std::nullopt;
        hit = u;
      }
    }
    if (!hit) return std::nullopt;
    out.sigma.push_back(*hit);
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
          Vector p = alg.left_multiply(cd.index(0, s, t), alg.basis_vector(cd.index(0, u, v)));
          Vector expected = u == out.sigma[t] ? alg.basis_vector(cd.index(0, s, v)) : alg.zero();
          if (!(p == expected)) return std::nullopt;
        }
      }
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  auto add = [&](std::string id, std::string statement, std::function<Outcome(Context&)> body) {
    r.push_back({std::move(id), std::move(statement), std::move(body)});
  };

  add("cell-datum-valid", "the cell datum satisfies (GC1)-(GC3) and (GC_d)", [](Context& c) {
    const Report& v = c.validation();
    std::string w;
    for (const auto& e : v.entries) {
      w += (w.empty() ? "" : "\n") + e.claim + ": " + verdict_name(e.verdict) + (e.witness.empty() ? "" : " (" + e.witness + ")");
    }
    return Outcome{v.all_passed() && v.count(Verdict::skipped) == 0, w};
  });

  add("trace-symmetrizing", "tau(ab) = tau(ba) and the form tau(xy) is non-degenerate", [](Context& c) {
    auto s = is_symmetrizing(c.trace());
    std::string w = "symmetric: " + yes_no(s.symmetric) + ", non-degenerate: " + yes_no(s.nondegenerate);
    if (s.asymmetric_pair) {
      w += "; tau(" + c.algebra().label(s.asymmetric_pair->first) + " " + c.algebra().label(s.asymmetric_pair->second) +
           ") != tau(" + c.algebra().label(s.asymmetric_pair->second) + " " +
           c.algebra().label(s.asymmetric_pair->first) + ")";
    }
    return Outcome{s.ok(), w};
  });

  add("trace-homogeneous", "tau vanishes off a single component A_{-d}", [](Context& c) {
    auto d = c.trace().degree();
    return Outcome{d.has_value(), d ? "d = " + std::to_string(*d) : "tau is zero or inhomogeneous"};
  });

  add("dual-basis-pairing", "tau(x_i y_j) = delta_ij", [](Context& c) {
    const DualBasis& db = c.dual();
    const Algebra& alg = c.algebra();
    Tally t;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      for (std::size_t j = 0; j < alg.dim(); ++j) {
        Scalar v = db.trace()(alg.left_multiply(i, db.dual(j)));
        Scalar expected = i == j ? Scalar::one(alg.field()) : Scalar::zero(alg.field());
        t.check(v == expected, [&] { return "tau(" + alg.label(i) + " y_" + std::to_string(j + 1) + ") = " + v.to_string(); });
      }
    }
    return t.outcome("pairs");
  });

  add("dual-mult-rules", "x_i y_j = sum_k r_kij y_k and y_i x_j = sum_k r_jki y_k", [](Context& c) {
    const DualBasis& db = c.dual();
    const Algebra& alg = c.algebra();
    const std::size_t n = alg.dim();
    Tally t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector left = alg.zero();
        Vector right = alg.zero();
        for (std::size_t k = 0; k < n; ++k) {
          axpy(left, alg.structure_constant(k, i, j), db.dual(k));
          axpy(right, alg.structure_constant(j, k, i), db.dual(k));
        }
        t.check(alg.left_multiply(i, db.dual(j)) == left,
                [&] { return "x_i y_j rule fails at (i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")"; });
        t.check(alg.right_multiply(db.dual(i), j) == right,
                [&] { return "y_i x_j rule fails at (i, j) = (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")"; });
      }
    }
    return t.outcome("identities");
  });

  // Expansion identities for D C and C D in terms of the D-basis.
  add("dual-expansion-DC", "D^mu_{U,V} C^lambda_{S,T} = sum r_{(S,T,lambda),(Y,X,eps),(V,U,mu)} D^eps_{X,Y}",
      [](Context& c) {
        const DualBasis& db = c.dual();
        const CellDatum& cd = c.valid_cells();
        const Algebra& alg = c.algebra();
        Tally t;
        for (std::size_t a = 0; a < alg.dim(); ++a) {
          for (std::size_t b = 0; b < alg.dim(); ++b) {
            const CellLabel& lb = cd.label(b);  // (mu, U, V)
            Vector lhs = alg.multiply(db.cell_dual(lb), alg.basis_vector(a));
            Vector rhs = alg.zero();
            std::size_t vu = cd.index(lb.lambda, lb.t, lb.s);
            for (std::size_t k = 0; k < alg.dim(); ++k) {
              const CellLabel& lk = cd.label(k);  // (eps, Y, X)
              axpy(rhs, alg.structure_constant(a, k, vu), db.cell_dual(lk.lambda, lk.t, lk.s));
            }
            t.check(lhs == rhs, [&] { return "fails for " + cd.format(lb, "D") + " " + cd.format(cd.label(a)); });
          }
        }
        return t.outcome("products");
      });

  add("dual-expansion-CD", "C^lambda_{S,T} D^mu_{U,V} = sum r_{(Y,X,eps),(S,T,lambda),(V,U,mu)} D^eps_{X,Y}",
      [](Context& c) {
        const DualBasis& db = c.dual();
        const CellDatum& cd = c.valid_cells();
        const Algebra& alg = c.algebra();
        Tally t;
        for (std::size_t a = 0; a < alg.dim(); ++a) {
          for (std::size_t b = 0; b < alg.dim(); ++b) {
            const CellLabel& lb = cd.label(b);
            Vector lhs = alg.left_multiply(a, db.cell_dual(lb));
            Vector rhs = alg.zero();
            std::size_t vu = cd.index(lb.lambda, lb.t, lb.s);
            for (std::size_t k = 0; k < alg.dim(); ++k) {
              const CellLabel& lk = cd.label(k);
              axpy(rhs, alg.structure_constant(k, a, vu), db.cell_dual(lk.lambda, lk.t, lk.s));
            }
            t.check(lhs == rhs, [&] { return "fails for " + cd.format(cd.label(a)) + " " + cd.format(lb, "D"); });
          }
        }
        return t.outcome("products");
      });

  add("dual-middle-CD", "C^lambda_{S,T} D^lambda_{T,Q} = C^lambda_{S,P} D^lambda_{P,Q}", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    const Algebra& alg = c.algebra();
    Tally t;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      const std::size_t m = cd.size(l);
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t q = 0; q < m; ++q) {
          Vector ref = alg.left_multiply(cd.index(l, s, 0), db.cell_dual(l, 0, q));
          for (std::size_t p = 1; p < m; ++p) {
            Vector v = alg.left_multiply(cd.index(l, s, p), db.cell_dual(l, p, q));
            t.check(v == ref, [&] { return "cell " + cd.name(l) + ": value depends on the middle index"; });
          }
        }
      }
    }
    return t.outcome("tuples");
  });

  add("dual-middle-DC", "D^lambda_{T,S} C^lambda_{S,Q} = D^lambda_{T,P} C^lambda_{P,Q}", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    const Algebra& alg = c.algebra();
    Tally t;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      const std::size_t m = cd.size(l);
      for (std::size_t tt = 0; tt < m; ++tt) {
        for (std::size_t q = 0; q < m; ++q) {
          Vector ref = alg.right_multiply(db.cell_dual(l, tt, 0), cd.index(l, 0, q));
          for (std::size_t p = 1; p < m; ++p) {
            Vector v = alg.right_multiply(db.cell_dual(l, tt, p), cd.index(l, p, q));
            t.check(v == ref, [&] { return "cell " + cd.name(l) + ": value depends on the middle index"; });
          }
        }
      }
    }
    return t.outcome("tuples");
  });

  add("dual-orthogonal-CD", "C^lambda_{S,T} D^lambda_{P,Q} = 0 if T != P", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    const Algebra& alg = c.algebra();
    Tally t;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      const std::size_t m = cd.size(l);
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t tt = 0; tt < m; ++tt)
          for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
              if (tt == p) continue;
              t.check(is_zero(alg.left_multiply(cd.index(l, s, tt), db.cell_dual(l, p, q))), [&] {
                return cd.format({l, s, tt}) + " " + cd.format({l, p, q}, "D") + " != 0";
              });
            }
    }
    return t.outcome("tuples");
  });

  add("dual-orthogonal-DC", "D^lambda_{P,Q} C^lambda_{S,T} = 0 if Q != S", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    const Algebra& alg = c.algebra();
    Tally t;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      const std::size_t m = cd.size(l);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t s = 0; s < m; ++s)
            for (std::size_t tt = 0; tt < m; ++tt) {
              if (q == s) continue;
              t.check(is_zero(alg.right_multiply(db.cell_dual(l, p, q), cd.index(l, s, tt))), [&] {
                return cd.format({l, p, q}, "D") + " " + cd.format({l, s, tt}) + " != 0";
              });
            }
    }
    return t.outcome("tuples");
  });

  auto order_claim = [](bool cd_order) {
    return [cd_order](Context& c) {
      const DualBasis& db = c.dual();
      const CellDatum& cd = c.valid_cells();
      const Algebra& alg = c.algebra();
      Tally t;
      for (std::size_t a = 0; a < alg.dim(); ++a) {
        const CellLabel& la = cd.label(a);  // C^lambda_{S,T}
        for (std::size_t b = 0; b < alg.dim(); ++b) {
          const CellLabel& lb = cd.label(b);  // D^mu_{U,V}
          if (lb.lambda == la.lambda || cd.less(lb.lambda, la.lambda)) continue;
          Vector p = cd_order ? alg.left_multiply(a, db.cell_dual(lb)) : alg.right_multiply(db.cell_dual(lb), a);
          t.check(is_zero(p), [&] {
            return cd_order ? cd.format(la) + " " + cd.format(lb, "D") + " != 0"
                            : cd.format(lb, "D") + " " + cd.format(la) + " != 0";
          });
        }
      }
      return t.outcome("pairs with mu not <= lambda");
    };
  };
  add("dual-order-CD", "C^lambda_{S,T} D^mu_{U,V} = 0 if mu is not <= lambda", order_claim(true));
  add("dual-order-DC", "D^mu_{U,V} C^lambda_{S,T} = 0 if mu is not <= lambda", order_claim(false));

  add("dual-degree-sum", "every y_i is homogeneous with deg(x_i) + deg(y_i) = -d", [](Context& c) {
    int d = c.degree();
    const DualBasis& db = c.dual();
    const Algebra& alg = c.algebra();
    Outcome o;
    o.witness = "d = " + std::to_string(d);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      auto dy = alg.homogeneous_degree(db.dual(i));
      std::string entry = alg.label(i) + ": (" + std::to_string(alg.degree(i)) + ", " +
                          (dy ? std::to_string(*dy) : std::string("inhomogeneous")) + ")";
      o.witness += "\n" + entry;
      if (!dy || alg.degree(i) + *dy != -d) o.passed = false;
    }
    return o;
  });

  add("dual-graded-cellular",
      "the dual basis is graded cellular if and only if d is even and tau(a*) = tau(a) for all a", [](Context& c) {
        c.degree();
        DualCellularCheck chk = check_dual_cellular(c.dual());
        Outcome o{chk.criterion == chk.direct, {}};
        for (const auto& e : chk.report.entries) {
          if (e.claim == "dual-agreement") o.witness = e.witness;
        }
        return o;
      });

  add("gram-dual-product", "G(lambda) G'(lambda) = k_lambda E", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    CellularFamily dual = db.dual_family();
    Outcome o;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      Matrix g = gram(cd, l);
      Matrix gp = gram_of_family(dual, l);
      Scalar k = Scalar::zero(c.algebra().field());
      bool scalar = (g * gp).is_scalar_multiple_of_identity(&k);
      o.passed = o.passed && scalar;
      o.witness += (l ? "\n" : "") + cd.name(l) + ": G = " + g.to_string() + ", G' = " + gp.to_string() +
                   (scalar ? ", k = " + k.to_string() : ", product not scalar");
    }
    return o;
  });

  add("cell-idempotent-scaling", "(C_{S,S} D_{S,S})^2 = k_lambda C_{S,S} D_{S,S}", [](Context& c) {
    const DualBasis& db = c.dual();
    const CellDatum& cd = c.valid_cells();
    const Algebra& alg = c.algebra();
    CellularFamily dual = db.dual_family();
    Tally t;
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      Scalar k = Scalar::zero(alg.field());
      if (!(gram(cd, l) * gram_of_family(dual, l)).is_scalar_multiple_of_identity(&k)) {
        throw Skip{"G(" + cd.name(l) + ") G'(" + cd.name(l) + ") is not scalar"};
      }
      for (std::size_t s = 0; s < cd.size(l); ++s) {
        Vector e = diagonal_product(db, l, s);
        t.check(alg.multiply(e, e) == k * e, [&] { return "fails in cell " + cd.name(l) + " at S = " + cd.members(l)[s].name; });
      }
    }
    return t.outcome("diagonal products");
  });

  add("trace-degree-unique", "every homogeneous symmetrizing trace has degree d", [](Context& c) {
    int d = c.nonzero_degree();
    const Algebra& alg = c.algebra();
    AlgebraPtr ptr = c.instance().algebra;
    std::vector<std::pair<std::string, TraceForm>> candidates;
    candidates.emplace_back("tau", c.trace());
    for (long s : {2L, -1L, 3L}) {
      Scalar k = Scalar::from_int(alg.field(), s);
      if (k.is_zero()) continue;
      candidates.emplace_back(std::to_string(s) + " tau", TraceForm(ptr, k * c.trace().values()));
    }
    for (const auto& b : center(alg).basis_vectors()) {
      for (const Vector& z : {b, alg.identity() + b}) {
        try {
          candidates.emplace_back("tau_(" + describe(alg, z) + ")", twist_trace(c.trace(), AlgElement(ptr, z)));
        } catch (const Error&) {
        }
      }
    }
    Outcome o;
    std::size_t homogeneous = 0;
    for (const auto& [name, t] : candidates) {
      if (!is_symmetrizing(t).ok()) continue;
      auto dt = t.degree();
      if (!dt) continue;
      ++homogeneous;
      if (*dt != d && o.passed) {
        o.passed = false;
        o.witness = name + " is homogeneous symmetrizing of degree " + std::to_string(*dt);
      }
    }
    if (o.passed) {
      o.witness = kBounded + std::to_string(candidates.size()) + " candidates, " + std::to_string(homogeneous) +
                  " homogeneous symmetrizing, all of degree " + std::to_string(d);
    }
    return o;
  });

  add("cells-non-projective", "d != 0 implies k_lambda = 0 for every lambda", [](Context& c) {
    c.nonzero_degree();
    const KLambdaTable& k = c.k();
    const CellDatum& cd = c.valid_cells();
    Outcome o;
    for (std::size_t l = 0; l < k.k.size(); ++l) {
      if (!k.k[l].is_zero()) o.passed = false;
      o.witness += (l ? ", " : "") + std::string("k_") + cd.name(l) + " = " + k.k[l].to_string();
    }
    return o;
  });

  add("L-in-trace-component", "d != 0 implies H(A) <= L(A) <= A_{-d}", [](Context& c) {
    int d = c.nonzero_degree();
    const IdealFamily& f = c.ideals();
    const Algebra& alg = c.algebra();
    Outcome a = containment(alg, f.l, f.higman, "H(A)", "L(A)");
    Outcome b = containment(alg, degree_component(alg, -d), f.l, "L(A)", "A_" + std::to_string(-d));
    return Outcome{a.passed && b.passed, a.witness + "\n" + b.witness};
  });

  add("higman-dim-bound", "d != 0 implies dim H(A) <= dim A_0", [](Context& c) {
    c.nonzero_degree();
    const IdealFamily& f = c.ideals();
    std::size_t a0 = degree_component(c.algebra(), 0).dim();
    return Outcome{f.higman.dim() <= a0,
                   "dim H(A) = " + std::to_string(f.higman.dim()) + ", dim A_0 = " + std::to_string(a0)};
  });

  add("higman-in-L", "H(A) <= L(A)", [](Context& c) {
    const DualBasis& db = c.dual();
    return containment(c.algebra(), l_ideals(db).l, higman(db), "H(A)", "L(A)");
  });

  add("higman-central", "H(A) <= Z(A)", [](Context& c) {
    const DualBasis& db = c.dual();
    return containment(c.algebra(), center(c.algebra()), higman(db), "H(A)", "Z(A)");
  });

  add("L-central", "L(A) <= Z(A)", [](Context& c) {
    const DualBasis& db = c.dual();
    return containment(c.algebra(), center(c.algebra()), l_ideals(db).l, "L(A)", "Z(A)");
  });

  add("higman-trace-independent", "H(A) is the same subspace for tau and a central twist of tau", [](Context& c) {
    const DualBasis& db = c.dual();
    auto alt = alt_or_skip(c, false);
    Subspace h1 = higman(db);
    Subspace h2 = higman(DualBasis(alt.second, c.valid_cells()));
    return Outcome{h1 == h2, "z = " + alt.first + "; dim H = " + std::to_string(h1.dim()) + " and " +
                                 std::to_string(h2.dim()) + (h1 == h2 ? ", equal" : ", different")};
  });

  add("L-graded-trace-independent", "L_gr(A) is the same subspace for tau and a central twist of tau", [](Context& c) {
    c.degree();
    auto alt = alt_or_skip(c, true);
    Subspace l1 = l_ideals(c.dual()).l_graded;
    Subspace l2 = l_ideals(DualBasis(alt.second, c.valid_cells())).l_graded;
    return Outcome{l1 == l2, "z = " + alt.first + "; dim L_gr = " + std::to_string(l1.dim()) + " and " +
                                 std::to_string(l2.dim()) + (l1 == l2 ? ", equal" : ", different")};
  });

  add("higman-graded-in-centralizer", "H_gr(A) <= Z_A(A_0)", [](Context& c) {
    const IdealFamily& f = c.ideals();
    return containment(c.algebra(), f.centralizer_a0, f.higman_graded, "H_gr(A)", "Z_A(A_0)");
  });

  add("graded-idempotent-products", "e_{lambda,c} e_{mu,c'} = delta_{lambda mu} delta_{c c'} k_lambda e_{lambda,c}",
      [](Context& c) {
        c.degree();
        const DualBasis& db = c.dual();
        const KLambdaTable& k = c.k();
        const Algebra& alg = c.algebra();
        const CellDatum& cd = c.valid_cells();
        auto e = e_lambda_graded(db);
        Tally t;
        for (const auto& [ka, ea] : e) {
          for (const auto& [kb, eb] : e) {
            Vector expected = ka == kb ? k.k[ka.first] * ea : alg.zero();
            t.check(alg.multiply(ea, eb) == expected, [&] {
              return "e_(" + cd.name(ka.first) + "," + std::to_string(ka.second) + ") e_(" + cd.name(kb.first) + "," +
                     std::to_string(kb.second) + ") is wrong";
            });
          }
        }
        return t.outcome("products");
      });

  add("L-graded-in-centralizer", "L_gr(A) <= Z_A(A_0)", [](Context& c) {
    const IdealFamily& f = c.ideals();
    return containment(c.algebra(), f.centralizer_a0, f.l_graded, "L_gr(A)", "Z_A(A_0)");
  });

  add("graded-L-strict", "d != 0 implies L_gr(A) is strictly smaller than Z_A(A_0)", [](Context& c) {
    c.nonzero_degree();
    const IdealFamily& f = c.ideals();
    bool strict = contains(f.centralizer_a0, f.l_graded) && f.l_graded.dim() < f.centralizer_a0.dim();
    return Outcome{strict, "dim L_gr(A) = " + std::to_string(f.l_graded.dim()) +
                               ", dim Z_A(A_0) = " + std::to_string(f.centralizer_a0.dim())};
  });

  add("higman-graded-in-L-graded", "H_gr(A) <= L_gr(A)", [](Context& c) {
    const IdealFamily& f = c.ideals();
    return containment(c.algebra(), f.l_graded, f.higman_graded, "H_gr(A)", "L_gr(A)");
  });

  add("graded-higman-chain", "H_gr(A) <= L_gr(A) <= Z_A(A_0)", [](Context& c) {
    const IdealFamily& f = c.ideals();
    Outcome a = containment(c.algebra(), f.l_graded, f.higman_graded, "H_gr(A)", "L_gr(A)");
    Outcome b = containment(c.algebra(), f.centralizer_a0, f.l_graded, "L_gr(A)", "Z_A(A_0)");
    return Outcome{a.passed && b.passed, a.witness + "\n" + b.witness};
  });

  add("matrix-cellular-criterion",
      "for M_n with C_{a,b} = e_{sigma1^-1(a), sigma2^-1(b)}: graded cellular iff sigma^2 = id and deg(i) = "
      "-deg(sigma(i))",
      [](Context& c) {
        const CellDatum& cd = c.cells();
        auto mc = matrix_unit_cell(cd);
        if (!mc) throw Skip{"hypothesis not met: not a single matrix-unit cell"};
        bool valid = c.validation().all_passed();
        bool criterion = true;
        for (std::size_t i = 0; i < mc->sigma.size(); ++i) {
          std::size_t s = mc->sigma[i];
          if (mc->sigma[s] != i || cd.degree(0, i) != -cd.degree(0, s)) criterion = false;
        }
        std::string perm;
        for (std::size_t s : mc->sigma) perm += (perm.empty() ? "" : " ") + std::to_string(s + 1);
        return Outcome{valid == criterion, "sigma = (" + perm + "); criterion " + (criterion ? "holds" : "fails") +
                                               ", validation " + (valid ? "passes" : "fails")};
      });

  add("matrix-fixed-point-degree", "for a graded cellular M_n, sigma(i) = i implies deg(i) = 0", [](Context& c) {
    const CellDatum& cd = c.valid_cells();
    auto mc = matrix_unit_cell(cd);
    if (!mc) throw Skip{"hypothesis not met: not a single matrix-unit cell"};
    Outcome o;
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < mc->sigma.size(); ++i) {
      if (mc->sigma[i] != i) continue;
      ++fixed;
      if (cd.degree(0, i) != 0) {
        o.passed = false;
        o.witness = "sigma fixes " + cd.members(0)[i].name + " of degree " + std::to_string(cd.degree(0, i));
      }
    }
    if (o.passed) o.witness = std::to_string(fixed) + " fixed points, all of degree 0";
    return o;
  });

  add("semisimple-nontrivial-grading",
      "a split semisimple algebra with a block of size > 1 has a graded symmetric cellular structure with a "
      "non-trivial grading",
      [](Context& c) {
        if (!c.semisimple()) throw Skip{"hypothesis not met: A is not semisimple"};
        const CellDatum& cd = c.valid_cells();
        std::vector<Instance> parts;
        bool big = false;
        for (std::size_t l = 0; l < cd.cell_count(); ++l) {
          big = big || cd.size(l) > 1;
          parts.push_back(build_matrix_algebra(c.algebra().field(), MatrixCellSpec::canonical(cd.size(l))));
        }
        Instance sum = build_direct_sum(parts);
        bool valid = validate_cell_datum(*sum.cells).all_passed() && is_symmetrizing(*sum.trace).ok() &&
                     sum.trace->degree() == 0;
        bool nontrivial = false;
        for (int deg : sum.algebra->degrees()) nontrivial = nontrivial || deg != 0;
        return Outcome{valid && nontrivial == big,
                       "model " + sum.name + ": graded symmetric cellular " + yes_no(valid) + ", non-trivial grading " +
                           yes_no(nontrivial)};
      });

  add("semisimple-trace-degree-zero", "A semisimple implies d = 0", [](Context& c) {
    int d = c.degree();
    if (!c.semisimple()) throw Skip{"hypothesis not met: A is not semisimple"};
    return Outcome{d == 0, "d = " + std::to_string(d)};
  });

  add("semisimple-L-gr-centralizer", "A semisimple implies L_gr(A) = Z_A(A_0)", [](Context& c) {
    c.degree();
    if (!c.semisimple()) throw Skip{"hypothesis not met: A is not semisimple"};
    const IdealFamily& f = c.ideals();
    return Outcome{f.l_graded == f.centralizer_a0, "dim L_gr(A) = " + std::to_string(f.l_graded.dim()) +
                                                       ", dim Z_A(A_0) = " + std::to_string(f.centralizer_a0.dim())};
  });

  add("L-gr-centralizer-implies-semisimple", "L_gr(A) = Z_A(A_0) implies A semisimple", [](Context& c) {
    const IdealFamily& f = c.ideals();
    if (!(f.l_graded == f.centralizer_a0)) throw Skip{"hypothesis not met: L_gr(A) != Z_A(A_0)"};
    return Outcome{c.semisimple(), "semisimple: " + yes_no(c.semisimple())};
  });

  add("semisimplicity-criterion",
      "semisimple iff all k_lambda != 0 iff {C_{S,T} D_{T,T}} is a basis iff L_gr(A) = Z_A(A_0)", [](Context& c) {
        try {
          const SemisimpleVerdict& v = c.verdict();
          std::size_t n = v.report.find("L-graded-equals-centralizer")->verdict == Verdict::skipped ? 3 : 4;
          return Outcome{true, "semisimple: " + yes_no(v.semisimple) + " (" + std::to_string(n) + "/" +
                                   std::to_string(n) + " criteria agree)"};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::inconsistent_verdicts) throw;
          return Outcome{false, e.what()};
        }
      });

  std::sort(r.begin(), r.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return r;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> r = build_registry();
  return r;
}

ReportEntry evaluate(const Claim& claim, Context& ctx) {
  ReportEntry e{claim.id, claim.statement, Verdict::pass, {}};
  try {
    Outcome o = claim.body(ctx);
    e.verdict = o.passed ? Verdict::pass : Verdict::fail;
    e.witness = std::move(o.witness);
  } catch (const Skip& s) {
    e.verdict = Verdict::skipped;
    e.witness = s.reason;
  } catch (const Error& err) {
    e.verdict = Verdict::fail;
    e.witness = err.what();
  }
  return e;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

Report verify_all(const Instance& instance) {
  Context ctx(instance);
  Report r;
  r.instance = instance.name;
  for (const auto& c : registry()) r.entries.push_back(evaluate(c, ctx));
  return r;
}

ReportEntry verify_claim(const Instance& instance, const std::string& claim_id) {
  for (const auto& c : registry()) {
    if (c.id == claim_id) {
      Context ctx(instance);
      return evaluate(c, ctx);
    }
  }
  throw Error(ErrorCode::unknown_claim, "no claim named '" + claim_id + "'");
}

}  // namespace gcell
