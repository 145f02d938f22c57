#include "gcell/path_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gcell/error.hpp"

namespace gcell {

namespace {

// A path: its start vertex plus arrow indices (empty for a vertex idempotent).
struct Path {
  std::size_t source = 0;
  std::vector<std::size_t> arrows;

  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

using Combination = std::map<Path, Scalar>;

struct Rule {
  std::vector<std::size_t> lead;
  // lead = sum of these (all smaller in path order)
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> tail;
};

class Rewriter {
 public:
  Rewriter(const QuiverPresentation& q, const Field& f) : q_(q), f_(f) {}

  void add_rule(Rule r) { rules_.push_back(std::move(r)); }
  const std::vector<Rule>& rules() const { return rules_; }

  bool truncated(const std::vector<std::size_t>& w) const { return q_.truncate_at && w.size() >= *q_.truncate_at; }

  // Position of the first rule lead occurring in w, as (rule, offset).
  std::optional<std::pair<std::size_t, std::size_t>> find_lead(const std::vector<std::size_t>& w) const {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const auto& lead = rules_[r].lead;
      if (lead.size() > w.size()) continue;
      auto it = std::search(w.begin(), w.end(), lead.begin(), lead.end());
      if (it != w.end()) return std::make_pair(r, static_cast<std::size_t>(it - w.begin()));
    }
    return std::nullopt;
  }

  bool irreducible(const std::vector<std::size_t>& w) const { return !truncated(w) && !find_lead(w); }

  Combination reduce(Combination c) const {
    // Rewriting strictly lowers the largest reducible term, so this terminates.
    while (true) {
      auto it = std::find_if(c.rbegin(), c.rend(), [&](const auto& kv) { return !irreducible(kv.first.arrows); });
      if (it == c.rend()) return c;
      Path p = it->first;
      Scalar coeff = it->second;
      c.erase(p);
      if (truncated(p.arrows)) continue;
      auto [r, pos] = *find_lead(p.arrows);
      const Rule& rule = rules_[r];
      for (const auto& [word, s] : rule.tail) {
        Path q{p.source, {}};
        q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.begin() + pos);
        q.arrows.insert(q.arrows.end(), word.begin(), word.end());
        q.arrows.insert(q.arrows.end(), p.arrows.begin() + pos + rule.lead.size(), p.arrows.end());
        if (q.arrows.empty()) q.source = p.source;
        auto [slot, inserted] = c.emplace(q, Scalar::zero(f_));
        slot->second += coeff * s;
        if (slot->second.is_zero()) c.erase(slot);
      }
    }
  }

 private:
  const QuiverPresentation& q_;
  Field f_;
  std::vector<Rule> rules_;
};

std::size_t target_of(const QuiverPresentation& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrows[p.arrows.back()].target;
}

void check_path(const QuiverPresentation& q, const std::vector<std::size_t>& w, const std::string& where) {
  if (w.empty()) throw Error(ErrorCode::validation_error, where + ": empty path in a relation");
  for (std::size_t a : w) {
    if (a >= q.arrows.size()) throw Error(ErrorCode::validation_error, where + ": arrow index out of range");
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (q.arrows[w[i]].target != q.arrows[w[i + 1]].source) {
      throw Error(ErrorCode::validation_error, where + ": arrows " + q.arrows[w[i]].label + " and " +
                                                   q.arrows[w[i + 1]].label + " do not compose");
    }
  }
}

int path_degree(const QuiverPresentation& q, const std::vector<std::size_t>& w) {
  int d = 0;
  for (std::size_t a : w) d += q.arrows[a].degree;
  return d;
}

Rule orient(const QuiverPresentation& q, const std::vector<PathTerm>& relation, const Field& f, std::size_t index) {
  const std::string where = "relation " + std::to_string(index);
  std::map<std::vector<std::size_t>, Scalar, bool (*)(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>
      terms([](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
  for (const auto& t : relation) {
    check_path(q, t.arrows, where);
    auto [slot, inserted] = terms.emplace(t.arrows, Scalar::zero(f));
    slot->second += Scalar::parse(f, t.coeff);
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms.empty()) throw Error(ErrorCode::validation_error, where + " is zero");
  const auto& first = terms.begin()->first;
  for (const auto& [w, c] : terms) {
    if (path_degree(q, w) != path_degree(q, first)) {
      throw Error(ErrorCode::inhomogeneous_relation,
                  where + ": paths " + path_label(q, 0, first) + " and " + path_label(q, 0, w) + " differ in degree");
    }
    if (q.arrows[w.front()].source != q.arrows[first.front()].source ||
        q.arrows[w.back()].target != q.arrows[first.back()].target) {
      throw Error(ErrorCode::validation_error, where + ": paths are not parallel");
    }
  }
  auto lead = std::prev(terms.end());
  Rule rule{lead->first, {}};
  Scalar scale = -lead->second.inverse();
  for (auto it = terms.begin(); it != lead; ++it) rule.tail.emplace_back(it->first, scale * it->second);
  return rule;
}

Combination single(const Path& p, const Field& f) { return Combination{{p, Scalar::one(f)}}; }

// Every overlap or inclusion of two rule leads (and of a lead with the
// truncation length) must reduce to the same normal form both ways.
void check_confluence(const QuiverPresentation& q, const Rewriter& rw, const Field& f) {
  const auto& rules = rw.rules();
  auto apply_at = [&](const std::vector<std::size_t>& w, std::size_t r, std::size_t pos) {
    Combination c;
    const Rule& rule = rules[r];
    for (const auto& [word, s] : rule.tail) {
      std::vector<std::size_t> out(w.begin(), w.begin() + pos);
      out.insert(out.end(), word.begin(), word.end());
      out.insert(out.end(), w.begin() + pos + rule.lead.size(), w.end());
      auto [slot, inserted] = c.emplace(Path{q.arrows[w.front()].source, out}, Scalar::zero(f));
      slot->second += s;
    }
    std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
    return rw.reduce(std::move(c));
  };
  auto fail = [&](const std::vector<std::size_t>& w) {
    throw Error(ErrorCode::non_confluent, "the overlap " + path_label(q, 0, w) + " has two normal forms");
  };
  for (std::size_t a = 0; a < rules.size(); ++a) {
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const auto& la = rules[a].lead;
      const auto& lb = rules[b].lead;
      // inclusion: lb inside la
      if (a != b && lb.size() <= la.size()) {
        for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
          if (std::equal(lb.begin(), lb.end(), la.begin() + pos) && !(apply_at(la, a, 0) == apply_at(la, b, pos))) {
            fail(la);
          }
        }
      }
      // proper overlap: a suffix of la equals a prefix of lb
      for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
        if (!std::equal(la.end() - k, la.end(), lb.begin())) continue;
        std::vector<std::size_t> w(la.begin(), la.end());
        w.insert(w.end(), lb.begin() + k, lb.end());
        if (!(apply_at(w, a, 0) == apply_at(w, b, la.size() - k))) fail(w);
      }
    }
    // truncation: a rewrite inside a vanishing path must give zero
    if (q.truncate_at) {
      for (const auto& [word, s] : rules[a].tail) {
        if (word.size() != rules[a].lead.size()) {
          throw Error(ErrorCode::non_confluent,
                      "relation with lead " + path_label(q, 0, rules[a].lead) + " mixes path lengths under truncation");
        }
      }
    }
  }
}

}  // namespace

std::string path_label(const QuiverPresentation& q, std::size_t vertex, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) {
    return vertex < q.vertex_labels.size() ? q.vertex_labels[vertex] : "e" + std::to_string(vertex + 1);
  }
  std::string out;
  for (std::size_t a : arrows) out += q.arrows.at(a).label;
  return out;
}

AlgebraPtr build_path_algebra(const QuiverPresentation& q, const Field& field, std::size_t max_dim) {
  if (q.vertices == 0) throw Error(ErrorCode::validation_error, "a quiver needs at least one vertex");
  for (const auto& a : q.arrows) {
    if (a.source >= q.vertices || a.target >= q.vertices) {
      throw Error(ErrorCode::validation_error, "arrow " + a.label + " has an endpoint out of range");
    }
  }
  if (!q.vertex_labels.empty() && q.vertex_labels.size() != q.vertices) {
    throw Error(ErrorCode::validation_error, "vertex label count differs from vertex count");
  }
  std::vector<std::size_t> star = q.arrow_involution;
  if (star.empty()) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) star.push_back(a);
  }
  if (star.size() != q.arrows.size()) throw Error(ErrorCode::validation_error, "arrow involution has the wrong length");
  for (std::size_t s : star) {
    if (s >= q.arrows.size()) throw Error(ErrorCode::validation_error, "arrow involution index out of range");
  }

  Rewriter rw(q, field);
  for (std::size_t r = 0; r < q.relations.size(); ++r) rw.add_rule(orient(q, q.relations[r], field, r));
  check_confluence(q, rw, field);

  // Irreducible paths by breadth-first extension; a reducible path has only
  // reducible extensions, so pruning is safe.
  std::vector<Path> basis;
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertices; ++v) frontier.push_back({v, {}});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      basis.push_back(p);
      if (basis.size() > max_dim) {
        throw Error(ErrorCode::infinite_dimensional,
                    "more than " + std::to_string(max_dim) + " irreducible paths; the quotient looks infinite");
      }
      std::size_t end = target_of(q, p);
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != end) continue;
        Path ext{p.source, p.arrows};
        ext.arrows.push_back(a);
        if (rw.irreducible(ext.arrows)) next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  const std::size_t n = basis.size();
  std::map<Path, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(basis[i], i);
  auto coords = [&](const Combination& c) {
    Vector v = zero_vector(field, n);
    for (const auto& [p, s] : c) v[position.at(p)] += s;
    return v;
  };

  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (const auto& p : basis) {
    labels.push_back(path_label(q, p.source, p.arrows));
    degrees.push_back(path_degree(q, p.arrows));
  }

  std::vector<ProductEntry> mult;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (target_of(q, basis[i]) != basis[j].source) continue;
      Path p{basis[i].source, basis[i].arrows};
      p.arrows.insert(p.arrows.end(), basis[j].arrows.begin(), basis[j].arrows.end());
      Vector v = coords(rw.reduce(single(p, field)));
      for (std::size_t k = 0; k < n; ++k) {
        if (!v[k].is_zero()) mult.push_back({i, j, k, v[k]});
      }
    }
  }

  Matrix involution(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Path& p = basis[j];
    Path s{p.arrows.empty() ? p.source : q.arrows[star[p.arrows.back()]].source, {}};
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s.arrows.push_back(star[*it]);
    for (std::size_t i = 0; i + 1 < s.arrows.size(); ++i) {
      if (q.arrows[s.arrows[i]].target != q.arrows[s.arrows[i + 1]].source) {
        throw Error(ErrorCode::bad_involution, "the image of " + labels[j] + " under * is not a path");
      }
    }
    Vector v = coords(rw.reduce(single(s, field)));
    for (std::size_t i = 0; i < n; ++i) involution(i, j) = v[i];
  }
  return Algebra::make(field, std::move(labels), mult, std::move(degrees), std::move(involution));
}

}  // namespace gcell
