#include "gcell/io.hpp"

#include <json.hpp>

#include "gcell/error.hpp"

namespace gcell {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::validation_error, where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) invalid(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where, "missing key '" + key + "'");
  return *it;
}

const json& array_at(const json& v, const std::string& where) {
  if (!v.is_array()) invalid(where, "expected an array");
  return v;
}

std::size_t index_at(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) invalid(where, "expected a non-negative integer");
  auto i = v.get<unsigned long long>();
  if (i >= bound) invalid(where, "index out of range (" + std::to_string(i) + " >= " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(i);
}

int int_at(const json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid(where, "expected an integer");
  return v.get<int>();
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) invalid(where, "expected a string");
  return v.get<std::string>();
}

Scalar scalar_at(const Field& f, const json& v, const std::string& where) {
  std::string s = string_at(v, where);
  try {
    return Scalar::parse(f, s);
  } catch (const Error& e) {
    invalid(where, "'" + s + "' is not a scalar over " + f.name());
  }
}

Field parse_field(const json& v) {
  std::string kind = string_at(member(v, "kind", "field"), "field.kind");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    const json& p = member(v, "p", "field");
    if (!p.is_number_integer() || p.get<long long>() < 2) invalid("field.p", "expected an integer >= 2");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      invalid("field.p", e.what());
    }
  }
  invalid("field.kind", "expected 'rational' or 'prime'");
}

json field_json(const Field& f) {
  if (f.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", f.modulus()}};
}

std::string loc(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

Instance parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, e.what());
  }
  if (!doc.is_object()) invalid("document", "expected a JSON object");

  Field field = parse_field(member(doc, "field", "document"));

  std::vector<std::string> labels;
  const json& basis = array_at(member(doc, "basis", "document"), "basis");
  for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back(string_at(basis[i], loc("basis", i)));
  const std::size_t n = labels.size();
  if (n == 0) invalid("basis", "the basis is empty");

  std::vector<ProductEntry> mult;
  const json& m = array_at(member(doc, "mult", "document"), "mult");
  for (std::size_t r = 0; r < m.size(); ++r) {
    const std::string where = loc("mult", r);
    const json& e = array_at(m[r], where);
    if (e.size() != 4) invalid(where, "expected [i, j, k, coeff]");
    mult.push_back({index_at(e[0], n, where), index_at(e[1], n, where), index_at(e[2], n, where),
                    scalar_at(field, e[3], where)});
  }

  std::vector<int> degrees;
  const json& deg = array_at(member(doc, "degree", "document"), "degree");
  if (deg.size() != n) invalid("degree", "expected " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(int_at(deg[i], loc("degree", i)));

  Matrix star(field, n, n);
  const json& inv = member(doc, "involution", "document");
  if (inv.is_object() && inv.contains("permutation")) {
    const json& p = array_at(inv["permutation"], "involution.permutation");
    if (p.size() != n) invalid("involution.permutation", "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) star(index_at(p[j], n, loc("involution.permutation", j)), j) = Scalar::one(field);
  } else if (inv.is_object() && inv.contains("matrix")) {
    const json& t = array_at(inv["matrix"], "involution.matrix");
    for (std::size_t r = 0; r < t.size(); ++r) {
      const std::string where = loc("involution.matrix", r);
      const json& e = array_at(t[r], where);
      if (e.size() != 3) invalid(where, "expected [row, col, coeff]");
      star(index_at(e[0], n, where), index_at(e[1], n, where)) = scalar_at(field, e[2], where);
    }
  } else {
    invalid("involution", "expected {\"permutation\": [...]} or {\"matrix\": [...]}");
  }

  Instance out;
  out.name = doc.contains("name") ? string_at(doc["name"], "name") : "document";
  try {
    out.algebra = Algebra::make(field, labels, mult, degrees, std::move(star), {.grading = false, .involution = false});
  } catch (const Error& e) {
    if (e.code() == ErrorCode::validation_error) invalid("mult", e.what());
    throw;
  }

  if (doc.contains("trace")) {
    const json& t = array_at(doc["trace"], "trace");
    if (t.size() != n) invalid("trace", "expected " + std::to_string(n) + " entries");
    Vector values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(scalar_at(field, t[i], loc("trace", i)));
    out.trace.emplace(out.algebra, std::move(values));
  }

  if (doc.contains("cell")) {
    const json& c = doc["cell"];
    std::vector<std::string> lambdas;
    const json& ls = array_at(member(c, "lambdas", "cell"), "cell.lambdas");
    for (std::size_t i = 0; i < ls.size(); ++i) lambdas.push_back(string_at(ls[i], loc("cell.lambdas", i)));
    const std::size_t cells = lambdas.size();

    std::vector<std::pair<std::size_t, std::size_t>> less;
    const json& lp = array_at(member(c, "less", "cell"), "cell.less");
    for (std::size_t i = 0; i < lp.size(); ++i) {
      const std::string where = loc("cell.less", i);
      const json& e = array_at(lp[i], where);
      if (e.size() != 2) invalid(where, "expected [a, b]");
      less.emplace_back(index_at(e[0], cells, where), index_at(e[1], cells, where));
    }

    std::vector<std::vector<Tableau>> tableaux;
    const json& tb = array_at(member(c, "tableaux", "cell"), "cell.tableaux");
    if (tb.size() != cells) invalid("cell.tableaux", "expected one list per lambda");
    for (std::size_t l = 0; l < cells; ++l) {
      const std::string where = loc("cell.tableaux", l);
      std::vector<Tableau> row;
      const json& members = array_at(tb[l], where);
      for (std::size_t s = 0; s < members.size(); ++s) {
        const std::string w = loc(where, s);
        row.push_back({string_at(member(members[s], "name", w), w + ".name"), int_at(member(members[s], "deg", w), w + ".deg")});
      }
      tableaux.push_back(std::move(row));
    }

    std::vector<CellDatum::MapEntry> map;
    const json& mp = array_at(member(c, "map", "cell"), "cell.map");
    for (std::size_t i = 0; i < mp.size(); ++i) {
      const std::string where = loc("cell.map", i);
      const json& e = array_at(mp[i], where);
      if (e.size() != 4) invalid(where, "expected [lambda, S, T, basis]");
      std::size_t l = index_at(e[0], cells, where);
      map.push_back({l, index_at(e[1], tableaux[l].size(), where), index_at(e[2], tableaux[l].size(), where),
                     index_at(e[3], n, where)});
    }
    out.cells = CellDatum::make(out.algebra, lambdas, less, tableaux, map);
  }
  return out;
}

std::string serialize_document(const Instance& instance) {
  const Algebra& alg = *instance.algebra;
  const Field& f = alg.field();
  const std::size_t n = alg.dim();
  json doc;
  doc["name"] = instance.name;
  doc["field"] = field_json(f);
  doc["basis"] = alg.labels();
  doc["degree"] = alg.degrees();
  json mult = json::array();
  for (const auto& e : alg.product_entries()) mult.push_back({e.i, e.j, e.k, e.coeff.to_string()});
  doc["mult"] = std::move(mult);

  // A permutation matrix is written as the image list.
  bool permutation = true;
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n && permutation; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& s = alg.involution()(i, j);
      if (s.is_zero()) continue;
      if (!s.is_one()) permutation = false;
      image[j] = i;
      ++ones;
    }
    if (ones != 1) permutation = false;
  }
  if (permutation) {
    doc["involution"] = {{"permutation", image}};
  } else {
    json t = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!alg.involution()(i, j).is_zero()) t.push_back({i, j, alg.involution()(i, j).to_string()});
      }
    }
    doc["involution"] = {{"matrix", std::move(t)}};
  }

  if (instance.trace) {
    json t = json::array();
    for (const auto& s : instance.trace->values()) t.push_back(s.to_string());
    doc["trace"] = std::move(t);
  }
  if (instance.cells) {
    const CellDatum& cd = *instance.cells;
    json c;
    c["lambdas"] = cd.names();
    json less = json::array();
    for (const auto& [a, b] : cd.less_pairs()) less.push_back({a, b});
    c["less"] = std::move(less);
    json tableaux = json::array();
    for (std::size_t l = 0; l < cd.cell_count(); ++l) {
      json row = json::array();
      for (const auto& t : cd.members(l)) row.push_back({{"deg", t.degree}, {"name", t.name}});
      tableaux.push_back(std::move(row));
    }
    c["tableaux"] = std::move(tableaux);
    json map = json::array();
    for (const auto& e : cd.map_entries()) map.push_back({e.lambda, e.s, e.t, e.basis});
    c["map"] = std::move(map);
    doc["cell"] = std::move(c);
  }
  return doc.dump(2) + "\n";
}

}  // namespace gcell
