// gcell: command-line front end for graded cellular algebra computations.
//
// Exit status: 0 success, 1 a checked claim failed, 2 input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcell/dual.hpp"
#include "gcell/error.hpp"
#include "gcell/ideals.hpp"
#include "gcell/io.hpp"
#include "gcell/verifier.hpp"

using namespace gcell;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kInputError = 2;

Instance load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::validation_error, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_document(text);
}

int emit_report(const Report& r, bool as_json) {
  std::cout << (as_json ? r.to_json() : r.to_text());
  return r.all_passed() ? kOk : kClaimFailed;
}

json strings(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(strings(m.row(i)));
  return rows;
}

json subspace_json(const Algebra& alg, const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(format_element(alg, v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

std::string subspace_text(const Algebra& alg, const Subspace& s) {
  std::string out = "dim " + std::to_string(s.dim());
  for (const auto& v : s.basis_vectors()) out += "\n    " + format_element(alg, v);
  return out;
}

DualBasis dual_of(const Instance& inst) {
  auto check = is_symmetrizing(inst.require_trace());
  if (!check.symmetric) throw Error(ErrorCode::validation_error, "the trace is not symmetric");
  return DualBasis(inst.require_trace(), inst.require_cells());
}

Report check_report(const Instance& inst) {
  const Algebra& alg = *inst.algebra;
  Report r;
  r.instance = inst.name;
  r.add("associative", "structure constants are associative with identity", true,
        "identity = " + format_element(alg, alg.identity()));
  auto g = alg.grading_violation();
  r.add("graded", "A_i A_j <= A_{i+j}", !g, g.value_or(""));
  auto v = alg.involution_violation();
  r.add("involution", "* is a degree-preserving involutive anti-automorphism", !v, v.value_or(""));
  if (inst.cells) {
    for (auto& e : validate_cell_datum(*inst.cells).entries) r.entries.push_back(std::move(e));
  } else {
    r.skip("cell-datum", "cell datum axioms", "no cell datum in the document");
  }
  if (inst.trace) {
    auto s = is_symmetrizing(*inst.trace);
    r.add("symmetrizing", "tau is symmetric and non-degenerate", s.ok(),
          "symmetric: " + std::string(s.symmetric ? "yes" : "no") +
              ", non-degenerate: " + std::string(s.nondegenerate ? "yes" : "no"));
    auto d = inst.trace->degree();
    r.add("homogeneous", "tau is homogeneous", d.has_value(), d ? "d = " + std::to_string(*d) : "");
  } else {
    r.skip("symmetrizing", "tau is symmetric and non-degenerate", "no trace in the document");
  }
  return r;
}

int cmd_dual(const Instance& inst, bool as_json) {
  DualBasis db = dual_of(inst);
  const Algebra& alg = *inst.algebra;
  const CellDatum& cd = inst.require_cells();
  json rows = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const CellLabel& l = cd.label(i);
    CellLabel swapped{l.lambda, l.t, l.s};
    std::string y = format_element(alg, db.dual(i));
    rows.push_back({{"basis", alg.label(i)},
                    {"cell", cd.format(l)},
                    {"dual", y},
                    {"dual_cell", cd.format(swapped, "D")},
                    {"coordinates", strings(db.dual(i))}});
    os << cd.format(l) << " = " << alg.label(i) << "    " << cd.format(swapped, "D") << " = " << y << '\n';
  }
  if (as_json) {
    std::cout << json{{"instance", inst.name}, {"dual", rows}}.dump(2) << '\n';
  } else {
    std::cout << os.str();
  }
  return kOk;
}

int cmd_gram(const Instance& inst, bool as_json, bool k_only) {
  DualBasis db = dual_of(inst);
  const CellDatum& cd = inst.require_cells();
  CellularFamily dual = db.dual_family();
  KLambdaTable k = k_lambda(db);
  json cells = json::array();
  std::ostringstream os;
  for (std::size_t l = 0; l < cd.cell_count(); ++l) {
    Matrix g = gram(cd, l);
    Matrix gp = gram_of_family(dual, l);
    json entry = {{"lambda", cd.name(l)}, {"k", k.k[l].to_string()}, {"projective", k.projective(l)}};
    if (!k_only) {
      entry["G"] = matrix_json(g);
      entry["G_dual"] = matrix_json(gp);
      entry["det_G"] = determinant(g).to_string();
    }
    cells.push_back(entry);
    os << cd.name(l) << ": k = " << k.k[l] << (k.projective(l) ? " (projective)" : " (not projective)");
    if (!k_only) os << "\n  G  = " << g.to_string() << "\n  G' = " << gp.to_string() << "\n  det G = " << determinant(g);
    os << '\n';
  }
  if (as_json) {
    std::cout << json{{"instance", inst.name}, {"cells", cells}}.dump(2) << '\n';
  } else {
    std::cout << os.str();
  }
  return kOk;
}

int cmd_higman(const Instance& inst, bool as_json) {
  DualBasis db = dual_of(inst);
  const Algebra& alg = *inst.algebra;
  Subspace h = higman(db);
  json out = {{"instance", inst.name}, {"H", subspace_json(alg, h)}};
  std::ostringstream os;
  os << "H(A): " << subspace_text(alg, h) << '\n';
  if (db.trace().degree()) {
    GradedHigman g = higman_graded(db);
    json comps = json::object();
    for (const auto& [c, s] : g.components) {
      comps[std::to_string(c)] = subspace_json(alg, s);
      os << "H_" << c << "(A): " << subspace_text(alg, s) << '\n';
    }
    out["H_c"] = comps;
    out["H_gr"] = subspace_json(alg, g.span);
    os << "H_gr(A): " << subspace_text(alg, g.span) << '\n';
  } else {
    os << "H_c(A): trace is not homogeneous\n";
  }
  if (as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << os.str();
  }
  return kOk;
}

int cmd_ideals(const Instance& inst, bool as_json) {
  DualBasis db = dual_of(inst);
  Report r = ideal_report(*inst.algebra, ideal_family(db), trace_degree(db.trace()));
  r.instance = inst.name;
  return emit_report(r, as_json);
}

int cmd_semisimple(const Instance& inst, bool as_json) {
  DualBasis db = dual_of(inst);
  try {
    SemisimpleVerdict v = semisimple_verdict(db);
    v.report.instance = inst.name;
    std::size_t n = v.report.find("L-graded-equals-centralizer")->verdict == Verdict::skipped ? 3 : 4;
    if (as_json) {
      std::cout << v.report.to_json();
    } else {
      std::cout << "semisimple: " << (v.semisimple ? "yes" : "no") << " (" << n << "/" << n << " criteria agree)\n"
                << v.report.to_text();
    }
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::inconsistent_verdicts) throw;
    std::cerr << e.what() << '\n';
    return kClaimFailed;
  }
}

int cmd_verify(const Instance& inst, bool as_json, const std::string& claim) {
  if (claim.empty()) return emit_report(verify_all(inst), as_json);
  Report r;
  r.instance = inst.name;
  r.entries.push_back(verify_claim(inst, claim));
  return emit_report(r, as_json);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(part, &pos);
      if (pos != part.size() || v < 1) throw std::invalid_argument(part);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::validation_error, "--sizes expects positive integers, got '" + part + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::validation_error, "--sizes is empty");
  return out;
}

int cmd_example(const std::string& name, std::size_t n, const std::string& field_text, const std::string& sizes,
                const std::string& output) {
  Field field = Field::parse(field_text);
  Instance inst;
  if (name == "e31" || name == "dual-numbers") {
    inst = build_dual_numbers(field);
  } else if (name == "e36" || name == "zigzag") {
    inst = build_zigzag(field, n);
  } else if (name == "matn") {
    inst = build_matrix_algebra(field, MatrixCellSpec::canonical(n));
  } else if (name == "sum") {
    std::vector<Instance> parts;
    for (std::size_t m : parse_sizes(sizes)) parts.push_back(build_matrix_algebra(field, MatrixCellSpec::canonical(m)));
    inst = build_direct_sum(parts);
  } else {
    throw Error(ErrorCode::validation_error, "unknown example '" + name + "'");
  }
  std::string doc = serialize_document(inst);
  if (output.empty() || output == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(output);
    if (!(out << doc)) throw Error(ErrorCode::validation_error, "cannot write " + output);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded cellular algebras: dual bases, Gram matrices, Higman ideals and semisimplicity"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string path;
  std::string claim;
  std::string name;
  std::size_t n = 3;
  std::string field = "q";
  std::string sizes = "3,2";
  std::string output;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub document_commands[] = {
      {"check", "validate the algebra, cell datum and trace"},
      {"dual", "print the dual basis"},
      {"gram", "print G(lambda), G'(lambda), det G(lambda) and k_lambda"},
      {"klambda", "print k_lambda and projectivity of each cell module"},
      {"higman", "print H(A), H_c(A) and H_gr(A)"},
      {"ideals", "check the containments among H, L, H_gr, L_gr, Z(A) and Z_A(A_0)"},
      {"semisimple", "evaluate and compare the semisimplicity criteria"},
      {"verify", "evaluate every registered claim"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& s : document_commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("document", path, "presentation document ('-' for stdin)")->required();
    sub->add_flag("--json", as_json, "machine-readable output");
    subs[s.name] = sub;
  }
  subs["verify"]->add_option("--claim", claim, "evaluate a single claim");

  CLI::App* example = app.add_subcommand("example", "write a built-in example as a presentation document");
  example->add_option("--name", name, "e31 | e36 | matn | sum")
      ->required()
      ->check(CLI::IsMember({"e31", "e36", "matn", "sum", "dual-numbers", "zigzag"}));
  example->add_option("--n", n, "size parameter for e36 and matn")->capture_default_str();
  example->add_option("--field", field, "q or f<p>")->capture_default_str();
  example->add_option("--sizes", sizes, "comma-separated block sizes for sum")->capture_default_str();
  example->add_option("-o,--output", output, "output file (default stdout)");
  example->add_flag("--json", as_json, "accepted for uniformity; the output is always JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (example->parsed()) return cmd_example(name, n, field, sizes, output);
    Instance inst = load(path);
    if (subs["check"]->parsed()) return emit_report(check_report(inst), as_json);
    if (subs["dual"]->parsed()) return cmd_dual(inst, as_json);
    if (subs["gram"]->parsed()) return cmd_gram(inst, as_json, false);
    if (subs["klambda"]->parsed()) return cmd_gram(inst, as_json, true);
    if (subs["higman"]->parsed()) return cmd_higman(inst, as_json);
    if (subs["ideals"]->parsed()) return cmd_ideals(inst, as_json);
    if (subs["semisimple"]->parsed()) return cmd_semisimple(inst, as_json);
    if (subs["verify"]->parsed()) return cmd_verify(inst, as_json, claim);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
