#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gcell/builders.hpp"
#include "gcell/error.hpp"
#include "gcell/io.hpp"
#include "gcell/verifier.hpp"

using namespace gcell;

namespace {

const Field Q = Field::rational();

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(GCELL_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("gcell-test-" + name);
  std::ofstream(path) << text;
  return path;
}

ErrorCode parse_code(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::missing_data;
}

std::string parse_message(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

const char* kDualNumbers = R"({
  "field": {"kind": "rational"},
  "basis": ["1", "x"],
  "mult": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]],
  "degree": [0, 2],
  "involution": {"permutation": [0, 1]},
  "trace": ["0", "1"]
})";

}  // namespace

TEST(Io, RoundTripPreservesReports) {
  std::vector<Instance> all = {build_dual_numbers(Q), build_zigzag(Q, 3),
                               build_matrix_algebra(Field::prime(7), MatrixCellSpec::canonical(3)),
                               build_direct_sum({build_matrix_algebra(Q, MatrixCellSpec::canonical(2)),
                                                 build_matrix_algebra(Q, MatrixCellSpec::canonical(1))})};
  for (const auto& inst : all) {
    std::string text = serialize_document(inst);
    Instance back = parse_document(text);
    EXPECT_EQ(serialize_document(back), text);
    EXPECT_EQ(back.algebra->labels(), inst.algebra->labels());
    EXPECT_EQ(verify_all(back).to_json(), verify_all(inst).to_json()) << inst.name;
  }
}

TEST(Io, MinimalDocument) {
  Instance inst = parse_document(kDualNumbers);
  EXPECT_EQ(inst.algebra->dim(), 2u);
  EXPECT_FALSE(inst.cells.has_value());
  EXPECT_EQ(inst.trace->degree(), -2);
}

TEST(Io, Errors) {
  EXPECT_EQ(parse_code("{"), ErrorCode::syntax_error);
  EXPECT_EQ(parse_code("[]"), ErrorCode::validation_error);
  std::string bad_index = kDualNumbers;
  bad_index.replace(bad_index.find("[1, 0, 1, \"1\"]"), 14, "[1, 0, 5, \"1\"]");
  EXPECT_EQ(parse_code(bad_index), ErrorCode::validation_error);
  EXPECT_NE(parse_message(bad_index).find("mult[2]: index out of range"), std::string::npos) << parse_message(bad_index);
  std::string bad_scalar = kDualNumbers;
  const std::string zero_trace = "\"trace\": [\"0\"";
  bad_scalar.replace(bad_scalar.find(zero_trace), zero_trace.size(), "\"trace\": [\"a\"");
  EXPECT_NE(parse_message(bad_scalar).find("trace[0]"), std::string::npos) << parse_message(bad_scalar);
  std::string no_field = kDualNumbers;
  no_field.replace(no_field.find("\"field\""), 7, "\"fold\"");
  EXPECT_NE(parse_message(no_field).find("missing key 'field'"), std::string::npos);
}

TEST(Cli, ExampleAndVerify) {
  CliResult doc = run("example --name e31");
  ASSERT_EQ(doc.status, 0);
  auto path = temp_file("e31.json", doc.out);
  CliResult v = run("verify " + path.string());
  EXPECT_EQ(v.status, 0) << v.out;
  CliResult one = run("verify --json --claim dual-degree-sum " + path.string());
  EXPECT_EQ(one.status, 0);
  EXPECT_NE(one.out.find("\"pass\""), std::string::npos) << one.out;
  for (const char* cmd : {"check", "dual", "gram", "klambda", "higman", "ideals", "semisimple"}) {
    EXPECT_EQ(run(std::string(cmd) + " " + path.string()).status, 0) << cmd;
    EXPECT_EQ(run(std::string(cmd) + " --json " + path.string()).status, 0) << cmd;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("example --name zigzag --n 4 --field f5").status, 2);
  EXPECT_EQ(run("verify /nonexistent/doc.json").status, 2);
  EXPECT_EQ(run("verify --claim no-such-claim " + temp_file("m.json", run("example --name matn").out).string()).status,
            2);
  EXPECT_EQ(run("frobnicate").status, 2);
  auto broken = temp_file("broken.json", "{\"field\": ");
  EXPECT_EQ(run("check " + broken.string()).status, 2);
  // No trace: trace-dependent commands refuse.
  auto bare = temp_file("bare.json", R"({"field": {"kind": "rational"}, "basis": ["1"], "mult": [[0, 0, 0, "1"]],
                                          "degree": [0], "involution": {"permutation": [0]}})");
  EXPECT_EQ(run("dual " + bare.string()).status, 2);
  // An invalid cell datum is a claim failure, not an input error.
  Instance bad = build_matrix_algebra(Q, MatrixCellSpec{2, {0, 1}, {0, 1}, {1, -1}});
  auto invalid = temp_file("invalid.json", serialize_document(bad));
  EXPECT_EQ(run("verify " + invalid.string()).status, 1);
}

TEST(Cli, VerifyJsonIsByteIdentical) {
  auto path = temp_file("sum.json", run("example --name sum --sizes 2,1").out);
  CliResult a = run("verify --json " + path.string());
  CliResult b = run("verify --json " + path.string());
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
