#pragma once

#include <string>
#include <vector>

namespace gcell {

enum class Verdict { pass, fail, skipped };

std::string verdict_name(Verdict v);

struct ReportEntry {
  std::string claim;
  std::string statement;
  Verdict verdict = Verdict::pass;
  /// Supporting data for pass/fail, or the reason for a skip.
  std::string witness;
};

/// Ordered list of evaluated claims about one instance.
struct Report {
  std::string instance;
  std::vector<ReportEntry> entries;

  void add(std::string claim, std::string statement, bool passed, std::string witness = {});
  void skip(std::string claim, std::string statement, std::string reason);

  bool all_passed() const;
  std::size_t count(Verdict v) const;
  const ReportEntry* find(const std::string& claim) const;

  /// Aligned plain-text rendering, one line per entry plus witness lines.
  std::string to_text() const;
  /// Pretty-printed JSON with keys in canonical order.
  std::string to_json() const;
};

}  // namespace gcell
