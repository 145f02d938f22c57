#include "gcell/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gcell {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

void Report::add(std::string claim, std::string statement, bool passed, std::string witness) {
  entries.push_back({std::move(claim), std::move(statement), passed ? Verdict::pass : Verdict::fail, std::move(witness)});
}

void Report::skip(std::string claim, std::string statement, std::string reason) {
  entries.push_back({std::move(claim), std::move(statement), Verdict::skipped, std::move(reason)});
}

bool Report::all_passed() const { return count(Verdict::fail) == 0; }

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const ReportEntry& e) { return e.verdict == v; }));
}

const ReportEntry* Report::find(const std::string& claim) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.claim == claim; });
  return it == entries.end() ? nullptr : &*it;
}

std::string Report::to_text() const {
  std::size_t width = 0;
  for (const auto& e : entries) width = std::max(width, e.claim.size());
  std::ostringstream os;
  if (!instance.empty()) os << "instance: " << instance << '\n';
  for (const auto& e : entries) {
    std::string verdict = verdict_name(e.verdict);
    os << verdict << std::string(8 - verdict.size(), ' ') << e.claim << std::string(width - e.claim.size() + 2, ' ')
       << e.statement << '\n';
    if (!e.witness.empty()) {
      std::istringstream lines(e.witness);
      std::string line;
      while (std::getline(lines, line)) os << std::string(8, ' ') << "  " << line << '\n';
    }
  }
  os << "summary: " << count(Verdict::pass) << " pass, " << count(Verdict::fail) << " fail, "
     << count(Verdict::skipped) << " skipped\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json doc;
  doc["instance"] = instance;
  doc["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    doc["entries"].push_back(
        {{"claim", e.claim}, {"statement", e.statement}, {"verdict", verdict_name(e.verdict)}, {"witness", e.witness}});
  }
  doc["summary"] = {{"pass", count(Verdict::pass)}, {"fail", count(Verdict::fail)}, {"skipped", count(Verdict::skipped)}};
  return doc.dump(2) + "\n";
}

}  // namespace gcell
