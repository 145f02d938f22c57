#pragma once

#include <string>
#include <vector>

#include "gcell/builders.hpp"
#include "gcell/report.hpp"

namespace gcell {

/// Registered claim ids in report order (sorted).
std::vector<std::string> claim_ids();

/// Evaluates every registered claim on the instance. Claims whose
/// hypotheses do not hold are reported as skipped with the reason; an
/// exception inside a claim is reported as a failure with its message.
Report verify_all(const Instance& instance);

/// A single registered claim. Throws Error(unknown_claim).
ReportEntry verify_claim(const Instance& instance, const std::string& claim_id);

}  // namespace gcell
