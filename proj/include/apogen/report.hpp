#pragma once

#include <string>

#include "apogen/suite.hpp"
#include "json.hpp"

namespace apogen {

// Serialize a suite run to the report schema:
//   {"suite_version": ..., "results": [...], "summary": {...}}
// Key order is fixed so that identical runs serialize to identical bytes.
nlohmann::ordered_json suite_report_json(const SuiteRun& run);

// Write `content` to `path` via a temporary file and an atomic rename, so a
// crash mid-write never leaves a truncated report behind.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace apogen
