#include "apogen/report.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace apogen {

nlohmann::ordered_json suite_report_json(const SuiteRun& run) {
  nlohmann::ordered_json report;
  report["suite_version"] = "1.0.0";
  auto results = nlohmann::ordered_json::array();
  for (const IdentityOutcome& r : run.results)
    results.push_back({{"id", r.id},
                       {"params", r.params},
                       {"status", r.status},
                       {"residual_sample", r.residual_sample}});
  report["results"] = std::move(results);
  report["summary"] = {{"pass", run.pass},
                       {"fail", run.fail},
                       {"documented_discrepancy", run.documented_discrepancy}};
  return report;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp(target);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace apogen
