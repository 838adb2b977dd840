#include "gss/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace gss::report {

namespace {

std::string format_margin(double margin) {
  if (std::isinf(margin)) return "exact";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", margin);
  return buf;
}

std::vector<Record> sorted_records(const Report& report) {
  std::vector<Record> records = report.records;
  std::stable_sort(records.begin(), records.end(),
                   [](const Record& a, const Record& b) { return a.claim < b.claim; });
  return records;
}

}  // namespace

std::string render_text(const Report& report, bool timings) {
  std::string out;
  out += "# seed: " + std::to_string(report.seed) + "\n";
  out += "# mode: " + report.mode + "\n";
  for (const auto& r : sorted_records(report)) {
    out += verdict_name(r.verdict);
    out += " ";
    out += r.claim;
    out += " margin=" + format_margin(r.margin);
    if (!r.detail.empty()) out += " | " + r.detail;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " elapsed=%.1fms", r.elapsed_ms);
      out += buf;
    }
    out += "\n";
  }
  out += report.ok() ? "# result: ok\n" : "# result: FAILURES\n";
  return out;
}

std::string render_structured(const Report& report, bool timings) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["mode"] = report.mode;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : sorted_records(report)) {
    nlohmann::json rec;
    rec["claim"] = r.claim;
    rec["verdict"] = verdict_name(r.verdict);
    if (std::isinf(r.margin))
      rec["margin"] = "exact";
    else
      rec["margin"] = format_margin(r.margin);
    if (!r.detail.empty()) rec["detail"] = r.detail;
    if (timings) rec["elapsed_ms"] = r.elapsed_ms;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["ok"] = report.ok();
  return j.dump(2) + "\n";
}

}  // namespace gss::report
