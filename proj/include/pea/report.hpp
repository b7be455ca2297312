// Machine-readable check reports.  One document per tool run:
//   { "tool-version": ..., "config": {...}, "checks": [ {name, verdict,
//     witness?, millis}, ... ] }
// Key order is fixed and all payloads are integers or strings, so a rerun
// with the same seed serializes byte-identically once timing is excluded.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pea {

inline const char* tool_version() { return "0.1.0"; }

using Json = nlohmann::ordered_json;

enum class Verdict {
  HoldsExhaustive,
  HoldsSampled,
  Fails,
  Reported,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HoldsExhaustive:
      return "holds-exhaustive";
    case Verdict::HoldsSampled:
      return "holds-sampled";
    case Verdict::Fails:
      return "fails";
    case Verdict::Reported:
      return "reported";
  }
  return "?";
}

struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::HoldsExhaustive;
  Json witness;  // failure witness or observation payload; null when absent
  std::int64_t millis = 0;

  bool failed() const { return verdict == Verdict::Fails; }
};

struct ReportDoc {
  Json config = Json::object();
  std::vector<CheckReport> checks;

  bool any_fails() const {
    for (const auto& c : checks)
      if (c.failed()) return true;
    return false;
  }

  int exit_code() const { return any_fails() ? 1 : 0; }

  Json to_json(bool include_timing = true) const {
    Json doc;
    doc["tool-version"] = tool_version();
    doc["config"] = config;
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json jc;
      jc["name"] = c.name;
      jc["verdict"] = to_string(c.verdict);
      if (!c.witness.is_null()) jc["witness"] = c.witness;
      if (include_timing) jc["millis"] = c.millis;
      arr.push_back(std::move(jc));
    }
    doc["checks"] = std::move(arr);
    Json counts = Json::object();
    counts["holds-exhaustive"] = 0;
    counts["holds-sampled"] = 0;
    counts["fails"] = 0;
    counts["reported"] = 0;
    for (const auto& c : checks)
      counts[to_string(c.verdict)] = counts[to_string(c.verdict)].get<int>() + 1;
    doc["summary"] = std::move(counts);
    return doc;
  }
};

inline std::string emit_report(const ReportDoc& doc, bool include_timing = true) {
  return doc.to_json(include_timing).dump(2) + "\n";
}

}  // namespace pea
