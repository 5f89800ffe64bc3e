#pragma once

// Structured reports: one versioned JSON schema, with a text rendering
// over the same data.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cesr {

inline constexpr const char* kReportSchema = "cesr-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

// kind is "file", "example" or "group"; unused fields stay empty.
struct Subject {
  std::string kind;
  std::string path;
  std::string id;
  std::string group;
  std::string coeff;
  std::string action;
  friend bool operator==(const Subject&, const Subject&) = default;
};

struct ReportEntry {
  std::string property;
  bool verdict = false;
  std::optional<bool> expected;  // manifest value, when one exists
  std::vector<std::string> witness;
  // x -> (y, z) with xy = z central, by label.
  std::map<std::string, std::pair<std::string, std::string>> certificate;
  std::string note;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::string command;
  Subject subject;
  std::uint64_t seed = 0;
  std::size_t trials = 0;  // probe trials, 0 when no probe ran
  std::string tool_version = kToolVersion;
  std::vector<ReportEntry> entries;
  friend bool operator==(const Report&, const Report&) = default;

  bool has_mismatch() const;
};

std::string to_structured(const Report& r);
// Throws Error on malformed input or a schema mismatch.
Report parse_structured(const std::string& text);
std::string to_text(const Report& r);

}  // namespace cesr
