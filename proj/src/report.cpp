#include "cesr/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "cesr/error.hpp"

namespace cesr {

using json = nlohmann::ordered_json;

bool Report::has_mismatch() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.expected && *e.expected != e.verdict; });
}

namespace {

json subject_json(const Subject& s) {
  json j;
  j["kind"] = s.kind;
  for (const auto& [key, value] : {std::pair{"path", &s.path}, std::pair{"id", &s.id}, std::pair{"group", &s.group},
                                   std::pair{"coeff", &s.coeff}, std::pair{"action", &s.action}})
    if (!value->empty()) j[key] = *value;
  return j;
}

std::string optional_string(const json& j, const char* key) { return j.contains(key) ? j.at(key).get<std::string>() : ""; }

}  // namespace

std::string to_structured(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = r.tool_version;
  j["command"] = r.command;
  j["subject"] = subject_json(r.subject);
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    json je;
    je["property"] = e.property;
    je["verdict"] = e.verdict;
    if (e.expected) je["expected"] = *e.expected;
    je["witness"] = e.witness;
    if (!e.certificate.empty()) {
      json c = json::object();
      for (const auto& [x, yz] : e.certificate) c[x] = {yz.first, yz.second};
      je["certificate"] = c;
    }
    if (!e.note.empty()) je["note"] = e.note;
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

Report parse_structured(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kReportSchema)
      throw Error("unsupported report schema '" + j.at("schema").get<std::string>() + "'");
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    const auto& s = j.at("subject");
    r.subject = {s.at("kind").get<std::string>(), optional_string(s, "path"), optional_string(s, "id"),
                 optional_string(s, "group"),      optional_string(s, "coeff"), optional_string(s, "action")};
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<std::size_t>();
    for (const auto& je : j.at("entries")) {
      ReportEntry e;
      e.property = je.at("property").get<std::string>();
      e.verdict = je.at("verdict").get<bool>();
      if (je.contains("expected")) e.expected = je.at("expected").get<bool>();
      e.witness = je.at("witness").get<std::vector<std::string>>();
      if (je.contains("certificate"))
        for (const auto& [x, yz] : je.at("certificate").items())
          e.certificate[x] = {yz.at(0).get<std::string>(), yz.at(1).get<std::string>()};
      e.note = optional_string(je, "note");
      r.entries.push_back(std::move(e));
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  std::string out = r.command + " ";
  if (r.subject.kind == "file") out += r.subject.path;
  else if (r.subject.kind == "example") out += "example " + r.subject.id;
  else out += r.subject.group + (r.subject.coeff.empty() ? "" : " over " + r.subject.coeff);
  out += " (seed " + std::to_string(r.seed) + ")\n";
  for (const auto& e : r.entries) {
    out += "  " + e.property + ": " + (e.verdict ? "true" : "false");
    if (e.expected) out += *e.expected == e.verdict ? " [matches]" : std::string(" [MISMATCH, expected ") + (*e.expected ? "true" : "false") + "]";
    if (!e.witness.empty()) {
      out += "  {";
      for (std::size_t i = 0; i < e.witness.size(); ++i) out += (i ? ", " : "") + e.witness[i];
      out += "}";
    }
    if (!e.certificate.empty()) out += "  certificate for " + std::to_string(e.certificate.size()) + " elements";
    if (!e.note.empty()) out += "  " + e.note;
    out += "\n";
  }
  return out;
}

}  // namespace cesr
