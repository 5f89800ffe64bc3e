#include "cesr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cesr/analysis.hpp"
#include "cesr/constructions.hpp"
#include "cesr/error.hpp"
#include "cesr/group_semiring.hpp"
#include "cesr/groups.hpp"
#include "cesr/registry.hpp"
#include "cesr/text_format.hpp"

namespace cesr {

namespace {

std::vector<std::string> labels_of(const std::vector<std::string>& labels, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(labels.at(x));
  return out;
}

ReportEntry entry_from(const FiniteSemiring& s, const PropertyReport& p) {
  ReportEntry e;
  e.property = p.property;
  e.verdict = p.verdict;
  e.witness = labels_of(s.labels(), p.witness);
  if (p.certificate)
    for (const auto& [x, yz] : p.certificate->multipliers)
      e.certificate[s.label(x)] = {s.label(yz.first), s.label(yz.second)};
  e.note = p.note;
  return e;
}

PropertyReport property_from(const FiniteSemiring& s, const ReportEntry& e) {
  PropertyReport p;
  p.property = e.property;
  p.verdict = e.verdict;
  for (const auto& w : e.witness) p.witness.push_back(s.index_of(w));
  if (!e.certificate.empty()) {
    p.certificate = CentralityCertificate{};
    for (const auto& [x, yz] : e.certificate)
      p.certificate->multipliers[s.index_of(x)] = {s.index_of(yz.first), s.index_of(yz.second)};
  }
  p.note = e.note;
  return p;
}

bool is_property_key(const std::string& key) {
  const auto& keys = property_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::vector<std::string> resolve_properties(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& k : property_keys())
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
      continue;
    }
    const auto k = canonical_property_key(n);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

FiniteSemiring semiring_from_file(const std::string& path) {
  const auto doc = load_document(path);
  if (const auto* s = std::get_if<FiniteSemiring>(&doc)) return *s;
  if (const auto* m = std::get_if<MagmaDocument>(&doc)) return subset_semiring(m->magma);
  throw Error(path + " holds a group; use the group subcommand");
}

std::shared_ptr<const FiniteGroup> load_group(const std::string& name) {
  if (std::filesystem::exists(name)) {
    const auto doc = load_document(name);
    if (const auto* g = std::get_if<GroupDocument>(&doc)) return std::make_shared<const FiniteGroup>(group_from_document(*g));
    throw Error(name + " does not hold a group");
  }
  return std::make_shared<const FiniteGroup>(builtin_group(name));
}

}  // namespace

Report validate_file(const std::string& path) {
  Report r;
  r.command = "validate";
  r.subject = {"file", path, "", "", "", ""};
  const auto doc = load_document(path);
  if (const auto* s = std::get_if<FiniteSemiring>(&doc)) {
    const auto v = validate_semiring(*s);
    for (const auto& violation : v.violations)
      r.entries.push_back({violation.axiom, false, std::nullopt, labels_of(s->labels(), violation.witness), {}, ""});
    r.entries.push_back({"valid", v.ok(), std::nullopt, {}, {}, v.trivial ? "trivial" : ""});
  } else if (const auto* m = std::get_if<MagmaDocument>(&doc)) {
    const auto& t = m->magma.table;
    const auto assoc = lights_test(t, m->generators);
    std::vector<std::string> w;
    if (assoc.counterexample) w = labels_of(m->magma.labels, {assoc.counterexample->begin(), assoc.counterexample->end()});
    r.entries.push_back({"associative", assoc.associative, std::nullopt, w, {}, ""});
    const auto n = static_cast<Elem>(t.order());
    std::optional<Elem> zero, identity;
    for (Elem z = 0; z < n && !zero; ++z) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t(z, x) == z && t(x, z) == z;
      if (ok) zero = z;
    }
    for (Elem u = 0; u < n && !identity; ++u) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) ok = t(u, x) == x && t(x, u) == x;
      if (ok) identity = u;
    }
    r.entries.push_back({"zero", zero.has_value(), std::nullopt,
                         zero ? std::vector<std::string>{m->magma.labels[*zero]} : std::vector<std::string>{}, {}, ""});
    r.entries.push_back({"identity", identity.has_value(), std::nullopt,
                         identity ? std::vector<std::string>{m->magma.labels[*identity]} : std::vector<std::string>{},
                         {}, ""});
    r.entries.push_back({"valid", assoc.associative && zero && identity, std::nullopt, {}, {}, ""});
  } else {
    const auto& gd = std::get<GroupDocument>(doc);
    GroupValidation v;
    try {
      const auto g = group_from_document(gd);
      v = validate_group(g);
    } catch (const PreconditionError& e) {
      v = {false, e.what()};
    }
    r.entries.push_back({"valid", v.valid, std::nullopt, {}, {}, v.reason});
  }
  return r;
}

Report analyze_file(const std::string& path, const std::vector<std::string>& properties, std::uint64_t seed) {
  Report r;
  r.command = "analyze";
  r.subject = {"file", path, "", "", "", ""};
  r.seed = seed;
  const auto s = semiring_from_file(path);
  const auto keys = properties.empty() ? property_keys() : resolve_properties(properties);
  for (const auto& key : keys) r.entries.push_back(entry_from(s, evaluate_property(s, key)));
  return r;
}

Report analyze_example(const std::string& id, const std::vector<std::string>& properties, std::uint64_t seed,
                       std::size_t trials) {
  Report r;
  r.command = "analyze";
  r.subject = {"example", "", id, "", "", ""};
  r.seed = seed;
  const auto ex = named_example(id, seed, trials);
  if (id == "3.2") r.trials = trials;
  for (const auto& m : ex.evaluate()) {
    ReportEntry e;
    if (m.report && ex.semiring) {
      e = entry_from(*ex.semiring, *m.report);
    } else {
      e.property = m.key;
      e.verdict = m.observed;
      if (!m.witness.empty()) e.witness = {m.witness};
    }
    e.expected = m.expected;
    r.entries.push_back(std::move(e));
  }
  const auto extra = resolve_properties(properties);
  if (!extra.empty() && !ex.semiring) throw Error("example " + id + " has an infinite carrier; only its manifest applies");
  for (const auto& key : extra) {
    const bool in_manifest = std::any_of(ex.manifest.begin(), ex.manifest.end(),
                                         [&](const ManifestEntry& m) { return m.key == key; });
    if (!in_manifest) r.entries.push_back(entry_from(*ex.semiring, evaluate_property(*ex.semiring, key)));
  }
  return r;
}

Report group_report(const std::string& name, const std::string& coeff, const std::string& action) {
  Report r;
  r.command = "group";
  r.subject = {"group", "", "", name, action == "certify" ? coeff : "", action};
  const auto g = load_group(name);
  const auto& labels = g->labels();
  if (action == "classes") {
    for (const auto& c : conjugacy_classes(*g))
      r.entries.push_back({"K_" + g->label(c.representative), true, std::nullopt, labels_of(labels, c.members), {},
                           "size " + std::to_string(c.members.size())});
  } else if (action == "center") {
    r.entries.push_back({"center", true, std::nullopt, labels_of(labels, group_center(*g)), {}, ""});
  } else if (action == "series") {
    const auto series = upper_central_series(*g);
    for (std::size_t i = 0; i < series.size(); ++i)
      r.entries.push_back({"C_" + std::to_string(i), true, std::nullopt, labels_of(labels, series[i]), {}, ""});
    const auto cls = nilpotence_class(*g);
    r.entries.push_back({"nilpotence_class", cls.nilpotent(), std::nullopt, {cls.to_string()}, {}, ""});
  } else if (action == "certify") {
    const auto cert = certify_group_semiring(g, CoeffDomain::parse(coeff));
    for (const auto& id : cert.identities)
      r.entries.push_back({"identity", id.holds, std::nullopt,
                           {g->label(id.h), id.product.to_string(), id.coset.to_string()}, {},
                           g->label(id.h) + " * sum(Z) = sum(" + id.name + ")"});
    const bool ok = cert.status == CertificateStatus::certified || cert.status == CertificateStatus::abelian;
    r.entries.push_back({"certificate", ok, std::nullopt, {"class " + cert.nilpotence.to_string()}, {}, cert.verdict});
  } else {
    throw Error("unknown group action '" + action + "'");
  }
  return r;
}

VerifyOutcome verify_report(const Report& r) {
  VerifyOutcome out;
  auto fail = [&](std::size_t i, const ReportEntry& e, const std::string& why) {
    out.ok = false;
    out.failures.push_back("entry " + std::to_string(i) + " (" + e.property + "): " + why);
  };
  // Entries that are not table witnesses are compared against a rebuilt
  // report.
  auto compare_rebuilt = [&](const Report& fresh) {
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      if (i >= fresh.entries.size()) {
        fail(i, r.entries[i], "no such entry in the rebuilt report");
        continue;
      }
      const auto& a = r.entries[i];
      const auto& b = fresh.entries[i];
      if (a.property != b.property || a.verdict != b.verdict || a.witness != b.witness)
        fail(i, a, "does not match the rebuilt subject");
    }
    if (fresh.entries.size() > r.entries.size()) {
      out.ok = false;
      out.failures.push_back("report is missing " + std::to_string(fresh.entries.size() - r.entries.size()) + " entries");
    }
  };
  auto recheck_table = [&](const FiniteSemiring& s, std::size_t i, const ReportEntry& e) {
    try {
      if (!recheck(s, property_from(s, e))) fail(i, e, "witness does not re-verify");
    } catch (const Error& ex) {
      fail(i, e, ex.what());
    }
  };

  const auto& sub = r.subject;
  if (sub.kind == "file") {
    if (!std::filesystem::exists(sub.path)) throw Error("subject file " + sub.path + " not found");
    if (r.command == "validate") {
      compare_rebuilt(validate_file(sub.path));
    } else if (r.command == "analyze") {
      const auto s = semiring_from_file(sub.path);
      for (std::size_t i = 0; i < r.entries.size(); ++i) {
        if (is_property_key(r.entries[i].property)) recheck_table(s, i, r.entries[i]);
        else fail(i, r.entries[i], "unknown property");
      }
    } else {
      throw Error("cannot verify a '" + r.command + "' report");
    }
  } else if (sub.kind == "example") {
    const auto ex = named_example(sub.id, r.seed, r.trials ? r.trials : 1000);
    const auto fresh = analyze_example(sub.id, {}, r.seed, r.trials ? r.trials : 1000);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
      const auto& e = r.entries[i];
      if (ex.semiring && is_property_key(e.property)) {
        recheck_table(*ex.semiring, i, e);
        continue;
      }
      const auto it = std::find_if(fresh.entries.begin(), fresh.entries.end(),
                                   [&](const ReportEntry& f) { return f.property == e.property; });
      if (it == fresh.entries.end()) fail(i, e, "not part of the example");
      else if (it->verdict != e.verdict || it->witness != e.witness) fail(i, e, "does not match the rebuilt example");
    }
  } else if (sub.kind == "group") {
    compare_rebuilt(group_report(sub.group, sub.coeff.empty() ? "qplus" : sub.coeff, sub.action));
  } else {
    throw Error("unknown subject kind '" + sub.kind + "'");
  }
  return out;
}

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

void emit(std::ostream& out, const Report& r, const std::string& format) {
  out << (format == "structured" ? to_structured(r) : to_text(r));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string vector_key(const PropertyVector& v) {
  std::string key;
  for (const auto& [k, b] : v)
    if (b) key += (key.empty() ? "" : ",") + k;
  return key.empty() ? "(none)" : key;
}

int run_search(const SearchSpec& spec, const std::string& format, std::ostream& out) {
  std::map<std::string, std::size_t> by_vector;
  const auto outcome = enumerate(spec, [&](const CensusRecord& rec) {
    const auto& s = rec.semiring;
    ++by_vector[vector_key(rec.properties)];
    if (format == "structured") {
      nlohmann::ordered_json j;
      j["schema"] = "cesr-census/1";
      j["discovery_index"] = rec.discovery_index;
      j["order"] = s.order();
      j["elements"] = s.labels();
      j["add"] = s.add_table().entries();
      j["mul"] = s.mul_table().entries();
      j["properties"] = rec.properties;
      out << j.dump() << "\n";
    } else {
      out << "#" << rec.discovery_index << "\n" << write_semiring(s) << "  properties: " << vector_key(rec.properties)
          << "\n";
    }
  });
  const std::string finding = "desk-scale finding at order " + std::to_string(spec.order) + "; no conclusion at this scale";
  if (format == "structured") {
    nlohmann::ordered_json j;
    j["schema"] = "cesr-census/1";
    j["summary"] = {{"order", spec.order}, {"emitted", outcome.emitted}, {"by_property_vector", by_vector}};
    j["truncated"] = outcome.truncated;
    if (outcome.truncated) {
      j["truncation_reason"] = outcome.truncation_reason;
      j["resume"] = *outcome.resume_token;
    }
    j["note"] = finding;
    out << j.dump() << "\n";
  } else {
    if (outcome.emitted == 0) out << "none found\n";
    for (const auto& [k, c] : by_vector) out << c << "  " << k << "\n";
    out << outcome.emitted << " records at order " << spec.order << "; " << finding << "\n";
    if (outcome.truncated)
      out << "TRUNCATED (" << outcome.truncation_reason << "), resume with --resume " << *outcome.resume_token << "\n";
  }
  return outcome.truncated ? kExitResource : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semiring and group semiring analysis"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 1000;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", seed, "seed for probes");
  app.add_option("--trials", trials, "trials for probes");

  auto* validate = app.add_subcommand("validate", "validate a table file");
  std::string validate_path;
  validate->add_option("file", validate_path)->required();

  auto* analyze = app.add_subcommand("analyze", "evaluate properties of a table file or named example");
  std::string analyze_path, example;
  std::vector<std::string> properties;
  analyze->add_option("file", analyze_path);
  analyze->add_option("--example", example, "named example id");
  analyze->add_option("--properties", properties, "comma-separated list or 'all'")->delimiter(',');

  auto* group = app.add_subcommand("group", "group analyses and the group semiring certificate");
  std::string group_name, coeff = "qplus", action = "classes";
  group->add_option("name", group_name, "builtin group (q8, s3, c<n>, d<order>) or group file")->required();
  group->add_option("--coeff", coeff, "coefficient domain");
  group->add_option("--action", action)->check(CLI::IsMember({"classes", "center", "series", "certify"}));

  auto* search = app.add_subcommand("search", "enumerate small semirings");
  SearchSpec spec;
  std::vector<std::string> require, forbid;
  std::size_t cap = 0;
  double budget = 0;
  bool all_labelings = false;
  std::string resume;
  search->add_option("--order", spec.order)->required();
  search->add_option("--require", require)->delimiter(',');
  search->add_option("--forbid", forbid)->delimiter(',');
  search->add_option("--cap", cap, "stop after this many records");
  search->add_option("--budget", budget, "time budget in seconds");
  search->add_flag("--allow-order5", spec.allow_order5);
  search->add_flag("--all-labelings", all_labelings, "emit every labeling, not only canonical ones");
  search->add_option("--resume", resume, "token printed by a truncated run");

  auto* verify = app.add_subcommand("verify", "re-check the witnesses of a structured report");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  std::string report_path;
  verify->add_option("report", report_path)->required();

  std::vector<const char*> argv = {"cesr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      auto r = validate_file(validate_path);
      r.seed = seed;
      emit(out, r, format);
      return r.entries.back().verdict ? kExitOk : kExitMismatch;
    }
    if (*analyze) {
      if (example.empty() == analyze_path.empty()) {
        err << "analyze needs exactly one of a file or --example\n";
        return kExitUsage;
      }
      if (!example.empty()) {
        const auto r = analyze_example(example, split_list(properties), seed, trials);
        emit(out, r, format);
        return r.has_mismatch() ? kExitMismatch : kExitOk;
      }
      emit(out, analyze_file(analyze_path, split_list(properties), seed), format);
      return kExitOk;
    }
    if (*group) {
      auto r = group_report(group_name, coeff, action);
      r.seed = seed;
      emit(out, r, format);
      return std::all_of(r.entries.begin(), r.entries.end(),
                         [](const ReportEntry& e) { return e.property != "identity" || e.verdict; })
                 ? kExitOk
                 : kExitMismatch;
    }
    if (*search) {
      for (const auto& k : split_list(require)) spec.filters[canonical_property_key(k)] = Require::require;
      for (const auto& k : split_list(forbid)) spec.filters[canonical_property_key(k)] = Require::forbid;
      spec.canonical_only = !all_labelings;
      if (cap) spec.result_cap = cap;
      if (budget > 0) spec.time_budget = std::chrono::milliseconds(static_cast<long>(budget * 1000));
      if (!resume.empty()) spec.resume = resume;
      return run_search(spec, format, out);
    }
    if (*verify) {
      const auto r = parse_structured(read_file(report_path));
      const auto v = verify_report(r);
      for (const auto& f : v.failures) out << "FAILED " << f << "\n";
      out << (v.ok ? "verified " : "not verified ") << r.entries.size() << " entries\n";
      return v.ok ? kExitOk : kExitMismatch;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cesr
