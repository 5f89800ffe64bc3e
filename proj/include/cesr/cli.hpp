#pragma once

// Subcommands behind the `cesr` executable. Each builder returns a Report
// so tests can drive them without going through argv.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cesr/report.hpp"
#include "cesr/search.hpp"

namespace cesr {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitResource = 3 };

// Exit kExitOk iff the document is a valid semiring, associative magma
// with zero and identity, or group.
Report validate_file(const std::string& path);

// `properties` empty means all. A magma file is analyzed through its
// subset semiring.
Report analyze_file(const std::string& path, const std::vector<std::string>& properties, std::uint64_t seed);

// Manifest entries carry `expected`; extra properties (finite examples
// only) are appended without it.
Report analyze_example(const std::string& id, const std::vector<std::string>& properties, std::uint64_t seed,
                       std::size_t trials);

// action: classes | center | series | certify. `name` is a builtin group
// or a group file.
Report group_report(const std::string& name, const std::string& coeff, const std::string& action);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> failures;  // one line per failing entry
};
// Rebuilds the subject and re-checks every entry. Throws Error when the
// subject cannot be rebuilt.
VerifyOutcome verify_report(const Report& r);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cesr
