#pragma once

// Exhaustive enumeration of small semirings (zero at index 0, one at
// index 1) with isomorphism pruning and property filters.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cesr/analysis.hpp"
#include "cesr/tables.hpp"

namespace cesr {

enum class Require { ignore, require, forbid };

inline constexpr std::size_t kDefaultMaxSearchOrder = 4;

struct SearchSpec {
  std::size_t order = 2;
  std::map<std::string, Require> filters;  // keys from property_keys()
  bool canonical_only = true;
  std::optional<std::size_t> result_cap;
  bool allow_order5 = false;
  std::optional<std::chrono::milliseconds> time_budget;
  // "<branch>:<skip>" from a previous truncated run.
  std::optional<std::string> resume;
};

// Maps CLI spellings ("ce") to property keys; throws Error on unknown names.
std::string canonical_property_key(const std::string& name);

void validate_spec(const SearchSpec& spec);

using PropertyVector = std::map<std::string, bool>;

struct CensusRecord {
  FiniteSemiring semiring;
  PropertyVector properties;
  std::size_t discovery_index = 0;
};

struct SearchOutcome {
  std::size_t emitted = 0;
  std::size_t visited = 0;  // complete table pairs reached
  bool truncated = false;
  std::string truncation_reason;
  std::optional<std::string> resume_token;
};

// Records are delivered in discovery order.
SearchOutcome enumerate(const SearchSpec& spec, const std::function<void(const CensusRecord&)>& sink);
std::vector<CensusRecord> enumerate_all(const SearchSpec& spec, SearchOutcome* outcome = nullptr);

PropertyVector census_properties(const FiniteSemiring& s);

// Lexicographically least (add, mul) relabeling over permutations of the
// indices 2..n-1. Requires zero = 0 and one = 1.
FiniteSemiring canonical_form(const FiniteSemiring& s);

// Isomorphism fixing nothing in advance; brute force, intended for n <= 6.
bool isomorphic(const FiniteSemiring& a, const FiniteSemiring& b);

}  // namespace cesr
