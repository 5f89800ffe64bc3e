#pragma once

// Named examples with the properties asserted about them. Finite examples
// carry a table semiring; the matrix and group-semiring examples have
// infinite carriers and are checked through symbolic witnesses only.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesr/analysis.hpp"
#include "cesr/field_algebra.hpp"
#include "cesr/tables.hpp"

namespace cesr {

struct ManifestResult {
  std::string key;
  bool expected = false;
  bool observed = false;
  std::string witness;                   // human-readable
  std::optional<PropertyReport> report;  // table examples only

  bool matches() const noexcept { return expected == observed; }
};

struct ManifestEntry {
  std::string key;
  bool expected = false;
};

struct RegistryExample {
  std::string id;
  std::string description;
  std::optional<FiniteSemiring> semiring;  // finite examples only
  std::vector<ManifestEntry> manifest;
  // Evaluates one manifest key. Property keys of a finite example go
  // through evaluate_property; other keys are example-specific checks.
  std::function<ManifestResult(const ManifestEntry&)> check;

  std::vector<ManifestResult> evaluate() const;
};

// Ids: "1.1" (subset semiring of order 32), "2.5" and "2.6" (integer
// matrix semirings), "3.2" (quaternion group semiring over nonnegative
// rationals), "fq8" (F_2 Q_8). Seed and trials drive the probes of "3.2".
// Throws Error on an unknown id.
RegistryExample named_example(const std::string& id, std::uint64_t seed = kDefaultSeed, std::size_t trials = 1000);
const std::vector<std::string>& example_ids();

// The five-element base semigroup with zero 0 and identity 1.
FiniteMagma example_base_magma();

}  // namespace cesr
