#pragma once

// Plain-text table format, one construct per file:
//
//   semiring | magma | group
//   order 5
//   elements 0 1 a b c
//   zero 0              (semiring)
//   one 1               (semiring)
//   identity e          (group, optional)
//   generators a b      (magma, optional)
//   add / mul / table   followed by n rows of n labels
//
// '#' starts a comment line; blank lines and extra spaces are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cesr/tables.hpp"

namespace cesr {

struct MagmaDocument {
  FiniteMagma magma;
  std::vector<Elem> generators;  // empty: none given
};

struct GroupDocument {
  std::vector<std::string> labels;
  OpTable table;
  std::optional<Elem> identity;
};

using Document = std::variant<FiniteSemiring, MagmaDocument, GroupDocument>;

// Throws ParseError with the offending line number.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

std::string write_semiring(const FiniteSemiring& s);
std::string write_magma(const FiniteMagma& m, const std::vector<Elem>& generators = {});

}  // namespace cesr
