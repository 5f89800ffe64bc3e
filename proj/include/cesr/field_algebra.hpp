#pragma once

// Finite-dimensional associative algebras over Q or F_p given by structure
// constants, with exact center and CE-failure computations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesr/groups.hpp"
#include "cesr/linalg.hpp"

namespace cesr {

class FieldAlgebra {
 public:
  // constants[i][j] is the coordinate vector of b_i * b_j.
  FieldAlgebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vec>> constants, Vec unit);

  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Vec& unit() const noexcept { return unit_; }

  Vec basis_vector(std::size_t i) const;
  Vec zero() const { return Vec(dimension(), 0); }
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const mpq_class& c, const Vec& x) const;
  Vec mul(const Vec& x, const Vec& y) const;
  bool is_zero(const Vec& x) const;
  // Formal sum such as "a - a^3" or "e + 1/2*b"; "0" for zero.
  std::string format(const Vec& x) const;

  // First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
  std::optional<std::array<std::size_t, 3>> associativity_failure() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> constants_;
  Vec unit_;
};

FieldAlgebra to_group_algebra(const FiniteGroup& g, const Field& field);

SubspaceBasis algebra_center_basis(const FieldAlgebra& a);

// With Z the center: V = {y in Z : xy in Z}. x certifies CE failure iff
// xv = 0 for every v in a basis of V. Throws PreconditionError if x = 0.
bool ce_failure_witness_check(const FieldAlgebra& a, const Vec& x);

struct ReducedProbe {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  long bound = 0;
  // First sampled nonzero x with x^2 = 0, or a nonzero difference x - y
  // with (x - y)^2 = 0.
  std::optional<Vec> nilpotent;
  std::string summary;
};

inline constexpr std::uint64_t kDefaultSeed = 20240229;

// Coordinates uniform in [-bound, bound]. A probe, not a proof.
ReducedProbe reduced_probe(const FieldAlgebra& a, std::size_t trials = 1000, std::uint64_t seed = kDefaultSeed,
                           long bound = 3);

// First (x, y) with x, y nonzero, xy = 0, each supported on at most two
// basis elements with coordinates +-1.
std::optional<std::pair<Vec, Vec>> find_zero_divisor_pair(const FieldAlgebra& a);

}  // namespace cesr
