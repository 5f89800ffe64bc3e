#pragma once

// Semirings built from other objects: power sets of semigroups, matrix
// semirings, rings of differences and finite group rings.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cesr/exact.hpp"
#include "cesr/groups.hpp"
#include "cesr/tables.hpp"

namespace cesr {

// Largest carrier a construction will materialize.
inline constexpr std::size_t kMaxConstructionOrder = std::size_t{1} << 16;

// Power-set semiring: A + B = A u B, AB = {ab}. Element index is the
// subset bitmask; zero is the empty set, one is {identity of m}.
// Requires m associative with an absorbing zero and a two-sided identity
// that differ, and 2^|m| within the table limit.
FiniteSemiring subset_semiring(const FiniteMagma& m);

// "{}", "{0,1,c}" using the base labels in index order.
std::string subset_label(std::uint64_t mask, const std::vector<std::string>& base_labels);

// Z/m (or F_p) as a table semiring; element k is the residue k.
FiniteSemiring coefficient_semiring(const CoeffDomain& domain);

enum class MatrixShape { full, upper_triangular };

struct MatrixSemiring {
  FiniteSemiring semiring;
  std::size_t size = 0;
  MatrixShape shape = MatrixShape::full;
  FiniteSemiring coeff;

  // Entries are coefficient indices, row-major n*n. Entries below the
  // diagonal must be zero for the triangular shape.
  Elem encode(const std::vector<Elem>& entries) const;
  std::vector<Elem> decode(Elem x) const;
  // Matrix unit E_ij (0-based).
  Elem unit(std::size_t i, std::size_t j) const;
};

// Entrywise addition and matrix multiplication over a finite coefficient
// semiring. Free entries are mixed-radix digits, least significant first,
// in row-major order.
MatrixSemiring matrix_semiring(const FiniteSemiring& coeff, std::size_t n, MatrixShape shape);
MatrixSemiring matrix_semiring(const CoeffDomain& coeff, std::size_t n, MatrixShape shape);

struct DifferenceRing {
  FiniteSemiring ring;
  std::vector<Elem> embedding;                          // x -> class of (x, 0)
  std::vector<std::pair<Elem, Elem>> representatives;   // class -> minimal pair
};

// Pairs (a, b) modulo (a, b) ~ (c, d) iff a + d = b + c. Throws
// PreconditionError unless s is additively cancellative.
DifferenceRing difference_ring(const FiniteSemiring& s);

// Group ring over Z/m; digit i of an element index is the coefficient of
// group element i.
FiniteSemiring finite_group_ring(const FiniteGroup& g, const CoeffDomain& coeff);
Elem group_ring_index(const std::vector<std::uint32_t>& coefficients, std::uint32_t modulus);
std::vector<std::uint32_t> group_ring_coefficients(Elem x, std::size_t group_order, std::uint32_t modulus);

}  // namespace cesr
