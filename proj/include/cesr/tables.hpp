#pragma once

// Dense operation tables for finite magmas and semirings. Elements are
// indices in [0, n); labels are for presentation only.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cesr {

using Elem = std::uint32_t;

// Largest carrier the library will materialize as dense tables
// (two n*n tables of 32-bit entries).
inline constexpr std::size_t kMaxTableOrder = 4096;

class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t order);
  // Row-major entries; throws PreconditionError if any entry is >= order.
  OpTable(std::size_t order, std::vector<Elem> entries);

  std::size_t order() const noexcept { return n_; }
  Elem operator()(Elem x, Elem y) const noexcept { return entries_[x * n_ + y]; }
  void set(Elem x, Elem y, Elem v);
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  bool is_commutative() const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> entries_;
};

struct FiniteMagma {
  std::vector<std::string> labels;
  OpTable table;

  std::size_t order() const noexcept { return table.order(); }
};

class FiniteSemiring {
 public:
  FiniteSemiring() = default;
  // Checks only shape: equal orders, label count, zero/one in range.
  FiniteSemiring(std::vector<std::string> labels, OpTable add, OpTable mul, Elem zero, Elem one);

  std::size_t order() const noexcept { return add_.order(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem x) const { return labels_.at(x); }
  // Index of a label; throws Error if absent.
  Elem index_of(const std::string& label) const;
  const OpTable& add_table() const noexcept { return add_; }
  const OpTable& mul_table() const noexcept { return mul_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem x, Elem y) const noexcept { return add_(x, y); }
  Elem mul(Elem x, Elem y) const noexcept { return mul_(x, y); }

  bool is_commutative() const { return mul_.is_commutative(); }

  friend bool operator==(const FiniteSemiring&, const FiniteSemiring&) = default;

 private:
  std::vector<std::string> labels_;
  OpTable add_;
  OpTable mul_;
  Elem zero_ = 0;
  Elem one_ = 0;
};

struct AssociativityResult {
  bool associative = true;
  // (x, y, z) with (xy)z != x(yz).
  std::optional<std::array<Elem, 3>> counterexample;
};

// Checks all n^3 triples; reports the lexicographically first failure.
AssociativityResult naive_associativity(const OpTable& t);

// Light's test: for each generator g compares x(gy) against (xg)y over all
// x, y. An empty generator list means the whole carrier. Throws
// NotGeneratingSet if the generators do not generate the carrier.
AssociativityResult lights_test(const OpTable& t, std::span<const Elem> generators = {});

// Closure of a set under the operation, sorted ascending.
std::vector<Elem> closure(const OpTable& t, std::span<const Elem> generators);

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool trivial = false;  // order 1, zero == one

  bool ok() const noexcept { return violations.empty(); }
  bool violates(const std::string& axiom) const;
};

// Every semiring axiom with distinguished zero and one; one violation per
// failed axiom, carrying the first witness tuple in carrier order.
ValidationReport validate_semiring(const FiniteSemiring& s);

bool is_additively_idempotent(const FiniteSemiring& s);

// The subset with the operations restricted to it. Throws
// PreconditionError unless the subset contains zero and one and is closed
// under both operations. Element i of the result is subset[i] (sorted).
FiniteSemiring induced_subsemiring(const FiniteSemiring& s, std::span<const Elem> subset);

}  // namespace cesr
