#pragma once

// Finite groups given by Cayley tables: conjugacy classes, centers,
// commutator subgroups and the upper central series.

#include <optional>
#include <string>
#include <vector>

#include "cesr/tables.hpp"
#include "cesr/text_format.hpp"

namespace cesr {

class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Shape checks only; run validate_group for the axioms.
  FiniteGroup(std::vector<std::string> labels, OpTable cayley, Elem identity);

  std::size_t order() const noexcept { return cayley_.order(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem x) const { return labels_.at(x); }
  Elem index_of(const std::string& label) const;
  const OpTable& cayley() const noexcept { return cayley_; }
  Elem identity() const noexcept { return identity_; }

  Elem mul(Elem x, Elem y) const noexcept { return cayley_(x, y); }
  // Requires a valid group.
  Elem inverse(Elem x) const;
  Elem power(Elem x, unsigned k) const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::vector<std::string> labels_;
  OpTable cayley_;
  Elem identity_ = 0;
};

struct GroupValidation {
  bool valid = true;
  std::string reason;  // first failed axiom, empty if valid
};

GroupValidation validate_group(const FiniteGroup& g);

// From a parsed `group` document; the identity is detected when the file
// omits it. Throws PreconditionError if the table is not a group.
FiniteGroup group_from_document(const GroupDocument& doc);

struct ConjugacyClass {
  Elem representative;
  std::vector<Elem> members;  // sorted

  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
};

// Partition of the carrier, ordered by smallest member; the representative
// is the smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

std::vector<Elem> group_center(const FiniteGroup& g);
std::vector<Elem> commutator_subgroup(const FiniteGroup& g);
// Subgroup generated by a set (sorted).
std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& generators);

struct Quotient {
  FiniteGroup group;          // labels are coset representatives in brackets
  std::vector<Elem> coset_of;  // element -> coset index
};

// Coset table of G/N; throws PreconditionError unless N is normal.
Quotient quotient_group(const FiniteGroup& g, const std::vector<Elem>& normal_subgroup);

// {e} = C0 <= C1 <= ... until the chain reaches G or stops growing.
std::vector<std::vector<Elem>> upper_central_series(const FiniteGroup& g);

struct NilpotenceClass {
  std::optional<std::size_t> value;  // empty: not nilpotent

  bool nilpotent() const noexcept { return value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : "not nilpotent"; }
};

// Length of the upper central series when it reaches G. The trivial group
// reports 0.
NilpotenceClass nilpotence_class(const FiniteGroup& g);

// q8, c<n>, d<2n> (dihedral of order 2n), s3 (= d6).
FiniteGroup builtin_group(const std::string& name);

FiniteGroup quaternion_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t order);

}  // namespace cesr
