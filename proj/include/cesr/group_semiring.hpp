#pragma once

// Group semirings S·G over symbolic coefficient domains.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cesr/exact.hpp"
#include "cesr/field_algebra.hpp"
#include "cesr/groups.hpp"

namespace cesr {

// Finite formal sum of group elements. No zero coefficient is stored.
class GSElement {
 public:
  GSElement(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain);

  static GSElement basis(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, Elem h);
  // "3/2*a + b + 1*a^2b"; "0" is the empty sum. Subtraction is accepted
  // only over ring domains.
  static GSElement parse(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, std::string_view text);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  const CoeffDomain& domain() const noexcept { return domain_; }
  const std::map<Elem, Coefficient>& terms() const noexcept { return terms_; }
  Coefficient coefficient(Elem h) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  // Adds c to the coefficient of h.
  void accumulate(Elem h, const Coefficient& c);
  GSElement scaled(const Coefficient& c) const;
  std::string to_string() const;

  friend GSElement operator+(const GSElement& x, const GSElement& y);
  friend GSElement operator*(const GSElement& x, const GSElement& y);
  friend bool operator==(const GSElement& x, const GSElement& y);

 private:
  std::shared_ptr<const FiniteGroup> group_;
  CoeffDomain domain_;
  std::map<Elem, Coefficient> terms_;
};

inline GSElement gs_add(const GSElement& x, const GSElement& y) { return x + y; }
inline GSElement gs_mul(const GSElement& x, const GSElement& y) { return x * y; }

// Sum of the given members, each with coefficient one.
GSElement class_sum(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, const std::vector<Elem>& members);

// Commutes with every group element. Sufficient for centrality because the
// coefficient domains are commutative; throws otherwise.
bool gs_is_central(const GSElement& x);

enum class CertificateStatus { abelian, certified, failed, hypotheses_not_met };

struct CenterIdentity {
  Elem h;
  GSElement product;   // h * sum of the center
  GSElement coset;     // sum of h Z(G)
  std::string name;    // "K_a" when hZ(G) is the class of h, else "aZ"
  bool holds = false;  // product == coset, central and nonzero
};

struct GroupSemiringCertificate {
  CertificateStatus status = CertificateStatus::hypotheses_not_met;
  NilpotenceClass nilpotence;
  std::vector<CenterIdentity> identities;  // one per non-central h
  std::string verdict;
};

// CE certificate for groups of nilpotence class at most 2 over commutative
// coefficient domains without zero-divisors or zero sums. Class above 2 is
// reported as hypotheses not met, never as a refutation. Throws
// PreconditionError when the descriptor lacks a required flag.
GroupSemiringCertificate certify_group_semiring(const std::shared_ptr<const FiniteGroup>& group,
                                                const CoeffDomain& domain);

// z with x + z = y, when every coefficient of x is at most the matching
// coefficient of y. Naturals and nonnegative rationals only.
std::optional<GSElement> gs_subtractive_compare(const GSElement& x, const GSElement& y);

// Coordinate vector in the group algebra over Q.
Vec embed(const GSElement& x);

struct WitnessSuite {
  bool non_commutative = false;
  bool add_cancellative = false;
  bool reduced_probe_clean = false;
  bool reduced_pairs_clean = false;
  bool zero_divisor_probe_clean = false;
  bool ce_certified = false;
  bool difference_ring_has_zero_divisors = false;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string reduced_summary;
  std::string zero_divisor_pair;  // in the difference ring, for the record

  bool passed() const noexcept {
    return non_commutative && add_cancellative && reduced_probe_clean && reduced_pairs_clean &&
           zero_divisor_probe_clean && ce_certified && difference_ring_has_zero_divisors;
  }
};

// Quaternion group semiring over nonnegative rationals: non-commutativity,
// cancellativity, seeded reduced and zero-divisor probes, CE certificate.
WitnessSuite quaternion_witness_suite(std::uint64_t seed = kDefaultSeed, std::size_t trials = 1000);

}  // namespace cesr
