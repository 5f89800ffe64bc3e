#pragma once

// Decision procedures for semiring properties over finite tables. Each
// returns a verdict plus a witness that can be re-checked against the raw
// tables on its own (see recheck()).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesr/tables.hpp"

namespace cesr {

// For each nonzero non-central x, a pair (y, z) of nonzero central
// elements with xy = z.
struct CentralityCertificate {
  std::map<Elem, std::pair<Elem, Elem>> multipliers;
};

struct PropertyReport {
  std::string property;
  bool verdict = false;
  // Meaning depends on the property; documented per predicate below.
  std::vector<Elem> witness;
  std::optional<CentralityCertificate> certificate;
  std::string note;
};

bool is_central(const FiniteSemiring& s, Elem x);
// Sorted; always contains zero and one.
std::vector<Elem> center(const FiniteSemiring& s);

// True: certificate for every nonzero non-central x. False: witness {x},
// the first nonzero x in carrier order with no nonzero central y making
// xy nonzero and central.
PropertyReport is_centrally_essential(const FiniteSemiring& s);

// False: first pair (x, y), x != y, with x^2 + y^2 = xy + yx.
PropertyReport is_reduced(const FiniteSemiring& s);
// False: first (x, y, z), x != y, with x + z = y + z.
PropertyReport is_additively_cancellative(const FiniteSemiring& s);
// False: first pair (a, b), a != b, with no x giving a + x = b or b + x = a.
PropertyReport is_semisubtractive(const FiniteSemiring& s);
// True: first pair (x, y) of nonzero elements with x + y = 0.
PropertyReport has_zero_sums(const FiniteSemiring& s);
// False: first (x, y) with xy != yx.
PropertyReport is_commutative(const FiniteSemiring& s);

struct ZeroDivisors {
  std::vector<Elem> left;   // nonzero a with ab = 0 for some nonzero b
  std::vector<Elem> right;  // nonzero a with ba = 0 for some nonzero b
};
ZeroDivisors zero_divisors(const FiniteSemiring& s);

struct IdempotentAnalysis {
  std::vector<Elem> idempotents;
  // (e, f) with e, f idempotent and e + f = 1; one entry per e, first f.
  std::vector<std::pair<Elem, Elem>> complemented;
  std::vector<Elem> central;
};
IdempotentAnalysis idempotent_analysis(const FiniteSemiring& s);

// Nonzero x with x^k = 0 for some k <= order.
std::vector<Elem> nilpotent_elements(const FiniteSemiring& s);

// Smallest set containing the generators (and 0) closed under addition
// and under multiplication by arbitrary elements on both sides. Sorted.
std::vector<Elem> ideal_closure(const FiniteSemiring& s, const std::vector<Elem>& generators);
std::vector<Elem> principal_ideal(const FiniteSemiring& s, Elem a);
// Ideal generated by all products ij.
std::vector<Elem> ideal_product(const FiniteSemiring& s, const std::vector<Elem>& i, const std::vector<Elem>& j);
// I^k = {0} for some k <= order.
bool is_nilpotent_ideal(const FiniteSemiring& s, const std::vector<Elem>& ideal);

inline constexpr std::size_t kMaxSemiprimeOrder = 512;

// False: witness {a}, the first nonzero a whose principal ideal is
// nilpotent. Every nonzero nilpotent ideal contains one, so principal
// ideals decide the property. Throws ResourceLimit above order 512.
PropertyReport is_semiprime(const FiniteSemiring& s);

// False: (x, y, z) with x nonzero, y != z and xy = xz (left) or yx = zx
// (right).
PropertyReport is_left_multiplicatively_cancellative(const FiniteSemiring& s);
PropertyReport is_right_multiplicatively_cancellative(const FiniteSemiring& s);

// Every nonzero element has a two-sided inverse and s is not a ring.
// False: witness {x} without an inverse, or empty with note "ring".
PropertyReport is_division_semiring(const FiniteSemiring& s);

struct SemiprimeEquivalence {
  bool semiprime = false;
  bool center_semiprime = false;
  bool no_nonzero_nilpotents = false;
  bool commutative_without_nilpotents = false;

  bool equivalent() const noexcept {
    return semiprime == center_semiprime && semiprime == no_nonzero_nilpotents &&
           semiprime == commutative_without_nilpotents;
  }
};

// Evaluates the four equivalent conditions for an additively cancellative,
// semisubtractive, centrally essential semiring; the center is treated as
// a semiring with the induced operations. Throws PreconditionError when a
// hypothesis fails.
SemiprimeEquivalence semiprime_equivalence_harness(const FiniteSemiring& s);

// Stable report keys: commutative, centrally_essential, reduced,
// add_cancellative, semisubtractive, semiprime, zero_sums,
// mult_cancellative_left, mult_cancellative_right, division_semiring,
// add_idempotent, mult_idempotent, nilpotents, zero_divisors, ring.
const std::vector<std::string>& property_keys();
PropertyReport evaluate_property(const FiniteSemiring& s, const std::string& key);

// Re-checks a report directly against the tables: witnesses are verified
// element by element, witness-free verdicts are recomputed.
bool recheck(const FiniteSemiring& s, const PropertyReport& report);

}  // namespace cesr
