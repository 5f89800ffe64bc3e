#include <doctest.h>

#include "cesr/analysis.hpp"
#include "cesr/constructions.hpp"
#include "cesr/error.hpp"
#include "cesr/registry.hpp"
#include "cesr/search.hpp"
#include "oracles.hpp"

using namespace cesr;

namespace {

FiniteSemiring zmod(std::uint32_t m) { return coefficient_semiring(CoeffDomain::integers_mod(m)); }

const FiniteSemiring& boolean() {
  static const FiniteSemiring b({"0", "1"}, OpTable(2, {0, 1, 1, 1}), OpTable(2, {0, 0, 0, 1}), 0, 1);
  return b;
}

std::vector<FiniteSemiring> small_census() {
  std::vector<FiniteSemiring> out;
  for (std::size_t n : {2, 3, 4}) {
    SearchSpec spec;
    spec.order = n;
    for (const auto& r : enumerate_all(spec)) out.push_back(r.semiring);
  }
  return out;
}

}  // namespace

TEST_CASE("the order 32 subset semiring is centrally essential and not commutative") {
  const auto s = subset_semiring(example_base_magma());
  const auto ce = is_centrally_essential(s);
  CHECK(ce.verdict);
  REQUIRE(ce.certificate);
  CHECK(ce.certificate->multipliers.size() == 24);
  CHECK(recheck(s, ce));
  CHECK_FALSE(is_commutative(s).verdict);
  CHECK(center(s) == oracle::center(s));
  CHECK(center(s).size() == 8);
  CHECK_FALSE(is_additively_cancellative(s).verdict);
  CHECK_FALSE(has_zero_sums(s).verdict);
  CHECK(evaluate_property(s, "mult_idempotent").verdict);
}

TEST_CASE("full and triangular 2x2 matrix semirings are not centrally essential") {
  for (auto domain : {CoeffDomain::prime_field(2), CoeffDomain::prime_field(3), CoeffDomain::integers_mod(4)})
    for (auto shape : {MatrixShape::full, MatrixShape::upper_triangular}) {
      const auto m = matrix_semiring(domain, 2, shape);
      const auto r = is_centrally_essential(m.semiring);
      CAPTURE(domain.name());
      CHECK_FALSE(r.verdict);
      CHECK(recheck(m.semiring, r));
      const Elem e11 = m.unit(0, 0);
      const auto idem = idempotent_analysis(m.semiring);
      const bool complemented = std::any_of(idem.complemented.begin(), idem.complemented.end(),
                                            [&](const auto& p) { return p.first == e11; });
      CHECK(complemented);
      CHECK_FALSE(is_central(m.semiring, e11));
    }
  // Frozen: E11 is the first failing element of M2(F2).
  const auto m2 = matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::full);
  CHECK(is_centrally_essential(m2.semiring).witness == std::vector<Elem>{1});
}

TEST_CASE("reducedness and cancellation on the integers mod 4") {
  const auto z4 = zmod(4);
  const auto red = is_reduced(z4);
  CHECK_FALSE(red.verdict);
  CHECK(red.witness == std::vector<Elem>{0, 2});
  CHECK(recheck(z4, red));
  const auto mc = is_left_multiplicatively_cancellative(z4);
  CHECK_FALSE(mc.verdict);
  CHECK(recheck(z4, mc));
  CHECK(nilpotent_elements(z4) == std::vector<Elem>{2});
  CHECK(is_reduced(zmod(6)).verdict);
}

TEST_CASE("division semirings") {
  CHECK(is_division_semiring(boolean()).verdict);
  CHECK(is_left_multiplicatively_cancellative(boolean()).verdict);
  const auto f2 = is_division_semiring(zmod(2));
  CHECK_FALSE(f2.verdict);
  CHECK(f2.note == "ring");
  CHECK(recheck(zmod(2), f2));
}

TEST_CASE("semisubtractive and zero sums") {
  CHECK(is_semisubtractive(zmod(5)).verdict);
  CHECK(has_zero_sums(zmod(3)).verdict);
  CHECK(is_semisubtractive(boolean()).verdict);
  CHECK_FALSE(has_zero_sums(boolean()).verdict);
}

TEST_CASE("semiprimeness") {
  CHECK(is_semiprime(zmod(6)).verdict);
  const auto z4 = is_semiprime(zmod(4));
  CHECK_FALSE(z4.verdict);
  CHECK(z4.witness == std::vector<Elem>{2});
  CHECK(principal_ideal(zmod(4), 2) == std::vector<Elem>{0, 2});
  CHECK(is_nilpotent_ideal(zmod(4), {0, 2}));
}

TEST_CASE("oracle: semiprime agrees with full ideal enumeration") {
  std::vector<FiniteSemiring> instances;
  for (std::uint32_t m = 2; m <= 16; ++m) instances.push_back(zmod(m));
  instances.push_back(matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::full).semiring);
  instances.push_back(matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::upper_triangular).semiring);
  instances.push_back(finite_group_ring(cyclic_group(2), CoeffDomain::prime_field(2)));
  instances.push_back(finite_group_ring(cyclic_group(4), CoeffDomain::prime_field(2)));
  instances.push_back(finite_group_ring(cyclic_group(2), CoeffDomain::prime_field(3)));
  for (const auto& s : small_census()) instances.push_back(s);
  CHECK(instances.size() >= 20);
  for (const auto& s : instances) {
    CAPTURE(s.order());
    CHECK(is_semiprime(s).verdict == oracle::semiprime(s));
  }
}

TEST_CASE("semiprime equivalence harness") {
  const auto fq8 = finite_group_ring(quaternion_group(), CoeffDomain::prime_field(2));
  const auto a = semiprime_equivalence_harness(fq8);
  CHECK_FALSE(a.semiprime);
  CHECK_FALSE(a.center_semiprime);
  CHECK_FALSE(a.no_nonzero_nilpotents);
  CHECK_FALSE(a.commutative_without_nilpotents);
  CHECK(a.equivalent());
  const auto z6 = semiprime_equivalence_harness(zmod(6));
  CHECK(z6.semiprime);
  CHECK(z6.center_semiprime);
  CHECK(z6.no_nonzero_nilpotents);
  CHECK(z6.commutative_without_nilpotents);
  const auto z4 = semiprime_equivalence_harness(zmod(4));
  CHECK_FALSE(z4.semiprime);
  CHECK(z4.equivalent());
  CHECK_THROWS_AS(semiprime_equivalence_harness(subset_semiring(example_base_magma())), PreconditionError);
}

TEST_CASE("F2 Q8 contains the nilpotent e + a^2") {
  const auto fq8 = finite_group_ring(quaternion_group(), CoeffDomain::prime_field(2));
  const Elem x = fq8.index_of("e+a^2");
  CHECK(fq8.mul(x, x) == fq8.zero());
  const auto nil = nilpotent_elements(fq8);
  CHECK(std::binary_search(nil.begin(), nil.end(), x));
}

TEST_CASE("property: invariants over the order 4 census and constructed rings") {
  auto instances = small_census();
  instances.push_back(subset_semiring(example_base_magma()));
  instances.push_back(matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::full).semiring);
  for (const auto& s : instances) {
    const auto c = center(s);
    CHECK(std::binary_search(c.begin(), c.end(), s.zero()));
    CHECK(std::binary_search(c.begin(), c.end(), s.one()));
    CHECK_NOTHROW(induced_subsemiring(s, c));
    const bool ce = is_centrally_essential(s).verdict;
    if (s.is_commutative()) CHECK(ce);
    if (ce) {
      const auto zd = zero_divisors(s);
      CHECK(zd.left == zd.right);
    }
    for (const auto& key : property_keys()) {
      CAPTURE(key);
      CHECK(recheck(s, evaluate_property(s, key)));
    }
  }
}

TEST_CASE("tampered witnesses fail the recheck") {
  const auto z4 = zmod(4);
  auto r = is_reduced(z4);
  r.witness = {1, 2};
  CHECK_FALSE(recheck(z4, r));
  const auto s = subset_semiring(example_base_magma());
  auto ce = is_centrally_essential(s);
  ce.certificate->multipliers.begin()->second.first = s.zero();
  CHECK_FALSE(recheck(s, ce));
}

TEST_CASE("unknown property keys are errors") { CHECK_THROWS_AS(evaluate_property(zmod(2), "shiny"), Error); }
