#include <doctest.h>

#include "cesr/analysis.hpp"
#include "cesr/constructions.hpp"
#include "cesr/error.hpp"
#include "cesr/matrix_element.hpp"
#include "cesr/registry.hpp"
#include "cesr/search.hpp"
#include "oracles.hpp"

using namespace cesr;

namespace {

bool sums_to_zero(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (x != s.zero() && y != s.zero() && s.add(x, y) == s.zero()) return true;
  return false;
}

// Multiplicative monoids with zero taken from the order 3 and 4 census.
std::vector<FiniteMagma> census_monoids() {
  std::vector<FiniteMagma> out;
  for (std::size_t n : {3, 4}) {
    SearchSpec spec;
    spec.order = n;
    for (const auto& r : enumerate_all(spec)) out.push_back({r.semiring.labels(), r.semiring.mul_table()});
  }
  return out;
}

}  // namespace

TEST_CASE("subset semiring of the five-element semigroup") {
  const auto base = example_base_magma();
  const auto s = subset_semiring(base);
  CHECK(s.order() == 32);
  CHECK(validate_semiring(s).ok());
  CHECK(is_additively_idempotent(s));
  CHECK_FALSE(sums_to_zero(s));
  CHECK(s.zero() == 0);
  CHECK(s.one() == 2);
  CHECK(s.label(19) == "{0,1,c}");
  // Frozen from the set-based oracle.
  const std::vector<std::uint64_t> frozen = {0, 1, 2, 3, 16, 17, 18, 19};
  CHECK(oracle::subset_center(base.table) == frozen);
}

TEST_CASE("subset semiring preconditions") {
  CHECK_THROWS_AS(subset_semiring(FiniteMagma{{"0"}, OpTable(1, {0})}), PreconditionError);
  const auto two = subset_semiring(FiniteMagma{{"0", "1"}, OpTable(2, {0, 0, 0, 1})});
  CHECK(two.order() == 4);
  CHECK(two.label(two.one()) == "{1}");
  // No identity: constant zero product.
  CHECK_THROWS_AS(subset_semiring(FiniteMagma{{"0", "1"}, OpTable(2, {0, 0, 0, 0})}), PreconditionError);
  // Not associative.
  CHECK_THROWS_AS(subset_semiring(FiniteMagma{{"0", "1", "a", "b"}, OpTable(4, {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 2, 0, 3, 0, 0})}),
                  PreconditionError);
  std::vector<std::string> labels(17, "x");
  CHECK_THROWS_AS(subset_semiring(FiniteMagma{labels, OpTable(17)}), ResourceLimit);
}

TEST_CASE("property: subset semirings are valid, additively idempotent and zero-sum-free") {
  for (const auto& m : census_monoids()) {
    const auto s = subset_semiring(m);
    CHECK(validate_semiring(s).ok());
    CHECK(is_additively_idempotent(s));
    CHECK_FALSE(sums_to_zero(s));
  }
}

TEST_CASE("matrix semirings over F2") {
  const auto m2 = matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::full);
  CHECK(m2.semiring.order() == 16);
  CHECK(validate_semiring(m2.semiring).ok());
  CHECK(m2.unit(0, 0) == 1);
  CHECK(m2.semiring.add(m2.unit(0, 0), m2.unit(1, 1)) == m2.semiring.one());
  CHECK(is_additively_cancellative(m2.semiring).verdict);
  CHECK(m2.semiring.label(m2.semiring.one()) == "[1,0;0,1]");
  const auto t2 = matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::upper_triangular);
  CHECK(t2.semiring.order() == 8);
  CHECK(validate_semiring(t2.semiring).ok());
  CHECK_THROWS_AS(t2.encode({0, 0, 1, 0}), PreconditionError);
  CHECK(t2.decode(t2.encode({1, 1, 0, 1})) == std::vector<Elem>{1, 1, 0, 1});
}

TEST_CASE("matrix semiring size cap") {
  CHECK_THROWS_AS(matrix_semiring(CoeffDomain::integers_mod(4), 3, MatrixShape::full), ResourceLimit);
  CHECK_NOTHROW(matrix_semiring(CoeffDomain::integers_mod(4), 2, MatrixShape::full));
}

TEST_CASE("property: constructed matrix and group rings validate") {
  for (std::uint32_t m : {2u, 3u, 4u})
    for (auto shape : {MatrixShape::full, MatrixShape::upper_triangular})
      CHECK(validate_semiring(matrix_semiring(CoeffDomain::integers_mod(m), 2, shape).semiring).ok());
  CHECK(validate_semiring(finite_group_ring(cyclic_group(3), CoeffDomain::prime_field(2))).ok());
  CHECK(validate_semiring(finite_group_ring(builtin_group("s3"), CoeffDomain::prime_field(2))).ok());
}

TEST_CASE("group rings") {
  const auto fq8 = finite_group_ring(quaternion_group(), CoeffDomain::prime_field(2));
  CHECK(fq8.order() == 256);
  CHECK(validate_semiring(fq8).ok());
  CHECK_FALSE(fq8.is_commutative());
  const auto fc2 = finite_group_ring(cyclic_group(2), CoeffDomain::prime_field(2));
  CHECK(fc2.order() == 4);
  CHECK(fc2.is_commutative());
  CHECK(fq8.label(group_ring_index({1, 0, 1, 0, 0, 0, 0, 0}, 2)) == "e+a^2");
  CHECK(group_ring_coefficients(5, 8, 2) == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(finite_group_ring(quaternion_group(), CoeffDomain::naturals()), PreconditionError);
}

TEST_CASE("difference ring of the integers mod 4 is a copy of it") {
  const auto z4 = coefficient_semiring(CoeffDomain::integers_mod(4));
  const auto d = difference_ring(z4);
  CHECK(d.ring.order() == 4);
  CHECK(validate_semiring(d.ring).ok());
  CHECK(isomorphic(d.ring, z4));
}

TEST_CASE("property: difference rings have inverses, embed homomorphically and keep central elements central") {
  std::vector<FiniteSemiring> inputs = {coefficient_semiring(CoeffDomain::integers_mod(6)),
                                        matrix_semiring(CoeffDomain::prime_field(2), 2, MatrixShape::full).semiring,
                                        finite_group_ring(quaternion_group(), CoeffDomain::prime_field(2))};
  for (const auto& s : inputs) {
    const auto d = difference_ring(s);
    const auto& r = d.ring;
    for (Elem x = 0; x < r.order(); ++x) {
      bool inverse = false;
      for (Elem y = 0; y < r.order() && !inverse; ++y) inverse = r.add(x, y) == r.zero();
      CHECK(inverse);
    }
    for (Elem x = 0; x < s.order(); ++x)
      for (Elem y = 0; y < s.order(); ++y) {
        CHECK(d.embedding[s.add(x, y)] == r.add(d.embedding[x], d.embedding[y]));
        CHECK(d.embedding[s.mul(x, y)] == r.mul(d.embedding[x], d.embedding[y]));
      }
    const auto cr = oracle::center(r);
    for (Elem c : oracle::center(s)) CHECK(std::binary_search(cr.begin(), cr.end(), d.embedding[c]));
  }
}

TEST_CASE("difference ring refuses non-cancellative input") {
  const FiniteSemiring boolean({"0", "1"}, OpTable(2, {0, 1, 1, 1}), OpTable(2, {0, 0, 0, 1}), 0, 1);
  CHECK_THROWS_AS(difference_ring(boolean), PreconditionError);
}

TEST_CASE("symbolic matrices") {
  const auto nat = CoeffDomain::naturals();
  const auto a = MatrixElement::from_ints(nat, 3, MatrixShape::upper_triangular, {1, 1, 1, 0, 1, 2, 0, 0, 1});
  const auto b = MatrixElement::from_ints(nat, 3, MatrixShape::upper_triangular, {1, 2, 1, 0, 1, 1, 0, 0, 1});
  CHECK_FALSE(a * b == b * a);
  CHECK(MatrixElement::identity(nat, 3) * a == a);
  CHECK_THROWS_AS(MatrixElement::from_ints(nat, 2, MatrixShape::upper_triangular, {1, 0, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(MatrixElement::from_ints(nat, 2, MatrixShape::full, {1, 0, -1, 1}), Error);
  CHECK(a.to_string() == "[1,1,1;0,1,2;0,0,1]");
}
