#include <doctest.h>

#include <random>

#include "cesr/error.hpp"
#include "cesr/group_semiring.hpp"
#include "cesr/analysis.hpp"
#include "cesr/constructions.hpp"
#include "oracles.hpp"

using namespace cesr;

namespace {

std::shared_ptr<const FiniteGroup> q8() {
  static const auto g = std::make_shared<const FiniteGroup>(quaternion_group());
  return g;
}

GSElement random_element(std::mt19937_64& rng, const std::shared_ptr<const FiniteGroup>& g, const CoeffDomain& d) {
  GSElement x(g, d);
  for (Elem h = 0; h < g->order(); ++h)
    if (rng() % 2) x.accumulate(h, Coefficient(NonNegRational(mpq_class(static_cast<long>(rng() % 5), 1 + rng() % 3))));
  return x;
}

}  // namespace

TEST_CASE("parsing and printing group semiring elements") {
  const auto qp = CoeffDomain::nonneg_rationals();
  const auto x = GSElement::parse(q8(), qp, "3/2*a + b + a");
  CHECK(x.coefficient(q8()->index_of("a")) == Coefficient(NonNegRational::parse("5/2")));
  CHECK(x.to_string() == "5/2*a + b");
  CHECK(GSElement::parse(q8(), qp, "0").is_zero());
  CHECK_THROWS_AS(GSElement::parse(q8(), qp, "a - b"), DomainMismatch);
  CHECK_THROWS_AS(GSElement::parse(q8(), qp, "3/2*z"), Error);
  const auto r = GSElement::parse(q8(), CoeffDomain::rationals(), "a - a^3");
  CHECK(r.coefficient(q8()->index_of("a^3")) == Coefficient(Rational(-1)));
}

TEST_CASE("products follow the group law") {
  const auto nat = CoeffDomain::naturals();
  const auto a = GSElement::basis(q8(), nat, q8()->index_of("a"));
  const auto b = GSElement::basis(q8(), nat, q8()->index_of("b"));
  CHECK(b * a == GSElement::basis(q8(), nat, q8()->index_of("a^3b")));
  CHECK_FALSE(a * b == b * a);
  CHECK_FALSE(gs_is_central(a));
  const auto k = class_sum(q8(), nat, {q8()->index_of("a"), q8()->index_of("a^3")});
  CHECK(gs_is_central(k));
}

TEST_CASE("the quaternion group semiring over nonnegative rationals is certified") {
  const auto cert = certify_group_semiring(q8(), CoeffDomain::nonneg_rationals());
  CHECK(cert.status == CertificateStatus::certified);
  CHECK(cert.nilpotence.value == 2);
  CHECK(cert.verdict == "centrally essential (class-2 certificate)");
  REQUIRE(cert.identities.size() == 6);
  const auto qp = CoeffDomain::nonneg_rationals();
  const auto sigma_z = class_sum(q8(), qp, group_center(*q8()));
  for (const auto& id : cert.identities) {
    CAPTURE(id.name);
    CHECK(id.holds);
    // Named after the class representative, the smallest member.
    const auto classes = conjugacy_classes(*q8());
    const auto cls = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
      return std::binary_search(c.members.begin(), c.members.end(), id.h);
    });
    CHECK(id.name == "K_" + q8()->label(cls->representative));
    CHECK(GSElement::basis(q8(), qp, id.h) * sigma_z == id.product);
    CHECK(id.product == id.coset);
    CHECK(gs_is_central(id.coset));
    CHECK(id.coset.terms().size() == 2);
  }
}

TEST_CASE("abelian and higher class groups") {
  const auto c4 = std::make_shared<const FiniteGroup>(cyclic_group(4));
  const auto ab = certify_group_semiring(c4, CoeffDomain::naturals());
  CHECK(ab.status == CertificateStatus::abelian);
  CHECK(ab.verdict == "abelian, trivially CE");
  const auto d16 = std::make_shared<const FiniteGroup>(dihedral_group(16));
  const auto hi = certify_group_semiring(d16, CoeffDomain::nonneg_rationals());
  CHECK(hi.status == CertificateStatus::hypotheses_not_met);
  CHECK(hi.verdict == "hypotheses not met (class 3); no conclusion at this scale");
  CHECK_THROWS_AS(certify_group_semiring(q8(), CoeffDomain::rationals()), PreconditionError);
  CHECK_THROWS_AS(certify_group_semiring(q8(), CoeffDomain::integers_mod(4)), PreconditionError);
}

TEST_CASE("property: class 2 identities hold for the dihedral group of order 8 over naturals") {
  const auto d8 = std::make_shared<const FiniteGroup>(dihedral_group(8));
  const auto cert = certify_group_semiring(d8, CoeffDomain::naturals());
  CHECK(cert.status == CertificateStatus::certified);
  CHECK(cert.identities.size() == 6);
  for (const auto& id : cert.identities) CHECK(id.holds);
}

TEST_CASE("the rational group algebra of Q8 is not centrally essential") {
  const auto a = to_group_algebra(*q8(), Field::rationals());
  CHECK(algebra_center_basis(a).dimension() == oracle::group_algebra_center_dimension(q8()->cayley()));
  const Vec x = a.sub(a.basis_vector(1), a.basis_vector(3));
  CHECK(a.format(x) == "a - a^3");
  CHECK(ce_failure_witness_check(a, x));
  CHECK_FALSE(oracle::has_central_central_multiple(q8()->cayley(), x));
  // A central element is never a failure witness.
  const Vec k = a.add(a.basis_vector(1), a.basis_vector(3));
  CHECK_FALSE(ce_failure_witness_check(a, k));
  CHECK(oracle::has_central_central_multiple(q8()->cayley(), k));
  CHECK_THROWS_AS(ce_failure_witness_check(a, a.zero()), PreconditionError);
}

TEST_CASE("oracle: failure witnesses agree with direct solving on the basis and simple sums") {
  const auto a = to_group_algebra(*q8(), Field::rationals());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j)
      for (int sign : {1, -1}) {
        Vec x = a.basis_vector(i);
        if (j != i) x = sign > 0 ? a.add(x, a.basis_vector(j)) : a.sub(x, a.basis_vector(j));
        if (a.is_zero(x)) continue;
        CAPTURE(a.format(x));
        CHECK(ce_failure_witness_check(a, x) == !oracle::has_central_central_multiple(q8()->cayley(), x));
      }
}

TEST_CASE("F2 Q8: linear algebra center matches the table center") {
  const auto alg = to_group_algebra(*q8(), Field::prime(2));
  const auto ring = finite_group_ring(*q8(), CoeffDomain::prime_field(2));
  const auto basis = algebra_center_basis(alg);
  CHECK((std::size_t{1} << basis.dimension()) == center(ring).size());
  for (Elem x : center(ring)) {
    const auto coeffs = group_ring_coefficients(x, 8, 2);
    Vec v(coeffs.begin(), coeffs.end());
    CHECK(in_span(alg.field(), basis, v));
  }
  const auto probe = reduced_probe(alg, 200);
  REQUIRE(probe.nilpotent);
  CHECK(alg.is_zero(alg.mul(*probe.nilpotent, *probe.nilpotent)));
  CHECK(probe.summary.rfind("nilpotent found: ", 0) == 0);
  const Vec e_a2 = alg.add(alg.unit(), alg.basis_vector(2));
  CHECK(alg.is_zero(alg.mul(e_a2, e_a2)));
}

TEST_CASE("reduced probes on semisimple algebras come back clean") {
  for (const auto& g : {cyclic_group(2), quaternion_group()}) {
    const auto alg = to_group_algebra(g, Field::rationals());
    const auto probe = reduced_probe(alg, 300, 99);
    CHECK_FALSE(probe.nilpotent);
    CHECK(probe.summary == "no nilpotent found in 300 trials");
    CHECK(probe.seed == 99);
  }
}

TEST_CASE("zero-divisor pairs in the rational group algebra") {
  const auto alg = to_group_algebra(*q8(), Field::rationals());
  const auto pair = find_zero_divisor_pair(alg);
  REQUIRE(pair);
  CHECK(alg.is_zero(alg.mul(pair->first, pair->second)));
  CHECK_FALSE(alg.is_zero(pair->first));
}

TEST_CASE("property: embedding into the rational group algebra is a homomorphism") {
  const auto qp = CoeffDomain::nonneg_rationals();
  const auto alg = to_group_algebra(*q8(), Field::rationals());
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const auto x = random_element(rng, q8(), qp), y = random_element(rng, q8(), qp);
    CHECK(embed(x + y) == alg.add(embed(x), embed(y)));
    CHECK(embed(x * y) == alg.mul(embed(x), embed(y)));
    if (!(x + y == y + x)) FAIL("addition must commute");
    // Cancellation: x + z = y + z forces x = y.
    CHECK((x + y == y + y) == (x == y));
  }
}

TEST_CASE("subtractive comparison") {
  const auto nat = CoeffDomain::naturals();
  const auto x = GSElement::parse(q8(), nat, "a");
  const auto y = GSElement::parse(q8(), nat, "2*a + b");
  const auto z = gs_subtractive_compare(x, y);
  REQUIRE(z);
  CHECK(x + *z == y);
  CHECK_FALSE(gs_subtractive_compare(y, x + GSElement::parse(q8(), nat, "a^2")));
  const auto q = CoeffDomain::rationals();
  CHECK_THROWS_AS(gs_subtractive_compare(GSElement::parse(q8(), q, "a"), GSElement::parse(q8(), q, "b")),
                  PreconditionError);
}

TEST_CASE("witness suite for the quaternion group semiring") {
  const auto w = quaternion_witness_suite(kDefaultSeed, 300);
  CHECK(w.non_commutative);
  CHECK(w.add_cancellative);
  CHECK(w.reduced_probe_clean);
  CHECK(w.reduced_pairs_clean);
  CHECK(w.zero_divisor_probe_clean);
  CHECK(w.ce_certified);
  CHECK(w.difference_ring_has_zero_divisors);
  CHECK(w.passed());
  CHECK(w.trials == 300);
}
