#include <doctest.h>

#include <random>

#include "cesr/error.hpp"
#include "cesr/exact.hpp"

using namespace cesr;

TEST_CASE("naturals reject negatives and parse decimal text") {
  CHECK(Natural::parse("12").to_string() == "12");
  CHECK_THROWS_AS(Natural::parse("-1"), Error);
  CHECK_THROWS_AS(Natural(mpz_class(-3)), Error);
  CHECK((Natural(2) + Natural(3)) == Natural(5));
  CHECK((Natural(2) * Natural(3)) == Natural(6));
}

TEST_CASE("nonnegative rationals are kept in lowest terms") {
  const auto q = NonNegRational::parse("6/4");
  CHECK(q.to_string() == "3/2");
  CHECK(q.num() == Natural(3));
  CHECK(q.den() == Natural(2));
  CHECK((q + NonNegRational::parse("1/2")) == NonNegRational(2));
  CHECK_THROWS_AS(NonNegRational::parse("-1/2"), Error);
  CHECK_THROWS_AS(NonNegRational::parse("1/0"), Error);
}

TEST_CASE("rationals carry a sign and a magnitude") {
  const auto r = Rational::parse("-3/6");
  CHECK(r.sign() == -1);
  CHECK(r.magnitude() == NonNegRational::parse("1/2"));
  CHECK((r - r).is_zero());
  CHECK((-r) == Rational::parse("1/2"));
}

TEST_CASE("modular integers reduce and refuse mixed moduli") {
  const ModularInt a(7, 4);
  CHECK(a.value() == 3);
  CHECK(a.to_string() == "3 mod 4");
  CHECK((a + ModularInt(1, 4)).is_zero());
  CHECK((a * a) == ModularInt(1, 4));
  CHECK(ModularInt(-1, 5).value() == 4);
  CHECK_THROWS_AS(a + ModularInt(1, 5), DomainMismatch);
  CHECK(ModularInt::parse("2 mod 3") == ModularInt(2, 3));
}

TEST_CASE("coefficient variant dispatch") {
  CHECK(to_string(parse_coefficient("3/2")) == "3/2");
  CHECK(std::holds_alternative<Rational>(parse_coefficient("-2")));
  CHECK(std::holds_alternative<Natural>(parse_coefficient("2")));
  CHECK(std::holds_alternative<ModularInt>(parse_coefficient("1 mod 2")));
  CHECK_THROWS_AS(coeff_add(Coefficient(Natural(1)), Coefficient(Integer(1))), DomainMismatch);
  CHECK_THROWS_AS(coeff_neg(Coefficient(Natural(1))), Error);
  CHECK(coeff_is_zero(coeff_neg(Coefficient(Natural(0)))));
  CHECK(to_mpq(Coefficient(Rational::parse("-1/3"))) == mpq_class(-1, 3));
}

TEST_CASE("coefficient domains") {
  CHECK(CoeffDomain::parse("qplus") == CoeffDomain::nonneg_rationals());
  CHECK(CoeffDomain::parse("f2") == CoeffDomain::prime_field(2));
  CHECK(CoeffDomain::parse("z4").name() == "z4");
  CHECK(CoeffDomain::parse("z5").name() == "f5");
  CHECK_THROWS_AS(CoeffDomain::prime_field(4), Error);
  CHECK_THROWS_AS(CoeffDomain::parse("banana"), Error);
  CHECK(CoeffDomain::integers_mod(6).elements().size() == 6);
  CHECK(CoeffDomain::integers_mod(4).parse_value("3") == Coefficient(ModularInt(3, 4)));
  CHECK_FALSE(CoeffDomain::naturals().contains(Coefficient(Integer(1))));
}

TEST_CASE("descriptors of the infinite domains") {
  const auto nat = descriptor_of(CoeffDomain::naturals());
  CHECK(nat.commutative);
  CHECK(nat.zero_sum_free);
  CHECK(nat.zero_divisor_free);
  CHECK(nat.additively_cancellative);
  CHECK_FALSE(nat.ring);
  const auto rat = descriptor_of(CoeffDomain::rationals());
  CHECK(rat.ring);
  CHECK_FALSE(rat.zero_sum_free);
}

TEST_CASE("descriptors of modular domains are computed exhaustively") {
  const auto f3 = descriptor_of(CoeffDomain::prime_field(3));
  CHECK(f3.zero_divisor_free);
  CHECK_FALSE(f3.zero_sum_free);
  CHECK(f3.ring);
  const auto z4 = descriptor_of(CoeffDomain::integers_mod(4));
  CHECK_FALSE(z4.zero_divisor_free);
}

TEST_CASE("property: ring axioms hold for random integers and rationals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a(static_cast<long>(rng() % 41) - 20), b(mpq_class(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9));
    const Rational c(mpq_class(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("property: round trip through to_string and parse") {
  for (const char* text : {"0", "17", "5/3", "-5/3", "2 mod 7"}) CHECK(to_string(parse_coefficient(text)) == text);
}
