#pragma once

// Exact coefficient domains: naturals, integers, non-negative rationals,
// signed rationals and integers modulo m. All values are immutable and
// canonical, so equality is structural.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace cesr {

class Natural {
 public:
  Natural() = default;
  Natural(unsigned long v) : v_(v) {}  // NOLINT: implicit from literals
  explicit Natural(mpz_class v);

  const mpz_class& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }
  static Natural parse(std::string_view text);

  friend Natural operator+(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ + b.v_)); }
  friend Natural operator*(const Natural& a, const Natural& b) { return Natural(mpz_class(a.v_ * b.v_)); }
  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) { return cmp(a.v_, b.v_) <=> 0; }

 private:
  mpz_class v_;
};

class Integer {
 public:
  Integer() = default;
  Integer(long v) : v_(v) {}  // NOLINT
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  const mpz_class& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }
  static Integer parse(std::string_view text);

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  Integer operator-() const { return Integer(mpz_class(-v_)); }
  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) <=> 0; }

 private:
  mpz_class v_;
};

// Always in lowest terms with a positive denominator.
class NonNegRational {
 public:
  NonNegRational() = default;
  NonNegRational(unsigned long v) : v_(v) {}  // NOLINT
  NonNegRational(const Natural& num, const Natural& den);
  explicit NonNegRational(mpq_class v);

  const mpq_class& value() const noexcept { return v_; }
  Natural num() const { return Natural(v_.get_num()); }
  Natural den() const { return Natural(v_.get_den()); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }
  static NonNegRational parse(std::string_view text);

  friend NonNegRational operator+(const NonNegRational& a, const NonNegRational& b) {
    return NonNegRational(mpq_class(a.v_ + b.v_));
  }
  friend NonNegRational operator*(const NonNegRational& a, const NonNegRational& b) {
    return NonNegRational(mpq_class(a.v_ * b.v_));
  }
  friend bool operator==(const NonNegRational& a, const NonNegRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const NonNegRational& a, const NonNegRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT
  explicit Rational(mpq_class v);

  const mpq_class& value() const noexcept { return v_; }
  int sign() const noexcept { return sgn(v_); }
  NonNegRational magnitude() const { return NonNegRational(mpq_class(abs(v_))); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <=> 0; }

 private:
  mpq_class v_;
};

class ModularInt {
 public:
  ModularInt(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  // "k mod m"
  std::string to_string() const;
  static ModularInt parse(std::string_view text);

  friend ModularInt operator+(const ModularInt& a, const ModularInt& b);
  friend ModularInt operator*(const ModularInt& a, const ModularInt& b);
  ModularInt operator-() const { return ModularInt(modulus_ - value_, modulus_); }
  friend bool operator==(const ModularInt&, const ModularInt&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

using Coefficient = std::variant<Natural, Integer, NonNegRational, Rational, ModularInt>;

Coefficient coeff_add(const Coefficient& a, const Coefficient& b);
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b);
// Only for ring domains (integers, rationals, modular).
Coefficient coeff_neg(const Coefficient& a);
bool coeff_is_zero(const Coefficient& a);
std::string to_string(const Coefficient& a);
// Auto-detects the domain from the text: "k mod m" is modular, a leading
// '-' is a signed rational, a '/' is a non-negative rational, anything
// else a natural.
Coefficient parse_coefficient(std::string_view text);
// Exact value as a rational; modular values map to their representative.
mpq_class to_mpq(const Coefficient& a);

enum class DomainKind { natural, integer, nonneg_rational, rational, modular };

struct CoefficientDescriptor {
  bool commutative = false;
  bool zero_sum_free = false;
  bool zero_divisor_free = false;
  bool additively_cancellative = false;
  bool ring = false;

  friend bool operator==(const CoefficientDescriptor&, const CoefficientDescriptor&) = default;
};

class CoeffDomain {
 public:
  static CoeffDomain naturals() { return CoeffDomain(DomainKind::natural, 0); }
  static CoeffDomain integers() { return CoeffDomain(DomainKind::integer, 0); }
  static CoeffDomain nonneg_rationals() { return CoeffDomain(DomainKind::nonneg_rational, 0); }
  static CoeffDomain rationals() { return CoeffDomain(DomainKind::rational, 0); }
  static CoeffDomain integers_mod(std::uint32_t m);
  // Throws PreconditionError unless p is prime.
  static CoeffDomain prime_field(std::uint32_t p);
  // "nat", "int", "qplus", "rat", "z<m>", "f<p>".
  static CoeffDomain parse(std::string_view name);

  DomainKind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::string name() const;
  bool is_finite() const noexcept { return kind_ == DomainKind::modular; }
  bool is_ring() const noexcept;
  std::size_t size() const;  // finite domains only

  Coefficient zero() const { return from_int(0); }
  Coefficient one() const { return from_int(1); }
  Coefficient from_int(long v) const;
  bool contains(const Coefficient& c) const;
  // Carrier of a finite domain in canonical order 0, 1, ..., m-1.
  std::vector<Coefficient> elements() const;
  // Accepts the rendered forms; modular domains also accept a bare "k".
  Coefficient parse_value(std::string_view text) const;

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;

 private:
  CoeffDomain(DomainKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  DomainKind kind_;
  std::uint32_t modulus_;
};

// Flags of a builtin domain. Finite domains are scanned exhaustively.
CoefficientDescriptor descriptor_of(const CoeffDomain& domain);

bool is_prime(std::uint32_t n);

}  // namespace cesr
