#include "cesr/exact.hpp"

#include <algorithm>
#include <cctype>

#include "cesr/error.hpp"

namespace cesr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_mpz(std::string_view s, bool allow_sign) {
  s = trim(s);
  std::string_view digits = s;
  if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw Error("not an integer: '" + std::string(s) + "'");
  return mpz_class(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

mpq_class parse_mpq(std::string_view s, bool allow_sign) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_mpz(s, allow_sign));
  mpz_class num = parse_mpz(s.substr(0, slash), allow_sign);
  mpz_class den = parse_mpz(s.substr(slash + 1), false);
  if (den == 0) throw Error("zero denominator: '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

template <class T>
const T& same_kind(const Coefficient& c) {
  if (auto p = std::get_if<T>(&c)) return *p;
  throw DomainMismatch("coefficients from different domains");
}

}  // namespace

Natural::Natural(mpz_class v) : v_(std::move(v)) {
  if (sgn(v_) < 0) throw PreconditionError("negative value for a natural number");
}

Natural Natural::parse(std::string_view text) { return Natural(parse_mpz(text, false)); }

Integer Integer::parse(std::string_view text) { return Integer(parse_mpz(text, true)); }

NonNegRational::NonNegRational(const Natural& num, const Natural& den) {
  if (den.is_zero()) throw PreconditionError("zero denominator");
  v_ = mpq_class(num.value(), den.value());
  v_.canonicalize();
}

NonNegRational::NonNegRational(mpq_class v) : v_(std::move(v)) {
  v_.canonicalize();
  if (sgn(v_) < 0) throw PreconditionError("negative value for a non-negative rational");
}

NonNegRational NonNegRational::parse(std::string_view text) { return NonNegRational(parse_mpq(text, false)); }

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) { return Rational(parse_mpq(text, true)); }

ModularInt::ModularInt(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  auto r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

std::string ModularInt::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(modulus_);
}

ModularInt ModularInt::parse(std::string_view text) {
  text = trim(text);
  auto pos = text.find(" mod ");
  if (pos == std::string_view::npos) throw Error("expected 'k mod m': '" + std::string(text) + "'");
  auto k = std::stoll(std::string(trim(text.substr(0, pos))));
  auto m = std::stoul(std::string(trim(text.substr(pos + 5))));
  return ModularInt(k, static_cast<std::uint32_t>(m));
}

ModularInt operator+(const ModularInt& a, const ModularInt& b) {
  if (a.modulus_ != b.modulus_) throw DomainMismatch("modulus mismatch");
  return ModularInt(static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_);
}

ModularInt operator*(const ModularInt& a, const ModularInt& b) {
  if (a.modulus_ != b.modulus_) throw DomainMismatch("modulus mismatch");
  auto p = static_cast<std::uint64_t>(a.value_) * b.value_ % a.modulus_;
  return ModularInt(static_cast<std::int64_t>(p), a.modulus_);
}

Coefficient coeff_add(const Coefficient& a, const Coefficient& b) {
  return std::visit([&](const auto& x) -> Coefficient {
    using T = std::decay_t<decltype(x)>;
    return x + same_kind<T>(b);
  }, a);
}

Coefficient coeff_mul(const Coefficient& a, const Coefficient& b) {
  return std::visit([&](const auto& x) -> Coefficient {
    using T = std::decay_t<decltype(x)>;
    return x * same_kind<T>(b);
  }, a);
}

Coefficient coeff_neg(const Coefficient& a) {
  return std::visit([](const auto& x) -> Coefficient {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Natural> || std::is_same_v<T, NonNegRational>) {
      if (x.is_zero()) return x;
      throw PreconditionError("negation outside a ring domain");
    } else {
      return -x;
    }
  }, a);
}

bool coeff_is_zero(const Coefficient& a) {
  return std::visit([](const auto& x) { return x.is_zero(); }, a);
}

std::string to_string(const Coefficient& a) {
  return std::visit([](const auto& x) { return x.to_string(); }, a);
}

Coefficient parse_coefficient(std::string_view text) {
  text = trim(text);
  if (text.find(" mod ") != std::string_view::npos) return ModularInt::parse(text);
  if (!text.empty() && text.front() == '-') return Rational::parse(text);
  if (text.find('/') != std::string_view::npos) return NonNegRational::parse(text);
  return Natural::parse(text);
}

mpq_class to_mpq(const Coefficient& a) {
  return std::visit([](const auto& x) -> mpq_class {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, ModularInt>) {
      return mpq_class(x.value());
    } else {
      return mpq_class(x.value());
    }
  }, a);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoeffDomain CoeffDomain::integers_mod(std::uint32_t m) {
  if (m < 2) throw PreconditionError("modulus must be at least 2");
  return CoeffDomain(DomainKind::modular, m);
}

CoeffDomain CoeffDomain::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("F_p needs a prime p, got " + std::to_string(p));
  return CoeffDomain(DomainKind::modular, p);
}

CoeffDomain CoeffDomain::parse(std::string_view name) {
  name = trim(name);
  if (name == "nat" || name == "natural") return naturals();
  if (name == "int" || name == "integer") return integers();
  if (name == "qplus") return nonneg_rationals();
  if (name == "rat" || name == "q") return rationals();
  if (name.size() > 1 && (name[0] == 'z' || name[0] == 'f') && all_digits(name.substr(1))) {
    auto m = static_cast<std::uint32_t>(std::stoul(std::string(name.substr(1))));
    return name[0] == 'f' ? prime_field(m) : integers_mod(m);
  }
  throw Error("unknown coefficient domain '" + std::string(name) + "'");
}

std::string CoeffDomain::name() const {
  switch (kind_) {
    case DomainKind::natural: return "nat";
    case DomainKind::integer: return "int";
    case DomainKind::nonneg_rational: return "qplus";
    case DomainKind::rational: return "rat";
    case DomainKind::modular: return (is_prime(modulus_) ? "f" : "z") + std::to_string(modulus_);
  }
  return "?";
}

bool CoeffDomain::is_ring() const noexcept {
  return kind_ == DomainKind::integer || kind_ == DomainKind::rational || kind_ == DomainKind::modular;
}

std::size_t CoeffDomain::size() const {
  if (!is_finite()) throw PreconditionError("domain " + name() + " is infinite");
  return modulus_;
}

Coefficient CoeffDomain::from_int(long v) const {
  switch (kind_) {
    case DomainKind::natural:
      if (v < 0) throw PreconditionError("negative natural");
      return Natural(static_cast<unsigned long>(v));
    case DomainKind::integer: return Integer(v);
    case DomainKind::nonneg_rational:
      if (v < 0) throw PreconditionError("negative value in qplus");
      return NonNegRational(static_cast<unsigned long>(v));
    case DomainKind::rational: return Rational(v);
    case DomainKind::modular: return ModularInt(v, modulus_);
  }
  throw Error("unreachable");
}

bool CoeffDomain::contains(const Coefficient& c) const {
  switch (kind_) {
    case DomainKind::natural: return std::holds_alternative<Natural>(c);
    case DomainKind::integer: return std::holds_alternative<Integer>(c);
    case DomainKind::nonneg_rational: return std::holds_alternative<NonNegRational>(c);
    case DomainKind::rational: return std::holds_alternative<Rational>(c);
    case DomainKind::modular: {
      auto p = std::get_if<ModularInt>(&c);
      return p != nullptr && p->modulus() == modulus_;
    }
  }
  return false;
}

std::vector<Coefficient> CoeffDomain::elements() const {
  std::vector<Coefficient> out;
  for (std::uint32_t k = 0; k < size(); ++k) out.emplace_back(ModularInt(k, modulus_));
  return out;
}

Coefficient CoeffDomain::parse_value(std::string_view text) const {
  text = trim(text);
  switch (kind_) {
    case DomainKind::natural: return Natural::parse(text);
    case DomainKind::integer: return Integer::parse(text);
    case DomainKind::nonneg_rational: return NonNegRational::parse(text);
    case DomainKind::rational: return Rational::parse(text);
    case DomainKind::modular: {
      if (text.find(" mod ") != std::string_view::npos) {
        auto v = ModularInt::parse(text);
        if (v.modulus() != modulus_) throw DomainMismatch("modulus mismatch in '" + std::string(text) + "'");
        return v;
      }
      mpz_class k = parse_mpz(text, true);
      mpz_class r = k % modulus_;
      return ModularInt(r.get_si(), modulus_);
    }
  }
  throw Error("unreachable");
}

CoefficientDescriptor descriptor_of(const CoeffDomain& domain) {
  CoefficientDescriptor d;
  switch (domain.kind()) {
    case DomainKind::natural:
    case DomainKind::nonneg_rational:
      return {true, true, true, true, false};
    case DomainKind::integer:
    case DomainKind::rational:
      return {true, false, true, true, true};
    case DomainKind::modular:
      break;
  }
  const auto els = domain.elements();
  d.commutative = true;
  d.zero_sum_free = true;
  d.zero_divisor_free = true;
  d.additively_cancellative = true;
  d.ring = true;
  for (const auto& a : els) {
    bool has_negative = false;
    for (const auto& b : els) {
      if (coeff_mul(a, b) != coeff_mul(b, a)) d.commutative = false;
      const bool sum_zero = coeff_is_zero(coeff_add(a, b));
      if (sum_zero) has_negative = true;
      if (sum_zero && !coeff_is_zero(a) && !coeff_is_zero(b)) d.zero_sum_free = false;
      if (!coeff_is_zero(a) && !coeff_is_zero(b) && coeff_is_zero(coeff_mul(a, b))) d.zero_divisor_free = false;
      for (const auto& c : els)
        if (a != b && coeff_add(a, c) == coeff_add(b, c)) d.additively_cancellative = false;
    }
    if (!has_negative) d.ring = false;
  }
  return d;
}

}  // namespace cesr
