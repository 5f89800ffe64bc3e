#include "cesr/group_semiring.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "cesr/error.hpp"

namespace cesr {

GSElement::GSElement(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain)
    : group_(std::move(group)), domain_(domain) {
  if (!group_) throw PreconditionError("group semiring element needs a group");
}

GSElement GSElement::basis(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, Elem h) {
  GSElement x(std::move(group), domain);
  if (h >= x.group().order()) throw PreconditionError("group element out of range");
  x.accumulate(h, domain.one());
  return x;
}

GSElement GSElement::parse(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, std::string_view text) {
  GSElement x(std::move(group), domain);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty group semiring element");
  if (s == "0") return x;

  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error("malformed group semiring element '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw Error("empty term in '" + std::string(text) + "'");
    pos = end;

    Coefficient c = domain.one();
    std::string label = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      c = domain.parse_value(term.substr(0, star));
      label = term.substr(star + 1);
    }
    if (negative) {
      if (!domain.is_ring()) throw DomainMismatch("subtraction needs a ring coefficient domain, got " + domain.name());
      c = coeff_neg(c);
    }
    x.accumulate(x.group().index_of(label), c);
  }
  return x;
}

Coefficient GSElement::coefficient(Elem h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? domain_.zero() : it->second;
}

void GSElement::accumulate(Elem h, const Coefficient& c) {
  if (!domain_.contains(c)) throw DomainMismatch("coefficient outside " + domain_.name());
  auto it = terms_.find(h);
  Coefficient sum = it == terms_.end() ? c : coeff_add(it->second, c);
  if (coeff_is_zero(sum)) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(h, std::move(sum));
  } else {
    it->second = std::move(sum);
  }
}

GSElement GSElement::scaled(const Coefficient& c) const {
  GSElement r(group_, domain_);
  for (const auto& [h, v] : terms_) r.accumulate(h, coeff_mul(c, v));
  return r;
}

std::string GSElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [h, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (const auto* m = std::get_if<ModularInt>(&c)) {
      coeff = std::to_string(m->value());
    } else {
      mpq_class q = to_mpq(c);
      negative = sgn(q) < 0;
      coeff = mpq_class(abs(q)).get_str();
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + "*";
    out += group_->label(h);
  }
  return out;
}

namespace {

void require_compatible(const GSElement& x, const GSElement& y) {
  if (!(x.domain() == y.domain())) throw DomainMismatch("coefficient domains differ");
  if (x.group_ptr() != y.group_ptr() && !(x.group() == y.group())) throw DomainMismatch("groups differ");
}

}  // namespace

GSElement operator+(const GSElement& x, const GSElement& y) {
  require_compatible(x, y);
  GSElement r = x;
  for (const auto& [h, c] : y.terms_) r.accumulate(h, c);
  return r;
}

GSElement operator*(const GSElement& x, const GSElement& y) {
  require_compatible(x, y);
  GSElement r(x.group_, x.domain_);
  for (const auto& [g, c] : x.terms_)
    for (const auto& [h, d] : y.terms_) r.accumulate(x.group_->mul(g, h), coeff_mul(c, d));
  return r;
}

bool operator==(const GSElement& x, const GSElement& y) {
  return x.domain_ == y.domain_ && (x.group_ == y.group_ || *x.group_ == *y.group_) && x.terms_ == y.terms_;
}

GSElement class_sum(std::shared_ptr<const FiniteGroup> group, CoeffDomain domain, const std::vector<Elem>& members) {
  GSElement r(std::move(group), domain);
  for (Elem h : members) {
    if (h >= r.group().order()) throw PreconditionError("class member out of range");
    r.accumulate(h, domain.one());
  }
  return r;
}

bool gs_is_central(const GSElement& x) {
  if (!descriptor_of(x.domain()).commutative) throw PreconditionError("non-commutative coefficient domain");
  for (Elem g = 0; g < x.group().order(); ++g) {
    const auto b = GSElement::basis(x.group_ptr(), x.domain(), g);
    if (!(x * b == b * x)) return false;
  }
  return true;
}

GroupSemiringCertificate certify_group_semiring(const std::shared_ptr<const FiniteGroup>& group,
                                                const CoeffDomain& domain) {
  const auto d = descriptor_of(domain);
  if (!d.commutative || !d.zero_divisor_free || !d.zero_sum_free)
    throw PreconditionError("coefficient domain " + domain.name() +
                            " must be commutative without zero-divisors or zero sums");
  const FiniteGroup& g = *group;
  GroupSemiringCertificate cert;
  cert.nilpotence = nilpotence_class(g);
  if (!cert.nilpotence.nilpotent() || *cert.nilpotence.value > 2) {
    cert.status = CertificateStatus::hypotheses_not_met;
    cert.verdict = "hypotheses not met (class " + cert.nilpotence.to_string() + "); no conclusion at this scale";
    return cert;
  }
  if (*cert.nilpotence.value <= 1) {
    cert.status = CertificateStatus::abelian;
    cert.verdict = "abelian, trivially CE";
    return cert;
  }

  const auto z = group_center(g);
  const GSElement sigma = class_sum(group, domain, z);
  const auto classes = conjugacy_classes(g);
  bool all_hold = true;
  for (Elem h = 0; h < g.order(); ++h) {
    if (std::binary_search(z.begin(), z.end(), h)) continue;
    std::vector<Elem> coset;
    for (Elem c : z) coset.push_back(g.mul(h, c));
    std::sort(coset.begin(), coset.end());
    const auto& cls = *std::find_if(classes.begin(), classes.end(), [&](const ConjugacyClass& k) {
      return std::binary_search(k.members.begin(), k.members.end(), h);
    });
    CenterIdentity id{h, GSElement::basis(group, domain, h) * sigma, class_sum(group, domain, coset), "", false};
    id.name = cls.members == coset ? "K_" + g.label(cls.representative) : g.label(h) + "Z";
    id.holds = id.product == id.coset && !id.product.is_zero() && gs_is_central(id.product);
    all_hold = all_hold && id.holds;
    cert.identities.push_back(std::move(id));
  }
  cert.status = all_hold ? CertificateStatus::certified : CertificateStatus::failed;
  cert.verdict = all_hold ? "centrally essential (class-2 certificate)" : "certificate identity failed";
  return cert;
}

std::optional<GSElement> gs_subtractive_compare(const GSElement& x, const GSElement& y) {
  require_compatible(x, y);
  const auto kind = x.domain().kind();
  if (kind != DomainKind::natural && kind != DomainKind::nonneg_rational)
    throw PreconditionError("subtractive comparison needs naturals or nonnegative rationals");
  GSElement z(x.group_ptr(), x.domain());
  for (Elem h = 0; h < x.group().order(); ++h) {
    const mpq_class a = to_mpq(x.coefficient(h)), b = to_mpq(y.coefficient(h));
    if (a > b) return std::nullopt;
    if (a == b) continue;
    const mpq_class diff = b - a;
    if (kind == DomainKind::natural)
      z.accumulate(h, Natural(mpz_class(diff.get_num())));
    else
      z.accumulate(h, NonNegRational(diff));
  }
  return z;
}

Vec embed(const GSElement& x) {
  Vec v(x.group().order(), 0);
  for (const auto& [h, c] : x.terms()) v[h] = to_mpq(c);
  return v;
}

WitnessSuite quaternion_witness_suite(std::uint64_t seed, std::size_t trials) {
  WitnessSuite w;
  w.seed = seed;
  w.trials = trials;
  auto q8 = std::make_shared<const FiniteGroup>(quaternion_group());
  const auto qplus = CoeffDomain::nonneg_rationals();
  const auto a = GSElement::basis(q8, qplus, q8->index_of("a"));
  const auto b = GSElement::basis(q8, qplus, q8->index_of("b"));
  w.non_commutative = !(a * b == b * a);
  w.add_cancellative = descriptor_of(qplus).additively_cancellative;

  const auto algebra = to_group_algebra(*q8, Field::rationals());
  const auto probe = reduced_probe(algebra, trials, seed);
  w.reduced_probe_clean = !probe.nilpotent;
  w.reduced_summary = probe.summary;

  // Nonzero samples with coefficients in {0, .., 3}.
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  auto sample = [&] {
    GSElement x(q8, qplus);
    while (x.is_zero())
      for (Elem h = 0; h < q8->order(); ++h) x.accumulate(h, NonNegRational(static_cast<unsigned long>(rng() % 4)));
    return x;
  };
  w.reduced_pairs_clean = true;
  w.zero_divisor_probe_clean = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto x = sample();
    const auto y = sample();
    if ((x * y).is_zero()) w.zero_divisor_probe_clean = false;
    if (x * x + y * y == x * y + y * x && !(x == y)) w.reduced_pairs_clean = false;
  }

  w.ce_certified = certify_group_semiring(q8, qplus).status == CertificateStatus::certified;
  if (const auto zd = find_zero_divisor_pair(algebra)) {
    w.difference_ring_has_zero_divisors = true;
    w.zero_divisor_pair = "(" + algebra.format(zd->first) + ")(" + algebra.format(zd->second) + ") = 0";
  }
  return w;
}

}  // namespace cesr
