#include "cesr/analysis.hpp"

#include <algorithm>
#include <functional>

#include "cesr/error.hpp"

namespace cesr {

namespace {

using Elems = std::vector<Elem>;

PropertyReport make(const char* name, bool verdict, Elems witness = {}) {
  PropertyReport r;
  r.property = name;
  r.verdict = verdict;
  r.witness = std::move(witness);
  return r;
}

std::vector<char> central_flags(const FiniteSemiring& s) {
  std::vector<char> flags(s.order(), 0);
  for (Elem x = 0; x < s.order(); ++x) flags[x] = is_central(s, x);
  return flags;
}

bool reduced_pair(const FiniteSemiring& s, Elem x, Elem y) {
  return s.add(s.mul(x, x), s.mul(y, y)) == s.add(s.mul(x, y), s.mul(y, x));
}

bool has_difference(const FiniteSemiring& s, Elem a, Elem b) {
  for (Elem x = 0; x < s.order(); ++x)
    if (s.add(a, x) == b || s.add(b, x) == a) return true;
  return false;
}

bool has_additive_inverse(const FiniteSemiring& s, Elem x) {
  for (Elem y = 0; y < s.order(); ++y)
    if (s.add(x, y) == s.zero()) return true;
  return false;
}

bool has_two_sided_inverse(const FiniteSemiring& s, Elem x) {
  for (Elem y = 0; y < s.order(); ++y)
    if (s.mul(x, y) == s.one() && s.mul(y, x) == s.one()) return true;
  return false;
}

bool is_nilpotent(const FiniteSemiring& s, Elem x) {
  Elem p = x;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    if (p == s.zero()) return true;
    p = s.mul(p, x);
  }
  return p == s.zero();
}

PropertyReport first_failing_triple(const FiniteSemiring& s, const char* name,
                                    const std::function<bool(Elem, Elem, Elem)>& fails) {
  const auto n = static_cast<Elem>(s.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (fails(x, y, z)) return make(name, false, {x, y, z});
  return make(name, true);
}

bool all_elements(const FiniteSemiring& s, const std::function<bool(Elem)>& pred) {
  for (Elem x = 0; x < s.order(); ++x)
    if (!pred(x)) return false;
  return true;
}

}  // namespace

bool is_central(const FiniteSemiring& s, Elem x) {
  for (Elem y = 0; y < s.order(); ++y)
    if (s.mul(x, y) != s.mul(y, x)) return false;
  return true;
}

std::vector<Elem> center(const FiniteSemiring& s) {
  Elems c;
  for (Elem x = 0; x < s.order(); ++x)
    if (is_central(s, x)) c.push_back(x);
  return c;
}

PropertyReport is_centrally_essential(const FiniteSemiring& s) {
  const auto central = central_flags(s);
  Elems nonzero_central;
  for (Elem y = 0; y < s.order(); ++y)
    if (central[y] && y != s.zero()) nonzero_central.push_back(y);

  CentralityCertificate cert;
  for (Elem x = 0; x < s.order(); ++x) {
    if (x == s.zero() || central[x]) continue;
    bool found = false;
    for (Elem y : nonzero_central) {
      const Elem z = s.mul(x, y);
      if (z != s.zero() && central[z]) {
        cert.multipliers.emplace(x, std::make_pair(y, z));
        found = true;
        break;
      }
    }
    if (!found) return make("centrally_essential", false, {x});
  }
  auto r = make("centrally_essential", true);
  r.certificate = std::move(cert);
  return r;
}

PropertyReport is_reduced(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (x != y && reduced_pair(s, x, y)) return make("reduced", false, {x, y});
  return make("reduced", true);
}

PropertyReport is_additively_cancellative(const FiniteSemiring& s) {
  return first_failing_triple(s, "add_cancellative",
                              [&](Elem x, Elem y, Elem z) { return x != y && s.add(x, z) == s.add(y, z); });
}

PropertyReport is_semisubtractive(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = a + 1; b < s.order(); ++b)
      if (!has_difference(s, a, b)) return make("semisubtractive", false, {a, b});
  return make("semisubtractive", true);
}

PropertyReport has_zero_sums(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (x != s.zero() && y != s.zero() && s.add(x, y) == s.zero()) return make("zero_sums", true, {x, y});
  return make("zero_sums", false);
}

PropertyReport is_commutative(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = x + 1; y < s.order(); ++y)
      if (s.mul(x, y) != s.mul(y, x)) return make("commutative", false, {x, y});
  return make("commutative", true);
}

ZeroDivisors zero_divisors(const FiniteSemiring& s) {
  ZeroDivisors zd;
  for (Elem a = 0; a < s.order(); ++a) {
    if (a == s.zero()) continue;
    bool left = false, right = false;
    for (Elem b = 0; b < s.order(); ++b) {
      if (b == s.zero()) continue;
      left = left || s.mul(a, b) == s.zero();
      right = right || s.mul(b, a) == s.zero();
    }
    if (left) zd.left.push_back(a);
    if (right) zd.right.push_back(a);
  }
  return zd;
}

IdempotentAnalysis idempotent_analysis(const FiniteSemiring& s) {
  IdempotentAnalysis out;
  for (Elem e = 0; e < s.order(); ++e)
    if (s.mul(e, e) == e) out.idempotents.push_back(e);
  for (Elem e : out.idempotents) {
    for (Elem f : out.idempotents)
      if (s.add(e, f) == s.one()) {
        out.complemented.emplace_back(e, f);
        break;
      }
    if (is_central(s, e)) out.central.push_back(e);
  }
  return out;
}

std::vector<Elem> nilpotent_elements(const FiniteSemiring& s) {
  Elems out;
  for (Elem x = 0; x < s.order(); ++x)
    if (x != s.zero() && is_nilpotent(s, x)) out.push_back(x);
  return out;
}

std::vector<Elem> ideal_closure(const FiniteSemiring& s, const std::vector<Elem>& generators) {
  std::vector<char> in(s.order(), 0);
  Elems members;
  auto insert = [&](Elem x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  insert(s.zero());
  for (Elem g : generators) insert(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    for (Elem t = 0; t < s.order(); ++t) {
      insert(s.mul(t, x));
      insert(s.mul(x, t));
    }
    for (std::size_t j = 0; j <= i; ++j) insert(s.add(x, members[j]));
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> principal_ideal(const FiniteSemiring& s, Elem a) { return ideal_closure(s, {a}); }

std::vector<Elem> ideal_product(const FiniteSemiring& s, const std::vector<Elem>& i, const std::vector<Elem>& j) {
  std::vector<char> seen(s.order(), 0);
  Elems products;
  for (Elem x : i)
    for (Elem y : j) {
      const Elem p = s.mul(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        products.push_back(p);
      }
    }
  return ideal_closure(s, products);
}

bool is_nilpotent_ideal(const FiniteSemiring& s, const std::vector<Elem>& ideal) {
  const Elems zero_ideal{s.zero()};
  Elems power = ideal;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    if (power == zero_ideal) return true;
    Elems next = ideal_product(s, power, ideal);
    if (next == power) return false;
    power = std::move(next);
  }
  return power == zero_ideal;
}

PropertyReport is_semiprime(const FiniteSemiring& s) {
  if (s.order() > kMaxSemiprimeOrder)
    throw ResourceLimit("semiprime check limited to order " + std::to_string(kMaxSemiprimeOrder));
  for (Elem a = 0; a < s.order(); ++a)
    if (a != s.zero() && is_nilpotent_ideal(s, principal_ideal(s, a))) return make("semiprime", false, {a});
  return make("semiprime", true);
}

PropertyReport is_left_multiplicatively_cancellative(const FiniteSemiring& s) {
  return first_failing_triple(s, "mult_cancellative_left", [&](Elem x, Elem y, Elem z) {
    return x != s.zero() && y != z && s.mul(x, y) == s.mul(x, z);
  });
}

PropertyReport is_right_multiplicatively_cancellative(const FiniteSemiring& s) {
  return first_failing_triple(s, "mult_cancellative_right", [&](Elem x, Elem y, Elem z) {
    return x != s.zero() && y != z && s.mul(y, x) == s.mul(z, x);
  });
}

PropertyReport is_division_semiring(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    if (x != s.zero() && !has_two_sided_inverse(s, x)) return make("division_semiring", false, {x});
  if (all_elements(s, [&](Elem x) { return has_additive_inverse(s, x); })) {
    auto r = make("division_semiring", false);
    r.note = "ring";
    return r;
  }
  return make("division_semiring", true);
}

SemiprimeEquivalence semiprime_equivalence_harness(const FiniteSemiring& s) {
  if (!is_additively_cancellative(s).verdict) throw PreconditionError("hypothesis failed: not additively cancellative");
  if (!is_semisubtractive(s).verdict) throw PreconditionError("hypothesis failed: not semisubtractive");
  if (!is_centrally_essential(s).verdict) throw PreconditionError("hypothesis failed: not centrally essential");

  const auto c = induced_subsemiring(s, center(s));
  if (!validate_semiring(c).ok()) throw Error("center failed validation as a semiring");

  SemiprimeEquivalence r;
  r.semiprime = is_semiprime(s).verdict;
  r.center_semiprime = is_semiprime(c).verdict;
  r.no_nonzero_nilpotents = nilpotent_elements(s).empty();
  r.commutative_without_nilpotents = r.no_nonzero_nilpotents && is_commutative(s).verdict;
  return r;
}

const std::vector<std::string>& property_keys() {
  static const std::vector<std::string> keys{
      "commutative",       "centrally_essential",    "reduced",
      "add_cancellative",  "semisubtractive",        "semiprime",
      "zero_sums",         "mult_cancellative_left", "mult_cancellative_right",
      "division_semiring", "add_idempotent",         "mult_idempotent",
      "nilpotents",        "zero_divisors",          "ring"};
  return keys;
}

PropertyReport evaluate_property(const FiniteSemiring& s, const std::string& key) {
  if (key == "commutative") return is_commutative(s);
  if (key == "centrally_essential") return is_centrally_essential(s);
  if (key == "reduced") return is_reduced(s);
  if (key == "add_cancellative") return is_additively_cancellative(s);
  if (key == "semisubtractive") return is_semisubtractive(s);
  if (key == "semiprime") return is_semiprime(s);
  if (key == "zero_sums") return has_zero_sums(s);
  if (key == "mult_cancellative_left") return is_left_multiplicatively_cancellative(s);
  if (key == "mult_cancellative_right") return is_right_multiplicatively_cancellative(s);
  if (key == "division_semiring") return is_division_semiring(s);
  if (key == "add_idempotent") {
    for (Elem x = 0; x < s.order(); ++x)
      if (s.add(x, x) != x) return make("add_idempotent", false, {x});
    return make("add_idempotent", true);
  }
  if (key == "mult_idempotent") {
    for (Elem x = 0; x < s.order(); ++x)
      if (s.mul(x, x) != x) return make("mult_idempotent", false, {x});
    return make("mult_idempotent", true);
  }
  if (key == "nilpotents") {
    const auto nil = nilpotent_elements(s);
    return nil.empty() ? make("nilpotents", false) : make("nilpotents", true, {nil.front()});
  }
  if (key == "zero_divisors") {
    for (Elem a = 0; a < s.order(); ++a)
      for (Elem b = 0; b < s.order(); ++b)
        if (a != s.zero() && b != s.zero() && s.mul(a, b) == s.zero()) return make("zero_divisors", true, {a, b});
    return make("zero_divisors", false);
  }
  if (key == "ring") {
    for (Elem x = 0; x < s.order(); ++x)
      if (!has_additive_inverse(s, x)) return make("ring", false, {x});
    return make("ring", true);
  }
  throw Error("unknown property '" + key + "'");
}

bool recheck(const FiniteSemiring& s, const PropertyReport& r) {
  const auto& w = r.witness;
  const auto n = s.order();
  if (std::any_of(w.begin(), w.end(), [&](Elem x) { return x >= n; })) return false;
  const Elem zero = s.zero();
  const std::string& key = r.property;
  auto recompute = [&] { return evaluate_property(s, key).verdict == r.verdict; };

  if (key == "centrally_essential") {
    if (r.verdict) {
      if (!r.certificate) return false;
      const auto& m = r.certificate->multipliers;
      for (Elem x = 0; x < n; ++x) {
        if (x == zero || is_central(s, x)) continue;
        auto it = m.find(x);
        if (it == m.end()) return false;
        const auto [y, z] = it->second;
        if (y >= n || z >= n || y == zero || z == zero) return false;
        if (s.mul(x, y) != z || !is_central(s, y) || !is_central(s, z)) return false;
      }
      return true;
    }
    if (w.size() != 1 || w[0] == zero) return false;
    for (Elem y = 0; y < n; ++y) {
      if (y == zero || !is_central(s, y)) continue;
      const Elem z = s.mul(w[0], y);
      if (z != zero && is_central(s, z)) return false;
    }
    return true;
  }
  if (key == "division_semiring" && !r.verdict && w.empty())
    return r.note == "ring" && all_elements(s, [&](Elem x) { return has_additive_inverse(s, x); });
  if (w.empty()) return recompute();

  if (key == "commutative") return !r.verdict && w.size() == 2 && s.mul(w[0], w[1]) != s.mul(w[1], w[0]);
  if (key == "reduced") return !r.verdict && w.size() == 2 && w[0] != w[1] && reduced_pair(s, w[0], w[1]);
  if (key == "add_cancellative")
    return !r.verdict && w.size() == 3 && w[0] != w[1] && s.add(w[0], w[2]) == s.add(w[1], w[2]);
  if (key == "semisubtractive") return !r.verdict && w.size() == 2 && w[0] != w[1] && !has_difference(s, w[0], w[1]);
  if (key == "semiprime")
    return !r.verdict && w.size() == 1 && w[0] != zero && is_nilpotent_ideal(s, principal_ideal(s, w[0]));
  if (key == "zero_sums")
    return r.verdict && w.size() == 2 && w[0] != zero && w[1] != zero && s.add(w[0], w[1]) == zero;
  if (key == "mult_cancellative_left")
    return !r.verdict && w.size() == 3 && w[0] != zero && w[1] != w[2] && s.mul(w[0], w[1]) == s.mul(w[0], w[2]);
  if (key == "mult_cancellative_right")
    return !r.verdict && w.size() == 3 && w[0] != zero && w[1] != w[2] && s.mul(w[1], w[0]) == s.mul(w[2], w[0]);
  if (key == "division_semiring") return !r.verdict && w.size() == 1 && w[0] != zero && !has_two_sided_inverse(s, w[0]);
  if (key == "add_idempotent") return !r.verdict && w.size() == 1 && s.add(w[0], w[0]) != w[0];
  if (key == "mult_idempotent") return !r.verdict && w.size() == 1 && s.mul(w[0], w[0]) != w[0];
  if (key == "nilpotents") return r.verdict && w.size() == 1 && w[0] != zero && is_nilpotent(s, w[0]);
  if (key == "zero_divisors")
    return r.verdict && w.size() == 2 && w[0] != zero && w[1] != zero && s.mul(w[0], w[1]) == zero;
  if (key == "ring") return !r.verdict && w.size() == 1 && !has_additive_inverse(s, w[0]);
  throw Error("unknown property '" + key + "'");
}

}  // namespace cesr
