#include "cesr/groups.hpp"

#include <algorithm>
#include <cctype>

#include "cesr/error.hpp"

namespace cesr {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, OpTable cayley, Elem identity)
    : labels_(std::move(labels)), cayley_(std::move(cayley)), identity_(identity) {
  if (labels_.size() != cayley_.order()) throw PreconditionError("label count differs from group order");
  if (identity_ >= cayley_.order()) throw PreconditionError("identity out of range");
}

Elem FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("unknown group element '" + label + "'");
  return static_cast<Elem>(it - labels_.begin());
}

Elem FiniteGroup::inverse(Elem x) const {
  for (Elem y = 0; y < order(); ++y)
    if (mul(x, y) == identity_) return y;
  throw PreconditionError("element " + label(x) + " has no inverse");
}

Elem FiniteGroup::power(Elem x, unsigned k) const {
  Elem r = identity_;
  for (unsigned i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

GroupValidation validate_group(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  if (auto r = naive_associativity(g.cayley()); !r.associative) {
    const auto& t = *r.counterexample;
    return {false, "not associative at (" + g.label(t[0]) + ", " + g.label(t[1]) + ", " + g.label(t[2]) + ")"};
  }
  const Elem e = g.identity();
  for (Elem x = 0; x < n; ++x)
    if (g.mul(e, x) != x || g.mul(x, e) != x) return {false, "identity fails at " + g.label(x)};
  for (Elem x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Elem y = 0; y < n && !has_inverse; ++y) has_inverse = g.mul(x, y) == e && g.mul(y, x) == e;
    if (!has_inverse) return {false, "no inverse for " + g.label(x)};
  }
  return {};
}

FiniteGroup group_from_document(const GroupDocument& doc) {
  const auto n = static_cast<Elem>(doc.table.order());
  Elem identity = 0;
  if (doc.identity) {
    identity = *doc.identity;
  } else {
    bool found = false;
    for (Elem e = 0; e < n && !found; ++e) {
      found = true;
      for (Elem x = 0; x < n && found; ++x) found = doc.table(e, x) == x && doc.table(x, e) == x;
      if (found) identity = e;
    }
    if (!found) throw PreconditionError("group table has no identity");
  }
  FiniteGroup g(doc.labels, doc.table, identity);
  if (auto v = validate_group(g); !v.valid) throw PreconditionError("not a group: " + v.reason);
  return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<Elem> inv(n);
  for (Elem x = 0; x < n; ++x) inv[x] = g.inverse(x);
  std::vector<char> seen(n, 0);
  std::vector<ConjugacyClass> classes;
  for (Elem r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ConjugacyClass cls{r, {}};
    for (Elem h = 0; h < n; ++h) {
      const Elem c = g.mul(g.mul(inv[h], r), h);
      if (!seen[c]) {
        seen[c] = 1;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Elem> group_center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& generators) {
  std::vector<Elem> gens = generators;
  gens.push_back(g.identity());
  // In a finite group the submonoid generated by a set is a subgroup.
  return closure(g.cayley(), gens);
}

std::vector<Elem> commutator_subgroup(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<Elem> commutators;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      commutators.push_back(g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y)));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return generated_subgroup(g, commutators);
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<Elem>& normal_subgroup) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<long> coset(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const auto id = static_cast<long>(reps.size());
    reps.push_back(x);
    for (Elem h : normal_subgroup) {
      const Elem y = g.mul(x, h);
      if (coset[y] >= 0 && coset[y] != id) throw PreconditionError("not a subgroup");
      coset[y] = id;
    }
  }
  const std::size_t m = reps.size();
  OpTable table(m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("[" + g.label(reps[i]) + "]");
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = static_cast<Elem>(coset[g.mul(reps[i], reps[j])]);
      table.set(static_cast<Elem>(i), static_cast<Elem>(j), c);
    }
  }
  // Well-definedness on every pair of representatives is exactly normality.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (coset[g.mul(x, y)] != static_cast<long>(table(static_cast<Elem>(coset[x]), static_cast<Elem>(coset[y]))))
        throw PreconditionError("subgroup is not normal");
  Quotient q{FiniteGroup(std::move(labels), std::move(table), static_cast<Elem>(coset[g.identity()])), {}};
  q.coset_of.reserve(n);
  for (auto c : coset) q.coset_of.push_back(static_cast<Elem>(c));
  return q;
}

std::vector<std::vector<Elem>> upper_central_series(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> series{{g.identity()}};
  while (series.back().size() < g.order()) {
    const auto q = quotient_group(g, series.back());
    const auto zq = group_center(q.group);
    std::vector<Elem> next;
    for (Elem x = 0; x < g.order(); ++x)
      if (std::binary_search(zq.begin(), zq.end(), q.coset_of[x])) next.push_back(x);
    if (next.size() == series.back().size()) break;
    series.push_back(std::move(next));
  }
  return series;
}

NilpotenceClass nilpotence_class(const FiniteGroup& g) {
  const auto series = upper_central_series(g);
  if (series.back().size() != g.order()) return {};
  return {series.size() - 1};
}

FiniteGroup quaternion_group() {
  // a^i b^j at index i + 4j; b a = a^3 b and b^2 = a^2.
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      std::string l = power_label("a", i) + (j ? "b" : "");
      labels.push_back(l.empty() ? "e" : l);
    }
  OpTable t(8);
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      const int i = static_cast<int>(x % 4), j = static_cast<int>(x / 4);
      const int k = static_cast<int>(y % 4), l = static_cast<int>(y / 4);
      int power, bpart;
      if (j == 0) {
        power = i + k;
        bpart = l;
      } else if (l == 0) {
        power = i - k;
        bpart = 1;
      } else {
        power = i - k + 2;
        bpart = 0;
      }
      power = ((power % 4) + 4) % 4;
      t.set(x, y, static_cast<Elem>(power + 4 * bpart));
    }
  return FiniteGroup(std::move(labels), std::move(t), 0);
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::string> labels{"e"};
  for (std::size_t k = 1; k < n; ++k) labels.push_back(power_label("g", k));
  OpTable t(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t.set(x, y, static_cast<Elem>((x + y) % n));
  return FiniteGroup(std::move(labels), std::move(t), 0);
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2) throw PreconditionError("dihedral group order must be even and >= 2");
  const std::size_t n = order / 2;
  // r^i s^j at index i + n j; s r = r^-1 s.
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l = power_label("r", i) + (j ? "s" : "");
      labels.push_back(l.empty() ? "e" : l);
    }
  OpTable t(order);
  const auto sn = static_cast<long>(n);
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y) {
      const long i = x % sn, j = x / sn, k = y % sn, l = y / sn;
      const long power = j == 0 ? i + k : i - k;
      const long spart = (j + l) % 2;
      t.set(x, y, static_cast<Elem>(((power % sn) + sn) % sn + sn * spart));
    }
  return FiniteGroup(std::move(labels), std::move(t), 0);
}

FiniteGroup builtin_group(const std::string& name) {
  auto number = [&](std::size_t from) -> std::size_t {
    const auto digits = name.substr(from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      throw Error("unknown group '" + name + "'");
    return std::stoul(digits);
  };
  if (name == "q8") return quaternion_group();
  if (name == "s3") return dihedral_group(6);
  if (!name.empty() && name[0] == 'c') return cyclic_group(number(1));
  if (!name.empty() && name[0] == 'd') return dihedral_group(number(1));
  throw Error("unknown group '" + name + "'");
}

}  // namespace cesr
