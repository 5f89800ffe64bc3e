#include "cesr/tables.hpp"

#include <algorithm>

#include "cesr/error.hpp"

namespace cesr {

OpTable::OpTable(std::size_t order) : n_(order), entries_(order * order, 0) {
  if (order == 0) throw PreconditionError("table order must be positive");
  if (order > kMaxTableOrder) throw ResourceLimit("table order " + std::to_string(order) + " exceeds limit");
}

OpTable::OpTable(std::size_t order, std::vector<Elem> entries) : n_(order), entries_(std::move(entries)) {
  if (order == 0) throw PreconditionError("table order must be positive");
  if (order > kMaxTableOrder) throw ResourceLimit("table order " + std::to_string(order) + " exceeds limit");
  if (entries_.size() != order * order) throw PreconditionError("table needs order^2 entries");
  for (auto e : entries_)
    if (e >= order) throw PreconditionError("table entry out of range");
}

void OpTable::set(Elem x, Elem y, Elem v) {
  if (x >= n_ || y >= n_ || v >= n_) throw PreconditionError("table index out of range");
  entries_[x * n_ + y] = v;
}

bool OpTable::is_commutative() const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = x + 1; y < n_; ++y)
      if ((*this)(x, y) != (*this)(y, x)) return false;
  return true;
}

FiniteSemiring::FiniteSemiring(std::vector<std::string> labels, OpTable add, OpTable mul, Elem zero, Elem one)
    : labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
  if (add_.order() != mul_.order()) throw PreconditionError("addition and multiplication orders differ");
  if (labels_.size() != add_.order()) throw PreconditionError("label count differs from order");
  if (zero_ >= order() || one_ >= order()) throw PreconditionError("zero/one index out of range");
}

Elem FiniteSemiring::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("unknown element '" + label + "'");
  return static_cast<Elem>(it - labels_.begin());
}

AssociativityResult naive_associativity(const OpTable& t) {
  const auto n = static_cast<Elem>(t.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) return {false, std::array<Elem, 3>{x, y, z}};
  return {};
}

std::vector<Elem> closure(const OpTable& t, std::span<const Elem> generators) {
  std::vector<char> in(t.order(), 0);
  std::vector<Elem> members;
  for (auto g : generators) {
    if (g >= t.order()) throw PreconditionError("generator out of range");
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  // Each new element is multiplied against everything found so far, on
  // both sides, so every product of members is eventually produced.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem y = members[j];
      for (Elem p : {t(x, y), t(y, x)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

AssociativityResult lights_test(const OpTable& t, std::span<const Elem> generators) {
  const auto n = static_cast<Elem>(t.order());
  std::vector<Elem> gens;
  if (generators.empty()) {
    gens.resize(n);
    for (Elem g = 0; g < n; ++g) gens[g] = g;
  } else {
    gens.assign(generators.begin(), generators.end());
    if (closure(t, gens).size() != t.order()) throw NotGeneratingSet("generators do not generate the carrier");
  }
  // The set of g with (xg)y = x(gy) for all x, y is closed under the
  // operation, so checking a generating set suffices.
  for (Elem g : gens)
    for (Elem x = 0; x < n; ++x) {
      const Elem xg = t(x, g);
      for (Elem y = 0; y < n; ++y)
        if (t(xg, y) != t(x, t(g, y))) return {false, std::array<Elem, 3>{x, g, y}};
    }
  return {};
}

bool ValidationReport::violates(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

ValidationReport validate_semiring(const FiniteSemiring& s) {
  ValidationReport report;
  const auto n = static_cast<Elem>(s.order());
  const Elem zero = s.zero();
  const Elem one = s.one();
  report.trivial = n == 1;

  auto note = [&](const char* axiom, std::vector<Elem> witness) {
    report.violations.push_back({axiom, std::move(witness)});
  };

  if (auto r = naive_associativity(s.add_table()); !r.associative)
    note("add_associative", {(*r.counterexample)[0], (*r.counterexample)[1], (*r.counterexample)[2]});
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = x + 1; y < n && !found; ++y)
      if (s.add(x, y) != s.add(y, x)) {
        note("add_commutative", {x, y});
        found = true;
      }
    if (found) break;
  }
  for (Elem x = 0; x < n; ++x)
    if (s.add(zero, x) != x || s.add(x, zero) != x) {
      note("add_identity", {x});
      break;
    }
  if (auto r = naive_associativity(s.mul_table()); !r.associative)
    note("mul_associative", {(*r.counterexample)[0], (*r.counterexample)[1], (*r.counterexample)[2]});
  for (Elem x = 0; x < n; ++x)
    if (s.mul(one, x) != x || s.mul(x, one) != x) {
      note("mul_identity", {x});
      break;
    }
  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z))) {
            note("left_distributive", {x, y, z});
            return;
          }
  }();
  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (s.mul(s.add(y, z), x) != s.add(s.mul(y, x), s.mul(z, x))) {
            note("right_distributive", {x, y, z});
            return;
          }
  }();
  for (Elem x = 0; x < n; ++x)
    if (s.mul(zero, x) != zero || s.mul(x, zero) != zero) {
      note("zero_absorbing", {x});
      break;
    }
  if (n > 1 && zero == one) note("zero_ne_one", {zero});
  return report;
}

bool is_additively_idempotent(const FiniteSemiring& s) {
  for (Elem x = 0; x < s.order(); ++x)
    if (s.add(x, x) != x) return false;
  return true;
}

FiniteSemiring induced_subsemiring(const FiniteSemiring& s, std::span<const Elem> subset) {
  std::vector<Elem> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<long> pos(s.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= s.order()) throw PreconditionError("subset element out of range");
    pos[members[i]] = static_cast<long>(i);
  }
  if (pos[s.zero()] < 0 || pos[s.one()] < 0) throw PreconditionError("subset must contain zero and one");
  const std::size_t m = members.size();
  OpTable add(m), mul(m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(s.label(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      const long a = pos[s.add(members[i], members[j])];
      const long p = pos[s.mul(members[i], members[j])];
      if (a < 0 || p < 0) throw PreconditionError("subset is not closed under the operations");
      add.set(static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(a));
      mul.set(static_cast<Elem>(i), static_cast<Elem>(j), static_cast<Elem>(p));
    }
  }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), static_cast<Elem>(pos[s.zero()]),
                        static_cast<Elem>(pos[s.one()]));
}

}  // namespace cesr
