#include "cesr/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cesr/error.hpp"

namespace cesr {

namespace {

constexpr Elem kUnset = ~Elem{0};

// Cheap predicates first so filtering prunes early.
const std::vector<std::string>& filter_order() {
  static const std::vector<std::string> order = {
      "commutative",   "zero_sums",         "ring",          "add_idempotent",
      "mult_idempotent", "add_cancellative", "zero_divisors", "nilpotents",
      "mult_cancellative_left", "mult_cancellative_right", "division_semiring", "reduced",
      "semisubtractive", "centrally_essential", "semiprime"};
  return order;
}

std::vector<std::string> element_labels(std::size_t n) {
  std::vector<std::string> labels = {"0", "1"};
  for (std::size_t i = 2; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + (i - 2))));
  return labels;
}

struct Cell {
  bool mul;
  Elem x, y;
};

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, const std::function<void(const CensusRecord&)>& sink)
      : spec_(spec), sink_(sink), n_(spec.order), add_(n_ * n_, kUnset), mul_(n_ * n_, kUnset) {
    for (Elem x = 0; x < n_; ++x) {
      set(add_, 0, x, x);
      set(add_, x, 0, x);
      set(mul_, 0, x, 0);
      set(mul_, x, 0, 0);
      set(mul_, 1, x, x);
      set(mul_, x, 1, x);
    }
    for (Elem x = 1; x < n_; ++x)
      for (Elem y = x; y < n_; ++y) cells_.push_back({false, x, y});
    for (Elem x = 2; x < n_; ++x)
      for (Elem y = 2; y < n_; ++y) cells_.push_back({true, x, y});
    std::vector<Elem> rest(n_ - 2);
    std::iota(rest.begin(), rest.end(), Elem{2});
    do {
      std::vector<Elem> perm = {0, 1};
      perm.insert(perm.end(), rest.begin(), rest.end());
      if (!std::is_sorted(perm.begin(), perm.end())) perms_.push_back(std::move(perm));
    } while (std::next_permutation(rest.begin(), rest.end()));
    for (const auto& [key, req] : spec_.filters)
      if (req != Require::ignore) active_.emplace_back(key, req);
    std::sort(active_.begin(), active_.end(), [](const auto& a, const auto& b) {
      const auto& o = filter_order();
      return std::find(o.begin(), o.end(), a.first) < std::find(o.begin(), o.end(), b.first);
    });
    if (spec_.time_budget) deadline_ = std::chrono::steady_clock::now() + *spec_.time_budget;
  }

  SearchOutcome run() {
    std::size_t first_branch = 0, skip = 0;
    if (spec_.resume) parse_resume(*spec_.resume, first_branch, skip);
    const Cell& top = cells_.front();
    for (Elem v = 0; v < n_ && !stop_; ++v) {
      branch_ = v;
      branch_emitted_ = 0;
      skip_ = v == first_branch ? skip : 0;
      // Earlier branches still advance the discovery counter so indices
      // agree with an uninterrupted run.
      counting_only_ = v < first_branch;
      assign(top, v);
      if (consistent()) descend(1);
      unassign(top);
    }
    return outcome_;
  }

 private:
  void set(std::vector<Elem>& t, Elem x, Elem y, Elem v) { t[x * n_ + y] = v; }

  void assign(const Cell& c, Elem v) {
    if (c.mul) {
      mul_[c.x * n_ + c.y] = v;
    } else {
      add_[c.x * n_ + c.y] = v;
      add_[c.y * n_ + c.x] = v;
    }
  }
  void unassign(const Cell& c) { assign(c, kUnset); }

  Elem a(Elem x, Elem y) const { return x == kUnset || y == kUnset ? kUnset : add_[x * n_ + y]; }
  Elem m(Elem x, Elem y) const { return x == kUnset || y == kUnset ? kUnset : mul_[x * n_ + y]; }

  bool consistent() const {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z) {
          if (!agree(a(a(x, y), z), a(x, a(y, z)))) return false;
          if (!agree(m(m(x, y), z), m(x, m(y, z)))) return false;
          if (!agree(m(x, a(y, z)), a(m(x, y), m(x, z)))) return false;
          if (!agree(m(a(y, z), x), a(m(y, x), m(z, x)))) return false;
        }
    return true;
  }
  static bool agree(Elem l, Elem r) { return l == kUnset || r == kUnset || l == r; }

  bool out_of_time() {
    if (!deadline_) return false;
    if (++clock_checks_ % 256 != 0) return false;
    return std::chrono::steady_clock::now() > *deadline_;
  }

  void descend(std::size_t k) {
    if (stop_) return;
    if (out_of_time()) return truncate("time budget exceeded");
    if (k == cells_.size()) return leaf();
    const Cell& c = cells_[k];
    for (Elem v = 0; v < n_ && !stop_; ++v) {
      assign(c, v);
      if (consistent()) descend(k + 1);
      unassign(c);
    }
  }

  bool is_canonical() const {
    std::vector<Elem> base(add_);
    base.insert(base.end(), mul_.begin(), mul_.end());
    std::vector<Elem> image(base.size());
    for (const auto& p : perms_) {
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y) {
          image[p[x] * n_ + p[y]] = p[add_[x * n_ + y]];
          image[n_ * n_ + p[x] * n_ + p[y]] = p[mul_[x * n_ + y]];
        }
      if (image < base) return false;
    }
    return true;
  }

  void leaf() {
    ++outcome_.visited;
    if (spec_.canonical_only && !is_canonical()) return;
    const std::size_t index = discovery_++;
    if (counting_only_) return;
    FiniteSemiring s(element_labels(n_), OpTable(n_, add_), OpTable(n_, mul_), 0, 1);
    for (const auto& [key, req] : active_)
      if (evaluate_property(s, key).verdict != (req == Require::require)) return;
    if (skip_ > 0) {
      --skip_;
      ++branch_emitted_;
      return;
    }
    if (spec_.result_cap && outcome_.emitted >= *spec_.result_cap) return truncate("result cap reached");
    sink_(CensusRecord{s, census_properties(s), index});
    ++outcome_.emitted;
    ++branch_emitted_;
  }

  void truncate(const std::string& reason) {
    stop_ = true;
    outcome_.truncated = true;
    outcome_.truncation_reason = reason;
    outcome_.resume_token = std::to_string(branch_) + ":" + std::to_string(branch_emitted_);
  }

  static void parse_resume(const std::string& token, std::size_t& branch, std::size_t& skip) {
    const auto colon = token.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      branch = std::stoul(token.substr(0, colon));
      skip = std::stoul(token.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error("malformed resume token '" + token + "', expected <branch>:<skip>");
    }
  }

  const SearchSpec& spec_;
  const std::function<void(const CensusRecord&)>& sink_;
  std::size_t n_;
  std::vector<Elem> add_, mul_;
  std::vector<Cell> cells_;
  std::vector<std::vector<Elem>> perms_;
  std::vector<std::pair<std::string, Require>> active_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t clock_checks_ = 0;
  std::size_t discovery_ = 0;
  std::size_t branch_ = 0, branch_emitted_ = 0, skip_ = 0;
  bool counting_only_ = false;
  bool stop_ = false;
  SearchOutcome outcome_;
};

}  // namespace

std::string canonical_property_key(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"ce", "centrally_essential"},
      {"cancellative", "add_cancellative"},
      {"nilpotent", "nilpotents"},
      {"division", "division_semiring"},
  };
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  const auto& keys = property_keys();
  if (std::find(keys.begin(), keys.end(), name) == keys.end()) throw Error("unknown property '" + name + "'");
  return name;
}

void validate_spec(const SearchSpec& spec) {
  if (spec.order < 2) throw PreconditionError("search order must be at least 2");
  if (spec.order > kDefaultMaxSearchOrder) {
    if (spec.order > 5 || !spec.allow_order5)
      throw ResourceLimit("search order " + std::to_string(spec.order) + " exceeds the cap of " +
                          std::to_string(kDefaultMaxSearchOrder) + (spec.order == 5 ? " (order 5 needs the explicit flag)" : ""));
    if (!spec.time_budget) throw PreconditionError("order 5 search needs a time budget");
  }
  const auto& keys = property_keys();
  for (const auto& [key, req] : spec.filters)
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw Error("unknown property '" + key + "'");
}

SearchOutcome enumerate(const SearchSpec& spec, const std::function<void(const CensusRecord&)>& sink) {
  validate_spec(spec);
  return Enumerator(spec, sink).run();
}

std::vector<CensusRecord> enumerate_all(const SearchSpec& spec, SearchOutcome* outcome) {
  std::vector<CensusRecord> records;
  const auto o = enumerate(spec, [&](const CensusRecord& r) { records.push_back(r); });
  if (outcome) *outcome = o;
  return records;
}

PropertyVector census_properties(const FiniteSemiring& s) {
  PropertyVector v;
  for (const auto& key : property_keys()) v[key] = evaluate_property(s, key).verdict;
  return v;
}

FiniteSemiring canonical_form(const FiniteSemiring& s) {
  const std::size_t n = s.order();
  if (n < 2 || s.zero() != 0 || s.one() != 1) throw PreconditionError("canonical form needs zero at 0 and one at 1");
  std::vector<Elem> rest(n - 2);
  std::iota(rest.begin(), rest.end(), Elem{2});
  std::vector<Elem> best_add, best_mul;
  std::vector<Elem> best_key;
  do {
    std::vector<Elem> p = {0, 1};
    p.insert(p.end(), rest.begin(), rest.end());
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        add[p[x] * n + p[y]] = p[s.add(x, y)];
        mul[p[x] * n + p[y]] = p[s.mul(x, y)];
      }
    std::vector<Elem> key(add);
    key.insert(key.end(), mul.begin(), mul.end());
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best_add = std::move(add);
      best_mul = std::move(mul);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return FiniteSemiring(element_labels(n), OpTable(n, best_add), OpTable(n, best_mul), 0, 1);
}

bool isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  do {
    if (p[a.zero()] != b.zero() || p[a.one()] != b.one()) continue;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        ok = p[a.add(x, y)] == b.add(p[x], p[y]) && p[a.mul(x, y)] == b.mul(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace cesr
