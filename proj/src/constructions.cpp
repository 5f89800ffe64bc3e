#include "cesr/constructions.hpp"

#include <numeric>
#include <sstream>

#include "cesr/error.hpp"

namespace cesr {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    r *= base;
    if (r > kMaxConstructionOrder)
      throw ResourceLimit("construction order " + std::to_string(base) + "^" + std::to_string(exponent) +
                          " exceeds 2^16");
  }
  if (r > kMaxTableOrder)
    throw ResourceLimit("construction order " + std::to_string(r) + " exceeds dense table limit " +
                        std::to_string(kMaxTableOrder));
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> free_positions(std::size_t n, MatrixShape shape) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = shape == MatrixShape::full ? 0 : i; j < n; ++j) pos.emplace_back(i, j);
  return pos;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller index as the root so roots are minimal members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string subset_label(std::uint64_t mask, const std::vector<std::string>& base_labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < base_labels.size(); ++i)
    if (mask >> i & 1U) {
      if (!first) out += ',';
      out += base_labels[i];
      first = false;
    }
  return out + "}";
}

FiniteSemiring subset_semiring(const FiniteMagma& m) {
  const std::size_t n = m.order();
  const OpTable& t = m.table;
  if (n > 16) throw ResourceLimit("subset semiring base larger than 16");
  const std::size_t order = checked_power(2, n);
  if (!naive_associativity(t).associative) throw PreconditionError("base magma is not associative");

  std::optional<Elem> zero, identity;
  for (Elem z = 0; z < n && !zero; ++z) {
    bool absorbing = true;
    for (Elem x = 0; x < n && absorbing; ++x) absorbing = t(z, x) == z && t(x, z) == z;
    if (absorbing) zero = z;
  }
  for (Elem e = 0; e < n && !identity; ++e) {
    bool neutral = true;
    for (Elem x = 0; x < n && neutral; ++x) neutral = t(e, x) == x && t(x, e) == x;
    if (neutral) identity = e;
  }
  if (!zero) throw PreconditionError("base magma has no absorbing zero");
  if (!identity) throw PreconditionError("base magma has no identity");
  if (*zero == *identity) throw PreconditionError("base magma is degenerate (zero equals identity)");

  // image[a][B] = {a b : b in B}, built by peeling the lowest bit of B.
  std::vector<std::vector<std::uint32_t>> image(n, std::vector<std::uint32_t>(order, 0));
  for (Elem a = 0; a < n; ++a)
    for (std::size_t mask = 1; mask < order; ++mask) {
      const auto low = static_cast<Elem>(__builtin_ctzll(mask));
      image[a][mask] = image[a][mask & (mask - 1)] | (1U << t(a, low));
    }

  OpTable add(order), mul(order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = subset_label(a, m.labels);
    for (std::size_t b = 0; b < order; ++b) {
      std::uint32_t product = 0;
      for (std::size_t bits = a; bits; bits &= bits - 1)
        product |= image[static_cast<std::size_t>(__builtin_ctzll(bits))][b];
      add.set(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(a | b));
      mul.set(static_cast<Elem>(a), static_cast<Elem>(b), product);
    }
  }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), 0, Elem{1} << *identity);
}

FiniteSemiring coefficient_semiring(const CoeffDomain& domain) {
  if (!domain.is_finite()) throw PreconditionError("coefficient domain " + domain.name() + " is infinite");
  const auto m = domain.modulus();
  OpTable add(m), mul(m);
  std::vector<std::string> labels;
  for (Elem x = 0; x < m; ++x) {
    labels.push_back(std::to_string(x));
    for (Elem y = 0; y < m; ++y) {
      add.set(x, y, (x + y) % m);
      mul.set(x, y, static_cast<Elem>(static_cast<std::uint64_t>(x) * y % m));
    }
  }
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), 0, 1 % m);
}

Elem MatrixSemiring::encode(const std::vector<Elem>& entries) const {
  if (entries.size() != size * size) throw PreconditionError("matrix needs n*n entries");
  const auto q = static_cast<Elem>(coeff.order());
  Elem index = 0, place = 1;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const Elem v = entries[i * size + j];
      if (v >= q) throw PreconditionError("matrix entry out of range");
      if (shape == MatrixShape::upper_triangular && j < i) {
        if (v != coeff.zero()) throw PreconditionError("shape violation: nonzero entry below the diagonal");
        continue;
      }
      index += v * place;
      place *= q;
    }
  return index;
}

std::vector<Elem> MatrixSemiring::decode(Elem x) const {
  const auto q = static_cast<Elem>(coeff.order());
  std::vector<Elem> entries(size * size, coeff.zero());
  for (const auto& [i, j] : free_positions(size, shape)) {
    entries[i * size + j] = x % q;
    x /= q;
  }
  return entries;
}

Elem MatrixSemiring::unit(std::size_t i, std::size_t j) const {
  std::vector<Elem> entries(size * size, coeff.zero());
  entries.at(i * size + j) = coeff.one();
  return encode(entries);
}

MatrixSemiring matrix_semiring(const FiniteSemiring& coeff, std::size_t n, MatrixShape shape) {
  if (n == 0) throw PreconditionError("matrix size must be positive");
  const auto positions = free_positions(n, shape);
  const std::size_t order = checked_power(coeff.order(), positions.size());

  MatrixSemiring result;
  result.size = n;
  result.shape = shape;
  result.coeff = coeff;

  std::vector<std::vector<Elem>> decoded(order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    decoded[x] = result.decode(static_cast<Elem>(x));
    std::ostringstream l;
    l << '[';
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        l << (j ? "," : (i ? ";" : "")) << coeff.label(decoded[x][i * n + j]);
    l << ']';
    labels[x] = l.str();
  }

  OpTable add(order), mul(order);
  std::vector<Elem> sum(n * n), product(n * n);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const auto& a = decoded[x];
      const auto& b = decoded[y];
      for (std::size_t k = 0; k < n * n; ++k) sum[k] = coeff.add(a[k], b[k]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Elem acc = coeff.zero();
          for (std::size_t k = 0; k < n; ++k) acc = coeff.add(acc, coeff.mul(a[i * n + k], b[k * n + j]));
          product[i * n + j] = acc;
        }
      add.set(static_cast<Elem>(x), static_cast<Elem>(y), result.encode(sum));
      mul.set(static_cast<Elem>(x), static_cast<Elem>(y), result.encode(product));
    }

  std::vector<Elem> identity(n * n, coeff.zero());
  for (std::size_t i = 0; i < n; ++i) identity[i * n + i] = coeff.one();
  const Elem zero = result.encode(std::vector<Elem>(n * n, coeff.zero()));
  const Elem one = result.encode(identity);
  result.semiring = FiniteSemiring(std::move(labels), std::move(add), std::move(mul), zero, one);
  return result;
}

MatrixSemiring matrix_semiring(const CoeffDomain& coeff, std::size_t n, MatrixShape shape) {
  return matrix_semiring(coefficient_semiring(coeff), n, shape);
}

DifferenceRing difference_ring(const FiniteSemiring& s) {
  const auto n = static_cast<Elem>(s.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (x != y && s.add(x, z) == s.add(y, z))
          throw PreconditionError("semiring is not additively cancellative");

  // (a, b) ~ (a + c, b + c) generates ~: two equivalent pairs shift to a
  // common pair, (a + d, b + d) = (c + b, d + b).
  const std::size_t pairs = std::size_t{n} * n;
  UnionFind uf(pairs);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) uf.unite(std::size_t{a} * n + b, std::size_t{s.add(a, c)} * n + s.add(b, c));

  std::vector<long> class_of_root(pairs, -1);
  DifferenceRing result;
  std::vector<Elem> class_of(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t root = uf.find(p);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<long>(result.representatives.size());
      result.representatives.emplace_back(static_cast<Elem>(root / n), static_cast<Elem>(root % n));
    }
    class_of[p] = static_cast<Elem>(class_of_root[root]);
  }

  const std::size_t m = result.representatives.size();
  if (m > kMaxTableOrder) throw ResourceLimit("difference ring too large");
  OpTable add(m), mul(m);
  std::vector<std::string> labels;
  auto cls = [&](Elem a, Elem b) { return class_of[std::size_t{a} * n + b]; };
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = result.representatives[i];
    labels.push_back(s.label(a) + "-" + s.label(b));
    for (std::size_t j = 0; j < m; ++j) {
      const auto [c, d] = result.representatives[j];
      add.set(static_cast<Elem>(i), static_cast<Elem>(j), cls(s.add(a, c), s.add(b, d)));
      mul.set(static_cast<Elem>(i), static_cast<Elem>(j),
              cls(s.add(s.mul(a, c), s.mul(b, d)), s.add(s.mul(a, d), s.mul(b, c))));
    }
  }
  for (Elem x = 0; x < n; ++x) result.embedding.push_back(cls(x, s.zero()));
  result.ring = FiniteSemiring(std::move(labels), std::move(add), std::move(mul), cls(s.zero(), s.zero()),
                               cls(s.one(), s.zero()));
  return result;
}

Elem group_ring_index(const std::vector<std::uint32_t>& coefficients, std::uint32_t modulus) {
  Elem index = 0, place = 1;
  for (auto c : coefficients) {
    if (c >= modulus) throw PreconditionError("coefficient out of range");
    index += c * place;
    place *= modulus;
  }
  return index;
}

std::vector<std::uint32_t> group_ring_coefficients(Elem x, std::size_t group_order, std::uint32_t modulus) {
  std::vector<std::uint32_t> c(group_order);
  for (auto& digit : c) {
    digit = x % modulus;
    x /= modulus;
  }
  return c;
}

FiniteSemiring finite_group_ring(const FiniteGroup& g, const CoeffDomain& coeff) {
  if (!coeff.is_finite()) throw PreconditionError("group ring needs a finite coefficient domain");
  const std::size_t d = g.order();
  const std::uint32_t m = coeff.modulus();
  const std::size_t order = checked_power(m, d);

  std::vector<std::vector<std::uint32_t>> digits(order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    digits[x] = group_ring_coefficients(static_cast<Elem>(x), d, m);
    std::string l;
    for (std::size_t i = 0; i < d; ++i) {
      if (digits[x][i] == 0) continue;
      if (!l.empty()) l += '+';
      if (digits[x][i] != 1) l += std::to_string(digits[x][i]) + "*";
      l += g.label(static_cast<Elem>(i));
    }
    labels[x] = l.empty() ? "0" : l;
  }

  OpTable add(order), mul(order);
  std::vector<std::uint32_t> sum(d), product(d);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::fill(product.begin(), product.end(), 0);
      for (std::size_t i = 0; i < d; ++i) {
        sum[i] = (digits[x][i] + digits[y][i]) % m;
        if (digits[x][i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (digits[y][j] == 0) continue;
          auto& slot = product[g.mul(static_cast<Elem>(i), static_cast<Elem>(j))];
          slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(digits[x][i]) * digits[y][j]) % m);
        }
      }
      add.set(static_cast<Elem>(x), static_cast<Elem>(y), group_ring_index(sum, m));
      mul.set(static_cast<Elem>(x), static_cast<Elem>(y), group_ring_index(product, m));
    }
  std::vector<std::uint32_t> unit(d, 0);
  unit[g.identity()] = 1;
  return FiniteSemiring(std::move(labels), std::move(add), std::move(mul), 0, group_ring_index(unit, m));
}

}  // namespace cesr
