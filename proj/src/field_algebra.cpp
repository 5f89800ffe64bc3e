#include "cesr/field_algebra.hpp"

#include <random>

#include "cesr/error.hpp"

namespace cesr {

FieldAlgebra::FieldAlgebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vec>> constants,
                           Vec unit)
    : field_(field), labels_(std::move(labels)), constants_(std::move(constants)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw PreconditionError("algebra needs a nonempty basis");
  if (constants_.size() != d || unit_.size() != d) throw PreconditionError("structure constants have wrong shape");
  for (auto& row : constants_) {
    if (row.size() != d) throw PreconditionError("structure constants have wrong shape");
    for (auto& v : row) {
      if (v.size() != d) throw PreconditionError("structure constants have wrong shape");
      for (auto& c : v) c = field_.normalize(c);
    }
  }
  for (auto& c : unit_) c = field_.normalize(c);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec b = basis_vector(i);
    if (mul(unit_, b) != b || mul(b, unit_) != b) throw PreconditionError("unit is not a two-sided identity");
  }
}

Vec FieldAlgebra::basis_vector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = 1;
  return v;
}

Vec FieldAlgebra::add(const Vec& x, const Vec& y) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.normalize(x[i] + y[i]);
  return r;
}

Vec FieldAlgebra::sub(const Vec& x, const Vec& y) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.normalize(x[i] - y[i]);
  return r;
}

Vec FieldAlgebra::scale(const mpq_class& c, const Vec& x) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.normalize(c * x[i]);
  return r;
}

Vec FieldAlgebra::mul(const Vec& x, const Vec& y) const {
  const std::size_t d = dimension();
  Vec r(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const mpq_class c = x[i] * y[j];
      const Vec& p = constants_[i][j];
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(p[k]) != 0) r[k] += c * p[k];
    }
  }
  for (auto& v : r) v = field_.normalize(v);
  return r;
}

bool FieldAlgebra::is_zero(const Vec& x) const {
  for (const auto& v : x)
    if (!field_.is_zero(v)) return false;
  return true;
}

std::string FieldAlgebra::format(const Vec& x) const {
  std::string out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    mpq_class c = field_.normalize(x[i]);
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += c.get_str() + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

std::optional<std::array<std::size_t, 3>> FieldAlgebra::associativity_failure() const {
  const std::size_t d = dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vec bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
        if (mul(mul(bi, bj), bk) != mul(bi, mul(bj, bk))) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

FieldAlgebra to_group_algebra(const FiniteGroup& g, const Field& field) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vec>> constants(n, std::vector<Vec>(n, Vec(n, 0)));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) constants[i][j][g.mul(i, j)] = 1;
  Vec unit(n, 0);
  unit[g.identity()] = 1;
  return FieldAlgebra(field, g.labels(), std::move(constants), std::move(unit));
}

namespace {

// Rows expressing [x, b_i] = 0 for all i as a linear system in the
// coordinates of x; coefficient of x_j in coordinate t of x b_i - b_i x.
Mat commutator_system(const FieldAlgebra& a) {
  const std::size_t d = a.dimension();
  Mat rows;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec bi = a.basis_vector(i);
    std::vector<Vec> comm(d);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec bj = a.basis_vector(j);
      comm[j] = a.sub(a.mul(bj, bi), a.mul(bi, bj));
    }
    for (std::size_t t = 0; t < d; ++t) {
      Vec row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = comm[j][t];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

SubspaceBasis algebra_center_basis(const FieldAlgebra& a) {
  return nullspace(a.field(), commutator_system(a), a.dimension());
}

bool ce_failure_witness_check(const FieldAlgebra& a, const Vec& x) {
  if (x.size() != a.dimension()) throw PreconditionError("vector length differs from algebra dimension");
  if (a.is_zero(x)) throw PreconditionError("witness must be nonzero");
  const std::size_t d = a.dimension();
  const auto z = algebra_center_basis(a).vectors;
  const std::size_t k = z.size();

  // y = sum c_m z_m; require [x y, b_i] = 0 for all i.
  std::vector<Vec> xz(k);
  for (std::size_t m = 0; m < k; ++m) xz[m] = a.mul(x, z[m]);
  Mat rows;
  for (std::size_t i = 0; i < d; ++i) {
    const Vec bi = a.basis_vector(i);
    std::vector<Vec> comm(k);
    for (std::size_t m = 0; m < k; ++m) comm[m] = a.sub(a.mul(xz[m], bi), a.mul(bi, xz[m]));
    for (std::size_t t = 0; t < d; ++t) {
      Vec row(k);
      for (std::size_t m = 0; m < k; ++m) row[m] = comm[m][t];
      rows.push_back(std::move(row));
    }
  }
  const auto v = nullspace(a.field(), rows, k);
  for (const auto& c : v.vectors) {
    Vec y = a.zero();
    for (std::size_t m = 0; m < k; ++m) y = a.add(y, a.scale(c[m], z[m]));
    if (!a.is_zero(a.mul(x, y))) return false;
  }
  return true;
}

ReducedProbe reduced_probe(const FieldAlgebra& a, std::size_t trials, std::uint64_t seed, long bound) {
  ReducedProbe probe{trials, seed, bound, std::nullopt, {}};
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  auto sample = [&] {
    Vec v(a.dimension());
    for (auto& c : v) c = a.field().normalize(mpq_class(static_cast<long>(rng() % span) - bound));
    return v;
  };
  for (std::size_t t = 0; t < trials && !probe.nilpotent; ++t) {
    const Vec x = sample();
    const Vec y = sample();
    if (!a.is_zero(x) && a.is_zero(a.mul(x, x))) {
      probe.nilpotent = x;
      break;
    }
    const Vec diff = a.sub(x, y);
    if (!a.is_zero(diff) && a.is_zero(a.mul(diff, diff))) probe.nilpotent = diff;
  }
  probe.summary = probe.nilpotent ? "nilpotent found: " + a.format(*probe.nilpotent)
                                  : "no nilpotent found in " + std::to_string(trials) + " trials";
  return probe;
}

std::optional<std::pair<Vec, Vec>> find_zero_divisor_pair(const FieldAlgebra& a) {
  const std::size_t d = a.dimension();
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < d; ++i)
    for (int si : {1, -1}) {
      Vec v = a.zero();
      v[i] = a.field().normalize(si);
      candidates.push_back(v);
      for (std::size_t j = i + 1; j < d; ++j)
        for (int sj : {1, -1}) {
          Vec w = v;
          w[j] = a.field().normalize(sj);
          candidates.push_back(std::move(w));
        }
    }
  for (const auto& x : candidates)
    for (const auto& y : candidates)
      if (a.is_zero(a.mul(x, y))) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace cesr
