#include "cesr/linalg.hpp"

#include <algorithm>

#include "cesr/error.hpp"
#include "cesr/exact.hpp"

namespace cesr {

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError("F_p needs a prime p");
  return Field(p);
}

mpq_class Field::normalize(const mpq_class& v) const {
  if (p_ == 0) return v;
  // a/b mod p
  mpz_class num = v.get_num() % p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  mpz_class r = num * inv % p_;
  if (r < 0) r += p_;
  return mpq_class(r);
}

mpq_class Field::inverse(const mpq_class& v) const {
  if (is_zero(v)) throw PreconditionError("inverse of zero");
  if (p_ == 0) return 1 / v;
  mpz_class a = normalize(v).get_num(), inv;
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return mpq_class(inv);
}

namespace {

Echelon rational_echelon(const Mat& input, std::size_t cols) {
  // Clear denominators row by row.
  std::vector<std::vector<mpz_class>> m;
  for (const auto& row : input) {
    mpz_class l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = input.size() ? mpz_class(row[c] * l) : 0;
    m.push_back(std::move(r));
  }
  auto remove_content = [&](std::vector<mpz_class>& r) {
    mpz_class g = 0;
    for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  };

  Echelon e;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const mpz_class p = m[rank][c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const mpz_class f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = p * m[i][k] - f * m[rank][k];
      remove_content(m[i]);
    }
    e.pivots.push_back(c);
    ++rank;
  }
  for (std::size_t i = 0; i < rank; ++i) {
    const mpz_class p = m[i][e.pivots[i]];
    Vec row(cols);
    for (std::size_t k = 0; k < cols; ++k) {
      row[k] = mpq_class(m[i][k], p);
      row[k].canonicalize();
    }
    e.rows.push_back(std::move(row));
  }
  return e;
}

Echelon modular_echelon(const Field& f, const Mat& input, std::size_t cols) {
  Mat m;
  for (const auto& row : input) {
    Vec r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = f.normalize(row[c]);
    m.push_back(std::move(r));
  }
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const mpq_class inv = f.inverse(m[rank][c]);
    for (auto& v : m[rank]) v = f.normalize(v * inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || sgn(m[i][c]) == 0) continue;
      const mpq_class factor = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.normalize(m[i][k] - factor * m[rank][k]);
    }
    e.pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  e.rows = std::move(m);
  return e;
}

}  // namespace

Echelon reduced_echelon(const Field& field, const Mat& rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw PreconditionError("row length differs from column count");
  return field.is_rational() ? rational_echelon(rows, cols) : modular_echelon(field, rows, cols);
}

std::size_t rank(const Field& field, const Mat& rows, std::size_t cols) {
  return reduced_echelon(field, rows, cols).rows.size();
}

SubspaceBasis row_space(const Field& field, const Mat& rows, std::size_t cols) {
  return {reduced_echelon(field, rows, cols).rows};
}

SubspaceBasis nullspace(const Field& field, const Mat& rows, std::size_t cols) {
  const auto e = reduced_echelon(field, rows, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = field.normalize(-e.rows[i][free]);
    basis.push_back(std::move(v));
  }
  return row_space(field, basis, cols);
}

bool in_span(const Field& field, const SubspaceBasis& basis, const Vec& v) {
  Mat rows = basis.vectors;
  rows.push_back(v);
  return rank(field, rows, v.size()) == basis.dimension();
}

}  // namespace cesr
