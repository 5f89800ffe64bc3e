#pragma once

// Exact linear algebra over Q (fraction-free elimination) and F_p.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cesr {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

// Q, or F_p with elements stored as integer representatives in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  mpq_class normalize(const mpq_class& v) const;
  mpq_class inverse(const mpq_class& v) const;
  bool is_zero(const mpq_class& v) const { return sgn(normalize(v)) == 0; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// Row-reduced basis: every vector has a leading 1 in a column where the
// other vectors are 0, leading columns increase.
struct SubspaceBasis {
  std::vector<Vec> vectors;
  std::size_t dimension() const noexcept { return vectors.size(); }
};

struct Echelon {
  Mat rows;                        // reduced, nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form. Over Q rows are cleared to integers and
// eliminated fraction-free (content removed after each step); pivots are
// normalized to 1 only at the end.
Echelon reduced_echelon(const Field& field, const Mat& rows, std::size_t cols);

std::size_t rank(const Field& field, const Mat& rows, std::size_t cols);
SubspaceBasis row_space(const Field& field, const Mat& rows, std::size_t cols);
// Basis of {x : rows * x = 0}.
SubspaceBasis nullspace(const Field& field, const Mat& rows, std::size_t cols);
bool in_span(const Field& field, const SubspaceBasis& basis, const Vec& v);

}  // namespace cesr
