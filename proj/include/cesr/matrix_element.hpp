#pragma once

#include <string>
#include <vector>

#include "cesr/constructions.hpp"
#include "cesr/exact.hpp"

namespace cesr {

// Square matrix with exact entries, used for witness checks on semirings
// whose carrier is infinite (matrices over N or Z).
class MatrixElement {
 public:
  // Row-major entries. Throws PreconditionError on a shape violation or
  // an entry outside the domain.
  MatrixElement(CoeffDomain domain, std::size_t n, MatrixShape shape, std::vector<Coefficient> entries);

  static MatrixElement from_ints(CoeffDomain domain, std::size_t n, MatrixShape shape, const std::vector<long>& v);
  static MatrixElement zero(CoeffDomain domain, std::size_t n, MatrixShape shape = MatrixShape::upper_triangular);
  static MatrixElement identity(CoeffDomain domain, std::size_t n, MatrixShape shape = MatrixShape::upper_triangular);

  std::size_t size() const noexcept { return n_; }
  MatrixShape shape() const noexcept { return shape_; }
  const CoeffDomain& domain() const noexcept { return domain_; }
  const Coefficient& at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  bool is_zero() const;
  MatrixElement scaled(const Coefficient& c) const;
  std::string to_string() const;

  friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b);
  friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);
  // Value equality; the shape flag does not take part.
  friend bool operator==(const MatrixElement& a, const MatrixElement& b);

 private:
  CoeffDomain domain_;
  std::size_t n_;
  MatrixShape shape_;
  std::vector<Coefficient> entries_;
};

// Symbolic counterpart of a centrality test: x commutes with each
// generator. This decides centrality in the generated semiring, since a
// centralizer is a subsemiring containing 0 and 1.
template <class T>
bool is_central_wrt_generators(const T& x, const std::vector<T>& generators) {
  for (const auto& g : generators)
    if (!(x * g == g * x)) return false;
  return true;
}

}  // namespace cesr
