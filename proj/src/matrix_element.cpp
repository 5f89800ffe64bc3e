#include "cesr/matrix_element.hpp"

#include <algorithm>

#include "cesr/error.hpp"

namespace cesr {

MatrixElement::MatrixElement(CoeffDomain domain, std::size_t n, MatrixShape shape, std::vector<Coefficient> entries)
    : domain_(domain), n_(n), shape_(shape), entries_(std::move(entries)) {
  if (n_ == 0) throw PreconditionError("matrix size must be positive");
  if (entries_.size() != n_ * n_) throw PreconditionError("matrix needs n*n entries");
  for (const auto& e : entries_)
    if (!domain_.contains(e)) throw DomainMismatch("matrix entry outside " + domain_.name());
  if (shape_ == MatrixShape::upper_triangular)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!coeff_is_zero(at(i, j))) throw PreconditionError("shape violation: nonzero entry below the diagonal");
}

MatrixElement MatrixElement::from_ints(CoeffDomain domain, std::size_t n, MatrixShape shape,
                                       const std::vector<long>& v) {
  std::vector<Coefficient> entries;
  entries.reserve(v.size());
  for (long x : v) entries.push_back(domain.from_int(x));
  return MatrixElement(domain, n, shape, std::move(entries));
}

MatrixElement MatrixElement::zero(CoeffDomain domain, std::size_t n, MatrixShape shape) {
  return MatrixElement(domain, n, shape, std::vector<Coefficient>(n * n, domain.zero()));
}

MatrixElement MatrixElement::identity(CoeffDomain domain, std::size_t n, MatrixShape shape) {
  std::vector<Coefficient> entries(n * n, domain.zero());
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = domain.one();
  return MatrixElement(domain, n, shape, std::move(entries));
}

bool MatrixElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Coefficient& c) { return coeff_is_zero(c); });
}

MatrixElement MatrixElement::scaled(const Coefficient& c) const {
  std::vector<Coefficient> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) entries.push_back(coeff_mul(c, e));
  return MatrixElement(domain_, n_, shape_, std::move(entries));
}

std::string MatrixElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ',';
      else if (i) out += ';';
      out += cesr::to_string(at(i, j));
    }
  return out + "]";
}

namespace {

void require_compatible(const MatrixElement& a, const MatrixElement& b) {
  if (a.size() != b.size()) throw PreconditionError("matrix sizes differ");
  if (!(a.domain() == b.domain())) throw DomainMismatch("matrix coefficient domains differ");
}

MatrixShape common_shape(const MatrixElement& a, const MatrixElement& b) {
  return a.shape() == b.shape() ? a.shape() : MatrixShape::full;
}

}  // namespace

MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
  require_compatible(a, b);
  std::vector<Coefficient> entries;
  entries.reserve(a.entries_.size());
  for (std::size_t k = 0; k < a.entries_.size(); ++k) entries.push_back(coeff_add(a.entries_[k], b.entries_[k]));
  return MatrixElement(a.domain_, a.n_, common_shape(a, b), std::move(entries));
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
  require_compatible(a, b);
  const std::size_t n = a.n_;
  std::vector<Coefficient> entries(n * n, a.domain_.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coefficient acc = a.domain_.zero();
      for (std::size_t k = 0; k < n; ++k) acc = coeff_add(acc, coeff_mul(a.at(i, k), b.at(k, j)));
      entries[i * n + j] = std::move(acc);
    }
  return MatrixElement(a.domain_, n, common_shape(a, b), std::move(entries));
}

bool operator==(const MatrixElement& a, const MatrixElement& b) {
  return a.n_ == b.n_ && a.domain_ == b.domain_ && a.entries_ == b.entries_;
}

}  // namespace cesr
