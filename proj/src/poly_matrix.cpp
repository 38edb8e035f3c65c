#include "orthoforms/poly_matrix.hpp"

namespace orthoforms {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, SpacePtr space)
    : rows_(rows), cols_(cols), space_(std::move(space)) {
  if (rows_ == 0 || cols_ == 0)
    throw PreconditionError("matrix dimensions must be positive");
  entries_.assign(rows_ * cols_, Polynomial::zero(space_));
}

const Polynomial& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw PreconditionError("matrix index out of range");
  return entries_[i * cols_ + j];
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (i >= rows_ || j >= cols_) throw PreconditionError("matrix index out of range");
  if (!compatible(value.space(), space_))
    throw SpaceMismatchError("matrix entry over a different space");
  entries_[i * cols_ + j] = std::move(value);
}

Polynomial bareiss_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
    a.push_back(std::move(row));
  }

  int sign = 1;
  Polynomial prev = Polynomial::constant(m.space(), Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial::zero(m.space());
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = num.exact_div(prev);
      }
      a[i][k] = Polynomial::zero(m.space());
    }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

Polynomial laplace(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 1) return m.at(row, cols[0]);
  Polynomial acc = Polynomial::zero(m.space());
  for (std::size_t c = 0; c < k; ++c) {
    if (m.at(row, cols[c]).is_zero()) continue;
    std::size_t col = cols[c];
    cols.erase(cols.begin() + std::ptrdiff_t(c));
    Polynomial minor = laplace(m, cols, row + 1);
    cols.insert(cols.begin() + std::ptrdiff_t(c), col);
    Polynomial contrib = m.at(row, col) * minor;
    acc = (c % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

}  // namespace

Polynomial cofactor_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() > 8)
    throw DegreeError("cofactor determinant limited to dimension 8");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace(m, cols, 0);
}

}  // namespace orthoforms
