#pragma once

#include <vector>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// Dense matrix with Polynomial entries over one shared space.
class PolyMatrix {
public:
  PolyMatrix(std::size_t rows, std::size_t cols, SpacePtr space);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SpacePtr& space() const { return space_; }

  const Polynomial& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Polynomial value);

private:
  std::size_t rows_, cols_;
  SpacePtr space_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant by fraction-free one-step elimination. Pivots are the
/// first nonzero entry by row order; row swaps tracked by sign. All
/// intermediate divisions are exact. Throws PreconditionError on non-square
/// input.
Polynomial bareiss_determinant(const PolyMatrix& m);

/// Laplace-expansion determinant; independent oracle for bareiss. Guarded
/// to dimension <= 8 (DegreeError beyond).
Polynomial cofactor_determinant(const PolyMatrix& m);

}  // namespace orthoforms
