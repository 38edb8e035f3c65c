#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthoforms/errors.hpp"

namespace orthoforms {

/// Square matrix over the two-element field, dimension <= 8, rows stored as
/// bitmasks (bit j of rows[i] is entry (i, j)).
class MatrixF2 {
public:
  MatrixF2() = default;
  explicit MatrixF2(unsigned dimension);
  static MatrixF2 identity(unsigned dimension);
  static MatrixF2 from_rows(const std::vector<std::vector<int>>& rows);

  unsigned dimension() const { return k_; }
  int get(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1; }
  void set(unsigned i, unsigned j, int v);

  MatrixF2 operator*(const MatrixF2& other) const;
  MatrixF2 transpose() const;
  bool operator==(const MatrixF2& other) const = default;

  bool invertible() const;

  /// Packs the bit rows into one integer; the canonical element key.
  std::uint64_t encode() const;
  static MatrixF2 decode(std::uint64_t code, unsigned dimension);

  /// Block diagonal sum.
  static MatrixF2 direct_sum(const MatrixF2& a, const MatrixF2& b);

private:
  unsigned k_ = 0;
  std::array<std::uint8_t, 8> rows_{};
};

/// True iff M^T G M = G. Dimension mismatch is an error.
bool preserves_form(const MatrixF2& m, const MatrixF2& gram);

/// The hyperbolic plane [[0,1],[1,0]] over F_2.
MatrixF2 hyperbolic_plane();
/// U + U, the 4x4 Gram matrix preserved by the symplectic generators.
MatrixF2 gram_uu();

/// Breadth-first closure of a generating set under multiplication.
struct GroupClosure {
  unsigned dimension = 0;
  std::vector<MatrixF2> generators;
  std::vector<std::uint64_t> elements;  // sorted encodings
  std::size_t order = 0;
  std::map<unsigned, std::size_t> order_histogram;

  bool contains(const MatrixF2& m) const;
};

GroupClosure generate_group(const std::vector<MatrixF2>& generators);

/// Order 720 with the element-order statistics of the symmetric group on
/// six letters.
bool s6_signature_check(const GroupClosure& closure);

/// Oracle: enumerates all 720 permutations of six letters and tabulates
/// element orders (lcm of cycle lengths).
std::map<unsigned, std::size_t> s6_order_histogram_oracle();

/// The five 4x4 generators of the symplectic group over F_2: the upper
/// transvection, U + I, the middle swap, I + U and the lower transvection.
std::vector<MatrixF2> sp4_f2_generators();

/// The five generators extended to 6x6 by an identity block, plus
/// I_4 + U.
std::vector<MatrixF2> extended_generators_6();

std::string closure_report_json_text(const GroupClosure& closure);

}  // namespace orthoforms
