#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "isofam/common.hpp"

namespace isofam {

// Vector over GF(2) packed into one machine word. Bit b holds the
// coordinate of index-set element b+1 (labels are 1-based throughout).
struct BitVector {
  std::uint64_t bits = 0;
  int width = 0;

  BitVector() = default;
  BitVector(std::uint64_t b, int w);

  static BitVector zero(int w) { return BitVector(0, w); }
  static BitVector unit(int label, int w);
  static BitVector ones(int w);

  bool test(int label) const;            // 1-based
  BitVector with(int label) const;
  BitVector without(int label) const;
  int count() const { return std::popcount(bits); }
  bool is_zero() const { return bits == 0; }
  int highest_label() const;             // 0 when zero

  std::vector<int> labels() const;       // ascending 1-based positions

  friend BitVector operator^(BitVector a, BitVector b);
  friend bool operator==(const BitVector&, const BitVector&) = default;
  bool subset_of(BitVector other) const;
};

bool dot_parity(BitVector a, BitVector b);

// Alternating symmetric bilinear form, one partner mask per index.
struct SymplecticForm {
  std::vector<std::uint64_t> rows;  // rows[i] = mask of j with <e_{i+1}, e_{j+1}> = 1
  int width = 0;

  // Validates symmetry and zero diagonal.
  static SymplecticForm from_rows(std::vector<std::uint64_t> rows, int width);

  // w with w_i = <e_i, v>; pairing with u is then a dot parity.
  BitVector dual(BitVector v) const;
  bool pair(BitVector u, BitVector v) const;
};

}  // namespace isofam
