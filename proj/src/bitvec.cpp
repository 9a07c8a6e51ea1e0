#include "isofam/bitvec.hpp"

namespace isofam {

namespace {
std::uint64_t full_mask(int w) {
  return w == 64 ? ~0ull : (1ull << w) - 1;
}
}  // namespace

BitVector::BitVector(std::uint64_t b, int w) : bits(b), width(w) {
  if (w < 0 || w > 64) throw UsageError("BitVector width out of range");
  if (b & ~full_mask(w)) throw UsageError("BitVector has bits above its width");
}

BitVector BitVector::unit(int label, int w) {
  if (label < 1 || label > w) throw UsageError("BitVector label out of range");
  return BitVector(1ull << (label - 1), w);
}

BitVector BitVector::ones(int w) { return BitVector(full_mask(w), w); }

bool BitVector::test(int label) const {
  if (label < 1 || label > width) throw UsageError("BitVector label out of range");
  return (bits >> (label - 1)) & 1;
}

BitVector BitVector::with(int label) const {
  BitVector r = *this;
  r.bits |= BitVector::unit(label, width).bits;
  return r;
}

BitVector BitVector::without(int label) const {
  BitVector r = *this;
  r.bits &= ~BitVector::unit(label, width).bits;
  return r;
}

int BitVector::highest_label() const {
  return bits == 0 ? 0 : 64 - std::countl_zero(bits);
}

std::vector<int> BitVector::labels() const {
  std::vector<int> out;
  for (std::uint64_t m = bits; m; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

BitVector operator^(BitVector a, BitVector b) {
  if (a.width != b.width) throw UsageError("BitVector width mismatch");
  return BitVector(a.bits ^ b.bits, a.width);
}

bool BitVector::subset_of(BitVector other) const {
  if (width != other.width) throw UsageError("BitVector width mismatch");
  return (bits & ~other.bits) == 0;
}

bool dot_parity(BitVector a, BitVector b) {
  if (a.width != b.width) throw UsageError("BitVector width mismatch");
  return std::popcount(a.bits & b.bits) & 1;
}

SymplecticForm SymplecticForm::from_rows(std::vector<std::uint64_t> rows, int width) {
  if (static_cast<int>(rows.size()) != width)
    throw UsageError("form row count differs from width");
  SymplecticForm f;
  f.rows = std::move(rows);
  f.width = width;
  for (int i = 0; i < width; ++i) {
    BitVector row(f.rows[i], width);
    if (row.test(i + 1)) throw UsageError("form has a nonzero diagonal entry");
    for (int j : row.labels())
      if (!BitVector(f.rows[j - 1], width).test(i + 1))
        throw UsageError("form is not symmetric");
  }
  return f;
}

BitVector SymplecticForm::dual(BitVector v) const {
  if (v.width != width) throw UsageError("BitVector width mismatch");
  std::uint64_t acc = 0;
  for (std::uint64_t m = v.bits; m; m &= m - 1)
    acc ^= rows[std::countr_zero(m)];
  return BitVector(acc, width);
}

bool SymplecticForm::pair(BitVector u, BitVector v) const {
  return dot_parity(u, dual(v));
}

}  // namespace isofam
