#include "isofam/subspace.hpp"

#include <algorithm>
#include <bit>

namespace isofam {

BitVector SubspaceHandle::reduce(BitVector v) const {
  if (v.width != width) throw UsageError("subspace/vector width mismatch");
  std::uint64_t x = v.bits;
  // rows are sorted by pivot ascending; scan from the top down.
  for (auto it = rows.rbegin(); it != rows.rend() && x; ++it) {
    std::uint64_t pivot_bit = 1ull << (64 - std::countl_zero(*it) - 1);
    if (x & pivot_bit) x ^= *it;
  }
  return BitVector(x, width);
}

bool SubspaceHandle::contains_all(const SubspaceHandle& other) const {
  for (std::uint64_t r : other.rows)
    if (!contains(BitVector(r, width))) return false;
  return true;
}

bool SubspaceHandle::insert(BitVector v) {
  BitVector res = reduce(v);
  if (res.is_zero()) return false;
  std::uint64_t pivot_bit = 1ull << (res.highest_label() - 1);
  for (std::uint64_t& r : rows)
    if (r & pivot_bit) r ^= res.bits;
  rows.push_back(res.bits);
  std::sort(rows.begin(), rows.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::countl_zero(a) > std::countl_zero(b);
  });
  return true;
}

std::vector<BitVector> SubspaceHandle::elements() const {
  if (dim() > 20) throw DomainError("subspace too large to enumerate");
  std::vector<BitVector> out;
  out.reserve(1ull << dim());
  for (std::uint64_t c = 0; c < (1ull << dim()); ++c) {
    std::uint64_t x = 0;
    for (std::uint64_t m = c; m; m &= m - 1) x ^= rows[std::countr_zero(m)];
    out.push_back(BitVector(x, width));
  }
  return out;
}

std::uint64_t SubspaceHandle::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(width);
  for (std::uint64_t r : rows) {
    h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SubspaceHandle span(std::span<const BitVector> vectors, int width) {
  SubspaceHandle s = SubspaceHandle::zero(width);
  for (const BitVector& v : vectors) s.insert(v);
  return s;
}

SubspaceHandle span(std::span<const BitVector> vectors) {
  if (vectors.empty()) throw UsageError("span of an empty list needs a width");
  return span(vectors, vectors.front().width);
}

SubspaceHandle span(std::initializer_list<BitVector> vectors) {
  return span(std::span<const BitVector>(vectors.begin(), vectors.size()));
}

SubspaceHandle nullspace(const std::vector<std::uint64_t>& eq_rows, int width) {
  // Echelonize the equations, tracking pivot columns, then read one basis
  // vector per free column.
  std::vector<std::uint64_t> ech;
  std::uint64_t pivot_mask = 0;
  for (std::uint64_t row : eq_rows) {
    for (std::uint64_t e : ech) {
      std::uint64_t pb = 1ull << (64 - std::countl_zero(e) - 1);
      if (row & pb) row ^= e;
    }
    if (row) {
      std::uint64_t pb = 1ull << (64 - std::countl_zero(row) - 1);
      for (std::uint64_t& e : ech)
        if (e & pb) e ^= row;
      ech.push_back(row);
      pivot_mask |= pb;
    }
  }
  SubspaceHandle out = SubspaceHandle::zero(width);
  for (int f = 0; f < width; ++f) {
    std::uint64_t fb = 1ull << f;
    if (pivot_mask & fb) continue;
    std::uint64_t v = fb;
    for (std::uint64_t e : ech)
      if (e & fb) v |= 1ull << (64 - std::countl_zero(e) - 1);
    out.insert(BitVector(v, width));
  }
  return out;
}

SubspaceHandle perp(const SubspaceHandle& sub, const SymplecticForm& form) {
  if (sub.width != form.width) throw UsageError("subspace/form width mismatch");
  if (!radical(form).rows.empty())
    throw DomainError("perp requires a nondegenerate form");
  std::vector<std::uint64_t> eqs;
  for (std::uint64_t r : sub.rows)
    eqs.push_back(form.dual(BitVector(r, sub.width)).bits);
  return nullspace(eqs, sub.width);
}

SubspaceHandle radical(const SymplecticForm& form) {
  return nullspace(form.rows, form.width);
}

SubspaceHandle sum(const SubspaceHandle& a, const SubspaceHandle& b) {
  if (a.width != b.width) throw UsageError("subspace width mismatch");
  SubspaceHandle s = a;
  for (std::uint64_t r : b.rows) s.insert(BitVector(r, b.width));
  return s;
}

SubspaceHandle intersect(const SubspaceHandle& a, const SubspaceHandle& b) {
  const SubspaceHandle& small = a.dim() <= b.dim() ? a : b;
  const SubspaceHandle& large = a.dim() <= b.dim() ? b : a;
  SubspaceHandle out = SubspaceHandle::zero(a.width);
  for (const BitVector& v : small.elements())
    if (large.contains(v)) out.insert(v);
  return out;
}

QuotientMap QuotientMap::killing(BitVector killed) {
  if (killed.is_zero()) throw UsageError("quotient must kill a nonzero vector");
  return QuotientMap{killed.width, killed, killed.highest_label()};
}

BitVector QuotientMap::project(BitVector v) const {
  if (v.width != width) throw UsageError("quotient/vector width mismatch");
  return v.test(pivot) ? v ^ killed : v;
}

BitVector QuotientMap::lift(BitVector w) const {
  if (w.width != width) throw UsageError("quotient/vector width mismatch");
  if (w.test(pivot)) throw DomainError("not a canonical representative");
  return w;
}

SubspaceHandle QuotientMap::project(const SubspaceHandle& sub) const {
  SubspaceHandle out = SubspaceHandle::zero(width);
  for (std::uint64_t r : sub.rows) out.insert(project(BitVector(r, width)));
  return out;
}

}  // namespace isofam
