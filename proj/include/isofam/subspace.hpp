#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isofam/bitvec.hpp"

namespace isofam {

// Subspace in fully reduced row-echelon form: pivot of a row is its highest
// set bit, pivots strictly increasing across rows, and every pivot bit
// appears in exactly one row. The basis is therefore a canonical function of
// the subspace, so equality and hashing work structurally.
struct SubspaceHandle {
  std::vector<std::uint64_t> rows;  // sorted by pivot ascending
  int width = 0;

  static SubspaceHandle zero(int w) { return SubspaceHandle{{}, w}; }

  int dim() const { return static_cast<int>(rows.size()); }

  // Residual of v after reduction against the basis; zero iff v is a member.
  BitVector reduce(BitVector v) const;
  bool contains(BitVector v) const { return reduce(v).is_zero(); }
  bool contains_all(const SubspaceHandle& other) const;

  // Inserts v, re-echelonizing. Returns false if v was already a member.
  bool insert(BitVector v);

  // All 2^dim members. Guarded against dim > 20.
  std::vector<BitVector> elements() const;

  std::uint64_t hash() const;
  friend bool operator==(const SubspaceHandle&, const SubspaceHandle&) = default;
};

// The width-taking form accepts an empty list (the zero subspace); the
// other two infer the width and need at least one vector.
SubspaceHandle span(std::span<const BitVector> vectors, int width);
SubspaceHandle span(std::span<const BitVector> vectors);
SubspaceHandle span(std::initializer_list<BitVector> vectors);

// Solution space of dot_parity(row, x) = 0 over all equation rows.
SubspaceHandle nullspace(const std::vector<std::uint64_t>& eq_rows, int width);

// {x : <x, l> = 0 for all l in L}. Requires the form to be nondegenerate
// on the full width-dimensional ambient, so dim L + dim perp = width.
SubspaceHandle perp(const SubspaceHandle& sub, const SymplecticForm& form);

// Null space of the form itself.
SubspaceHandle radical(const SymplecticForm& form);

SubspaceHandle sum(const SubspaceHandle& a, const SubspaceHandle& b);
SubspaceHandle intersect(const SubspaceHandle& a, const SubspaceHandle& b);

// Linear projection killing one nonzero vector. Each coset is represented
// by the unique member whose bit at the highest set label of `killed` is
// clear; canonical representatives are closed under xor.
struct QuotientMap {
  int width = 0;
  BitVector killed;
  int pivot = 0;  // highest set label of killed

  static QuotientMap killing(BitVector killed);

  BitVector project(BitVector v) const;
  // Section of project: canonical representative of a coset, unchanged.
  BitVector lift(BitVector w) const;

  SubspaceHandle project(const SubspaceHandle& sub) const;
};

}  // namespace isofam
