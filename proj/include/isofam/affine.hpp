#pragma once

#include "isofam/family.hpp"
#include "isofam/order.hpp"

namespace isofam {

// Partition of the plain-cycle ambient into the vectors with an even count
// of even-size runs (v0) and the rest (v1: the all-ones vector and the odd
// counts). Masks are sorted.
struct AffineSplit {
  std::vector<std::uint64_t> v0, v1;
};

AffineSplit affine_split(const Setup& cycle);

// Projection to the quotient restricted to v0 hits every class exactly once.
bool pi0_check(const Setup& cycle);

// Span of the member vectors inside the unquotiented ambient. Requires a
// family satisfying both axioms.
SubspaceHandle lift_M(const Setup& cycle, const Family& f);

struct TildeRecord {
  SubspaceHandle space;  // plain span, or span plus the all-ones line
  BitVector eps_tilde;
  bool extended = false;
  int phi_index = 0;  // record in the underlying table
};

struct TildeFamily {
  std::vector<TildeRecord> records;  // plain block first, then extended
};

// Doubles the family table: each span, and each span extended by the
// all-ones line with eps shifted by the all-ones vector.
TildeFamily tilde_family(const Setup& cycle, const PhiTable& table);

// Product of the underlying order with plain < extended; antisymmetry is
// verified, not assumed.
PartialOrder tilde_order(const TildeFamily& tf, const PartialOrder& phi_order);

// Even-N path case: partner[i] = j with eps(B_j) = eps(B_i) + e over the
// odd positions of the whole path. Total and fixed-point free, or raises.
std::vector<int> evenN_involution(const Setup& path_even, const PhiTable& table);

// Odd positions of the whole vertex set (defined when |S| is odd).
BitVector odd_positions_mask(const Setup& s);

// Distinguished vector and functional attached to one edge of the quotient
// setup: bracket = sum of basis images over the odd positions of the
// complementary arc; zmask pairs a vector with the edge's endpoints.
struct EdgeMarker {
  std::pair<int, int> edge;
  BitVector bracket;
  BitVector zmask;  // functional: z(x) = dot_parity(x, zmask)

  bool z(BitVector x) const { return dot_parity(x, zmask); }
};

// Validates on construction: z(bracket) = 0 and the form restricted to the
// kernel of z has radical exactly the bracket line.
EdgeMarker edge_marker(const Setup& quotient, std::pair<int, int> edge);

struct BracketMembership {
  bool in_span = false;
  bool support_disjoint = false;
  bool size_maximal = false;  // |B| = (N-1)/2

  bool criterion_holds() const { return in_span == (support_disjoint && size_maximal); }
};

// Both directions of the bracket membership criterion for one family.
BracketMembership bracket_membership(const Setup& quotient, const PhiRecord& rec,
                                     const EdgeMarker& marker);

}  // namespace isofam
