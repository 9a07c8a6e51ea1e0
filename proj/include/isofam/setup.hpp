#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isofam/subspace.hpp"

namespace isofam {

// The four ambients. PathOdd/PathEven: N-1 path vertices carrying a basis
// of an (N-1)-dimensional space (N odd resp. even). Cycle: N cycle vertices,
// basis of an N-dimensional space with one-dimensional radical. CycleQuotient:
// the same cycle mapped into the (N-1)-dimensional quotient by the all-ones
// vector, where the induced form is nondegenerate.
enum class GraphCase { PathOdd, PathEven, Cycle, CycleQuotient };

const char* case_name(GraphCase c);

// Vertex subset inducing a path (type A). Both parities occur; the family
// axioms only ever use odd ones.
struct Interval {
  BitVector members;  // width = number of vertices

  int size() const { return members.count(); }
  bool odd() const { return size() % 2 == 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Orders by (size, mask); used everywhere a deterministic interval order
// is needed.
bool interval_less(const Interval& a, const Interval& b);

struct ComponentSplit {
  std::vector<Interval> parts;
};

struct Perm {
  std::vector<int> to;  // 1-based: vertex s maps to to[s-1]
  int apply(int s) const { return to[s - 1]; }
};

struct Setup {
  GraphCase kase;
  int n = 0;              // the size parameter N
  int vertices = 0;       // |S|
  int ambient_width = 0;  // width of the vectors attached to vertices
  std::vector<std::pair<int, int>> edges;
  std::vector<BitVector> basis_images;    // e_s (projected in the quotient case)
  std::vector<std::uint64_t> neighbors;   // adjacency masks over vertices
  SymplecticForm form;                    // on the ambient
  std::optional<QuotientMap> quotient;    // width n; CycleQuotient only

  bool cyclic() const {
    return kase == GraphCase::Cycle || kase == GraphCase::CycleQuotient;
  }

  BitVector e(int s) const { return basis_images[s - 1]; }
  // Sum of e_s over a vertex subset.
  BitVector vector_of(BitVector subset) const;
  BitVector vector_of(const Interval& iv) const { return vector_of(iv.members); }

  BitVector vertex_mask(std::initializer_list<int> labels) const;
  bool is_interval(BitVector subset) const;
  Interval interval(BitVector subset) const;
  Interval interval(std::initializer_list<int> labels) const;
};

Setup build_setup(GraphCase kase, int n);

// Complete enumeration of path-inducing subsets, split (odd, even),
// each list sorted by interval_less.
std::pair<std::vector<Interval>, std::vector<Interval>> intervals(const Setup& s);

// Maximal runs of a vertex subset. The full vertex set of a cycle has no
// such decomposition and is rejected.
ComponentSplit components(const Setup& s, BitVector subset);

// I strictly inside I' with disconnected difference.
bool rel_prec(const Setup& s, const Interval& a, const Interval& b);
// Disjoint with disconnected union.
bool rel_spade(const Setup& s, const Interval& a, const Interval& b);

// Vertices of an odd interval in path order (endpoint first).
std::vector<int> path_order(const Setup& s, const Interval& iv);

// (I_ev, I_odd): I_ev holds the vertices whose removal splits the interval
// into two odd pieces; always the 2nd, 4th, ... vertices along the path.
std::pair<BitVector, BitVector> even_odd_split(const Setup& s, const Interval& iv);

// Path cases only: even-size components {s_k..s_l} classified by endpoint
// parity, (k even & l odd) versus (k odd & l even).
std::pair<std::vector<Interval>, std::vector<Interval>> pos_parity_split(
    const Setup& s, BitVector subset);

// The 2N rotations/reflections of a cycle setup.
std::vector<Perm> dihedral_elements(const Setup& s);

BitVector apply_vertices(const Perm& p, BitVector subset);
// Action on the ambient: coordinate permutation, then coset
// canonicalization in the quotient case.
BitVector apply_ambient(const Setup& s, const Perm& p, BitVector v);

}  // namespace isofam
