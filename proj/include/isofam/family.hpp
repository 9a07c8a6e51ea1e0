#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isofam/setup.hpp"

namespace isofam {

// Duplicate-free set of odd intervals, kept sorted by interval_less.
struct Family {
  std::vector<Interval> members;

  // Validates: odd intervals only, no duplicates (rejected with a distinct
  // error), consistent width.
  static Family of(const Setup& s, std::vector<Interval> members);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool has(const Interval& iv) const;
  Family without(const Interval& iv) const;
  friend bool operator==(const Family&, const Family&) = default;
};

bool family_less(const Family& a, const Family& b);

// First offending pair (two members neither equal, nor disjoint-with-
// disconnected-union, nor nested-with-disconnected-difference), if any.
std::optional<std::pair<Interval, Interval>> p0_violation(const Setup& s, const Family& f);
bool check_P0(const Setup& s, const Family& f);

// First member whose even-position vertices cannot be covered by pairwise
// disjoint smaller members sitting below it, if any. After check_P0 passes
// the maximal candidates are automatically disjoint and a union test
// suffices; otherwise an exact cover search is used.
std::optional<Interval> p1_violation(const Setup& s, const Family& f);
bool check_P1(const Setup& s, const Family& f);

// Number of members containing vertex s.
int multiplicity(const Family& f, int s);
std::vector<int> multiplicities(const Setup& s, const Family& f);
BitVector support(const Setup& s, const Family& f);

// Sum of e_s over the vertices whose member count has odd triangular parity.
BitVector eps(const Setup& s, const Family& f);

// Same value computed through the layer decomposition: repeatedly peel the
// inclusion-maximal members and add up the peeled sums from the odd layers.
BitVector eps_layered(const Setup& s, const Family& f);

// Same value computed through an anchor vertex t (quotient case only):
// scans the intervals avoiding t whose vector lies in the family's span and
// combines signed per-vertex counts.
BitVector eps_anchored(const Setup& s, const Family& f, int t);

struct PhiRecord {
  Family family;
  BitVector eps;
  SubspaceHandle span;
};

struct PhiTable {
  Setup setup;
  std::vector<PhiRecord> records;  // sorted by eps mask, then family

  int size() const { return static_cast<int>(records.size()); }
  // Index of the record with this eps value, or -1.
  int index_of(BitVector eps_value) const;
  const PhiRecord& by_eps(BitVector eps_value) const;
};

// All families satisfying both axioms, by backtracking over the odd
// intervals in (size, mask) order. In cycle cases the search is capped at
// (N-1)/2 members.
PhiTable enumerate_phi(const Setup& s);

// Brute-force enumeration used as an oracle: filters every subset of the
// odd intervals through the two axioms directly. Exponential; small N only.
std::vector<Family> enumerate_phi_bruteforce(const Setup& s);

// Quotient case: the inductive construction. Pulls subspaces back through
// vertex links: the link of s has circular labels (S minus s and its two
// neighbours) plus one merged label, and one recursion step shrinks the
// cycle by two. Returns the resulting subspace collection, deduplicated.
std::vector<SubspaceHandle> recursive_family(const Setup& s);

// Odd intervals whose vector lies in L.
Family family_of_subspace(const Setup& s, const SubspaceHandle& sub);
// Intervals of either parity avoiding vertex t whose vector lies in L.
std::vector<Interval> intervals_in_subspace_avoiding(const Setup& s,
                                                     const SubspaceHandle& sub, int t);

// Quotient case: independent enumeration through systems of pairwise
// disjoint endpoint pairs. Each pair {a,b} marks the unique even-size arc
// with those endpoints; a system qualifies when every marked arc minus its
// endpoints is exactly tiled by other members' arcs. Systems are mapped
// back to interval families via edge -> lower endpoint.
std::vector<Family> enumerate_phi_linegraph(const Setup& s);

struct PerfectnessReport {
  bool basis_ok = true;        // member vectors independent, family recoverable from span
  bool eps_member_ok = true;   // eps lands in the span
  bool bijective_ok = true;    // eps injective with image = union of spans
  bool monotone_ok = true;     // eps(B') in span(B) forces multiplicity domination
  std::vector<std::string> violations;
  std::vector<std::uint64_t> v0_masks;  // sorted union of all spans

  bool pass() const {
    return basis_ok && eps_member_ok && bijective_ok && monotone_ok;
  }
};

PerfectnessReport verify_perfect(const Setup& s, const PhiTable& table);

// Closed-form membership for the union of spans, path and plain cycle
// cases: counts of even-size runs classified by endpoint parity (paths) or
// their total parity (cycle).
bool v0_membership(const Setup& s, BitVector v);

}  // namespace isofam
