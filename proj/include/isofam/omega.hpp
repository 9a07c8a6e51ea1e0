#pragma once

#include <optional>

#include "isofam/affine.hpp"
#include "isofam/order.hpp"

namespace isofam {

// Number of members containing both endpoints of the marked edge.
int edge_count(const Family& f, std::pair<int, int> edge);

// The unique member meeting the marked edge in exactly one vertex.
// Requires the family's support to meet the edge; non-uniqueness would
// falsify the theory and raises a verification error.
Interval anchor_interval(const Setup& s, const Family& f, std::pair<int, int> edge);

// Removes the anchor when the edge count is odd; identity otherwise.
Family drop_anchor(const Setup& s, const Family& f, std::pair<int, int> edge);

struct OmegaRecord {
  Family family;              // image of the lifted family under drop_anchor
  Family lifted;              // its unique preimage
  BitVector eps_prime;        // eps of the lifted family
  SubspaceHandle span;        // span of the (possibly smaller) family
  int n = 0;                  // edge count (same for family and lifted)
  bool plus = false;          // functional vanishes on eps_prime
  std::optional<int> sector;  // edge endpoint inside the lifted anchor
};

struct OmegaTable {
  Setup setup;
  std::pair<int, int> edge;
  EdgeMarker marker;
  std::vector<OmegaRecord> records;  // sorted by eps_prime mask

  int size() const { return static_cast<int>(records.size()); }
  int index_of(BitVector eps_value) const;
};

// Applies drop_anchor to the whole table, verifying injectivity.
OmegaTable enumerate_omega(const Setup& quotient, const PhiTable& table,
                           std::pair<int, int> edge);

// The unique graph involution swapping the edge endpoints.
Perm iota_perm(const Setup& s, std::pair<int, int> edge);

Family apply_family(const Setup& s, const Perm& p, const Family& f);

// Closure of: eps_prime of the smaller record lies in the span of the
// larger one.
PartialOrder preceq_relation(const OmegaTable& table);

}  // namespace isofam
