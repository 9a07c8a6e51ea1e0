#pragma once

#include "isofam/omega.hpp"

namespace isofam {

// Default side data for one marked edge: J = a path of N-3 vertices
// avoiding the edge, and the preferred endpoint tau = the one not adjacent
// to J (unique for N > 3).
struct SectorContext {
  BitVector J;  // width = vertices
  int tau = 0;
};

SectorContext default_context(const Setup& quotient, std::pair<int, int> edge);
// Validates an explicit choice of J (size, disjointness, path).
void validate_J(const Setup& quotient, std::pair<int, int> edge, BitVector J);

// Record indices whose support sits inside J.
std::vector<int> omega_support_in(const OmegaTable& table, BitVector J);

struct SectorEntry {
  std::uint64_t y = 0;      // canonical class mask in the edge quotient
  int record = -1;          // lift: index into the omega table
  int nu = 0;               // level label of the lift
  bool from_J_part = false; // lift taken from the support-in-J block (plus side)
  std::vector<std::uint64_t> span_image;  // class masks of the lifted span, sign-filtered
};

struct SectorTable {
  bool plus = false;
  int tau = 0;
  BitVector J;
  QuotientMap collapse;  // kills the bracket vector
  std::vector<SectorEntry> entries;  // sorted by y

  int size() const { return static_cast<int>(entries.size()); }
  int index_of(std::uint64_t y) const;
};

// Canonical class masks of the chosen sign, sorted.
std::vector<std::uint64_t> sign_classes(const OmegaTable& table, bool plus);

// Assembles the sign/endpoint sector: lifts are the records of the chosen
// sign anchored at tau (plus side additionally takes the support-in-J
// block); the collapse map must restrict to a bijection onto the sign
// classes, and each entry carries its collapsed span image.
SectorTable build_sector_table(const OmegaTable& table, bool plus, int tau, BitVector J);

// Closure of: y' lies in the collapsed span image of y.
PartialOrder leq_tau(const SectorTable& st);

// The collection of collapsed span images; pairwise distinct.
std::vector<std::vector<std::uint64_t>> F_collection(const SectorTable& st);

}  // namespace isofam
