#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isofam/family.hpp"

namespace isofam {

// Square boolean matrix with word-packed rows.
struct BitMatrix {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> data;

  explicit BitMatrix(int n_ = 0)
      : n(n_), words((n_ + 63) / 64), data(static_cast<std::size_t>(n_) * words, 0) {}

  bool get(int i, int j) const {
    return data[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64) & 1;
  }
  void set(int i, int j) {
    data[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64);
  }
  std::uint64_t* row(int i) { return data.data() + static_cast<std::size_t>(i) * words; }
  const std::uint64_t* row(int i) const {
    return data.data() + static_cast<std::size_t>(i) * words;
  }
};

// One-step moves between indexed nodes; reflexive by construction.
struct StepRelation {
  int n = 0;
  BitMatrix step;
};

struct PartialOrder {
  int n = 0;
  BitMatrix leq;                             // reflexive transitive closure
  std::vector<std::pair<int, int>> hasse;    // covering pairs (lower, upper)

  bool le(int a, int b) const { return leq.get(a, b); }
};

// Reflexive-transitive closure with an antisymmetry check; a violation
// raises with a two-cycle witness.
PartialOrder close(const StepRelation& step);

// step(i, j) iff eps of record i lies in the span of record j.
StepRelation phi_step(const PhiTable& table);

// Any topological order of the closure (minimal elements first), ties
// broken by the given keys ascending.
std::vector<int> topological_order(const PartialOrder& po,
                                   const std::vector<std::uint64_t>& tie_keys);

std::string hasse_dot(const PartialOrder& po, const std::vector<std::string>& labels);
std::string hasse_csv(const PartialOrder& po, const std::vector<std::string>& labels);

}  // namespace isofam
