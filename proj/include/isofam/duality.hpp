#pragma once

#include <string>
#include <vector>

#include "isofam/order.hpp"

namespace isofam {

// Orbits of the 2N rotations/reflections on the quotient ambient.
// Representative = least mask in the orbit; orbits sorted by representative.
struct OrbitTable {
  std::vector<std::vector<std::uint64_t>> orbits;  // each sorted ascending
  std::vector<int> orbit_index;                    // mask -> orbit

  int orbit_of(std::uint64_t mask) const { return orbit_index[mask]; }
};

OrbitTable dihedral_orbits(const Setup& quotient);

// Exact integer coefficients expressing each perp indicator in the basis of
// span indicators. Solved per column by back-substitution along a
// topological order of the membership relation (the evaluation matrix is
// unitriangular there), then verified by substitution at every point.
// Arithmetic is checked 64-bit with automatic promotion to 128-bit.
struct CMatrix {
  std::vector<std::uint64_t> ys;  // report order: (dim, mask) ascending
  std::vector<int> dims;          // span dimension per position
  std::vector<std::vector<std::pair<int, long long>>> columns;  // nonzeros per x

  int size() const { return static_cast<int>(ys.size()); }
  int position_of(std::uint64_t mask) const;  // index into ys
  long long at(int y_pos, int x_pos) const;
  long long column_sum(int x_pos) const;
};

CMatrix c_matrix(const PhiTable& table);

struct TriangularityReport {
  bool zero_pattern_ok = true;  // nonzero off-diagonal forces dim(x) < dim(y)
  bool diagonal_pow2_ok = true;
  std::vector<std::string> violations;
  bool pass() const { return zero_pattern_ok && diagonal_pow2_ok; }
};

TriangularityReport triangularity_check(const CMatrix& cm);

// Entries outside {0, +-2^k}; empty means the power-of-two pattern holds
// at this size. Reported, never asserted.
struct ConjectureViolation {
  std::uint64_t y, x;
  long long value;
};
std::vector<ConjectureViolation> conjecture_scan(const CMatrix& cm);

// Comparison of the zero column against the nine published values at N=7.
struct PaperEntry {
  std::string label;
  std::uint64_t mask;
  int orbit_size;
  long long computed;
  long long printed;
  bool match;
};
struct PaperComparison {
  std::vector<PaperEntry> entries;
  bool orbit_constant = true;     // zero column constant on orbits
  long long column_sum = 0;       // must be 1 (identity evaluated at zero)
  std::vector<int> orbit_sizes;   // sorted
};

PaperComparison paper_table_compare(const Setup& quotient, const CMatrix& cm,
                                    const OrbitTable& orbits);

std::string c_matrix_csv(const CMatrix& cm);

}  // namespace isofam
