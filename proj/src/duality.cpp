#include "isofam/duality.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace isofam {

OrbitTable dihedral_orbits(const Setup& quotient) {
  if (quotient.kase != GraphCase::CycleQuotient)
    throw DomainError("orbit analysis lives in the quotient case");
  const std::uint64_t count = 1ull << quotient.ambient_width;
  std::vector<Perm> group = dihedral_elements(quotient);
  OrbitTable out;
  out.orbit_index.assign(count, -1);
  for (std::uint64_t m = 0; m < count; ++m) {
    if (out.orbit_index[m] >= 0) continue;
    std::vector<std::uint64_t> orb;
    for (const Perm& p : group) {
      std::uint64_t img =
          apply_ambient(quotient, p, BitVector(m, quotient.ambient_width)).bits;
      if (out.orbit_index[img] < 0) {
        out.orbit_index[img] = static_cast<int>(out.orbits.size());
        orb.push_back(img);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

namespace {

struct Checked {
  // 64-bit accumulation with overflow detection
  static bool sub(long long a, long long b, long long* out) {
    return !__builtin_sub_overflow(a, b, out);
  }
  static bool add(long long a, long long b, long long* out) {
    return !__builtin_add_overflow(a, b, out);
  }
};

}  // namespace

int CMatrix::position_of(std::uint64_t mask) const {
  for (int i = 0; i < size(); ++i)
    if (ys[i] == mask) return i;
  throw DomainError("mask not present");
}

long long CMatrix::at(int y_pos, int x_pos) const {
  const auto& col = columns[x_pos];
  auto it = std::lower_bound(col.begin(), col.end(), y_pos,
                             [](const std::pair<int, long long>& e, int v) {
                               return e.first < v;
                             });
  if (it == col.end() || it->first != y_pos) return 0;
  return it->second;
}

long long CMatrix::column_sum(int x_pos) const {
  long long s = 0;
  for (const auto& [y, v] : columns[x_pos])
    if (!Checked::add(s, v, &s)) throw VerifyError("column sum overflow");
  return s;
}

CMatrix c_matrix(const PhiTable& table) {
  const Setup& s = table.setup;
  if (s.kase != GraphCase::CycleQuotient)
    throw DomainError("the coefficient matrix lives in the quotient case");
  const int n = table.size();
  if (n != static_cast<int>(1ull << s.ambient_width))
    throw DomainError("table is not a complete enumeration");

  // topological order of the membership relation, so that the evaluation
  // matrix becomes unitriangular
  PartialOrder po = close(phi_step(table));
  std::vector<std::uint64_t> keys(n);
  for (int i = 0; i < n; ++i)
    keys[i] = (static_cast<std::uint64_t>(table.records[i].span.dim()) << 32) |
              table.records[i].eps.bits;
  std::vector<int> topo = topological_order(po, keys);
  std::vector<int> pos_of_record(n);
  for (int p = 0; p < n; ++p) pos_of_record[topo[p]] = p;

  // membership rows in topo coordinates: member[v][y] = (eps_v in span_y)
  BitMatrix member(n);
  for (int v = 0; v < n; ++v)
    for (int y = 0; y < n; ++y)
      if (table.records[topo[y]].span.contains(table.records[topo[v]].eps))
        member.set(v, y);
  for (int v = 0; v < n; ++v)
    for (int y = 0; y < v; ++y)
      if (member.get(v, y))
        throw VerifyError("membership relation not triangular in the solve order");

  // report order: (dim, mask)
  std::vector<int> report(n);
  for (int i = 0; i < n; ++i) report[i] = i;
  std::sort(report.begin(), report.end(), [&](int a, int b) {
    int da = table.records[a].span.dim(), db = table.records[b].span.dim();
    if (da != db) return da < db;
    return table.records[a].eps.bits < table.records[b].eps.bits;
  });
  std::vector<int> report_pos(n);
  for (int i = 0; i < n; ++i) report_pos[report[i]] = i;

  CMatrix cm;
  cm.ys.resize(n);
  cm.dims.resize(n);
  for (int i = 0; i < n; ++i) {
    cm.ys[i] = table.records[report[i]].eps.bits;
    cm.dims[i] = table.records[report[i]].span.dim();
  }
  cm.columns.resize(n);

  std::vector<long long> c(n);
  std::vector<char> rhs(n);
  for (int xr = 0; xr < n; ++xr) {
    const int x = report[xr];
    SubspaceHandle dual_space = perp(table.records[x].span, s.form);
    for (int v = 0; v < n; ++v)
      rhs[v] = dual_space.contains(table.records[topo[v]].eps);

    // back-substitution from the top of the order
    bool overflow = false;
    for (int v = n - 1; v >= 0 && !overflow; --v) {
      long long acc = rhs[v];
      const std::uint64_t* row = member.row(v);
      for (int w = 0; w < member.words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          int y = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (y <= v) continue;
          if (!Checked::sub(acc, c[y], &acc)) {
            overflow = true;
            break;
          }
        }
        if (overflow) break;
      }
      c[v] = acc;
    }
    if (overflow) {
      // retry in 128 bits; values beyond that would falsify everything
      // downstream, so give up loudly
      std::vector<__int128> wide(n);
      for (int v = n - 1; v >= 0; --v) {
        __int128 acc = rhs[v];
        for (int y = v + 1; y < n; ++y)
          if (member.get(v, y)) acc -= wide[y];
        wide[v] = acc;
      }
      for (int v = 0; v < n; ++v) {
        if (wide[v] > static_cast<__int128>(INT64_MAX) ||
            wide[v] < static_cast<__int128>(INT64_MIN))
          throw VerifyError("coefficient exceeds 128-bit range");
        c[v] = static_cast<long long>(wide[v]);
      }
    }

    // independent substitution check of the defining identity at every point
    for (int v = 0; v < n; ++v) {
      long long acc = 0;
      const std::uint64_t* row = member.row(v);
      for (int w = 0; w < member.words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          int y = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (!Checked::add(acc, c[y], &acc))
            throw VerifyError("substitution overflow");
        }
      }
      if (acc != rhs[v])
        throw VerifyError("defining identity fails at point " +
                          std::to_string(table.records[topo[v]].eps.bits));
    }

    auto& col = cm.columns[report_pos[x]];
    for (int v = 0; v < n; ++v)
      if (c[v] != 0) col.push_back({report_pos[topo[v]], c[v]});
    std::sort(col.begin(), col.end());
  }
  return cm;
}

TriangularityReport triangularity_check(const CMatrix& cm) {
  TriangularityReport rep;
  for (int x = 0; x < cm.size(); ++x) {
    for (const auto& [y, v] : cm.columns[x]) {
      if (y != x && !(cm.dims[x] < cm.dims[y])) {
        rep.zero_pattern_ok = false;
        if (rep.violations.size() < 20)
          rep.violations.push_back("nonzero at y=" + std::to_string(cm.ys[y]) +
                                   " x=" + std::to_string(cm.ys[x]));
      }
    }
    long long d = cm.at(x, x);
    unsigned long long mag = d < 0 ? -static_cast<unsigned long long>(d)
                                   : static_cast<unsigned long long>(d);
    if (mag == 0 || (mag & (mag - 1)) != 0) {
      rep.diagonal_pow2_ok = false;
      if (rep.violations.size() < 20)
        rep.violations.push_back("diagonal " + std::to_string(d) + " at x=" +
                                 std::to_string(cm.ys[x]));
    }
  }
  return rep;
}

std::vector<ConjectureViolation> conjecture_scan(const CMatrix& cm) {
  std::vector<ConjectureViolation> out;
  for (int x = 0; x < cm.size(); ++x)
    for (const auto& [y, v] : cm.columns[x]) {
      unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
      if ((mag & (mag - 1)) != 0) out.push_back({cm.ys[y], cm.ys[x], v});
    }
  return out;
}

PaperComparison paper_table_compare(const Setup& quotient, const CMatrix& cm,
                                    const OrbitTable& orbits) {
  if (quotient.n != 7) throw DomainError("the published table is for N=7");
  PaperComparison out;

  for (const auto& orb : orbits.orbits)
    out.orbit_sizes.push_back(static_cast<int>(orb.size()));
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());

  const int x0 = cm.position_of(0);
  // zero-column value per mask
  auto value_at = [&](std::uint64_t mask) {
    return cm.at(cm.position_of(mask), x0);
  };
  for (const auto& orb : orbits.orbits) {
    long long v = value_at(orb.front());
    for (std::uint64_t m : orb)
      if (value_at(m) != v) out.orbit_constant = false;
  }
  out.column_sum = cm.column_sum(x0);

  struct Printed {
    const char* label;
    std::initializer_list<int> vertices;
    long long value;
  };
  const Printed printed[] = {
      {"1245", {1, 2, 4, 5}, 1}, {"12345", {1, 2, 3, 4, 5}, 0},
      {"1235", {1, 2, 3, 5}, 1}, {"135", {1, 3, 5}, -1},
      {"123", {1, 2, 3}, -1},    {"14", {1, 4}, 0},
      {"13", {1, 3}, 1},         {"1", {1}, -2},
      {"empty", {}, 8},
  };
  for (const Printed& p : printed) {
    std::uint64_t mask = 0;
    for (int v : p.vertices) mask |= 1ull << (v - 1);
    long long computed = value_at(mask);
    int orbit_size = static_cast<int>(orbits.orbits[orbits.orbit_of(mask)].size());
    out.entries.push_back({p.label, mask, orbit_size, computed, p.value,
                           computed == p.value});
  }
  return out;
}

std::string c_matrix_csv(const CMatrix& cm) {
  std::ostringstream os;
  os << "y_mask,x_mask,value\n";
  for (int x = 0; x < cm.size(); ++x)
    for (const auto& [y, v] : cm.columns[x]) os << cm.ys[y] << "," << cm.ys[x] << "," << v << "\n";
  return os.str();
}

}  // namespace isofam
