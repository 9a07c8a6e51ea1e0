#include "isofam/setup.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace isofam {

const char* case_name(GraphCase c) {
  switch (c) {
    case GraphCase::PathOdd: return "a";
    case GraphCase::PathEven: return "a-even";
    case GraphCase::Cycle: return "b";
    case GraphCase::CycleQuotient: return "c";
  }
  return "?";
}

bool interval_less(const Interval& a, const Interval& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members.bits < b.members.bits;
}

BitVector Setup::vector_of(BitVector subset) const {
  if (subset.width != vertices) throw UsageError("vertex subset width mismatch");
  BitVector acc = BitVector::zero(ambient_width);
  for (int s : subset.labels()) acc = acc ^ e(s);
  return acc;
}

BitVector Setup::vertex_mask(std::initializer_list<int> labels) const {
  BitVector m = BitVector::zero(vertices);
  for (int s : labels) m = m.with(s);
  return m;
}

bool Setup::is_interval(BitVector subset) const {
  if (subset.width != vertices) throw UsageError("vertex subset width mismatch");
  if (subset.is_zero()) return false;
  // connected + (edge count = size - 1) + max degree 2 characterizes a path
  int edge_count = 0;
  for (int s : subset.labels()) {
    int deg = std::popcount(neighbors[s - 1] & subset.bits);
    if (deg > 2) return false;
    edge_count += deg;
  }
  edge_count /= 2;
  if (edge_count != subset.count() - 1) return false;
  // connectivity by flooding from the lowest vertex
  std::uint64_t seen = subset.bits & (~subset.bits + 1);
  for (;;) {
    std::uint64_t grow = seen;
    for (std::uint64_t m = seen; m; m &= m - 1)
      grow |= neighbors[std::countr_zero(m)] & subset.bits;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == subset.bits;
}

Interval Setup::interval(BitVector subset) const {
  if (!is_interval(subset)) throw DomainError("subset does not induce a path");
  return Interval{subset};
}

Interval Setup::interval(std::initializer_list<int> labels) const {
  return interval(vertex_mask(labels));
}

Setup build_setup(GraphCase kase, int n) {
  const bool odd_n = n % 2 == 1;
  switch (kase) {
    case GraphCase::PathOdd:
      if (n < 3 || !odd_n) throw UsageError("path case needs odd N >= 3");
      break;
    case GraphCase::PathEven:
      if (n < 4 || odd_n) throw UsageError("even-path case needs even N >= 4");
      break;
    case GraphCase::Cycle:
    case GraphCase::CycleQuotient:
      if (n < 3 || !odd_n) throw UsageError("cycle cases need odd N >= 3");
      break;
  }
  if (n > 33) throw UsageError("N too large for single-word vectors");

  Setup s;
  s.kase = kase;
  s.n = n;
  const bool cyc = kase == GraphCase::Cycle || kase == GraphCase::CycleQuotient;
  s.vertices = cyc ? n : n - 1;
  s.ambient_width = kase == GraphCase::Cycle ? n : n - 1;

  for (int i = 1; i < s.vertices; ++i) s.edges.push_back({i, i + 1});
  if (cyc) s.edges.push_back({1, s.vertices});

  s.neighbors.assign(s.vertices, 0);
  for (auto [a, b] : s.edges) {
    s.neighbors[a - 1] |= 1ull << (b - 1);
    s.neighbors[b - 1] |= 1ull << (a - 1);
  }

  if (kase == GraphCase::CycleQuotient) {
    s.quotient = QuotientMap::killing(BitVector::ones(n));
    for (int v = 1; v <= n; ++v) {
      BitVector img = s.quotient->project(BitVector::unit(v, n));
      s.basis_images.push_back(BitVector(img.bits, n - 1));
    }
    // induced pairing on canonical representatives: path adjacency
    std::vector<std::uint64_t> rows(n - 1, 0);
    for (int i = 1; i < n - 1; ++i) {
      rows[i - 1] |= 1ull << i;
      rows[i] |= 1ull << (i - 1);
    }
    s.form = SymplecticForm::from_rows(rows, n - 1);
  } else {
    for (int v = 1; v <= s.vertices; ++v)
      s.basis_images.push_back(BitVector::unit(v, s.ambient_width));
    std::vector<std::uint64_t> rows(s.ambient_width, 0);
    for (auto [a, b] : s.edges) {
      rows[a - 1] |= 1ull << (b - 1);
      rows[b - 1] |= 1ull << (a - 1);
    }
    s.form = SymplecticForm::from_rows(rows, s.ambient_width);
  }

  // the edge set must be recoverable from the form
  for (int a = 1; a <= s.vertices; ++a)
    for (int b = a + 1; b <= s.vertices; ++b) {
      bool edge = std::find(s.edges.begin(), s.edges.end(), std::pair{a, b}) != s.edges.end();
      if (s.form.pair(s.e(a), s.e(b)) != edge)
        throw VerifyError("vertex pairing disagrees with the edge set");
    }
  return s;
}

std::pair<std::vector<Interval>, std::vector<Interval>> intervals(const Setup& s) {
  std::vector<Interval> odd, even;
  if (s.cyclic()) {
    // arcs: any start, any length < N
    for (int start = 1; start <= s.vertices; ++start)
      for (int len = 1; len < s.vertices; ++len) {
        BitVector m = BitVector::zero(s.vertices);
        for (int k = 0; k < len; ++k) m = m.with((start - 1 + k) % s.vertices + 1);
        (len % 2 ? odd : even).push_back(Interval{m});
      }
  } else {
    for (int a = 1; a <= s.vertices; ++a)
      for (int b = a; b <= s.vertices; ++b) {
        BitVector m = BitVector::zero(s.vertices);
        for (int k = a; k <= b; ++k) m = m.with(k);
        ((b - a) % 2 == 0 ? odd : even).push_back(Interval{m});
      }
  }
  std::sort(odd.begin(), odd.end(), interval_less);
  std::sort(even.begin(), even.end(), interval_less);
  return {odd, even};
}

ComponentSplit components(const Setup& s, BitVector subset) {
  if (subset.width != s.vertices) throw UsageError("vertex subset width mismatch");
  ComponentSplit out;
  if (subset.is_zero()) return out;
  if (s.cyclic()) {
    if (subset == BitVector::ones(s.vertices))
      throw DomainError("the full cycle has no run decomposition");
    // start scanning just past a vertex not in the subset
    int anchor = 0;
    for (int v = 1; v <= s.vertices; ++v)
      if (!subset.test(v)) { anchor = v; break; }
    BitVector run = BitVector::zero(s.vertices);
    for (int k = 1; k <= s.vertices; ++k) {
      int v = (anchor - 1 + k) % s.vertices + 1;
      if (subset.test(v)) {
        run = run.with(v);
      } else if (!run.is_zero()) {
        out.parts.push_back(Interval{run});
        run = BitVector::zero(s.vertices);
      }
    }
    if (!run.is_zero()) out.parts.push_back(Interval{run});
  } else {
    BitVector run = BitVector::zero(s.vertices);
    for (int v = 1; v <= s.vertices; ++v) {
      if (subset.test(v)) {
        run = run.with(v);
      } else if (!run.is_zero()) {
        out.parts.push_back(Interval{run});
        run = BitVector::zero(s.vertices);
      }
    }
    if (!run.is_zero()) out.parts.push_back(Interval{run});
  }
  std::sort(out.parts.begin(), out.parts.end(), interval_less);
  return out;
}

bool rel_prec(const Setup& s, const Interval& a, const Interval& b) {
  if (!a.odd() || !b.odd()) throw DomainError("relation defined on odd intervals");
  if (a == b || !a.members.subset_of(b.members)) return false;
  BitVector diff = b.members ^ a.members;
  return components(s, diff).parts.size() >= 2;
}

bool rel_spade(const Setup& s, const Interval& a, const Interval& b) {
  if (!a.odd() || !b.odd()) throw DomainError("relation defined on odd intervals");
  if (a.members.bits & b.members.bits) return false;
  BitVector uni = a.members ^ b.members;
  return components(s, uni).parts.size() >= 2;
}

std::vector<int> path_order(const Setup& s, const Interval& iv) {
  std::vector<int> labels = iv.members.labels();
  if (labels.size() == 1) return labels;
  int start = 0;
  for (int v : labels)
    if (std::popcount(s.neighbors[v - 1] & iv.members.bits) == 1) { start = v; break; }
  std::vector<int> order{start};
  std::uint64_t seen = 1ull << (start - 1);
  while (order.size() < labels.size()) {
    std::uint64_t next = s.neighbors[order.back() - 1] & iv.members.bits & ~seen;
    int v = std::countr_zero(next) + 1;
    order.push_back(v);
    seen |= 1ull << (v - 1);
  }
  return order;
}

std::pair<BitVector, BitVector> even_odd_split(const Setup& s, const Interval& iv) {
  if (!iv.odd()) throw DomainError("even/odd split defined on odd intervals");
  std::vector<int> order = path_order(s, iv);
  BitVector ev = BitVector::zero(s.vertices);
  for (std::size_t i = 1; i < order.size(); i += 2) ev = ev.with(order[i]);
  return {ev, iv.members ^ ev};
}

std::pair<std::vector<Interval>, std::vector<Interval>> pos_parity_split(
    const Setup& s, BitVector subset) {
  if (s.cyclic()) throw DomainError("endpoint-parity split is for path cases");
  std::vector<Interval> plus, minus;
  for (const Interval& part : components(s, subset).parts) {
    if (part.odd()) continue;
    auto labels = part.members.labels();
    int k = labels.front(), l = labels.back();
    if (k % 2 == 0 && l % 2 == 1) plus.push_back(part);
    if (k % 2 == 1 && l % 2 == 0) minus.push_back(part);
  }
  return {plus, minus};
}

std::vector<Perm> dihedral_elements(const Setup& s) {
  if (!s.cyclic()) throw DomainError("dihedral action is for cycle setups");
  std::vector<Perm> out;
  const int N = s.vertices;
  for (int k = 0; k < N; ++k) {
    Perm rot, refl;
    rot.to.resize(N);
    refl.to.resize(N);
    for (int v = 1; v <= N; ++v) {
      rot.to[v - 1] = (v - 1 + k) % N + 1;
      refl.to[v - 1] = (N + 1 - v - 1 + k + N) % N + 1;
    }
    out.push_back(rot);
    out.push_back(refl);
  }
  return out;
}

BitVector apply_vertices(const Perm& p, BitVector subset) {
  BitVector out = BitVector::zero(subset.width);
  for (int v : subset.labels()) out = out.with(p.apply(v));
  return out;
}

BitVector apply_ambient(const Setup& s, const Perm& p, BitVector v) {
  if (s.kase == GraphCase::Cycle) return apply_vertices(p, v);
  if (s.kase == GraphCase::CycleQuotient) {
    BitVector wide(v.bits, s.n);  // canonical representative, top bit clear
    BitVector img = s.quotient->project(apply_vertices(p, wide));
    return BitVector(img.bits, s.ambient_width);
  }
  throw DomainError("ambient action is for cycle setups");
}

}  // namespace isofam
