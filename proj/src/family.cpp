#include "isofam/family.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace isofam {

Family Family::of(const Setup& s, std::vector<Interval> members) {
  for (const Interval& iv : members) {
    if (iv.members.width != s.vertices) throw UsageError("interval width mismatch");
    if (!s.is_interval(iv.members)) throw DomainError("family member is not an interval");
    if (!iv.odd()) throw DomainError("family members must be odd intervals");
  }
  std::sort(members.begin(), members.end(), interval_less);
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw DomainError("duplicate interval in family");
  return Family{std::move(members)};
}

bool Family::has(const Interval& iv) const {
  return std::find(members.begin(), members.end(), iv) != members.end();
}

Family Family::without(const Interval& iv) const {
  Family out = *this;
  out.members.erase(std::remove(out.members.begin(), out.members.end(), iv),
                    out.members.end());
  return out;
}

bool family_less(const Family& a, const Family& b) {
  return std::lexicographical_compare(
      a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
      interval_less);
}

std::optional<std::pair<Interval, Interval>> p0_violation(const Setup& s, const Family& f) {
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      const Interval &a = f.members[i], &b = f.members[j];
      if (rel_spade(s, a, b) || rel_prec(s, a, b) || rel_prec(s, b, a)) continue;
      return std::pair{a, b};
    }
  return std::nullopt;
}

bool check_P0(const Setup& s, const Family& f) { return !p0_violation(s, f); }

namespace {

// Covering check for one member: the even positions of `iv` must be covered
// by pairwise disjoint members below it.
bool p1_holds_for(const Setup& s, const Family& f, const Interval& iv, bool p0_ok) {
  BitVector ev = even_odd_split(s, iv).first;
  if (ev.is_zero()) return true;
  std::vector<Interval> below;
  for (const Interval& j : f.members)
    if (j != iv && rel_prec(s, j, iv)) below.push_back(j);
  if (p0_ok) {
    // the inclusion-maximal elements below iv are pairwise disjoint, so
    // coverage of the union is the whole condition
    std::uint64_t covered = 0;
    for (const Interval& j : below) {
      bool maximal = true;
      for (const Interval& k : below)
        if (k != j && j.members.subset_of(k.members)) { maximal = false; break; }
      if (maximal) covered |= j.members.bits;
    }
    return (ev.bits & ~covered) == 0;
  }
  // without the pairwise axiom fall back to an exact search over disjoint
  // subcollections (pieces may stick out of ev)
  std::vector<std::uint64_t> pieces;
  for (const Interval& j : below) pieces.push_back(j.members.bits);
  std::function<bool(std::uint64_t, std::uint64_t)> go =
      [&](std::uint64_t need, std::uint64_t used) -> bool {
    if (!need) return true;
    std::uint64_t lowest = need & (~need + 1);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (!(pieces[i] & lowest) || (pieces[i] & used)) continue;
      if (go(need & ~pieces[i], used | pieces[i])) return true;
    }
    return false;
  };
  return go(ev.bits, 0);
}

}  // namespace

std::optional<Interval> p1_violation(const Setup& s, const Family& f) {
  bool p0_ok = check_P0(s, f);
  for (const Interval& iv : f.members)
    if (!p1_holds_for(s, f, iv, p0_ok)) return iv;
  return std::nullopt;
}

bool check_P1(const Setup& s, const Family& f) { return !p1_violation(s, f); }

int multiplicity(const Family& f, int s) {
  int g = 0;
  for (const Interval& iv : f.members) g += iv.members.test(s);
  return g;
}

std::vector<int> multiplicities(const Setup& s, const Family& f) {
  std::vector<int> g(s.vertices, 0);
  for (const Interval& iv : f.members)
    for (int v : iv.members.labels()) ++g[v - 1];
  return g;
}

BitVector support(const Setup& s, const Family& f) {
  BitVector acc = BitVector::zero(s.vertices);
  for (const Interval& iv : f.members) acc.bits |= iv.members.bits;
  return acc;
}

BitVector eps(const Setup& s, const Family& f) {
  std::vector<int> g = multiplicities(s, f);
  BitVector acc = BitVector::zero(s.ambient_width);
  for (int v = 1; v <= s.vertices; ++v)
    if (triangular_parity(g[v - 1])) acc = acc ^ s.e(v);
  return acc;
}

BitVector eps_layered(const Setup& s, const Family& f) {
  BitVector acc = BitVector::zero(s.ambient_width);
  std::vector<Interval> remaining = f.members;
  for (int layer = 1; !remaining.empty(); ++layer) {
    std::vector<Interval> peeled, rest;
    for (const Interval& iv : remaining) {
      bool maximal = true;
      for (const Interval& other : remaining)
        if (other != iv && iv.members.subset_of(other.members)) { maximal = false; break; }
      (maximal ? peeled : rest).push_back(iv);
    }
    if (layer % 2 == 1)
      for (const Interval& iv : peeled) acc = acc ^ s.vector_of(iv);
    remaining = std::move(rest);
  }
  return acc;
}

BitVector eps_anchored(const Setup& s, const Family& f, int t) {
  if (s.kase != GraphCase::CycleQuotient)
    throw DomainError("anchored formula lives in the quotient case");
  if (t < 1 || t > s.vertices) throw UsageError("anchor vertex out of range");
  std::vector<BitVector> vecs;
  for (const Interval& iv : f.members) vecs.push_back(s.vector_of(iv));
  SubspaceHandle sub = span(vecs, s.ambient_width);
  std::vector<Interval> scan = intervals_in_subspace_avoiding(s, sub, t);
  int even_count = 0;
  for (const Interval& iv : scan) even_count += !iv.odd();
  BitVector acc = BitVector::zero(s.ambient_width);
  for (int v = 1; v <= s.vertices; ++v) {
    if (v == t) continue;
    long long fv = -(even_count % 2);
    for (const Interval& iv : scan)
      if (iv.members.test(v)) fv += iv.odd() ? 1 : -1;
    if (triangular_parity(fv)) acc = acc ^ s.e(v);
  }
  return acc;
}

namespace {

struct Enumerator {
  const Setup& s;
  std::vector<Interval> cands;         // odd intervals, (size, mask) order
  std::vector<BitVector> ev;           // even positions per candidate
  std::vector<std::vector<bool>> compatible;
  std::vector<std::vector<bool>> below;  // below[i][j]: cands[j] prec cands[i]
  int max_size;
  std::vector<int> current;
  std::vector<Family> out;

  explicit Enumerator(const Setup& setup) : s(setup) {
    cands = intervals(s).first;
    const int K = static_cast<int>(cands.size());
    ev.reserve(K);
    for (const Interval& iv : cands) ev.push_back(even_odd_split(s, iv).first);
    compatible.assign(K, std::vector<bool>(K, false));
    below.assign(K, std::vector<bool>(K, false));
    for (int i = 0; i < K; ++i)
      for (int j = 0; j < K; ++j) {
        if (i == j) continue;
        below[i][j] = rel_prec(s, cands[j], cands[i]);
        compatible[i][j] =
            below[i][j] || rel_prec(s, cands[i], cands[j]) || rel_spade(s, cands[i], cands[j]);
      }
    max_size = s.cyclic() ? (s.vertices - 1) / 2 : K;
  }

  // With members added in (size, mask) order every covering candidate for a
  // new member is already present, so the second axiom can be settled at
  // insertion time; each node of the search tree is then a valid family.
  bool admissible(int i) const {
    for (int j : current)
      if (!compatible[i][j]) return false;
    if (ev[i].is_zero()) return true;
    std::uint64_t covered = 0;
    for (int j : current) {
      if (!below[i][j]) continue;
      bool maximal = true;
      for (int k : current)
        if (k != j && below[i][k] && cands[j].members.subset_of(cands[k].members)) {
          maximal = false;
          break;
        }
      if (maximal) covered |= cands[j].members.bits;
    }
    return (ev[i].bits & ~covered) == 0;
  }

  void record() {
    std::vector<Interval> members;
    for (int j : current) members.push_back(cands[j]);
    out.push_back(Family{std::move(members)});
  }

  void dfs(int from) {
    record();
    if (static_cast<int>(current.size()) == max_size) return;
    for (int i = from; i < static_cast<int>(cands.size()); ++i) {
      if (!admissible(i)) continue;
      current.push_back(i);
      dfs(i + 1);
      current.pop_back();
    }
  }
};

PhiRecord make_record(const Setup& s, Family f) {
  std::vector<BitVector> vecs;
  for (const Interval& iv : f.members) vecs.push_back(s.vector_of(iv));
  SubspaceHandle sub = span(vecs, s.ambient_width);
  BitVector e = eps(s, f);
  return PhiRecord{std::move(f), e, std::move(sub)};
}

}  // namespace

PhiTable enumerate_phi(const Setup& s) {
  Enumerator en(s);
  en.dfs(0);
  PhiTable table{s, {}};
  table.records.reserve(en.out.size());
  for (Family& f : en.out) table.records.push_back(make_record(s, std::move(f)));
  std::sort(table.records.begin(), table.records.end(),
            [](const PhiRecord& a, const PhiRecord& b) {
              if (a.eps.bits != b.eps.bits) return a.eps.bits < b.eps.bits;
              return family_less(a.family, b.family);
            });
  return table;
}

std::vector<Family> enumerate_phi_bruteforce(const Setup& s) {
  std::vector<Interval> odd = intervals(s).first;
  if (odd.size() > 24) throw DomainError("too many intervals for brute force");
  std::vector<Family> out;
  for (std::uint64_t mask = 0; mask < (1ull << odd.size()); ++mask) {
    std::vector<Interval> members;
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (mask >> i & 1) members.push_back(odd[i]);
    Family f{members};
    if (check_P0(s, f) && check_P1(s, f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), family_less);
  return out;
}

int PhiTable::index_of(BitVector eps_value) const {
  auto it = std::lower_bound(records.begin(), records.end(), eps_value.bits,
                             [](const PhiRecord& r, std::uint64_t v) {
                               return r.eps.bits < v;
                             });
  if (it == records.end() || it->eps.bits != eps_value.bits) return -1;
  return static_cast<int>(it - records.begin());
}

const PhiRecord& PhiTable::by_eps(BitVector eps_value) const {
  int i = index_of(eps_value);
  if (i < 0) throw DomainError("no family with this eps value");
  return records[i];
}

namespace {

struct HandleHash {
  std::size_t operator()(const SubspaceHandle& h) const { return h.hash(); }
};

// One cyclic level of the construction: labels are representatives inside
// the original ambient; denom is what has been collapsed so far. Returned
// subspaces are full preimages, i.e. honest subspaces of the ambient.
void recurse_links(const std::vector<BitVector>& labels, const SubspaceHandle& denom,
                   std::unordered_set<SubspaceHandle, HandleHash>& out) {
  out.insert(denom);
  const int m = static_cast<int>(labels.size());
  for (int i = 0; i < m; ++i) {
    SubspaceHandle denom2 = denom;
    denom2.insert(labels[i]);
    if (m == 3) {
      out.insert(denom2);
      continue;
    }
    std::vector<BitVector> next;
    next.reserve(m - 2);
    for (int j = 0; j < m; ++j) {
      if (j == (i + m - 1) % m || j == (i + 1) % m) continue;
      if (j == i)
        next.push_back(labels[(i + m - 1) % m] ^ labels[i] ^ labels[(i + 1) % m]);
      else
        next.push_back(labels[j]);
    }
    recurse_links(next, denom2, out);
  }
}

}  // namespace

std::vector<SubspaceHandle> recursive_family(const Setup& s) {
  if (s.kase != GraphCase::CycleQuotient)
    throw DomainError("recursive construction lives in the quotient case");
  std::vector<BitVector> labels;
  for (int v = 1; v <= s.vertices; ++v) labels.push_back(s.e(v));
  std::unordered_set<SubspaceHandle, HandleHash> acc;
  recurse_links(labels, SubspaceHandle::zero(s.ambient_width), acc);
  std::vector<SubspaceHandle> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const SubspaceHandle& a, const SubspaceHandle& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rows < b.rows;
  });
  return out;
}

Family family_of_subspace(const Setup& s, const SubspaceHandle& sub) {
  std::vector<Interval> members;
  for (const Interval& iv : intervals(s).first)
    if (sub.contains(s.vector_of(iv))) members.push_back(iv);
  return Family{std::move(members)};
}

std::vector<Interval> intervals_in_subspace_avoiding(const Setup& s,
                                                     const SubspaceHandle& sub, int t) {
  auto [odd, even] = intervals(s);
  std::vector<Interval> out;
  for (const std::vector<Interval>* list : {&odd, &even})
    for (const Interval& iv : *list) {
      if (iv.members.test(t)) continue;
      if (sub.contains(s.vector_of(iv))) out.push_back(iv);
    }
  std::sort(out.begin(), out.end(), interval_less);
  return out;
}

namespace {

// Even-size arc with the given endpoints (cycle with an odd vertex count,
// so exactly one of the two arcs qualifies).
BitVector even_arc(const Setup& s, int a, int b, int* forward_end) {
  const int N = s.vertices;
  int len_ab = (b - a + N) % N + 1;
  int from = a, to = b;
  if (len_ab % 2 != 0) {
    from = b;
    to = a;
    len_ab = (a - b + N) % N + 1;
  }
  BitVector m = BitVector::zero(N);
  for (int k = 0; k < len_ab; ++k) m = m.with((from - 1 + k) % N + 1);
  *forward_end = to;
  return m;
}

}  // namespace

std::vector<Family> enumerate_phi_linegraph(const Setup& s) {
  if (s.kase != GraphCase::CycleQuotient)
    throw DomainError("endpoint-pair enumeration lives in the quotient case");
  const int N = s.vertices;
  struct PairArc {
    int a, b, end;
    BitVector arc;
  };
  std::vector<PairArc> pairs;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      int end;
      BitVector arc = even_arc(s, a, b, &end);
      pairs.push_back({a, b, end, arc});
    }

  std::vector<Family> out;
  std::vector<int> chosen;

  auto qualifies = [&]() {
    for (int i : chosen) {
      std::uint64_t residue =
          pairs[i].arc.bits & ~(1ull << (pairs[i].a - 1)) & ~(1ull << (pairs[i].b - 1));
      std::vector<std::uint64_t> tiles;
      for (int j : chosen)
        if (j != i && (pairs[j].arc.bits & ~residue) == 0) tiles.push_back(pairs[j].arc.bits);
      // exact tiling of the residue
      std::function<bool(std::uint64_t, std::size_t)> go =
          [&](std::uint64_t left, std::size_t from) -> bool {
        if (!left) return true;
        std::uint64_t lowest = left & (~left + 1);
        for (std::size_t k = from; k < tiles.size(); ++k) {
          if (!(tiles[k] & lowest)) continue;
          if (tiles[k] & ~left) continue;
          if (go(left & ~tiles[k], 0)) return true;
        }
        return false;
      };
      if (!go(residue, 0)) return false;
    }
    return true;
  };

  auto emit = [&]() {
    std::vector<Interval> members;
    for (int i : chosen)
      members.push_back(s.interval(pairs[i].arc.without(pairs[i].end)));
    out.push_back(Family::of(s, std::move(members)));
  };

  std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t from,
                                                            std::uint64_t used) {
    if (qualifies()) emit();
    for (std::size_t i = from; i < pairs.size(); ++i) {
      std::uint64_t pm = (1ull << (pairs[i].a - 1)) | (1ull << (pairs[i].b - 1));
      if (pm & used) continue;
      chosen.push_back(static_cast<int>(i));
      dfs(i + 1, used | pm);
      chosen.pop_back();
    }
  };
  dfs(0, 0);
  std::sort(out.begin(), out.end(), family_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PerfectnessReport verify_perfect(const Setup& s, const PhiTable& table) {
  PerfectnessReport rep;
  auto complain = [&rep](bool& flag, std::string msg) {
    flag = false;
    if (rep.violations.size() < 50) rep.violations.push_back(std::move(msg));
  };

  std::unordered_set<std::uint64_t> union_of_spans;
  std::unordered_set<std::uint64_t> eps_values;

  for (const PhiRecord& r : table.records) {
    if (r.span.dim() != r.family.size())
      complain(rep.basis_ok, "member vectors dependent at eps=" + std::to_string(r.eps.bits));
    if (!(family_of_subspace(s, r.span) == r.family))
      complain(rep.basis_ok,
               "family not recoverable from span at eps=" + std::to_string(r.eps.bits));
    if (!r.span.contains(r.eps))
      complain(rep.eps_member_ok, "eps outside span at eps=" + std::to_string(r.eps.bits));
    if (!eps_values.insert(r.eps.bits).second)
      complain(rep.bijective_ok, "eps collision at " + std::to_string(r.eps.bits));
    for (const BitVector& v : r.span.elements()) union_of_spans.insert(v.bits);
  }
  if (eps_values != union_of_spans)
    complain(rep.bijective_ok, "eps image differs from the union of spans");

  for (const PhiRecord& rb : table.records) {
    for (const PhiRecord& ra : table.records) {
      if (!rb.span.contains(ra.eps)) continue;
      std::vector<int> ga = multiplicities(s, ra.family), gb = multiplicities(s, rb.family);
      for (int v = 0; v < s.vertices; ++v)
        if (ga[v] > gb[v]) {
          complain(rep.monotone_ok,
                   "multiplicity grows from eps=" + std::to_string(ra.eps.bits) +
                       " into eps=" + std::to_string(rb.eps.bits));
          break;
        }
    }
  }

  rep.v0_masks.assign(union_of_spans.begin(), union_of_spans.end());
  std::sort(rep.v0_masks.begin(), rep.v0_masks.end());
  return rep;
}

bool v0_membership(const Setup& s, BitVector v) {
  if (s.kase == GraphCase::CycleQuotient)
    throw DomainError("membership predicate needs basis coordinates");
  if (v.width != s.vertices) throw UsageError("vector width mismatch");
  switch (s.kase) {
    case GraphCase::PathOdd:
    case GraphCase::PathEven: {
      auto [plus, minus] = pos_parity_split(s, v);
      return plus.size() == minus.size();
    }
    case GraphCase::Cycle: {
      if (v.is_zero()) return true;
      if (v == BitVector::ones(s.vertices)) return false;
      int even_parts = 0;
      for (const Interval& part : components(s, v).parts) even_parts += !part.odd();
      return even_parts % 2 == 0;
    }
    case GraphCase::CycleQuotient:
      throw DomainError("membership predicate needs basis coordinates");
  }
  return false;
}

}  // namespace isofam
