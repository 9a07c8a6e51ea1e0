#include "isofam/affine.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace isofam {

AffineSplit affine_split(const Setup& cycle) {
  if (cycle.kase != GraphCase::Cycle) throw DomainError("affine split needs the plain cycle");
  AffineSplit out;
  for (std::uint64_t m = 0; m < (1ull << cycle.vertices); ++m) {
    BitVector v(m, cycle.vertices);
    (v0_membership(cycle, v) ? out.v0 : out.v1).push_back(m);
  }
  return out;
}

bool pi0_check(const Setup& cycle) {
  if (cycle.kase != GraphCase::Cycle) throw DomainError("projection check needs the plain cycle");
  QuotientMap pi = QuotientMap::killing(BitVector::ones(cycle.vertices));
  AffineSplit split = affine_split(cycle);
  std::unordered_set<std::uint64_t> images;
  for (std::uint64_t m : split.v0) images.insert(pi.project(BitVector(m, cycle.vertices)).bits);
  return images.size() == split.v0.size() &&
         images.size() == (1ull << (cycle.vertices - 1));
}

SubspaceHandle lift_M(const Setup& cycle, const Family& f) {
  if (cycle.kase != GraphCase::Cycle) throw DomainError("lift needs the plain cycle");
  if (!check_P0(cycle, f) || !check_P1(cycle, f))
    throw DomainError("family does not satisfy the axioms");
  SubspaceHandle sub = SubspaceHandle::zero(cycle.ambient_width);
  for (const Interval& iv : f.members) sub.insert(cycle.vector_of(iv));
  return sub;
}

TildeFamily tilde_family(const Setup& cycle, const PhiTable& table) {
  if (cycle.kase != GraphCase::Cycle) throw DomainError("tilde family needs the plain cycle");
  BitVector ones = BitVector::ones(cycle.ambient_width);
  TildeFamily out;
  for (int i = 0; i < table.size(); ++i) {
    const PhiRecord& r = table.records[i];
    out.records.push_back(TildeRecord{r.span, r.eps, false, i});
  }
  for (int i = 0; i < table.size(); ++i) {
    const PhiRecord& r = table.records[i];
    SubspaceHandle ext = r.span;
    ext.insert(ones);
    out.records.push_back(TildeRecord{std::move(ext), r.eps ^ ones, true, i});
  }
  return out;
}

PartialOrder tilde_order(const TildeFamily& tf, const PartialOrder& phi_order) {
  const int n = static_cast<int>(tf.records.size());
  StepRelation rel{n, BitMatrix(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const TildeRecord &ra = tf.records[a], &rb = tf.records[b];
      if (ra.extended && !rb.extended) continue;
      if (phi_order.le(ra.phi_index, rb.phi_index)) rel.step.set(a, b);
    }
  return close(rel);
}

BitVector odd_positions_mask(const Setup& s) {
  if (s.vertices % 2 == 0) throw DomainError("odd positions need an odd vertex count");
  BitVector m = BitVector::zero(s.vertices);
  for (int v = 1; v <= s.vertices; v += 2) m = m.with(v);
  return m;
}

std::vector<int> evenN_involution(const Setup& path_even, const PhiTable& table) {
  if (path_even.kase != GraphCase::PathEven)
    throw DomainError("the involution lives in the even-N path case");
  BitVector shift = path_even.vector_of(odd_positions_mask(path_even));
  std::vector<int> partner(table.size(), -1);
  for (int i = 0; i < table.size(); ++i) {
    int j = table.index_of(table.records[i].eps ^ shift);
    if (j < 0)
      throw VerifyError("no partner for eps=" + std::to_string(table.records[i].eps.bits));
    if (j == i) throw VerifyError("involution has a fixed point");
    partner[i] = j;
  }
  for (int i = 0; i < table.size(); ++i)
    if (partner[partner[i]] != i) throw VerifyError("partner map is not an involution");
  return partner;
}

EdgeMarker edge_marker(const Setup& quotient, std::pair<int, int> edge) {
  if (quotient.kase != GraphCase::CycleQuotient)
    throw DomainError("edge markers live in the quotient case");
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  if (std::find(quotient.edges.begin(), quotient.edges.end(), edge) == quotient.edges.end())
    throw DomainError("not an edge of the graph");

  BitVector complement =
      BitVector::ones(quotient.vertices).without(edge.first).without(edge.second);
  Interval arc = quotient.interval(complement);
  BitVector odd_part = even_odd_split(quotient, arc).second;
  BitVector bracket = quotient.vector_of(odd_part);

  BitVector zmask = BitVector::zero(quotient.ambient_width);
  for (int s : {edge.first, edge.second})
    if (s <= quotient.ambient_width) zmask = zmask.with(s);

  EdgeMarker m{edge, bracket, zmask};
  if (m.z(bracket)) throw VerifyError("functional does not kill the bracket vector");
  // radical of the form restricted to ker z must be the bracket line
  SubspaceHandle kernel = nullspace({zmask.bits}, quotient.ambient_width);
  std::vector<std::uint64_t> eqs;
  for (std::uint64_t r : kernel.rows)
    eqs.push_back(quotient.form.dual(BitVector(r, quotient.ambient_width)).bits);
  SubspaceHandle rad = intersect(kernel, nullspace(eqs, quotient.ambient_width));
  if (!(rad == span({bracket})))
    throw VerifyError("kernel radical is not the bracket line");
  return m;
}

BracketMembership bracket_membership(const Setup& quotient, const PhiRecord& rec,
                                     const EdgeMarker& marker) {
  BracketMembership out;
  out.in_span = rec.span.contains(marker.bracket);
  BitVector supp = support(quotient, rec.family);
  out.support_disjoint =
      !supp.test(marker.edge.first) && !supp.test(marker.edge.second);
  out.size_maximal = rec.family.size() == (quotient.vertices - 1) / 2;
  return out;
}

}  // namespace isofam
