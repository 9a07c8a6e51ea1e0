#include "isofam/omega.hpp"

#include <algorithm>
#include <map>

namespace isofam {

int edge_count(const Family& f, std::pair<int, int> edge) {
  int n = 0;
  for (const Interval& iv : f.members)
    n += iv.members.test(edge.first) && iv.members.test(edge.second);
  return n;
}

Interval anchor_interval(const Setup& s, const Family& f, std::pair<int, int> edge) {
  BitVector supp = support(s, f);
  if (!supp.test(edge.first) && !supp.test(edge.second))
    throw DomainError("family support misses the edge");
  std::optional<Interval> found;
  for (const Interval& iv : f.members) {
    int meet = iv.members.test(edge.first) + iv.members.test(edge.second);
    if (meet != 1) continue;
    if (found) throw VerifyError("anchor interval is not unique");
    found = iv;
  }
  if (!found) throw VerifyError("no member meets the edge in one vertex");
  return *found;
}

Family drop_anchor(const Setup& s, const Family& f, std::pair<int, int> edge) {
  if (edge_count(f, edge) % 2 == 0) return f;
  return f.without(anchor_interval(s, f, edge));
}

int OmegaTable::index_of(BitVector eps_value) const {
  auto it = std::lower_bound(records.begin(), records.end(), eps_value.bits,
                             [](const OmegaRecord& r, std::uint64_t v) {
                               return r.eps_prime.bits < v;
                             });
  if (it == records.end() || it->eps_prime.bits != eps_value.bits) return -1;
  return static_cast<int>(it - records.begin());
}

OmegaTable enumerate_omega(const Setup& quotient, const PhiTable& table,
                           std::pair<int, int> edge) {
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  OmegaTable out{quotient, edge, edge_marker(quotient, edge), {}};
  std::map<std::vector<Interval>, int, bool (*)(const std::vector<Interval>&,
                                                const std::vector<Interval>&)>
      seen([](const std::vector<Interval>& a, const std::vector<Interval>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            interval_less);
      });
  for (const PhiRecord& rec : table.records) {
    Family image = drop_anchor(quotient, rec.family, edge);
    if (!seen.emplace(image.members, 1).second)
      throw VerifyError("anchor removal is not injective");
    OmegaRecord r;
    r.family = image;
    r.lifted = rec.family;
    r.eps_prime = rec.eps;
    SubspaceHandle sub = SubspaceHandle::zero(quotient.ambient_width);
    for (const Interval& iv : image.members) sub.insert(quotient.vector_of(iv));
    r.span = std::move(sub);
    r.n = edge_count(rec.family, edge);
    r.plus = !out.marker.z(rec.eps);
    BitVector supp = support(quotient, rec.family);
    if (supp.test(edge.first) || supp.test(edge.second)) {
      Interval anchor = anchor_interval(quotient, rec.family, edge);
      r.sector = anchor.members.test(edge.first) ? edge.first : edge.second;
    }
    out.records.push_back(std::move(r));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const OmegaRecord& a, const OmegaRecord& b) {
              return a.eps_prime.bits < b.eps_prime.bits;
            });
  return out;
}

Perm iota_perm(const Setup& s, std::pair<int, int> edge) {
  if (!s.cyclic()) throw DomainError("edge involution is for cycle setups");
  const int N = s.vertices;
  Perm p;
  p.to.resize(N);
  for (int v = 1; v <= N; ++v)
    p.to[v - 1] = ((edge.first + edge.second - v) % N + N - 1) % N + 1;
  if (p.apply(edge.first) != edge.second || p.apply(edge.second) != edge.first)
    throw VerifyError("involution does not swap the edge endpoints");
  return p;
}

Family apply_family(const Setup& s, const Perm& p, const Family& f) {
  std::vector<Interval> members;
  for (const Interval& iv : f.members)
    members.push_back(s.interval(apply_vertices(p, iv.members)));
  std::sort(members.begin(), members.end(), interval_less);
  return Family{std::move(members)};
}

PartialOrder preceq_relation(const OmegaTable& table) {
  const int n = table.size();
  StepRelation rel{n, BitMatrix(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table.records[j].span.contains(table.records[i].eps_prime)) rel.step.set(i, j);
  return close(rel);
}

}  // namespace isofam
