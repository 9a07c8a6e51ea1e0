#include "isofam/sectors.hpp"

#include <algorithm>

namespace isofam {

SectorContext default_context(const Setup& quotient, std::pair<int, int> edge) {
  if (quotient.kase != GraphCase::CycleQuotient)
    throw DomainError("sector analysis lives in the quotient case");
  if (edge.first > edge.second) std::swap(edge.first, edge.second);
  const int N = quotient.vertices;
  // walk away from the edge: the N-3 vertices following edge.second
  BitVector J = BitVector::zero(N);
  for (int k = 1; k <= N - 3; ++k) J = J.with((edge.second - 1 + k) % N + 1);
  validate_J(quotient, edge, J);
  // tau = the endpoint adjacent to no element of J
  int tau = 0;
  for (int t : {edge.first, edge.second}) {
    if ((quotient.neighbors[t - 1] & J.bits) == 0) {
      tau = t;
      break;
    }
  }
  if (tau == 0) throw VerifyError("no edge endpoint avoids J");
  return SectorContext{J, tau};
}

void validate_J(const Setup& quotient, std::pair<int, int> edge, BitVector J) {
  if (J.width != quotient.vertices) throw UsageError("J width mismatch");
  if (J.test(edge.first) || J.test(edge.second)) throw UsageError("J meets the edge");
  if (J.count() != quotient.vertices - 3) throw UsageError("J must have N-3 vertices");
  if (quotient.vertices > 3 && !quotient.is_interval(J))
    throw UsageError("J must induce a path");
}

std::vector<int> omega_support_in(const OmegaTable& table, BitVector J) {
  std::vector<int> out;
  for (int i = 0; i < table.size(); ++i)
    if (support(table.setup, table.records[i].family).subset_of(J)) out.push_back(i);
  return out;
}

int SectorTable::index_of(std::uint64_t y) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), y,
                             [](const SectorEntry& e, std::uint64_t v) { return e.y < v; });
  if (it == entries.end() || it->y != y) return -1;
  return static_cast<int>(it - entries.begin());
}

std::vector<std::uint64_t> sign_classes(const OmegaTable& table, bool plus) {
  QuotientMap collapse = QuotientMap::killing(table.marker.bracket);
  std::vector<std::uint64_t> out;
  const int w = table.setup.ambient_width;
  for (std::uint64_t m = 0; m < (1ull << w); ++m) {
    BitVector v(m, w);
    if (v.test(collapse.pivot)) continue;  // not canonical
    if (table.marker.z(v) == !plus) out.push_back(m);
  }
  return out;
}

SectorTable build_sector_table(const OmegaTable& table, bool plus, int tau, BitVector J) {
  const Setup& s = table.setup;
  if (tau != table.edge.first && tau != table.edge.second)
    throw UsageError("tau must be an endpoint of the edge");
  validate_J(s, table.edge, J);

  SectorTable st;
  st.plus = plus;
  st.tau = tau;
  st.J = J;
  st.collapse = QuotientMap::killing(table.marker.bracket);

  // lifts: records of this sign anchored at tau, plus (on the plus side)
  // the records supported inside J
  std::vector<int> lifts;
  for (int i = 0; i < table.size(); ++i) {
    const OmegaRecord& r = table.records[i];
    if (r.plus == plus && r.sector && *r.sector == tau) lifts.push_back(i);
  }
  std::vector<char> is_J_part(table.size(), 0);
  if (plus) {
    for (int i : omega_support_in(table, J)) {
      is_J_part[i] = 1;
      lifts.push_back(i);
    }
  }
  std::sort(lifts.begin(), lifts.end());
  lifts.erase(std::unique(lifts.begin(), lifts.end()), lifts.end());

  std::vector<std::uint64_t> classes = sign_classes(table, plus);
  if (lifts.size() != classes.size())
    throw VerifyError("sector lift count differs from the class count");

  for (int i : lifts) {
    const OmegaRecord& r = table.records[i];
    if (table.marker.z(r.eps_prime) == plus)
      throw VerifyError("lift sign disagrees with the sector sign");
    SectorEntry e;
    e.y = st.collapse.project(r.eps_prime).bits;
    e.record = i;
    e.nu = r.n;
    e.from_J_part = is_J_part[i];
    for (const BitVector& v : st.collapse.project(r.span).elements()) {
      if (table.marker.z(v) == !plus) e.span_image.push_back(v.bits);
    }
    std::sort(e.span_image.begin(), e.span_image.end());
    st.entries.push_back(std::move(e));
  }
  std::sort(st.entries.begin(), st.entries.end(),
            [](const SectorEntry& a, const SectorEntry& b) { return a.y < b.y; });
  for (std::size_t i = 1; i < st.entries.size(); ++i)
    if (st.entries[i].y == st.entries[i - 1].y)
      throw VerifyError("collapse is not injective on the sector lifts");
  // bijectivity onto the sign classes
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (st.entries[i].y != classes[i])
      throw VerifyError("sector lifts do not cover the sign classes");
  return st;
}

PartialOrder leq_tau(const SectorTable& st) {
  const int n = st.size();
  StepRelation rel{n, BitMatrix(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& img = st.entries[j].span_image;
      if (std::binary_search(img.begin(), img.end(), st.entries[i].y)) rel.step.set(i, j);
    }
  return close(rel);
}

std::vector<std::vector<std::uint64_t>> F_collection(const SectorTable& st) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const SectorEntry& e : st.entries) out.push_back(e.span_image);
  std::vector<std::vector<std::uint64_t>> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw VerifyError("collapsed span images are not pairwise distinct");
  return out;
}

}  // namespace isofam
