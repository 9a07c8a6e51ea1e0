#include "isofam/order.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace isofam {

PartialOrder close(const StepRelation& step) {
  const int n = step.n;
  PartialOrder po;
  po.n = n;
  po.leq = step.step;
  for (int i = 0; i < n; ++i) po.leq.set(i, i);

  // word-parallel Warshall closure
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* rk = po.leq.row(k);
    for (int i = 0; i < n; ++i) {
      if (i == k || !po.leq.get(i, k)) continue;
      std::uint64_t* ri = po.leq.row(i);
      for (int w = 0; w < po.leq.words; ++w) ri[w] |= rk[w];
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (po.leq.get(i, j) && po.leq.get(j, i))
        throw VerifyError("order relation has a two-cycle between nodes " +
                          std::to_string(i) + " and " + std::to_string(j));

  // covers: strictly below with nothing strictly between
  BitMatrix strict = po.leq, strict_to(n);
  for (int i = 0; i < n; ++i) {
    strict.row(i)[i / 64] &= ~(1ull << (i % 64));
    for (int j = 0; j < n; ++j)
      if (i != j && po.leq.get(i, j)) strict_to.set(j, i);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !po.leq.get(a, b)) continue;
      std::uint64_t between = 0;
      for (int w = 0; w < strict.words; ++w) between |= strict.row(a)[w] & strict_to.row(b)[w];
      if (!between) po.hasse.push_back({a, b});
    }
  std::sort(po.hasse.begin(), po.hasse.end());
  return po;
}

StepRelation phi_step(const PhiTable& table) {
  const int n = table.size();
  StepRelation rel{n, BitMatrix(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table.records[j].span.contains(table.records[i].eps)) rel.step.set(i, j);
  return rel;
}

std::vector<int> topological_order(const PartialOrder& po,
                                   const std::vector<std::uint64_t>& tie_keys) {
  std::vector<int> below_count(po.n, 0);
  std::vector<std::vector<int>> above(po.n);
  for (int a = 0; a < po.n; ++a)
    for (int b = 0; b < po.n; ++b)
      if (a != b && po.le(a, b)) {
        ++below_count[b];
        above[a].push_back(b);
      }
  // Kahn with deterministic tie-breaking by key
  std::priority_queue<std::pair<std::uint64_t, int>,
                      std::vector<std::pair<std::uint64_t, int>>, std::greater<>>
      ready;
  for (int v = 0; v < po.n; ++v)
    if (below_count[v] == 0) ready.push({tie_keys[v], v});
  std::vector<int> out;
  while (!ready.empty()) {
    int v = ready.top().second;
    ready.pop();
    out.push_back(v);
    for (int w : above[v])
      if (--below_count[w] == 0) ready.push({tie_keys[w], w});
  }
  if (static_cast<int>(out.size()) != po.n)
    throw VerifyError("cycle encountered while ordering");
  return out;
}

std::string hasse_dot(const PartialOrder& po, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int i = 0; i < po.n; ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [a, b] : po.hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_csv(const PartialOrder& po, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "from,to\n";
  for (auto [a, b] : po.hasse) os << labels[a] << "," << labels[b] << "\n";
  return os.str();
}

}  // namespace isofam
