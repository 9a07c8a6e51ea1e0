#include "isofam/reports.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace isofam {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(const std::string& id) const {
  for (const CheckResult& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks)
    j["checks"].push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  j["payload"] = payload;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << (pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

const std::vector<CheckSpec>& required_checks() {
  static const std::vector<CheckSpec> list = {
      {"perfect.basis", "verify"},
      {"perfect.eps-in-span", "verify"},
      {"perfect.bijective", "verify"},
      {"perfect.monotone", "verify"},
      {"form.radical", "verify"},
      {"counts.expected", "verify"},
      {"v0.closed-form", "verify"},
      {"eps.layered-agrees", "verify"},
      {"order.antisymmetric", "verify"},
      {"order.monotone", "verify"},
      {"eps.anchored-agrees", "verify"},
      {"construct.recursive-agrees", "verify"},
      {"construct.linegraph-agrees", "verify"},
      {"supp.not-full", "verify"},
      {"phi.union-over-paths", "verify"},
      {"chain.count", "verify"},
      {"dihedral.equivariance", "verify"},
      {"bracket.criterion", "verify"},
      {"affine.split", "verify"},
      {"affine.pi0", "verify"},
      {"affine.spans-in-v0", "verify"},
      {"affine.eps-bijective-v0", "verify"},
      {"affine.v0-union", "verify"},
      {"affine.gap-even", "verify"},
      {"affine.size-bound", "verify"},
      {"affine.size-equality", "verify"},
      {"tilde.eps-member", "verify"},
      {"tilde.bijective", "verify"},
      {"tilde.order", "verify"},
      {"eveninv.involution", "verify"},
      {"eveninv.v0-split", "verify"},
      {"fourier.identity", "fourier"},
      {"fourier.zero-pattern", "fourier"},
      {"fourier.diagonal-pow2", "fourier"},
      {"fourier.zero-column-sum", "fourier"},
      {"fourier.orbit-constancy", "fourier"},
      {"fourier.lagrangian-unit", "fourier"},
      {"fourier.conjecture", "fourier"},
      {"fourier.paper-n7", "fourier"},
      {"omega.injective", "omega"},
      {"omega.count", "omega"},
      {"omega.n-preserved", "omega"},
      {"omega.eps-in-span", "omega"},
      {"omega.sign-odd", "omega"},
      {"omega.sign-even", "omega"},
      {"omega.sign-zero", "omega"},
      {"omega.plus-characterization", "omega"},
      {"omega.preceq-antisymmetric", "omega"},
      {"omega.preceq-lift", "omega"},
      {"omega.downclosed-plus", "omega"},
      {"omega.sector-monotone", "omega"},
      {"omega.iota-involution", "omega"},
      {"omega.iota-equivariant", "omega"},
      {"sectors.J-downclosed", "sectors"},
      {"sectors.combined-monotone", "sectors"},
      {"sectors.interchange-levels", "sectors"},
      {"sectors.interchange-J", "sectors"},
      {"sectors.collapse-bijective", "sectors"},
      {"sectors.class-sizes", "sectors"},
      {"sectors.nu-monotone", "sectors"},
      {"sectors.leq-antisymmetric", "sectors"},
      {"sectors.F-distinct", "sectors"},
      {"sectors.F-count", "sectors"},
      {"sectors.collapse-iso", "sectors"},
      {"sectors.minus-iota", "sectors"},
      {"sectors.minus-J-independent", "sectors"},
      {"sectors.plus-J-dependent", "sectors"},
  };
  return list;
}

namespace {

using FamilyKey = std::vector<std::uint64_t>;

FamilyKey key_of(const Family& f) {
  FamilyKey k;
  for (const Interval& iv : f.members) k.push_back(iv.members.bits);
  return k;
}

void add(Report& rep, const std::string& id, bool pass, std::string detail = "") {
  rep.checks.push_back(CheckResult{id, pass, std::move(detail)});
}

std::string count_detail(int bad, int total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " ok";
}

}  // namespace

Report run_verify(const Setup& s, const PhiTable& table) {
  Report rep;
  rep.command = "verify";

  PerfectnessReport perf = verify_perfect(s, table);
  auto first_violation = [&perf]() {
    return perf.violations.empty() ? std::string() : perf.violations.front();
  };
  add(rep, "perfect.basis", perf.basis_ok, perf.basis_ok ? "" : first_violation());
  add(rep, "perfect.eps-in-span", perf.eps_member_ok, perf.eps_member_ok ? "" : first_violation());
  add(rep, "perfect.bijective", perf.bijective_ok, perf.bijective_ok ? "" : first_violation());
  add(rep, "perfect.monotone", perf.monotone_ok, perf.monotone_ok ? "" : first_violation());

  {
    SubspaceHandle rad = radical(s.form);
    SubspaceHandle expected = SubspaceHandle::zero(s.ambient_width);
    if (s.kase == GraphCase::Cycle)
      expected.insert(BitVector::ones(s.ambient_width));
    else if (s.kase == GraphCase::PathEven)
      expected.insert(s.vector_of(odd_positions_mask(s)));
    add(rep, "form.radical", rad == expected,
        "radical dim " + std::to_string(rad.dim()));
  }

  const bool cyc = s.cyclic();
  {
    bool ok;
    std::string detail = std::to_string(table.size()) + " families";
    if (cyc) {
      ok = table.size() == static_cast<int>(1ull << (s.n - 1));
    } else {
      int predicted = 0;
      for (std::uint64_t m = 0; m < (1ull << s.vertices); ++m)
        predicted += v0_membership(s, BitVector(m, s.vertices));
      ok = table.size() == predicted;
      detail += ", predicate count " + std::to_string(predicted);
    }
    add(rep, "counts.expected", ok, detail);
  }

  {
    bool ok = true;
    if (s.kase == GraphCase::CycleQuotient) {
      ok = perf.v0_masks.size() == (1ull << s.ambient_width);
    } else {
      std::vector<std::uint64_t> predicted;
      for (std::uint64_t m = 0; m < (1ull << s.vertices); ++m)
        if (v0_membership(s, BitVector(m, s.vertices))) predicted.push_back(m);
      ok = perf.v0_masks == predicted;
    }
    add(rep, "v0.closed-form", ok,
        std::to_string(perf.v0_masks.size()) + " vectors");
  }

  {
    int bad = 0;
    for (const PhiRecord& r : table.records)
      if (!(eps_layered(s, r.family) == r.eps)) ++bad;
    add(rep, "eps.layered-agrees", bad == 0, count_detail(bad, table.size()));
  }

  std::optional<PartialOrder> po;
  try {
    po = close(phi_step(table));
    add(rep, "order.antisymmetric", true);
  } catch (const VerifyError& e) {
    add(rep, "order.antisymmetric", false, e.what());
  }
  if (po) {
    std::vector<std::vector<int>> mult;
    mult.reserve(table.size());
    for (const PhiRecord& r : table.records) mult.push_back(multiplicities(s, r.family));
    int bad = 0;
    for (int i = 0; i < table.size(); ++i)
      for (int j = 0; j < table.size(); ++j) {
        if (!po->le(i, j)) continue;
        for (int v = 0; v < s.vertices; ++v)
          if (mult[i][v] > mult[j][v]) { ++bad; break; }
      }
    add(rep, "order.monotone", bad == 0, std::to_string(bad) + " violations");
  }

  if (s.kase == GraphCase::CycleQuotient) {
    int bad = 0, cases = 0;
    for (const PhiRecord& r : table.records)
      for (int t = 1; t <= s.vertices; ++t) {
        ++cases;
        if (!(eps_anchored(s, r.family, t) == r.eps)) ++bad;
      }
    add(rep, "eps.anchored-agrees", bad == 0, count_detail(bad, cases));

    {
      std::vector<SubspaceHandle> from_table;
      for (const PhiRecord& r : table.records) from_table.push_back(r.span);
      std::sort(from_table.begin(), from_table.end(),
                [](const SubspaceHandle& a, const SubspaceHandle& b) {
                  if (a.dim() != b.dim()) return a.dim() < b.dim();
                  return a.rows < b.rows;
                });
      from_table.erase(std::unique(from_table.begin(), from_table.end()), from_table.end());
      add(rep, "construct.recursive-agrees", from_table == recursive_family(s),
          std::to_string(from_table.size()) + " subspaces");
    }

    {
      std::vector<Family> line = enumerate_phi_linegraph(s);
      std::vector<Family> own;
      for (const PhiRecord& r : table.records) own.push_back(r.family);
      std::sort(own.begin(), own.end(), family_less);
      add(rep, "construct.linegraph-agrees", line == own,
          std::to_string(line.size()) + " families");
    }

    {
      int bad = 0;
      for (const PhiRecord& r : table.records)
        if (support(s, r.family) == BitVector::ones(s.vertices)) ++bad;
      add(rep, "supp.not-full", bad == 0, count_detail(bad, table.size()));
    }

    {
      // union over the puncture points of the path-case families
      Setup path = build_setup(GraphCase::PathOdd, s.n);
      PhiTable ptab = enumerate_phi(path);
      std::set<FamilyKey> uni;
      for (int t = 1; t <= s.vertices; ++t) {
        for (const PhiRecord& pr : ptab.records) {
          std::vector<Interval> members;
          for (const Interval& iv : pr.family.members) {
            BitVector m = BitVector::zero(s.vertices);
            for (int i : iv.members.labels()) m = m.with((t + i - 1) % s.vertices + 1);
            members.push_back(s.interval(m));
          }
          uni.insert(key_of(Family::of(s, std::move(members))));
        }
      }
      std::set<FamilyKey> own;
      for (const PhiRecord& r : table.records) own.insert(key_of(r.family));
      add(rep, "phi.union-over-paths", uni == own,
          std::to_string(uni.size()) + " families from punctured paths");
    }
  }

  if (cyc) {
    {
      int bad = 0, cases = 0;
      for (const PhiRecord& r : table.records)
        for (const Interval& iv : r.family.members) {
          ++cases;
          int inside = 0;
          for (const Interval& jv : r.family.members)
            inside += jv.members.subset_of(iv.members);
          if (inside != (iv.size() + 1) / 2) ++bad;
        }
      add(rep, "chain.count", bad == 0, count_detail(bad, cases));
    }

    {
      std::set<FamilyKey> keys;
      for (const PhiRecord& r : table.records) keys.insert(key_of(r.family));
      int bad = 0;
      for (const Perm& p : dihedral_elements(s))
        for (const PhiRecord& r : table.records) {
          Family image = apply_family(s, p, r.family);
          if (!keys.count(key_of(image)) ||
              !(eps(s, image) == apply_ambient(s, p, r.eps)))
            ++bad;
        }
      add(rep, "dihedral.equivariance", bad == 0, std::to_string(bad) + " violations");
    }
  }

  if (s.kase == GraphCase::CycleQuotient) {
    int bad = 0, cases = 0;
    bool markers_ok = true;
    std::string marker_err;
    for (auto edge : s.edges) {
      try {
        EdgeMarker m = edge_marker(s, edge);
        for (const PhiRecord& r : table.records) {
          ++cases;
          if (!bracket_membership(s, r, m).criterion_holds()) ++bad;
        }
      } catch (const VerifyError& e) {
        markers_ok = false;
        marker_err = e.what();
      }
    }
    add(rep, "bracket.criterion", markers_ok && bad == 0,
        markers_ok ? count_detail(bad, cases) : marker_err);
  }

  if (s.kase == GraphCase::Cycle) {
    AffineSplit split = affine_split(s);
    std::unordered_set<std::uint64_t> v0set(split.v0.begin(), split.v0.end());
    std::unordered_set<std::uint64_t> v1set(split.v1.begin(), split.v1.end());
    {
      bool ok = split.v0.size() == (1ull << (s.n - 1)) && split.v1.size() == split.v0.size();
      std::uint64_t ones = BitVector::ones(s.vertices).bits;
      for (std::uint64_t m : split.v0)
        if (!v1set.count(m ^ ones)) ok = false;
      add(rep, "affine.split", ok,
          std::to_string(split.v0.size()) + "+" + std::to_string(split.v1.size()));
    }
    add(rep, "affine.pi0", pi0_check(s));
    {
      int bad = 0;
      for (const PhiRecord& r : table.records)
        for (const BitVector& v : r.span.elements())
          if (!v0set.count(v.bits)) { ++bad; break; }
      add(rep, "affine.spans-in-v0", bad == 0, count_detail(bad, table.size()));
    }
    {
      std::vector<std::uint64_t> image;
      for (const PhiRecord& r : table.records) image.push_back(r.eps.bits);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      add(rep, "affine.eps-bijective-v0",
          image.size() == table.records.size() && image == split.v0);
    }
    add(rep, "affine.v0-union", perf.v0_masks == split.v0);
    {
      int bad_gap = 0, bad_bound = 0, bad_eq = 0;
      for (const PhiRecord& r : table.records) {
        if (r.family.size() > (s.vertices - 1) / 2) ++bad_bound;
        if (r.family.empty()) continue;
        BitVector supp = support(s, r.family);
        if (supp == BitVector::ones(s.vertices)) {
          ++bad_gap;
          continue;
        }
        ComponentSplit cs = components(s, supp ^ BitVector::ones(s.vertices));
        int evens = 0, twos = 0, other = 0;
        for (const Interval& part : cs.parts) {
          if (!part.odd()) ++evens;
          if (part.size() == 2)
            ++twos;
          else if (part.size() != 1)
            ++other;
        }
        if (evens == 0) ++bad_gap;
        bool extremal = r.family.size() == (s.vertices - 1) / 2;
        bool shape = twos == 1 && other == 0;
        if (extremal != shape) ++bad_eq;
      }
      add(rep, "affine.gap-even", bad_gap == 0, std::to_string(bad_gap) + " violations");
      add(rep, "affine.size-bound", bad_bound == 0, std::to_string(bad_bound) + " violations");
      add(rep, "affine.size-equality", bad_eq == 0, std::to_string(bad_eq) + " violations");
    }
    {
      TildeFamily tf = tilde_family(s, table);
      int bad_member = 0;
      std::unordered_set<std::uint64_t> images;
      for (const TildeRecord& r : tf.records) {
        if (!r.space.contains(r.eps_tilde)) ++bad_member;
        images.insert(r.eps_tilde.bits);
      }
      add(rep, "tilde.eps-member", bad_member == 0,
          count_detail(bad_member, static_cast<int>(tf.records.size())));
      add(rep, "tilde.bijective", images.size() == tf.records.size() &&
                                      images.size() == (1ull << s.vertices),
          std::to_string(images.size()) + " images");
      if (po) {
        try {
          tilde_order(tf, *po);
          add(rep, "tilde.order", true);
        } catch (const VerifyError& e) {
          add(rep, "tilde.order", false, e.what());
        }
      }
    }
  }

  if (s.kase == GraphCase::PathEven) {
    try {
      std::vector<int> partner = evenN_involution(s, table);
      add(rep, "eveninv.involution", true,
          std::to_string(partner.size() / 2) + " pairs");
    } catch (const VerifyError& e) {
      add(rep, "eveninv.involution", false, e.what());
    }
    {
      // sub-path on the first |S|-1 vertices
      Setup sub = build_setup(GraphCase::PathOdd, s.n - 1);
      PhiTable subtab = enumerate_phi(sub);
      PerfectnessReport subperf = verify_perfect(sub, subtab);
      std::uint64_t shift = s.vector_of(odd_positions_mask(s)).bits;
      std::set<std::uint64_t> expected;
      for (std::uint64_t m : subperf.v0_masks) {
        expected.insert(m);
        expected.insert(m ^ shift);
      }
      std::set<std::uint64_t> actual(perf.v0_masks.begin(), perf.v0_masks.end());
      add(rep, "eveninv.v0-split",
          expected == actual && expected.size() == 2 * subperf.v0_masks.size());
    }
  }

  rep.payload["case"] = case_name(s.kase);
  rep.payload["n"] = s.n;
  rep.payload["families"] = table.size();
  return rep;
}

Report run_fourier(const Setup& s, const PhiTable& table, bool compare_paper) {
  Report rep;
  rep.command = "fourier";
  std::optional<CMatrix> cm;
  try {
    cm = c_matrix(table);
    add(rep, "fourier.identity", true,
        std::to_string(cm->size()) + " columns verified pointwise");
  } catch (const VerifyError& e) {
    add(rep, "fourier.identity", false, e.what());
    return rep;
  }

  TriangularityReport tri = triangularity_check(*cm);
  add(rep, "fourier.zero-pattern", tri.zero_pattern_ok,
      tri.zero_pattern_ok ? "" : tri.violations.front());
  add(rep, "fourier.diagonal-pow2", tri.diagonal_pow2_ok,
      tri.diagonal_pow2_ok ? "" : tri.violations.back());

  const int x0 = cm->position_of(0);
  add(rep, "fourier.zero-column-sum", cm->column_sum(x0) == 1,
      "sum = " + std::to_string(cm->column_sum(x0)));

  OrbitTable orbits = dihedral_orbits(s);
  {
    std::vector<int> pos_by_mask(1ull << s.ambient_width);
    for (int i = 0; i < cm->size(); ++i) pos_by_mask[cm->ys[i]] = i;
    int bad = 0;
    for (const Perm& p : dihedral_elements(s)) {
      for (int x = 0; x < cm->size(); ++x) {
        std::uint64_t xi =
            apply_ambient(s, p, BitVector(cm->ys[x], s.ambient_width)).bits;
        for (const auto& [y, v] : cm->columns[x]) {
          std::uint64_t yi =
              apply_ambient(s, p, BitVector(cm->ys[y], s.ambient_width)).bits;
          if (cm->at(pos_by_mask[yi], pos_by_mask[xi]) != v) ++bad;
        }
      }
    }
    add(rep, "fourier.orbit-constancy", bad == 0, std::to_string(bad) + " violations");
  }

  {
    int bad = 0;
    const int lag = (s.n - 1) / 2;
    for (int x = 0; x < cm->size(); ++x) {
      if (cm->dims[x] != lag) continue;
      if (!(cm->columns[x].size() == 1 && cm->columns[x][0] ==
                                              std::pair<int, long long>{x, 1}))
        ++bad;
    }
    add(rep, "fourier.lagrangian-unit", bad == 0, std::to_string(bad) + " violations");
  }

  {
    std::vector<ConjectureViolation> vio = conjecture_scan(*cm);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vio) arr.push_back({{"y", v.y}, {"x", v.x}, {"value", v.value}});
    rep.payload["conjecture_violations"] = arr;
    bool asserted = s.n <= 7;
    add(rep, "fourier.conjecture", asserted ? vio.empty() : true,
        std::to_string(vio.size()) + " entries outside {0,±2^k}" +
            (asserted ? "" : " (reported only at this N)"));
  }

  {
    nlohmann::json jorb = nlohmann::json::array();
    for (const auto& orb : orbits.orbits) {
      nlohmann::json o;
      o["representative"] = orb.front();
      o["size"] = orb.size();
      o["c_at_x0"] = cm->at(cm->position_of(orb.front()), x0);
      jorb.push_back(o);
    }
    rep.payload["orbits"] = jorb;
  }

  if (compare_paper && s.n == 7) {
    PaperComparison pc = paper_table_compare(s, *cm, orbits);
    std::vector<int> want{1, 7, 7, 7, 7, 7, 7, 7, 14};
    bool sizes_ok = pc.orbit_sizes == want;
    bool structural = sizes_ok && pc.orbit_constant && pc.column_sum == 1;
    int mismatches = 0;
    nlohmann::json entries = nlohmann::json::array();
    for (const PaperEntry& e : pc.entries) {
      mismatches += !e.match;
      entries.push_back({{"label", e.label},
                         {"mask", e.mask},
                         {"orbit_size", e.orbit_size},
                         {"computed", e.computed},
                         {"printed", e.printed},
                         {"match", e.match}});
    }
    rep.payload["paper_comparison"] = entries;
    rep.payload["paper_column_sum"] = pc.column_sum;
    // printed-value mismatches are documented output, not failures; the
    // computed column is the one that satisfies the forced identities
    std::string detail = "computed/printed:";
    for (const PaperEntry& e : pc.entries)
      detail += " " + e.label + "=" + std::to_string(e.computed) + "/" +
                std::to_string(e.printed) + (e.match ? "" : "(!)");
    detail += "; " + std::to_string(mismatches) + " disagreements";
    add(rep, "fourier.paper-n7", structural, detail);
  }

  rep.payload["csv"] = c_matrix_csv(*cm);
  rep.payload["n"] = s.n;
  return rep;
}

namespace {

std::uint64_t induced_class_image(const Setup& s, const QuotientMap& collapse,
                                  const Perm& p, std::uint64_t y) {
  BitVector rep = collapse.lift(BitVector(y, s.ambient_width));
  return collapse.project(apply_ambient(s, p, rep)).bits;
}

}  // namespace

Report run_omega(const Setup& s, const PhiTable& table, std::pair<int, int> edge) {
  Report rep;
  rep.command = "omega";
  std::optional<OmegaTable> ot;
  try {
    ot = enumerate_omega(s, table, edge);
    add(rep, "omega.injective", true);
  } catch (const VerifyError& e) {
    add(rep, "omega.injective", false, e.what());
    return rep;
  }
  edge = ot->edge;
  const int n = ot->size();

  {
    bool distinct = true;
    for (int i = 1; i < n; ++i)
      if (ot->records[i].eps_prime.bits == ot->records[i - 1].eps_prime.bits)
        distinct = false;
    add(rep, "omega.count", distinct && n == static_cast<int>(1ull << (s.n - 1)),
        std::to_string(n) + " records");
  }

  {
    int bad = 0;
    for (const OmegaRecord& r : ot->records)
      if (edge_count(r.family, edge) != r.n || edge_count(r.lifted, edge) != r.n) ++bad;
    add(rep, "omega.n-preserved", bad == 0, count_detail(bad, n));
  }

  {
    int bad = 0;
    for (const OmegaRecord& r : ot->records)
      if (!r.span.contains(r.eps_prime)) ++bad;
    add(rep, "omega.eps-in-span", bad == 0, count_detail(bad, n));
  }

  {
    int bad_odd = 0, bad_even = 0, bad_zero = 0;
    for (const OmegaRecord& r : ot->records) {
      if (r.n % 2 == 1 && !r.plus) ++bad_odd;
      if (r.n % 2 == 0 && r.n >= 2 && r.plus) ++bad_even;
      if (r.n == 0) {
        BitVector supp = support(s, r.family);
        int meet = supp.test(edge.first) + supp.test(edge.second);
        if (meet > 1 || (r.plus != (meet == 0))) ++bad_zero;
      }
    }
    add(rep, "omega.sign-odd", bad_odd == 0, std::to_string(bad_odd) + " violations");
    add(rep, "omega.sign-even", bad_even == 0, std::to_string(bad_even) + " violations");
    add(rep, "omega.sign-zero", bad_zero == 0, std::to_string(bad_zero) + " violations");
  }

  {
    int bad = 0;
    for (const OmegaRecord& r : ot->records) {
      bool all_even = true;
      for (const Interval& iv : r.family.members) {
        int meet = iv.members.test(edge.first) + iv.members.test(edge.second);
        if (meet == 1) all_even = false;
      }
      if (r.plus != all_even) ++bad;
    }
    add(rep, "omega.plus-characterization", bad == 0, count_detail(bad, n));
  }

  std::optional<PartialOrder> pre;
  try {
    pre = preceq_relation(*ot);
    add(rep, "omega.preceq-antisymmetric", true);
  } catch (const VerifyError& e) {
    add(rep, "omega.preceq-antisymmetric", false, e.what());
  }

  if (pre) {
    PartialOrder po = close(phi_step(table));
    int bad_lift = 0, bad_down = 0, bad_sector = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!pre->le(i, j)) continue;
        const OmegaRecord &ri = ot->records[i], &rj = ot->records[j];
        if (!po.le(table.index_of(ri.eps_prime), table.index_of(rj.eps_prime)))
          ++bad_lift;
        if (rj.plus && !ri.plus) ++bad_down;
        // sector monotonicity for both signs and endpoints
        if (rj.sector && ri.plus == rj.plus && (rj.plus ? rj.n > 0 : true)) {
          bool same = ri.n == rj.n && ri.sector && *ri.sector == *rj.sector;
          if (!same && !(ri.n < rj.n)) ++bad_sector;
        }
      }
    add(rep, "omega.preceq-lift", bad_lift == 0, std::to_string(bad_lift) + " violations");
    add(rep, "omega.downclosed-plus", bad_down == 0, std::to_string(bad_down) + " violations");
    add(rep, "omega.sector-monotone", bad_sector == 0,
        std::to_string(bad_sector) + " violations");
  }

  {
    Perm iota = iota_perm(s, edge);
    bool involution = true;
    for (int v = 1; v <= s.vertices; ++v)
      if (iota.apply(iota.apply(v)) != v) involution = false;
    std::set<FamilyKey> phi_keys, omega_keys;
    for (const PhiRecord& r : table.records) phi_keys.insert(key_of(r.family));
    std::map<FamilyKey, int> omega_by_key;
    for (int i = 0; i < n; ++i) omega_by_key[key_of(ot->records[i].family)] = i;
    int bad_stable = 0, bad_equiv = 0;
    for (const PhiRecord& r : table.records)
      if (!phi_keys.count(key_of(apply_family(s, iota, r.family)))) ++bad_stable;
    for (const OmegaRecord& r : ot->records) {
      auto it = omega_by_key.find(key_of(apply_family(s, iota, r.family)));
      if (it == omega_by_key.end()) {
        ++bad_stable;
        continue;
      }
      const OmegaRecord& img = ot->records[it->second];
      if (!(img.eps_prime == apply_ambient(s, iota, r.eps_prime))) ++bad_equiv;
      if (img.plus != r.plus) ++bad_equiv;
      if (r.sector) {
        if (!img.sector || *img.sector != iota.apply(*r.sector)) ++bad_equiv;
      } else if (img.sector) {
        ++bad_equiv;
      }
    }
    add(rep, "omega.iota-involution", involution && bad_stable == 0,
        std::to_string(bad_stable) + " instability violations");
    add(rep, "omega.iota-equivariant", bad_equiv == 0,
        std::to_string(bad_equiv) + " violations");
  }

  rep.payload["edge"] = {edge.first, edge.second};
  rep.payload["records"] = n;
  rep.payload["jsonl"] = omega_jsonl(*ot);
  return rep;
}

Report run_sectors(const Setup& s, const PhiTable& table, std::pair<int, int> edge,
                   int tau, std::optional<BitVector> J) {
  Report rep;
  rep.command = "sectors";
  OmegaTable ot = enumerate_omega(s, table, edge);
  edge = ot.edge;
  SectorContext ctx = default_context(s, edge);
  if (tau == 0) tau = ctx.tau;
  if (tau != edge.first && tau != edge.second)
    throw UsageError("tau must be an endpoint of the marked edge");
  BitVector jmask = J.value_or(ctx.J);
  validate_J(s, edge, jmask);
  const int n = ot.size();
  const int other_tau = tau == edge.first ? edge.second : edge.first;

  PartialOrder pre = preceq_relation(ot);
  auto supp_in = [&](int i, BitVector mask) {
    return support(s, ot.records[i].family).subset_of(mask);
  };

  {
    int bad = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (pre.le(i, j) && supp_in(j, jmask) && !supp_in(i, jmask)) ++bad;
    add(rep, "sectors.J-downclosed", bad == 0, std::to_string(bad) + " violations");
  }

  {
    // combined monotonicity for both signs and both endpoints
    int bad = 0;
    for (bool plus : {true, false})
      for (int t : {edge.first, edge.second}) {
        auto member = [&](int i) {
          const OmegaRecord& r = ot.records[i];
          if (r.plus != plus) return false;
          if (r.sector && *r.sector == t) return true;
          return plus && supp_in(i, jmask);
        };
        for (int i = 0; i < n; ++i) {
          if (ot.records[i].plus != plus) continue;
          for (int j = 0; j < n; ++j) {
            if (!pre.le(i, j) || !member(j)) continue;
            bool same = member(i) && ot.records[i].n == ot.records[j].n;
            if (!same && !(ot.records[i].n < ot.records[j].n)) ++bad;
          }
        }
      }
    add(rep, "sectors.combined-monotone", bad == 0, std::to_string(bad) + " violations");
  }

  {
    // level sets for the two endpoints are swapped by adding the bracket
    bool ok = true;
    for (bool plus : {true, false}) {
      std::map<int, std::set<std::uint64_t>> by_level_a, by_level_b;
      for (const OmegaRecord& r : ot.records) {
        if (r.plus != plus || !r.sector) continue;
        auto& dest = *r.sector == edge.first ? by_level_a : by_level_b;
        dest[r.n].insert(r.eps_prime.bits);
      }
      std::set<int> levels;
      for (auto& [lv, st] : by_level_a) levels.insert(lv);
      for (auto& [lv, st] : by_level_b) levels.insert(lv);
      for (int lv : levels) {
        std::set<std::uint64_t> shifted;
        for (std::uint64_t m : by_level_a[lv]) shifted.insert(m ^ ot.marker.bracket.bits);
        if (shifted != by_level_b[lv]) ok = false;
      }
    }
    add(rep, "sectors.interchange-levels", ok);
  }

  {
    std::set<std::uint64_t> j0, edge_free;
    for (int i = 0; i < n; ++i) {
      const OmegaRecord& r = ot.records[i];
      BitVector supp = support(s, r.family);
      if (!supp.test(edge.first) && !supp.test(edge.second))
        edge_free.insert(r.eps_prime.bits);
      if (supp_in(i, jmask)) j0.insert(r.eps_prime.bits);
    }
    std::set<std::uint64_t> j1;
    for (std::uint64_t m : edge_free)
      if (!j0.count(m)) j1.insert(m);
    std::set<std::uint64_t> j0_shift;
    for (std::uint64_t m : j0) j0_shift.insert(m ^ ot.marker.bracket.bits);
    add(rep, "sectors.interchange-J", j0_shift == j1,
        std::to_string(j0.size()) + "+" + std::to_string(j1.size()) + " vectors");
  }

  std::map<std::pair<bool, int>, SectorTable> tables;
  {
    bool ok = true;
    std::string err;
    for (bool plus : {true, false})
      for (int t : {edge.first, edge.second}) {
        try {
          tables.emplace(std::pair{plus, t}, build_sector_table(ot, plus, t, jmask));
        } catch (const VerifyError& e) {
          ok = false;
          err = e.what();
        }
      }
    add(rep, "sectors.collapse-bijective", ok, err);
    if (!ok) return rep;
  }

  {
    std::size_t want = 1ull << (s.n - 3);
    bool ok = sign_classes(ot, true).size() == want &&
              sign_classes(ot, false).size() == want;
    add(rep, "sectors.class-sizes", ok, std::to_string(want) + " per sign");
  }

  {
    int bad_nu = 0;
    bool anti = true;
    std::string err;
    for (auto& [key, st] : tables) {
      try {
        PartialOrder lt = leq_tau(st);
        for (int i = 0; i < st.size(); ++i)
          for (int j = 0; j < st.size(); ++j)
            if (lt.le(i, j) && st.entries[i].nu > st.entries[j].nu) ++bad_nu;
      } catch (const VerifyError& e) {
        anti = false;
        err = e.what();
      }
    }
    add(rep, "sectors.leq-antisymmetric", anti, err);
    add(rep, "sectors.nu-monotone", bad_nu == 0, std::to_string(bad_nu) + " violations");
  }

  {
    bool distinct = true;
    bool count_ok = true;
    int bad_iso = 0;
    std::string err;
    for (auto& [key, st] : tables) {
      try {
        auto coll = F_collection(st);
        if (coll.size() != (1ull << (s.n - 3))) count_ok = false;
      } catch (const VerifyError& e) {
        distinct = false;
        err = e.what();
      }
      for (const SectorEntry& e : st.entries) {
        const OmegaRecord& r = ot.records[e.record];
        if (st.collapse.project(r.span).dim() != r.span.dim()) ++bad_iso;
      }
    }
    add(rep, "sectors.F-distinct", distinct, err);
    add(rep, "sectors.F-count", count_ok);
    add(rep, "sectors.collapse-iso", bad_iso == 0, std::to_string(bad_iso) + " violations");
  }

  {
    // minus-side collections for the two endpoints are exchanged by the
    // edge involution
    Perm iota = iota_perm(s, edge);
    const SectorTable& ma = tables.at({false, tau});
    const SectorTable& mb = tables.at({false, other_tau});
    std::set<std::vector<std::uint64_t>> mapped, target;
    for (const SectorEntry& e : ma.entries) {
      std::vector<std::uint64_t> img;
      for (std::uint64_t m : e.span_image)
        img.push_back(induced_class_image(s, ma.collapse, iota, m));
      std::sort(img.begin(), img.end());
      mapped.insert(img);
    }
    for (const SectorEntry& e : mb.entries) target.insert(e.span_image);
    add(rep, "sectors.minus-iota", mapped == target);
  }

  {
    // the two window choices of J
    std::vector<BitVector> windows;
    const int N = s.vertices;
    int b = edge.second;
    BitVector low = BitVector::zero(N), high = BitVector::zero(N);
    for (int k = 1; k <= N - 3; ++k) low = low.with((b - 1 + k) % N + 1);
    for (int k = 2; k <= N - 2; ++k) high = high.with((b - 1 + k) % N + 1);
    windows.push_back(low);
    if (!(high == low)) windows.push_back(high);

    if (windows.size() < 2) {
      add(rep, "sectors.minus-J-independent", true, "single J choice at this N");
      add(rep, "sectors.plus-J-dependent", true, "single J choice at this N");
    } else {
      auto collection = [&](bool plus, int t, BitVector jm) {
        SectorTable st = build_sector_table(ot, plus, t, jm);
        std::set<std::vector<std::uint64_t>> c;
        for (const SectorEntry& e : st.entries) c.insert(e.span_image);
        return c;
      };
      bool minus_same = true, plus_differs = false;
      for (int t : {edge.first, edge.second}) {
        if (collection(false, t, windows[0]) != collection(false, t, windows[1]))
          minus_same = false;
        if (collection(true, t, windows[0]) != collection(true, t, windows[1]))
          plus_differs = true;
      }
      add(rep, "sectors.minus-J-independent", minus_same);
      // the dependence on J shows up from N=7 on (at N=5 both windows give
      // the same collections); assert it where it is demonstrable, report
      // the observation elsewhere
      add(rep, "sectors.plus-J-dependent", s.n == 7 ? plus_differs : true,
          plus_differs ? "collections differ across J" : "no dependence at this N");
    }
  }

  // payload: per-table entries and covers, plus the membership CSV
  {
    nlohmann::json jt = nlohmann::json::array();
    std::ostringstream csv;
    csv << "sign,tau,y,member_mask\n";
    for (auto& [key, st] : tables) {
      nlohmann::json one;
      one["sign"] = key.first ? "+" : "-";
      one["tau"] = key.second;
      one["entries"] = nlohmann::json::array();
      for (const SectorEntry& e : st.entries) {
        one["entries"].push_back({{"y", e.y},
                                  {"lift", ot.records[e.record].eps_prime.bits},
                                  {"nu", e.nu},
                                  {"fromJ", e.from_J_part}});
        for (std::uint64_t m : e.span_image)
          csv << (key.first ? "+" : "-") << "," << key.second << "," << e.y << "," << m
              << "\n";
      }
      PartialOrder lt = leq_tau(st);
      one["covers"] = nlohmann::json::array();
      for (auto [a, bb] : lt.hasse)
        one["covers"].push_back({st.entries[a].y, st.entries[bb].y});
      jt.push_back(one);
    }
    rep.payload["tables"] = jt;
    rep.payload["csv"] = csv.str();
    rep.payload["edge"] = {edge.first, edge.second};
    rep.payload["tau"] = tau;
    rep.payload["J"] = jmask.labels();
  }
  return rep;
}

std::string order_dot(const PhiTable& table) {
  PartialOrder po = close(phi_step(table));
  std::vector<std::string> labels;
  for (const PhiRecord& r : table.records) labels.push_back(std::to_string(r.eps.bits));
  return hasse_dot(po, labels);
}

std::string order_csv(const PhiTable& table) {
  PartialOrder po = close(phi_step(table));
  std::vector<std::string> labels;
  for (const PhiRecord& r : table.records) labels.push_back(std::to_string(r.eps.bits));
  return hasse_csv(po, labels);
}

}  // namespace isofam
