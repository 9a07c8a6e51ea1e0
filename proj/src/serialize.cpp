#include "isofam/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace isofam {

namespace {

constexpr const char* kSchemaTag = "isofam-phi-v1";

nlohmann::json family_json(const Family& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Interval& iv : f.members) arr.push_back(iv.members.labels());
  return arr;
}

}  // namespace

std::string phi_jsonl(const PhiTable& table) {
  std::ostringstream os;
  // plain-cycle tables carry spans in the unquotiented ambient; flag them
  const bool lifted = table.setup.kase == GraphCase::Cycle;
  for (const PhiRecord& r : table.records) {
    nlohmann::json j;
    j["B"] = family_json(r.family);
    j["eps"] = r.eps.bits;
    j["dim"] = r.span.dim();
    if (lifted) j["lifted"] = true;
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string omega_jsonl(const OmegaTable& table) {
  std::ostringstream os;
  for (const OmegaRecord& r : table.records) {
    nlohmann::json j;
    j["B"] = family_json(r.family);
    j["lifted"] = family_json(r.lifted);
    j["epsPrime"] = r.eps_prime.bits;
    j["n"] = r.n;
    j["sign"] = r.plus ? "+" : "-";
    j["sector"] = r.sector ? nlohmann::json(*r.sector) : nlohmann::json(nullptr);
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string cache_file_name(const Setup& setup) {
  return std::string("phi-") + case_name(setup.kase) + "-" + std::to_string(setup.n) +
         ".jsonl";
}

bool save_phi_cache(const PhiTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) return false;
  nlohmann::json head;
  head["schema"] = kSchemaTag;
  head["case"] = case_name(table.setup.kase);
  head["n"] = table.setup.n;
  head["count"] = table.size();
  out << head.dump() << "\n" << phi_jsonl(table);
  return static_cast<bool>(out);
}

std::optional<PhiTable> load_phi_cache(const Setup& setup, const std::string& path,
                                       std::string* warning) {
  std::ifstream in(path);
  if (!in) return std::nullopt;  // no cache yet: silent recompute
  auto fail = [&](const std::string& why) -> std::optional<PhiTable> {
    if (warning) *warning = "cache " + path + " ignored: " + why;
    return std::nullopt;
  };
  std::string line;
  if (!std::getline(in, line)) return fail("empty file");
  try {
    nlohmann::json head = nlohmann::json::parse(line);
    if (head.value("schema", "") != kSchemaTag) return fail("schema tag mismatch");
    if (head.value("case", "") != case_name(setup.kase) || head.value("n", -1) != setup.n)
      return fail("stamped for a different setup");
    PhiTable table{setup, {}};
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      std::vector<Interval> members;
      for (const auto& arr : j.at("B")) {
        BitVector m = BitVector::zero(setup.vertices);
        for (int v : arr) m = m.with(v);
        members.push_back(setup.interval(m));
      }
      Family fam = Family::of(setup, std::move(members));
      std::vector<BitVector> vecs;
      for (const Interval& iv : fam.members) vecs.push_back(setup.vector_of(iv));
      SubspaceHandle sub = span(vecs, setup.ambient_width);
      BitVector stored(j.at("eps").get<std::uint64_t>(), setup.ambient_width);
      if (!(eps(setup, fam) == stored)) return fail("eps mismatch in a record");
      if (sub.dim() != j.at("dim").get<int>()) return fail("dim mismatch in a record");
      table.records.push_back(PhiRecord{std::move(fam), stored, std::move(sub)});
    }
    if (table.size() != head.value("count", -1)) return fail("record count mismatch");
    for (int i = 1; i < table.size(); ++i)
      if (table.records[i - 1].eps.bits > table.records[i].eps.bits)
        return fail("records out of order");
    return table;
  } catch (const std::exception& e) {
    return fail(std::string("parse error: ") + e.what());
  }
}

}  // namespace isofam
