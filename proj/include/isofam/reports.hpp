#pragma once

#include <optional>

#include <json.hpp>

#include "isofam/duality.hpp"
#include "isofam/sectors.hpp"
#include "isofam/serialize.hpp"

namespace isofam {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<CheckResult> checks;
  nlohmann::json payload = nlohmann::json::object();

  bool pass() const;
  const CheckResult* find(const std::string& id) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Registry of every check identifier with the command that reaches it;
// audited by a coverage test.
struct CheckSpec {
  const char* id;
  const char* command;
};
const std::vector<CheckSpec>& required_checks();

// Every law of the enumeration/perfectness/order circle for one setup.
Report run_verify(const Setup& setup, const PhiTable& table);

// Coefficient-matrix checks (quotient case). compare_paper additionally
// tabulates the published N=7 column.
Report run_fourier(const Setup& setup, const PhiTable& table, bool compare_paper);

// Edge-marked family laws (quotient case).
Report run_omega(const Setup& setup, const PhiTable& table, std::pair<int, int> edge);

// Sector laws (quotient case). tau = 0 and J = nullopt pick the defaults.
Report run_sectors(const Setup& setup, const PhiTable& table, std::pair<int, int> edge,
                   int tau, std::optional<BitVector> J);

// Hasse exports of the chain order on the table.
std::string order_dot(const PhiTable& table);
std::string order_csv(const PhiTable& table);

}  // namespace isofam
