#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyforge/constructions.hpp"

namespace polyforge::audit {

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

// Pass/fail record for one claim at one parameter point. Failures carry both
// numbers verbatim so the point can be re-run in isolation.
struct AuditReport {
  std::string claim_id;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json actual;
  Status status = Status::Pass;
  std::int64_t runtime_ms = 0;
  std::string note;

  nlohmann::json to_json() const;
};

struct SweepConfig {
  int dmax = 8;                               // hard range [3, 12]
  std::vector<std::string> checks = {"all"};  // claim-id prefixes or check names
  std::uint64_t seed = 20250810;
  bool iso_cross_check = false;

  bool selected(const std::string& claim_id) const;
};

// Each check returns its reports; the runner aggregates them.
std::vector<AuditReport> check_family_formulas(const SweepConfig& cfg);
std::vector<AuditReport> check_wedge_identity(const SweepConfig& cfg);
std::vector<AuditReport> check_refined_equalities(const SweepConfig& cfg);
std::vector<AuditReport> check_theorem_dplus2(const SweepConfig& cfg);
std::vector<AuditReport> check_structure_remarks(const SweepConfig& cfg);
std::vector<AuditReport> check_prop_faces_outside(const SweepConfig& cfg);
std::vector<AuditReport> check_small_catalog(const SweepConfig& cfg);
std::vector<AuditReport> check_lattice_sanity(const SweepConfig& cfg);
std::vector<AuditReport> check_facet_choice_iso(const SweepConfig& cfg);
// Claims that quantify over all combinatorial types; always emitted as
// skipped with an explanatory note.
std::vector<AuditReport> check_uniqueness_markers(const SweepConfig& cfg);

struct RunResult {
  std::vector<AuditReport> reports;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skipped = 0;

  int exit_code() const { return fail == 0 ? 0 : 1; }
  nlohmann::json to_json(const SweepConfig& cfg) const;
};

// Runs the selected checks. Throws Error(UsageError) when cfg is out of range.
RunResult run(const SweepConfig& cfg);

}  // namespace polyforge::audit
