#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "charlab/catalog.hpp"
#include "charlab/chartab.hpp"
#include "charlab/group.hpp"

namespace charlab {

/// The checkable statement kinds.
enum class Kind {
  GALLAGHER_1_2,
  THM_1_3,
  COR_1_4,
  LEM_1_1,
  OW_2_1,
  COR_2_2,
  THM_2_4,
  THM_3_1,
  COUNTEREXAMPLE_1,
};

const std::vector<Kind>& all_kinds();
std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);

/// A character referenced by (subgroup key, canonical row index) plus
/// asserted fingerprints that are re-verified whenever the instance is used.
struct CharRef {
  std::string group;
  int row = -1;
  long degree = 0;
  long det_order = 0;
};

/// One hypothesis-satisfying configuration for a theorem check.  All
/// hypotheses of the named statement are re-verified at check time.
struct McKayInstance {
  Kind kind = Kind::THM_1_3;
  std::string ambient_expr;
  GroupPtr ambient;
  long p = 0;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, CharRef> characters;
  int ow_u_count = 0;  // OW_2_1: subgroups "U1".."Uk"

  const Subgroup& sub(const std::string& key) const;
  /// Resolves a character reference, re-verifying its fingerprints.
  ClassFunction character(const std::string& key) const;
  std::string label() const;
};

nlohmann::json instance_to_json(const McKayInstance& inst);
McKayInstance instance_from_json(const nlohmann::json& doc);

struct Limits {
  int max_order = 500;       // ambient group order bound
  int max_instances = 200;   // per kind
  int per_ambient = 6;       // per (kind, ambient group)
};

/// Deterministic hypothesis mining over a catalog.
std::vector<McKayInstance> mine_instances(const std::vector<CatalogEntry>& catalog,
                                          Kind kind, const Limits& limits);

struct InstanceResult {
  std::string kind;
  std::string label;
  long lhs = -1;
  long rhs = -1;
  std::string verdict;  // "pass" | "fail" | "error"
  std::string error;
  long millis = 0;
  nlohmann::json group_names = nlohmann::json::object();
  nlohmann::json hypotheses = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  bool pass() const { return verdict == "pass"; }
};

/// Runs the check for one instance.  Never throws: hypothesis failures and
/// internal errors are reported in the result.  By default a falsified
/// equality is labeled as an engine bug; `downgrade_failures` records it as
/// a plain mismatch.
InstanceResult check_instance(const McKayInstance& inst,
                              bool downgrade_failures = false);

struct SuiteOptions {
  std::vector<Kind> kinds = all_kinds();
  Limits limits;
  int jobs = 1;
  std::uint64_t seed = 20240601ULL;
  bool timing = false;  // real timestamp and per-instance millis
  bool downgrade_failures = false;
  std::string suite_name = "default";
};

struct SuiteReport {
  nlohmann::json document;
  bool all_pass = false;
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errors = 0;
};

/// Mines every requested kind over the catalog, checks all instances
/// (concurrently when jobs > 1) and assembles the deterministic report.
SuiteReport run_suite(const std::vector<CatalogEntry>& catalog,
                      const SuiteOptions& options);

/// Checks a pre-mined instance list (used for suite files with explicit
/// instances).
SuiteReport run_suite_on_instances(const std::vector<McKayInstance>& instances,
                                   const SuiteOptions& options);

} // namespace charlab
