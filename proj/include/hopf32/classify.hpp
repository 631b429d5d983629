// Full lifting procedure per group, table emission and golden-data comparison.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hopf32/lifting.hpp"
#include "hopf32/nichols.hpp"
#include "hopf32/ydmod.hpp"

namespace hopf32 {

struct Config {
  int degree_cap = 20;
  long dim_budget = 33;
  int thread_count = 0;  // 0: hardware concurrency
  std::string format = "md";

  NicholsLimits limits() const { return {degree_cap, dim_budget}; }
  int threads() const;
};

/// Reads a JSON config file (missing file: defaults), then applies HOPF32_DEGREE_CAP,
/// HOPF32_DIM_BUDGET, HOPF32_THREADS and HOPF32_FORMAT.
Config load_config(const std::string& path = "");

struct ModuleEntry {
  std::vector<int> multiset;  // pool indices
  YDModule module;
  std::string description;
  std::optional<BraidingMatrix> braiding;
  std::optional<long> lower_bound;
  NicholsReport nichols;
};

struct TableData {
  std::string key;    // "irreducible", "irreducible-orbits", "rank2-candidates", "rank3-realized", ...
  std::string title;
  std::vector<int> rows;  // indices into ClassificationRun::modules
};

struct LiftingEntry {
  int module = 0;
  std::optional<LiftingFamily> family;
  std::string error;
};

struct ClassificationRun {
  std::string group;
  int order = 0;
  long budget = 0;
  std::vector<YDModule> pool;
  std::vector<ModuleEntry> modules;
  std::vector<TableData> tables;
  std::vector<LiftingEntry> liftings;
  bool group_algebra = false;  // rank 0 is the only case
  bool infinite = false;
  long finite_total = 0;
  std::vector<std::string> errors;
  std::map<int, std::string> labels;  // module index -> table label, from the golden file

  /// Identifier used in emitted tables: the label, or "m<index>".
  std::string module_id(int module) const;
  /// Number of liftings, empty when infinite.
  std::optional<long> total() const;
  const TableData* table(const std::string& key) const;
  /// Module whose multiset is the orbit minimum of the given one, if listed.
  std::optional<int> find_module(std::vector<int> multiset) const;
};

/// Irreducible Yetter-Drinfeld modules over the group with finite lower bound at most the budget.
std::vector<YDModule> irreducible_pool(GroupPtr g, long budget);

/// Enumeration, Nichols dimensions, orbits and liftings for Hopf algebras of dimension total_dim.
ClassificationRun run(const std::string& group, long total_dim = 32, const Config& config = {});

/// Markdown or JSON rendering of every table of the run.
std::string emit_tables(const ClassificationRun& r, const std::string& format);
nlohmann::json run_to_json(const ClassificationRun& r);
nlohmann::json family_to_json(const std::string& module_id, const LiftingFamily& f);
nlohmann::json nichols_to_json(const NicholsReport& r);
/// Order, element names, generator indices, center and commutator subgroup.
nlohmann::json group_to_json(const FinGroup& g);
/// Group id, summands with degree and character values, braiding matrix when diagonal.
nlohmann::json module_to_json(const YDModule& v);

/// Builds a module from its golden description (see data/golden.json).
YDModule module_from_spec(GroupPtr g, const nlohmann::json& spec);

struct GoldenReport {
  bool pass = true;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;  // annotated entries
};

/// Index of the listed module isomorphic to the given one, if any.
std::optional<int> locate_module(const ClassificationRun& r, const YDModule& v);
/// Copies golden lifting labels onto the matching modules of the run.
void attach_labels(ClassificationRun& r, const nlohmann::json& golden);

/// Default golden file shipped with the library.
std::string default_golden_path();
nlohmann::json load_golden(const std::string& path = "");

/// Compares the Nichols entries, table row counts, lifting counts and totals against the golden data.
/// Runs for groups missing from `runs` are computed.
GoldenReport check_golden(const nlohmann::json& golden, std::vector<ClassificationRun> runs = {},
                          const Config& config = {});

/// Per-group totals in catalogue order of the classification statement; empty entries are infinite.
struct TheoremTotals {
  std::vector<std::string> labels;
  std::vector<std::optional<long>> totals;
};
TheoremTotals theorem_totals(const std::vector<ClassificationRun>& runs);

/// Runs every catalogue group, in parallel over groups.
std::vector<ClassificationRun> run_all(const Config& config = {});

}  // namespace hopf32
