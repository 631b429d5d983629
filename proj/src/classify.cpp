#include "hopf32/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hopf32 {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

// Runs fn(0..n-1) on up to `threads` workers; fn writes only to its own slot.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::future<void>> workers;
  for (int t = 0; t < threads; ++t) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (int k = next++; k < n; k = next++) fn(k);
    }));
  }
  for (auto& w : workers) w.get();
}

std::string count_text(const std::optional<long>& c) { return c ? std::to_string(*c) : "infinite"; }

std::vector<std::string> split_relations(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find("; ", pos);
    if (next == std::string::npos) next = text.size();
    if (next > pos) out.push_back(text.substr(pos, next - pos));
    pos = next + 2;
  }
  return out;
}

const char* const kTheoremOrder[] = {"C2",  "C2xC2",     "C4",    "C2xC2xC2", "C2xC4", "C8",  "D4",
                                     "H",   "C2^4",      "C2xC2xC4", "C4xC4", "C2xC8", "C16"};
const char* const kNonabelian16[] = {"B1", "B2", "B3", "B4", "B5", "B6"};

json braiding_json(const BraidingMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.b) {
    json r = json::array();
    for (const auto& c : row) r.push_back(short_str(c));
    rows.push_back(r);
  }
  return rows;
}

json summands_json(const YDModule& v) {
  json out = json::array();
  for (const auto& s : v.summands) {
    json t;
    t["degree"] = v.G().name(s.label.g);
    t["dim"] = s.label.degree;
    json values = json::object();
    for (std::size_t k = 0; k < s.label.centralizer.size(); ++k) {
      values[v.G().name(s.label.centralizer[k])] = short_str(s.label.trace[k]);
    }
    t["trace"] = values;
    t["text"] = describe(v.G(), s.label);
    out.push_back(t);
  }
  return out;
}

std::string nichols_text(const NicholsReport& n) {
  if (n.finite()) return std::to_string(n.total);
  if (n.status == NicholsReport::Status::ExceedsBudget) return "> " + std::to_string(n.total > 0 ? n.total - 1 : 0);
  return n.status_name();
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\";
    out += c;
  }
  return out;
}

}  // namespace

int Config::threads() const {
  if (thread_count > 0) return thread_count;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Config load_config(const std::string& path) {
  Config c;
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    json j = json::parse(in);
    c.degree_cap = j.value("degree_cap", c.degree_cap);
    c.dim_budget = j.value("dim_budget", c.dim_budget);
    c.thread_count = j.value("thread_count", c.thread_count);
    c.format = j.value("format", c.format);
  }
  if (const char* v = std::getenv("HOPF32_DEGREE_CAP")) c.degree_cap = std::stoi(v);
  if (const char* v = std::getenv("HOPF32_DIM_BUDGET")) c.dim_budget = std::stol(v);
  if (const char* v = std::getenv("HOPF32_THREADS")) c.thread_count = std::stoi(v);
  if (const char* v = std::getenv("HOPF32_FORMAT")) c.format = v;
  if (c.format != "md" && c.format != "json") throw std::invalid_argument("unknown output format: " + c.format);
  return c;
}

std::optional<long> ClassificationRun::total() const {
  if (infinite) return std::nullopt;
  return finite_total;
}

const TableData* ClassificationRun::table(const std::string& key) const {
  for (const auto& t : tables) {
    if (t.key == key) return &t;
  }
  return nullptr;
}

std::optional<int> ClassificationRun::find_module(std::vector<int> multiset) const {
  if (multiset.empty()) return std::nullopt;
  std::sort(multiset.begin(), multiset.end());
  auto least = orbit_minimum(*catalogue(group), pool, multiset);
  for (std::size_t k = 0; k < modules.size(); ++k) {
    if (modules[k].multiset == least) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::string ClassificationRun::module_id(int module) const {
  auto it = labels.find(module);
  return it != labels.end() ? it->second : "m" + std::to_string(module);
}

std::vector<YDModule> irreducible_pool(GroupPtr g, long budget) {
  std::vector<YDModule> pool;
  auto keep = [&](YDModule v) {
    auto lb = nichols_lower_bound(v);
    if (lb && *lb <= budget) pool.push_back(std::move(v));
  };
  for (const auto& cls : g->conjugacy_classes()) {
    int h = cls.front();
    auto cent = g->centralizer(h);
    for (const auto& chi : linear_characters(*g, cent)) keep(build_induced(g, h, chi));
    if (static_cast<int>(cent.size()) == g->order() && !g->is_abelian() && budget >= 4) {
      std::vector<Representation> reps;
      try {
        reps = tabulated_irreps(*g);
      } catch (const std::invalid_argument&) {
        // no tabulated degree-2 representations; their lower bound exceeds every group budget
      }
      for (const auto& rho : reps) keep(build_induced(g, h, rho));
    }
  }
  return pool;
}

ClassificationRun run(const std::string& group, long total_dim, const Config& config) {
  GroupPtr g = catalogue(group);
  ClassificationRun r;
  r.group = group;
  r.order = g->order();
  if (total_dim <= 0 || total_dim % r.order != 0) {
    throw std::invalid_argument("dimension " + std::to_string(total_dim) + " is not a multiple of |G|");
  }
  r.budget = total_dim / r.order;
  r.pool = irreducible_pool(g, config.dim_budget);

  std::map<std::vector<int>, int> index;
  auto add_module = [&](const std::vector<int>& ms) {
    auto it = index.find(ms);
    if (it != index.end()) return it->second;
    ModuleEntry e;
    e.multiset = ms;
    std::vector<YDModule> parts;
    for (int k : ms) parts.push_back(r.pool[k]);
    e.module = direct_sum(parts);
    e.description = describe(e.module);
    int id = static_cast<int>(r.modules.size());
    r.modules.push_back(std::move(e));
    index.emplace(ms, id);
    return id;
  };
  auto compute = [&](int from, const NicholsLimits& limits) {
    parallel_for(static_cast<int>(r.modules.size()) - from, config.threads(), [&](int k) {
      auto& e = r.modules[from + k];
      e.braiding = diagonal_matrix(e.module);
      e.lower_bound = nichols_lower_bound(e.module);
      e.nichols = analyze(BraidedSpace::from_module(e.module), limits);
    });
  };

  // Irreducibles are listed with every finite Nichols algebra, not only those within the group budget.
  for (int k = 0; k < static_cast<int>(r.pool.size()); ++k) add_module({k});
  for (const auto& ms : orbit_representatives(*g, r.pool, 1, config.dim_budget)) add_module(ms);
  compute(0, config.limits());
  TableData irr{"irreducible", "Irreducible modules with finite Nichols algebra", {}};
  for (int k = 0; k < static_cast<int>(r.pool.size()); ++k) {
    if (r.modules[k].nichols.finite()) irr.rows.push_back(k);
  }
  r.tables.push_back(irr);
  if (r.budget == 1) {
    r.group_algebra = true;
    r.finite_total = 1;
    return r;
  }
  TableData orbits{"irreducible-orbits", "Irreducible modules with finite Nichols algebra up to automorphism", {}};
  for (const auto& ms : orbit_representatives(*g, r.pool, 1, config.dim_budget)) {
    int m = add_module(ms);
    if (r.modules[m].nichols.finite()) orbits.rows.push_back(m);
  }
  r.tables.push_back(orbits);

  std::size_t first_rank2 = r.modules.size();
  std::vector<std::pair<int, std::vector<int>>> candidates;  // rank, rows
  for (int rank = 2; (1L << rank) <= r.budget; ++rank) {
    std::vector<int> rows;
    for (const auto& ms : orbit_representatives(*g, r.pool, rank, r.budget)) rows.push_back(add_module(ms));
    candidates.emplace_back(rank, rows);
  }
  // Dimensions beyond the group budget are irrelevant here, so the search stops just past it.
  NicholsLimits limits = config.limits();
  limits.dim_budget = std::min(limits.dim_budget, r.budget + 1);
  compute(static_cast<int>(first_rank2), limits);

  auto realized = [&](int m) {
    auto d = r.modules[m].nichols.dimension();
    return d && *d <= r.budget;
  };
  for (const auto& [rank, rows] : candidates) {
    std::string rk = "rank" + std::to_string(rank);
    r.tables.push_back({rk + "-candidates", "Rank " + std::to_string(rank) + " modules up to automorphism", rows});
    TableData t{rk + "-realized", "Rank " + std::to_string(rank) + " modules with dim B(V) <= " + std::to_string(r.budget),
                {}};
    for (int m : rows) {
      if (realized(m)) t.rows.push_back(m);
    }
    r.tables.push_back(t);
  }

  std::vector<int> targets;
  auto consider = [&](int m) {
    auto d = r.modules[m].nichols.dimension();
    if (d && *d == r.budget && std::find(targets.begin(), targets.end(), m) == targets.end()) targets.push_back(m);
  };
  for (int m : orbits.rows) consider(m);
  for (const auto& [rank, rows] : candidates) {
    for (int m : rows) consider(m);
  }

  r.liftings.resize(targets.size());
  parallel_for(static_cast<int>(targets.size()), config.threads(), [&](int k) {
    auto& l = r.liftings[k];
    l.module = targets[k];
    try {
      l.family = classify_liftings(make_lifting_problem(r.modules[l.module].module));
    } catch (const std::exception& ex) {
      l.error = ex.what();
    }
  });
  for (const auto& l : r.liftings) {
    if (!l.family) {
      r.errors.push_back(r.modules[l.module].description + ": " + l.error);
    } else if (l.family->infinite()) {
      r.infinite = true;
    } else {
      r.finite_total += *l.family->count;
    }
  }
  return r;
}

json nichols_to_json(const NicholsReport& n) {
  json j;
  j["status"] = n.status_name();
  j["hilbert"] = n.hilbert;
  if (n.finite()) {
    j["total"] = n.total;
  } else if (n.status == NicholsReport::Status::ExceedsBudget) {
    j["total"] = "exceeds";
  } else {
    j["total"] = n.status_name();
  }
  json nil = json::object();
  for (const auto& [k, v] : n.nilpotency) nil[k] = v ? json(*v) : json(nullptr);
  j["nilpotency"] = nil;
  j["qls"] = n.qls ? json(*n.qls) : json(nullptr);
  j["cartan"] = n.cartan ? json(*n.cartan) : json(nullptr);
  return j;
}

json group_to_json(const FinGroup& g) {
  auto names = [&](const std::vector<int>& elems) {
    json out = json::array();
    for (int e : elems) out.push_back(g.name(e));
    return out;
  };
  json j;
  j["id"] = g.id();
  j["order"] = g.order();
  j["names"] = g.names();
  j["generators"] = g.generators();
  j["center"] = names(g.center());
  j["commutator_subgroup"] = names(g.commutator_subgroup());
  return j;
}

json module_to_json(const YDModule& v) {
  json j;
  j["group"] = v.G().id();
  j["dim"] = v.dim;
  j["summands"] = summands_json(v);
  auto b = diagonal_matrix(v);
  j["braiding"] = b ? braiding_json(*b) : json(nullptr);
  return j;
}

json family_to_json(const std::string& module_id, const LiftingFamily& f) {
  json j;
  j["module"] = module_id;
  j["parameters"] = f.parameters;
  j["forced"] = f.forced;
  j["free_dimension"] = f.free_dimension;
  j["count"] = f.count ? json(*f.count) : json("infinite");
  if (!f.symmetry.empty()) j["symmetry"] = f.symmetry;
  if (!f.quotient.empty()) j["quotient"] = f.quotient;
  json reps = json::array();
  for (std::size_t k = 0; k < f.representatives.size(); ++k) {
    json rep;
    json values = json::array();
    for (const auto& c : f.representatives[k]) values.push_back(c.str());
    rep["parameters"] = values;
    rep["relations"] = k < f.representative_relations.size() ? split_relations(f.representative_relations[k])
                                                              : std::vector<std::string>{};
    reps.push_back(rep);
  }
  j["representatives"] = reps;
  return j;
}

json run_to_json(const ClassificationRun& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["group"] = r.group;
  j["order"] = r.order;
  j["budget"] = r.budget;
  json tables = json::array();
  for (const auto& t : r.tables) {
    json tj;
    tj["key"] = t.key;
    tj["title"] = t.title;
    json rows = json::array();
    for (int m : t.rows) {
      const auto& e = r.modules[m];
      json row;
      row["id"] = r.module_id(m);
      row["module"] = e.description;
      row["summands"] = summands_json(e.module);
      row["braiding"] = e.braiding ? braiding_json(*e.braiding) : json(nullptr);
      row["lower_bound"] = e.lower_bound ? json(*e.lower_bound) : json("infinite");
      if (!r.group_algebra) row["nichols"] = nichols_to_json(e.nichols);
      rows.push_back(row);
    }
    tj["rows"] = rows;
    tables.push_back(tj);
  }
  j["tables"] = tables;
  json lifts = json::array();
  for (const auto& l : r.liftings) {
    if (l.family) {
      json f = family_to_json(r.module_id(l.module), *l.family);
      f["description"] = r.modules[l.module].description;
      lifts.push_back(f);
    } else {
      lifts.push_back({{"module", r.module_id(l.module)}, {"error", l.error}});
    }
  }
  j["liftings"] = lifts;
  j["group_algebra"] = r.group_algebra;
  j["total"] = r.total() ? json(*r.total()) : json("infinite");
  if (r.infinite) {
    json q = json::array();
    for (const auto& l : r.liftings) {
      if (l.family && l.family->infinite()) q.push_back({{"module", r.module_id(l.module)}, {"quotient", l.family->quotient}});
    }
    j["infinite_families"] = q;
  }
  j["errors"] = r.errors;
  return j;
}

std::string emit_tables(const ClassificationRun& r, const std::string& format) {
  if (format == "json") return run_to_json(r).dump(2) + "\n";
  if (format != "md") throw std::invalid_argument("unknown output format: " + format);
  std::ostringstream out;
  out << "# " << r.group << "\n\n";
  out << "|G| = " << r.order << ", dim B(V) <= " << r.budget << "\n\n";
  for (const auto& t : r.tables) {
    out << "## " << t.title << "\n\n";
    out << "| id | module | braiding | lower bound | dim B(V) |\n";
    out << "|---|---|---|---|---|\n";
    for (int m : t.rows) {
      const auto& e = r.modules[m];
      out << "| " << r.module_id(m) << " | " << md_escape(e.description) << " | "
          << (e.braiding ? render_braiding_matrix(*e.braiding) : std::string("-")) << " | "
          << (e.lower_bound ? std::to_string(*e.lower_bound) : std::string("infinite")) << " | "
          << (r.group_algebra ? std::string("-") : nichols_text(e.nichols)) << " |\n";
    }
    out << "\n";
  }
  if (!r.group_algebra) {
    out << "## Liftings\n\n";
    out << "| id | module | parameters | forced | count |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& l : r.liftings) {
      out << "| " << r.module_id(l.module) << " | " << md_escape(r.modules[l.module].description) << " | ";
      if (!l.family) {
        out << "- | - | error: " << md_escape(l.error) << " |\n";
        continue;
      }
      const auto& f = *l.family;
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "<br>") + x;
        return s.empty() ? std::string("-") : s;
      };
      out << md_escape(join(f.parameters)) << " | " << md_escape(join(f.forced)) << " | " << count_text(f.count)
          << " |\n";
    }
    out << "\n";
    for (const auto& l : r.liftings) {
      if (!l.family || l.family->representative_relations.empty()) continue;
      out << "### " << r.module_id(l.module) << "\n\n";
      for (const auto& rel : l.family->representative_relations) out << "- " << (rel.empty() ? "bosonization" : rel) << "\n";
      if (l.family->infinite()) out << "- parametrized by " << l.family->quotient << "\n";
      out << "\n";
    }
  }
  out << "Total: ";
  if (r.group_algebra) {
    out << "1 (group algebra)\n";
  } else if (r.infinite) {
    out << "infinite";
    for (const auto& l : r.liftings) {
      if (l.family && l.family->infinite()) out << "; " << r.module_id(l.module) << ": " << l.family->quotient;
    }
    out << "\n";
  } else {
    out << r.finite_total << "\n";
  }
  for (const auto& e : r.errors) out << "Error: " << e << "\n";
  return out.str();
}

YDModule module_from_spec(GroupPtr g, const json& spec) {
  const json& parts = spec.is_object() && spec.contains("summands") ? spec.at("summands") : spec;
  if (!parts.is_array()) throw std::invalid_argument("module spec must be a list of summands");
  std::vector<YDModule> out;
  for (const auto& s : parts) {
    int h = g->element(s.at("h").get<std::string>());
    if (s.contains("chi")) {
      auto chi = abelian_character(*g, s.at("chi").get<std::vector<int>>());
      out.push_back(build_induced(g, h, chi));
    } else if (s.contains("rep")) {
      auto reps = tabulated_irreps(*g);
      const std::string name = s.at("rep").get<std::string>();
      if (name.rfind("rho", 0) != 0) throw std::invalid_argument("unknown representation " + name);
      std::size_t k = std::stoul(name.substr(3));
      if (k >= reps.size()) throw std::invalid_argument("unknown representation " + name);
      out.push_back(build_induced(g, h, reps[k]));
    } else if (s.contains("values")) {
      std::optional<Character> found;
      for (const auto& chi : linear_characters(*g, g->centralizer(h))) {
        bool ok = true;
        for (const auto& [name, value] : s.at("values").items()) {
          int e = g->element(name);
          if (!chi.defined(e) || chi.value(e) != parse_scalar(value.get<std::string>())) ok = false;
        }
        if (ok) {
          found = chi;
          break;
        }
      }
      if (!found) throw std::invalid_argument("no character of the centralizer with the given values");
      out.push_back(build_induced(g, h, *found));
    } else {
      throw std::invalid_argument("summand needs chi, values or rep");
    }
  }
  return direct_sum(out);
}

std::optional<int> locate_module(const ClassificationRun& r, const YDModule& v) {
  std::vector<int> ms;
  for (const auto& s : v.summands) {
    auto key = canonical_key(v.G(), s.label);
    std::optional<int> hit;
    for (std::size_t k = 0; k < r.pool.size(); ++k) {
      if (canonical_key(v.G(), r.pool[k].summands[0].label) == key) {
        hit = static_cast<int>(k);
        break;
      }
    }
    if (!hit) return std::nullopt;
    ms.push_back(*hit);
  }
  return r.find_module(ms);
}

void attach_labels(ClassificationRun& r, const json& golden) {
  if (!golden.contains("groups")) return;
  for (const auto& gj : golden.at("groups")) {
    if (gj.at("id").get<std::string>() != r.group || !gj.contains("liftings")) continue;
    GroupPtr g = catalogue(r.group);
    for (const auto& lj : gj.at("liftings")) {
      if (auto m = locate_module(r, module_from_spec(g, lj.at("module")))) r.labels[*m] = lj.at("label").get<std::string>();
    }
  }
}

std::string default_golden_path() {
  if (const char* d = std::getenv("HOPF32_DATA_DIR")) return std::string(d) + "/golden.json";
  return std::string(HOPF32_DATA_DIR) + "/golden.json";
}

json load_golden(const std::string& path) {
  std::string p = path.empty() ? default_golden_path() : path;
  std::ifstream in(p);
  if (!in) throw std::runtime_error("golden file not found: " + p);
  return json::parse(in);
}

TheoremTotals theorem_totals(const std::vector<ClassificationRun>& runs) {
  auto find = [&](const std::string& id) -> const ClassificationRun& {
    for (const auto& r : runs) {
      if (r.group == id) return r;
    }
    throw std::invalid_argument("missing run for " + id);
  };
  TheoremTotals t;
  for (const char* id : kTheoremOrder) {
    t.labels.push_back(id);
    t.totals.push_back(find(id).total());
  }
  std::optional<long> sum = 0;
  for (const char* id : kNonabelian16) {
    auto c = find(id).total();
    if (!c) {
      sum.reset();
      break;
    }
    *sum += *c;
  }
  t.labels.push_back("B1-B6");
  t.totals.push_back(sum);
  return t;
}

namespace {

std::vector<ClassificationRun> run_groups(const std::vector<std::string>& ids, const Config& config) {
  std::vector<ClassificationRun> out(ids.size());
  Config inner = config;
  int outer = std::min<int>(config.threads(), static_cast<int>(ids.size()));
  inner.thread_count = std::max(1, config.threads() / std::max(1, outer));
  parallel_for(static_cast<int>(ids.size()), outer, [&](int k) { out[k] = run(ids[k], 32, inner); });
  return out;
}

std::string golden_count_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return std::to_string(v.get<long>());
}

bool count_matches(const json& expected, const std::optional<long>& got) {
  if (expected.is_string()) return expected.get<std::string>() == "infinite" && !got;
  return got && *got == expected.get<long>();
}

}  // namespace

std::vector<ClassificationRun> run_all(const Config& config) { return run_groups(catalogue_ids(), config); }

GoldenReport check_golden(const json& golden, std::vector<ClassificationRun> runs, const Config& config) {
  GoldenReport rep;
  auto mismatch = [&](const std::string& what, const std::string& expected, const std::string& got) {
    rep.pass = false;
    rep.mismatches.push_back(what + ": golden " + expected + ", engine " + got);
  };

  if (golden.contains("nichols")) {
    for (const auto& e : golden.at("nichols")) {
      const std::string name = e.at("name").get<std::string>();
      auto n = analyze(BraidedSpace::from_matrix(parse_braiding_matrix(e.at("matrix").get<std::string>())),
                       config.limits());
      std::string got = n.finite() ? std::to_string(n.total)
                                   : (n.status == NicholsReport::Status::ExceedsBudget ? "exceeds" : n.status_name());
      if (e.contains("annotation")) {
        std::string listed;
        for (const auto& v : e.value("listed_totals", json::array())) listed += (listed.empty() ? "" : ", ") + v.dump();
        rep.notes.push_back("nichols " + name + ": " + e.at("annotation").get<std::string>() + " (engine " + got +
                            (listed.empty() ? "" : "; listed " + listed) + ")");
      } else {
        std::string want = golden_count_text(e.at("total"));
        if (want != got) mismatch("nichols " + name + " total", want, got);
      }
      if (e.contains("hilbert") && e.at("hilbert").get<std::vector<long>>() != n.hilbert) {
        mismatch("nichols " + name + " hilbert", e.at("hilbert").dump(), json(n.hilbert).dump());
      }
      if (e.contains("nilpotency")) {
        for (const auto& [k, v] : e.at("nilpotency").items()) {
          auto it = n.nilpotency.find(k);
          std::string g = it == n.nilpotency.end() || !it->second ? "none" : std::to_string(*it->second);
          if (g != v.dump()) mismatch("nichols " + name + " |" + k + "|", v.dump(), g);
        }
      }
    }
  }

  std::vector<std::string> needed;
  auto have = [&](const std::string& id) {
    return std::any_of(runs.begin(), runs.end(), [&](const ClassificationRun& r) { return r.group == id; });
  };
  if (golden.contains("groups")) {
    for (const auto& gj : golden.at("groups")) {
      auto id = gj.at("id").get<std::string>();
      if (!have(id) && std::find(needed.begin(), needed.end(), id) == needed.end()) needed.push_back(id);
    }
  }
  if (golden.contains("theorem")) {
    for (const char* id : kTheoremOrder) {
      if (!have(id) && std::find(needed.begin(), needed.end(), id) == needed.end()) needed.push_back(id);
    }
    for (const char* id : kNonabelian16) {
      if (!have(id) && std::find(needed.begin(), needed.end(), id) == needed.end()) needed.push_back(id);
    }
  }
  for (auto& r : run_groups(needed, config)) runs.push_back(std::move(r));
  auto find = [&](const std::string& id) -> ClassificationRun& {
    for (auto& r : runs) {
      if (r.group == id) return r;
    }
    throw std::logic_error("missing run " + id);
  };

  if (golden.contains("groups")) {
    for (const auto& gj : golden.at("groups")) {
      auto id = gj.at("id").get<std::string>();
      auto& r = find(id);
      GroupPtr g = catalogue(id);
      for (const auto& e : r.errors) mismatch(id + " error", "none", e);
      if (gj.contains("tables")) {
        for (const auto& [key, want] : gj.at("tables").items()) {
          const TableData* t = r.table(key);
          long got = t ? static_cast<long>(t->rows.size()) : -1;
          if (got != want.get<long>()) {
            mismatch(id + " table " + key + " rows", want.dump(), t ? std::to_string(got) : "missing");
          }
        }
      }
      if (gj.contains("liftings")) {
        for (const auto& lj : gj.at("liftings")) {
          auto label = lj.at("label").get<std::string>();
          if (lj.contains("annotation")) {
            rep.notes.push_back(id + " " + label + ": " + lj.at("annotation").get<std::string>());
          }
          auto m = locate_module(r, module_from_spec(g, lj.at("module")));
          const LiftingEntry* entry = nullptr;
          if (m) {
            for (const auto& l : r.liftings) {
              if (l.module == *m) entry = &l;
            }
          }
          std::string want = golden_count_text(lj.at("count"));
          if (!entry) {
            mismatch(id + " " + label + " liftings", want, "module not lifted");
          } else if (!entry->family) {
            mismatch(id + " " + label + " liftings", want, "error: " + entry->error);
          } else if (!count_matches(lj.at("count"), entry->family->count)) {
            mismatch(id + " " + label + " liftings", want, count_text(entry->family->count));
          }
        }
      }
      if (gj.contains("total") && !count_matches(gj.at("total"), r.total())) {
        mismatch(id + " total", golden_count_text(gj.at("total")), count_text(r.total()));
      }
    }
  }

  if (golden.contains("theorem")) {
    auto t = theorem_totals(runs);
    const auto& labels = golden.at("theorem").at("labels");
    const auto& totals = golden.at("theorem").at("totals");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      auto label = labels[k].get<std::string>();
      auto pos = std::find(t.labels.begin(), t.labels.end(), label);
      if (pos == t.labels.end()) {
        mismatch("theorem " + label, golden_count_text(totals[k]), "missing");
        continue;
      }
      auto got = t.totals[pos - t.labels.begin()];
      if (!count_matches(totals[k], got)) mismatch("theorem " + label, golden_count_text(totals[k]), count_text(got));
    }
  }
  return rep;
}

}  // namespace hopf32
