// hopf32: classification runs, Nichols algebra queries, liftings and golden-data checks.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hopf32/classify.hpp"

using namespace hopf32;
using nlohmann::json;

namespace {

void print_nichols_md(const BraidingMatrix& m, const NicholsReport& n) {
  std::cout << "matrix: " << render_braiding_matrix(m) << "\n";
  std::cout << "status: " << n.status_name() << "\n";
  if (n.finite()) std::cout << "dim B(V): " << n.total << "\n";
  std::cout << "hilbert:";
  for (long d : n.hilbert) std::cout << " " << d;
  std::cout << "\n";
  for (const auto& [k, v] : n.nilpotency) std::cout << "|" << k << "|: " << (v ? std::to_string(*v) : "none") << "\n";
  if (n.qls) std::cout << "quantum linear space: " << *n.qls << "\n";
  if (n.cartan) {
    std::cout << "cartan:";
    for (const auto& row : *n.cartan) {
      std::cout << " [";
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

void print_family_md(const ClassificationRun& r, const LiftingEntry& l) {
  std::cout << r.module_id(l.module) << ": " << r.modules[l.module].description << "\n";
  if (!l.family) {
    std::cout << "error: " << l.error << "\n";
    return;
  }
  const auto& f = *l.family;
  for (const auto& p : f.parameters) std::cout << "  " << p << "\n";
  for (const auto& c : f.forced) std::cout << "  forced: " << c << "\n";
  if (!f.symmetry.empty()) std::cout << "  symmetry: " << f.symmetry << "\n";
  std::cout << "count: " << (f.count ? std::to_string(*f.count) : "infinite") << "\n";
  if (f.infinite()) std::cout << "parametrized by " << f.quotient << "\n";
  for (const auto& rel : f.representative_relations) std::cout << "  - " << (rel.empty() ? "bosonization" : rel) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointed Hopf algebras of dimension 32: modules, Nichols algebras and liftings"};
  app.require_subcommand(1);
  std::string config_path;
  std::string format;
  app.add_option("--config", config_path, "JSON config file (degree_cap, dim_budget, thread_count, format)");

  auto* classify = app.add_subcommand("classify", "Run the lifting procedure for one group and print its tables");
  std::string group;
  long dimension = 32;
  classify->add_option("--group", group, "Catalogue group id")->required();
  classify->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
  classify->add_option("--dim", dimension, "Dimension of the Hopf algebras");

  auto* nichols = app.add_subcommand("nichols", "Nichols algebra of a diagonal braiding matrix");
  std::string matrix;
  nichols->add_option("--matrix", matrix, "Rows split by ';', entries like -1, i, x (= z^2), z")->required();
  nichols->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

  auto* liftings = app.add_subcommand("liftings", "Liftings of one module");
  std::string module;
  liftings->add_option("--group", group, "Catalogue group id")->required();
  liftings->add_option("--module", module, "Golden label (e.g. W3^1) or engine id (e.g. m12)")->required();
  liftings->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

  auto* check = app.add_subcommand("check", "Compare a full run with the golden data");
  std::string golden_path;
  check->add_option("--golden", golden_path, "Golden data file");

  CLI11_PARSE(app, argc, argv);

  try {
    Config config = load_config(config_path);
    if (!format.empty()) config.format = format;

    if (*classify) {
      auto r = run(group, dimension, config);
      try {
        attach_labels(r, load_golden());
      } catch (const std::runtime_error&) {
        // labels are optional
      }
      std::cout << emit_tables(r, config.format);
      return r.errors.empty() ? 0 : 2;
    }

    if (*nichols) {
      auto m = parse_braiding_matrix(matrix);
      auto n = analyze(BraidedSpace::from_matrix(m), config.limits());
      if (config.format == "json") {
        std::cout << nichols_to_json(n).dump(2) << "\n";
      } else {
        print_nichols_md(m, n);
      }
      return 0;
    }

    if (*liftings) {
      auto r = run(group, 32, config);
      try {
        attach_labels(r, load_golden());
      } catch (const std::runtime_error&) {
      }
      for (const auto& l : r.liftings) {
        if (r.module_id(l.module) != module && "m" + std::to_string(l.module) != module) continue;
        if (config.format == "json") {
          json j = l.family ? family_to_json(r.module_id(l.module), *l.family)
                            : json{{"module", r.module_id(l.module)}, {"error", l.error}};
          std::cout << j.dump(2) << "\n";
        } else {
          print_family_md(r, l);
        }
        return l.family ? 0 : 2;
      }
      std::cerr << "no lifted module " << module << " over " << group << "\n";
      return 2;
    }

    if (*check) {
      auto report = check_golden(load_golden(golden_path), {}, config);
      for (const auto& m : report.mismatches) std::cout << "MISMATCH " << m << "\n";
      for (const auto& n : report.notes) std::cout << "NOTE " << n << "\n";
      std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
      return report.pass ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
