#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybcs/ax_builder.hpp"
#include "ybcs/brace.hpp"
#include "ybcs/covering.hpp"
#include "ybcs/cycle_set.hpp"
#include "ybcs/enumeration.hpp"
#include "ybcs/errors.hpp"
#include "ybcs/frobenius.hpp"
#include "ybcs/json_io.hpp"
#include "ybcs/perm_group.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitViolation = 2;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitInvalidInput;
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    std::cerr << "JSON parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  json axioms = json::object();
  std::string kind;
  try {
    if (j.contains("sigma")) {
      kind = "cycle_set";
      ybcs::cycle_set_from_json(j);
      axioms["rows_bijective"] = true;
      axioms["cycle_law"] = true;
      axioms["square_map_bijective"] = true;
    } else if (j.contains("left")) {
      kind = "solution";
      ybcs::solution_from_json(j);
      axioms["non_degenerate"] = true;
      axioms["involutive"] = true;
      axioms["yang_baxter"] = true;
    } else if (j.contains("add")) {
      kind = "brace";
      ybcs::brace_from_json(j);
      axioms["abelian_addition"] = true;
      axioms["adjoint_group"] = true;
      axioms["guarnieri_vendramin"] = true;
    } else {
      std::cerr << "unrecognized document\n";
      return kExitInvalidInput;
    }
  } catch (const ybcs::ValidationError& e) {
    std::cerr << kind << " invalid: " << e.what() << "\n";
    emit(json{{"kind", kind}, {"valid", false}, {"diagnostic", e.what()}});
    return kExitInvalidInput;
  }
  emit(json{{"kind", kind}, {"valid", true}, {"axioms", axioms}});
  return kExitOk;
}

int cmd_convert(const std::string& path, bool to_solution_flag) {
  ybcs::ParsedInput input = ybcs::parse_input_file(path);
  if (to_solution_flag)
    emit(ybcs::solution_to_json(ybcs::to_solution(input.cycle_set)));
  else
    emit(ybcs::cycle_set_to_json(input.cycle_set));
  return kExitOk;
}

int cmd_group(const std::string& path) {
  ybcs::ParsedInput input = ybcs::parse_input_file(path);
  ybcs::PermGroup g = ybcs::permutation_group(input.cycle_set);
  ybcs::ActionClassification cls = ybcs::classify_action(g);
  std::optional<int> m = g.recognize_dihedral();
  json doc{{"order", g.order()},
           {"solvable", g.is_solvable()},
           {"transitive", g.is_transitive()},
           {"dihedral", m ? json(*m) : json()},
           {"action", ybcs::to_string(cls.kind)},
           {"classification", ybcs::classification_to_json(cls, g)}};
  emit(doc);
  return kExitOk;
}

int cmd_brace(const std::string& path) {
  ybcs::ParsedInput input = ybcs::parse_input_file(path);
  ybcs::AXBrace ax = ybcs::build_ax(input.cycle_set);
  json doc = ybcs::ax_brace_to_json(ax);
  ybcs::BraceSubset soc = ybcs::socle(ax.brace);
  doc["socle"] = soc.members;
  json primaries = json::array();
  for (const auto& comp : ybcs::primary_decomposition(ax.brace))
    primaries.push_back(comp.members);
  doc["primary_decomposition"] = std::move(primaries);
  doc["additive_invariant_factors"] = ybcs::additive_invariant_factors(ax.brace);
  emit(doc);
  return kExitOk;
}

int cmd_covering(const std::string& path, int base_1based) {
  ybcs::ParsedInput input = ybcs::parse_input_file(path);
  auto [cover, report] = ybcs::universal_covering(input.cycle_set, base_1based - 1);
  ybcs::RamirezResult rc = ybcs::ramirez_check(input.cycle_set);
  json proj = json::array();
  for (int v : report.covering_map->map) proj.push_back(v + 1);
  json ram{{"verdict", ybcs::to_string(rc.verdict)},
           {"cardinality", rc.cardinality},
           {"m", rc.m ? json(*rc.m) : json()},
           {"matches_2m", rc.matches ? json(*rc.matches) : json()}};
  emit(json{{"pi1_order", report.pi1_order},
            {"simply_transitive", report.is_simply_transitive},
            {"covering", ybcs::cycle_set_to_json(cover)},
            {"projection", std::move(proj)},
            {"matches_brace_structure", *report.matches_brace_structure},
            {"ramirez", std::move(ram)}});
  return kExitOk;
}

int cmd_enumerate(int n, bool indecomposable, bool irretractable, int jobs,
                  int max_size) {
  ybcs::EnumerationFilter filter;
  filter.indecomposable_only = indecomposable;
  filter.irretractable_only = irretractable;
  ybcs::enumerate(
      n, filter,
      [](const ybcs::CycleSet& cs) {
        std::cout << ybcs::cycle_set_to_json(cs).dump() << "\n";
      },
      jobs, max_size);
  return kExitOk;
}

int cmd_scan(const std::string& which, int n_max, int jobs, int max_size) {
  ybcs::ScanReport report;
  if (which == "frobenius")
    report = ybcs::frobenius_scan(n_max, jobs, max_size);
  else if (which == "ramirez")
    report = ybcs::ramirez_scan(n_max, jobs, max_size);
  else
    report = ybcs::rav_scan(n_max, jobs, max_size);
  emit(ybcs::scan_report_to_json(report));
  return report.violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite cycle sets, braces and Yang-Baxter solutions"};
  app.require_subcommand(1);

  std::string path;
  auto* verify = app.add_subcommand("verify", "Validate a cycle set, solution or brace file");
  verify->add_option("file", path)->required();

  bool to_solution_flag = false, to_cycleset_flag = false;
  auto* convert = app.add_subcommand("convert", "Translate between cycle set and solution");
  convert->add_option("file", path)->required();
  convert->add_flag("--to-solution", to_solution_flag);
  convert->add_flag("--to-cycleset", to_cycleset_flag);

  auto* group = app.add_subcommand("group", "G(X): order, solvability, dihedral recognition, action");
  group->add_option("file", path)->required();

  auto* brace = app.add_subcommand("brace", "Build A(X) with socle and primary decomposition");
  brace->add_option("file", path)->required();

  int base = 1;
  auto* covering = app.add_subcommand("covering", "Fundamental group and universal covering");
  covering->add_option("file", path)->required();
  covering->add_option("--base", base, "1-based base point")->default_val(1);

  int n = 1, jobs = 1, max_size = ybcs::kDefaultMaxSize;
  bool indecomposable = false, irretractable = false;
  auto* enumerate = app.add_subcommand("enumerate", "Isomorph-free enumeration, one JSON document per line");
  enumerate->add_option("--n", n, "size")->required();
  enumerate->add_flag("--indecomposable", indecomposable);
  enumerate->add_flag("--irretractable", irretractable);
  enumerate->add_option("--jobs", jobs);
  enumerate->add_option("--max-size", max_size, "enumeration size cap");

  int scan_max = 4;
  bool scan_frobenius = false, scan_ramirez = false, scan_rav = false;
  auto* scan = app.add_subcommand("scan", "Theorem-scale scans over all enumerated cycle sets");
  scan->add_flag("--frobenius", scan_frobenius);
  scan->add_flag("--ramirez", scan_ramirez);
  scan->add_flag("--rav", scan_rav);
  scan->add_option("--max", scan_max, "largest size to scan")->required();
  scan->add_option("--jobs", jobs);
  scan->add_option("--max-size", max_size, "enumeration size cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(path);
    if (convert->parsed()) {
      if (to_solution_flag == to_cycleset_flag) {
        std::cerr << "convert needs exactly one of --to-solution / --to-cycleset\n";
        return kExitInvalidInput;
      }
      return cmd_convert(path, to_solution_flag);
    }
    if (group->parsed()) return cmd_group(path);
    if (brace->parsed()) return cmd_brace(path);
    if (covering->parsed()) return cmd_covering(path, base);
    if (enumerate->parsed())
      return cmd_enumerate(n, indecomposable, irretractable, jobs, max_size);
    if (scan->parsed()) {
      if (scan_frobenius + scan_ramirez + scan_rav != 1) {
        std::cerr << "scan needs exactly one of --frobenius / --ramirez / --rav\n";
        return kExitInvalidInput;
      }
      return cmd_scan(scan_frobenius ? "frobenius" : scan_ramirez ? "ramirez" : "rav",
                      scan_max, jobs, max_size);
    }
  } catch (const ybcs::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
