#include "ybcs/json_io.hpp"

#include <fstream>

#include "ybcs/errors.hpp"

namespace ybcs {

using nlohmann::json;

namespace {

json table_to_json_1based(const std::vector<std::vector<int>>& t) {
  json rows = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (int v : row) r.push_back(v + 1);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<int>> table_from_json_1based(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rows");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("expected an array row");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ValidationError("expected integer entry");
      r.push_back(v.get<int>() - 1);
    }
    t.push_back(std::move(r));
  }
  return t;
}

json table_to_json_0based(const std::vector<std::vector<int>>& t) {
  return json(t);
}

std::vector<std::vector<int>> table_from_json_0based(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of rows");
  return j.get<std::vector<std::vector<int>>>();
}

}  // namespace

json cycle_set_to_json(const CycleSet& cs) {
  return json{{"n", cs.size()}, {"sigma", table_to_json_1based(cs.table())}};
}

CycleSet cycle_set_from_json(const json& j) {
  if (!j.contains("sigma")) throw ValidationError("missing \"sigma\" field");
  auto table = table_from_json_1based(j.at("sigma"));
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(table.size()))
    throw ValidationError("\"n\" does not match table size");
  return CycleSet::validate(std::move(table));
}

json solution_to_json(const Solution& sol) {
  return json{{"n", sol.size()},
              {"left", table_to_json_1based(sol.left_table())},
              {"right", table_to_json_1based(sol.right_table())}};
}

Solution solution_from_json(const json& j) {
  if (!j.contains("left") || !j.contains("right"))
    throw ValidationError("missing \"left\"/\"right\" fields");
  auto left = table_from_json_1based(j.at("left"));
  auto right = table_from_json_1based(j.at("right"));
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(left.size()))
    throw ValidationError("\"n\" does not match table size");
  return Solution::validate(std::move(left), std::move(right));
}

json brace_to_json(const Brace& b) {
  return json{{"order", b.order()},
              {"add", table_to_json_0based(b.add_table())},
              {"circle", table_to_json_0based(b.circle_table())}};
}

Brace brace_from_json(const json& j) {
  return Brace::validate(table_from_json_0based(j.at("add")),
                         table_from_json_0based(j.at("circle")));
}

json permutation_to_json(const Permutation& p) {
  json arr = json::array();
  for (int v : p.images()) arr.push_back(v + 1);
  return arr;
}

Permutation permutation_from_json(const json& j) {
  std::vector<int> images;
  for (const auto& v : j) images.push_back(v.get<int>() - 1);
  return Permutation::from_images(std::move(images));
}

json perm_group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(permutation_to_json(p));
  return json{{"degree", g.degree()}, {"generators", std::move(gens)}};
}

PermGroup perm_group_from_json(const json& j) {
  std::vector<Permutation> gens;
  for (const auto& p : j.at("generators"))
    gens.push_back(permutation_from_json(p));
  return PermGroup::close(std::move(gens), j.at("degree").get<int>());
}

json ax_brace_to_json(const AXBrace& ax) {
  json doc = brace_to_json(ax.brace);
  json sigma = json::array();
  for (int e : ax.sigma) sigma.push_back(e + 1);
  json perms = json::array();
  for (const auto& p : ax.perm_of) perms.push_back(permutation_to_json(p));
  doc["sigma"] = std::move(sigma);
  doc["perms"] = std::move(perms);
  return doc;
}

json classification_to_json(const ActionClassification& c, const PermGroup& g) {
  json doc{{"kind", to_string(c.kind)}};
  if (c.kernel) doc["kernel_order"] = c.kernel->size();
  if (c.complement) doc["complement_order"] = c.complement->size();
  json witnesses = json::object();
  if (c.fixing_witness)
    witnesses["fixing"] = permutation_to_json(g.element(*c.fixing_witness));
  if (c.free_witness)
    witnesses["free"] = permutation_to_json(g.element(*c.free_witness));
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

json scan_report_to_json(const ScanReport& r) {
  json counts = json::object();
  for (const auto& [n, c] : r.counts) counts[std::to_string(n)] = c;
  json flagged = json::array();
  for (const auto& f : r.flagged)
    flagged.push_back(
        json{{"cycle_set", cycle_set_to_json(f.cs)}, {"reason", f.reason}});
  return json{{"scan", r.scan},
              {"n_max", r.n_max},
              {"counts", std::move(counts)},
              {"flagged", std::move(flagged)},
              {"violation", r.violation},
              {"elapsed_seconds", r.elapsed_seconds}};
}

ParsedInput parse_input_document(const json& j) {
  if (j.contains("sigma"))
    return {ParsedInput::Kind::CycleSetInput, cycle_set_from_json(j)};
  if (j.contains("left"))
    return {ParsedInput::Kind::SolutionInput, from_solution(solution_from_json(j))};
  throw ValidationError("document is neither a cycle set nor a solution");
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  return parse_input_document(j);
}

}  // namespace ybcs
