#pragma once

#include <string>

#include <json.hpp>

#include "ybcs/ax_builder.hpp"
#include "ybcs/brace.hpp"
#include "ybcs/covering.hpp"
#include "ybcs/cycle_set.hpp"
#include "ybcs/enumeration.hpp"
#include "ybcs/frobenius.hpp"
#include "ybcs/perm_group.hpp"

namespace ybcs {

// External formats. Cycle sets, solutions and permutations use 1-based
// indices; brace tables are 0-based with neutral element 0.

nlohmann::json cycle_set_to_json(const CycleSet& cs);
CycleSet cycle_set_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j);

nlohmann::json brace_to_json(const Brace& b);
Brace brace_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json perm_group_to_json(const PermGroup& g);
PermGroup perm_group_from_json(const nlohmann::json& j);

nlohmann::json ax_brace_to_json(const AXBrace& ax);

nlohmann::json classification_to_json(const ActionClassification& c,
                                      const PermGroup& g);

nlohmann::json scan_report_to_json(const ScanReport& r);

// Parses a document that is either a cycle set or a solution,
// distinguished by the presence of "sigma" vs "left"/"right".
struct ParsedInput {
  enum class Kind { CycleSetInput, SolutionInput } kind;
  CycleSet cycle_set;  // always populated (converted when needed)
};
ParsedInput parse_input_document(const nlohmann::json& j);
ParsedInput parse_input_file(const std::string& path);

}  // namespace ybcs
