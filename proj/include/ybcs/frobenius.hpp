#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybcs/perm_group.hpp"

namespace ybcs {

enum class ActionKind { Intransitive, Regular, Frobenius, TransitiveOther };

std::string to_string(ActionKind kind);

struct ActionClassification {
  ActionKind kind = ActionKind::Intransitive;
  // Present exactly when kind == Frobenius.
  std::optional<std::vector<int>> kernel;      // element indices, incl. identity
  std::optional<std::vector<int>> complement;  // stabilizer of point 0
  // One element fixing exactly one point and one fixed-point-free
  // element, when the action has them.
  std::optional<int> fixing_witness;
  std::optional<int> free_witness;
};

// Classifies the action of g on {0..degree-1}: Intransitive, Regular
// (transitive, every non-identity element fixed-point-free), Frobenius
// (transitive, every non-identity element fixes at most one point, some
// element fixes exactly one), or TransitiveOther.
ActionClassification classify_action(const PermGroup& g);

struct FrobeniusStructureReport {
  std::size_t kernel_order = 0;
  std::size_t complement_order = 0;
  bool kernel_is_normal_subgroup = false;
  bool semidirect_decomposition = false;  // K ∩ H = {1}, |K||H| = |G|
  bool complement_divides_kernel_minus_one = false;
  bool orders_coprime = false;
};

// Checks the structural consequences of Frobenius' theorem on a
// classification produced by classify_action. Throws
// InternalInvariantError("StructureViolation: ...") on any failure.
FrobeniusStructureReport verify_frobenius_structure(
    const ActionClassification& c, const PermGroup& g);

}  // namespace ybcs
