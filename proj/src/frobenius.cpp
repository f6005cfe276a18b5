#include "ybcs/frobenius.hpp"

#include <algorithm>
#include <numeric>

#include "ybcs/errors.hpp"

namespace ybcs {

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::Intransitive: return "Intransitive";
    case ActionKind::Regular: return "Regular";
    case ActionKind::Frobenius: return "Frobenius";
    case ActionKind::TransitiveOther: return "Transitive-Other";
  }
  return "?";
}

ActionClassification classify_action(const PermGroup& g) {
  ActionClassification out;
  if (!g.is_transitive()) {
    out.kind = ActionKind::Intransitive;
    return out;
  }
  bool some_fixes_one = false;
  bool all_fix_at_most_one = true;
  for (int i = 0; i < static_cast<int>(g.order()); ++i) {
    const Permutation& p = g.element(i);
    if (p.is_identity()) continue;
    int fixed = p.fixed_point_count();
    if (fixed == 0 && !out.free_witness) out.free_witness = i;
    if (fixed == 1) {
      some_fixes_one = true;
      if (!out.fixing_witness) out.fixing_witness = i;
    }
    if (fixed > 1) all_fix_at_most_one = false;
  }
  if (!some_fixes_one && all_fix_at_most_one) {
    // Covers degree 1 (trivial group) by convention.
    out.kind = ActionKind::Regular;
  } else if (all_fix_at_most_one) {
    out.kind = ActionKind::Frobenius;
    std::vector<int> kernel;
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
      if (g.element(i).is_identity() || g.element(i).fixed_point_count() == 0)
        kernel.push_back(i);
    std::vector<int> complement;
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
      if (g.element(i)(0) == 0) complement.push_back(i);
    out.kernel = std::move(kernel);
    out.complement = std::move(complement);
  } else {
    out.kind = ActionKind::TransitiveOther;
  }
  return out;
}

FrobeniusStructureReport verify_frobenius_structure(
    const ActionClassification& c, const PermGroup& g) {
  if (c.kind != ActionKind::Frobenius || !c.kernel || !c.complement)
    throw ValidationError("verify_frobenius_structure needs a Frobenius classification");
  const auto& kernel = *c.kernel;
  const auto& comp = *c.complement;

  FrobeniusStructureReport rep;
  rep.kernel_order = kernel.size();
  rep.complement_order = comp.size();

  auto fail = [](const std::string& what) {
    throw InternalInvariantError("StructureViolation: " + what);
  };

  if (!g.is_subgroup(kernel)) fail("kernel is not a subgroup");
  if (!g.is_normal(kernel)) fail("kernel is not normal");
  rep.kernel_is_normal_subgroup = true;

  std::vector<int> inter;
  std::set_intersection(kernel.begin(), kernel.end(), comp.begin(), comp.end(),
                        std::back_inserter(inter));
  if (inter.size() != 1 || kernel.size() * comp.size() != g.order())
    fail("G is not K x| H as sets");
  rep.semidirect_decomposition = true;

  if ((kernel.size() - 1) % comp.size() != 0)
    fail("|H| does not divide |K|-1");
  rep.complement_divides_kernel_minus_one = true;

  if (std::gcd(kernel.size(), comp.size()) != 1)
    fail("|H| and |K| are not coprime");
  rep.orders_coprime = true;
  return rep;
}

}  // namespace ybcs
