#include "ybcs/covering.hpp"

#include <algorithm>
#include <map>

#include "ybcs/errors.hpp"
#include "ybcs/frobenius.hpp"

namespace ybcs {

PermGroup fundamental_group(const CycleSet& cs, int x) {
  PermGroup g = permutation_group(cs);
  if (!g.is_transitive()) throw ValidationError("NotIndecomposable");
  if (x < 0 || x >= cs.size()) throw ValidationError("base point out of range");
  PermGroup stab = g.stabilizer(x);
  for (int y = 0; y < cs.size(); ++y)
    if (g.stabilizer(y).order() != stab.order())
      throw InternalInvariantError("pi1 order depends on the base point");
  return stab;
}

std::pair<CycleSet, CoveringReport> universal_covering(const CycleSet& cs, int x) {
  PermGroup g = permutation_group(cs);
  if (!g.is_transitive()) throw ValidationError("NotIndecomposable");
  const int order = static_cast<int>(g.order());

  auto fail = [](const std::string& what) {
    throw InternalInvariantError("VerificationFailure: " + what);
  };

  // Covering table on the elements of G(X): g.h = sigma(g(x)) ∘ h.
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int gi = 0; gi < order; ++gi) {
    Permutation s = cs.sigma(g.element(gi)(x));
    for (int hi = 0; hi < order; ++hi) {
      auto found = g.find(s * g.element(hi));
      if (!found) fail("covering operation escapes G(X)");
      table[gi][hi] = *found;
    }
  }
  CycleSet cover = [&] {
    try {
      return CycleSet::validate(std::move(table));
    } catch (const ValidationError& e) {
      fail(std::string("covering table is not a cycle set: ") + e.what());
      throw;  // unreachable
    }
  }();

  // Projection p(g) = g(x), a surjective cycle set morphism.
  std::vector<int> proj(order);
  for (int gi = 0; gi < order; ++gi) proj[gi] = g.element(gi)(x);
  CycleSetMorphism p = [&] {
    try {
      return CycleSetMorphism::validate(cover, cs, proj);
    } catch (const ValidationError& e) {
      fail(std::string("projection is not a morphism: ") + e.what());
      throw;
    }
  }();
  if (!p.is_surjective()) fail("projection is not surjective");

  CoveringReport report;
  PermGroup pi1 = g.stabilizer(x);
  report.pi1_order = pi1.order();

  // Fibers all have size |pi1|.
  std::vector<int> fiber_size(cs.size(), 0);
  for (int v : p.map) ++fiber_size[v];
  for (int c : fiber_size)
    if (static_cast<std::size_t>(c) != report.pi1_order)
      fail("fiber sizes differ from |pi1|");

  // The covering's own permutation group acts simply transitively.
  PermGroup cover_group = permutation_group(cover);
  ActionClassification cls = classify_action(cover_group);
  if (cls.kind != ActionKind::Regular)
    fail("covering group does not act simply transitively");
  report.is_simply_transitive = true;

  // A(p) is bijective.
  AXBrace ax_cover = build_ax(cover);
  AXBrace ax_base = build_ax(cs);
  std::vector<int> ap = induced_af(p, ax_cover, ax_base);
  std::vector<int> sorted_ap = ap;
  std::sort(sorted_ap.begin(), sorted_ap.end());
  sorted_ap.erase(std::unique(sorted_ap.begin(), sorted_ap.end()), sorted_ap.end());
  if (sorted_ap.size() != ax_cover.perm_of.size() ||
      ax_cover.perm_of.size() != ax_base.perm_of.size())
    fail("A(p) is not bijective");

  // Open comparison: the brace cycle-set structure of A(X), transported
  // to G(X) through the permutation identification, versus the covering
  // table. Reported, not asserted.
  bool matches = true;
  std::vector<int> to_ax(order);
  for (int gi = 0; gi < order; ++gi)
    to_ax[gi] = ax_base.element_of(g.element(gi));
  for (int gi = 0; gi < order && matches; ++gi)
    for (int hi = 0; hi < order && matches; ++hi) {
      int via_brace = ax_base.brace.dot(to_ax[gi], to_ax[hi]);
      if (via_brace != to_ax[cover.op(gi, hi)]) matches = false;
    }
  report.matches_brace_structure = matches;

  report.covering_map = std::move(p);
  return {std::move(cover), std::move(report)};
}

bool is_covering(const CycleSetMorphism& f) {
  if (!f.is_surjective()) throw ValidationError("NotSurjective");
  AXBrace ax_source = build_ax(f.source);
  AXBrace ax_target = build_ax(f.target);
  std::vector<int> af = induced_af(f, ax_source, ax_target);
  // induced_af guarantees surjectivity; bijective iff equal orders.
  return ax_source.perm_of.size() == ax_target.perm_of.size();
}

std::string to_string(RamirezVerdict v) {
  switch (v) {
    case RamirezVerdict::NotApplicable: return "NotApplicable";
    case RamirezVerdict::ConjectureWitness: return "ConjectureWitness";
    case RamirezVerdict::OddCaseViolation: return "OddCaseViolation";
    case RamirezVerdict::EvenCaseMatch: return "EvenCaseMatch";
    case RamirezVerdict::CounterexampleEvenCase: return "CounterexampleEvenCase";
  }
  return "?";
}

RamirezResult ramirez_check(const CycleSet& cs) {
  RamirezResult res;
  res.cardinality = cs.size();
  if (!is_indecomposable(cs)) return res;
  PermGroup g = permutation_group(cs);
  std::optional<int> m = g.recognize_dihedral();
  if (!m) return res;
  res.m = m;
  res.matches = (cs.size() == 2 * *m);
  if (*m % 2 == 1)
    res.verdict = *res.matches ? RamirezVerdict::ConjectureWitness
                               : RamirezVerdict::OddCaseViolation;
  else
    res.verdict = *res.matches ? RamirezVerdict::EvenCaseMatch
                               : RamirezVerdict::CounterexampleEvenCase;
  return res;
}

}  // namespace ybcs
