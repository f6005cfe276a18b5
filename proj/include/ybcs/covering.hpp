#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybcs/ax_builder.hpp"
#include "ybcs/cycle_set.hpp"
#include "ybcs/perm_group.hpp"

namespace ybcs {

// Stabilizer of x in G(X); requires an indecomposable cycle set.
// Throws ValidationError("NotIndecomposable") otherwise. The order is
// checked to be the same for every base point.
PermGroup fundamental_group(const CycleSet& cs, int x = 0);

struct CoveringReport {
  std::size_t pi1_order = 0;
  bool is_simply_transitive = false;
  std::optional<CycleSetMorphism> covering_map;
  // Whether the covering's cycle set table coincides with the brace
  // cycle-set structure of A(X) restricted to G(X). Reported per
  // instance, never asserted.
  std::optional<bool> matches_brace_structure;
};

// The universal covering over base point x: underlying set G(X) with
// g.h := sigma(g(x)) ∘ h and projection p(g) = g(x). Every declared
// postcondition is verified; a failure throws
// InternalInvariantError("VerificationFailure: ...").
std::pair<CycleSet, CoveringReport> universal_covering(const CycleSet& cs, int x = 0);

// True iff the induced brace morphism A(f) is bijective.
bool is_covering(const CycleSetMorphism& f);

enum class RamirezVerdict {
  NotApplicable,          // G(X) not dihedral or cs decomposable
  ConjectureWitness,      // m odd and |X| = 2m
  OddCaseViolation,       // m odd and |X| != 2m (contradicts the theory)
  EvenCaseMatch,          // m even and |X| = 2m
  CounterexampleEvenCase  // m even and |X| != 2m
};

std::string to_string(RamirezVerdict v);

struct RamirezResult {
  RamirezVerdict verdict = RamirezVerdict::NotApplicable;
  std::optional<int> m;        // G(X) = D_2m when recognized
  int cardinality = 0;         // |X|
  std::optional<bool> matches; // |X| == 2m
};

RamirezResult ramirez_check(const CycleSet& cs);

}  // namespace ybcs
