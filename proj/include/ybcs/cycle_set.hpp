#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ybcs/permutation.hpp"

namespace ybcs {

// A finite cycle set {0..n-1} with operation table op(x, y) = x.y.
// Immutable after validation; every row is a bijection, the cycle-set
// law (x.y).(x.z) = (y.x).(y.z) holds for all triples, and the square
// map x -> x.x is a bijection.
class CycleSet {
 public:
  // Validates the table; throws ValidationError with a diagnostic
  // naming the first violated row or triple (row-major order).
  static CycleSet validate(std::vector<std::vector<int>> table);

  // The trivial cycle set x.y = y on n elements.
  static CycleSet trivial(int n);

  int size() const { return n_; }
  int op(int x, int y) const { return table_[x][y]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  Permutation sigma(int x) const;
  Permutation square_map() const;

  bool operator==(const CycleSet&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> table_;
};

// The YBE-side view: r(x, y) = (left[x][y], right[x][y]).
// Validated to be non-degenerate, involutive, and a YBE solution.
class Solution {
 public:
  static Solution validate(std::vector<std::vector<int>> left,
                           std::vector<std::vector<int>> right);

  int size() const { return n_; }
  int left(int x, int y) const { return left_[x][y]; }
  int right(int x, int y) const { return right_[x][y]; }
  const std::vector<std::vector<int>>& left_table() const { return left_; }
  const std::vector<std::vector<int>>& right_table() const { return right_; }
  std::pair<int, int> r(int x, int y) const { return {left_[x][y], right_[x][y]}; }

  bool operator==(const Solution&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> left_, right_;
};

// A map between cycle sets with map(x.y) = map(x).map(y).
struct CycleSetMorphism {
  CycleSet source;
  CycleSet target;
  std::vector<int> map;

  // Throws ValidationError if the map is not a morphism.
  static CycleSetMorphism validate(CycleSet source, CycleSet target,
                                   std::vector<int> map);
  bool is_surjective() const;
  bool is_injective() const;
};

// Translation between the two views. Roundtrips are identities.
Solution to_solution(const CycleSet& cs);
CycleSet from_solution(const Solution& sol);

// Orbits of the permutation group generated by all sigma(x).
// One block iff the cycle set is indecomposable.
std::vector<std::vector<int>> orbit_partition(const CycleSet& cs);
bool is_indecomposable(const CycleSet& cs);

// Induced sub-cycle set on a subset closed under the operation.
// Element i of the result is subset[i]. Throws if not closed.
CycleSet sub_cycle_set(const CycleSet& cs, const std::vector<int>& subset);

// Quotient identifying elements with equal rows, with the projection.
std::pair<CycleSet, CycleSetMorphism> retraction(const CycleSet& cs);

bool is_irretractable(const CycleSet& cs);

// Smallest k such that k-fold retraction is a singleton; nullopt if
// iterated retraction stabilizes above size 1.
std::optional<int> multipermutation_level(const CycleSet& cs);

// Extends cs by one element z (the new last index) with z.y = y and
// x.z = z; z plays the role of the brace zero.
CycleSet adjoin_zero(const CycleSet& cs);

CycleSet relabel(const CycleSet& cs, const Permutation& pi);

// Lexicographically least relabeled table over all n! relabelings.
CycleSet canonical_form(const CycleSet& cs);
// Same, also reporting a permutation pi with relabel(cs, pi) canonical.
std::pair<CycleSet, Permutation> canonical_form_with_witness(const CycleSet& cs);

// True iff cs equals its own canonical form (cheap early-exit check).
bool is_canonical(const CycleSet& cs);

// A bijection pi with relabel(a, pi) == b, if one exists.
std::optional<Permutation> is_isomorphic(const CycleSet& a, const CycleSet& b);

}  // namespace ybcs
