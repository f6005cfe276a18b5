#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ybcs/permutation.hpp"

namespace ybcs {

// A finite permutation group stored by full element enumeration.
// Elements are kept sorted lexicographically by image array, so equal
// groups have equal element lists and element indices are canonical.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 100'000;

  // Breadth-first closure of `generators` on `degree` points.
  // Throws CapExceeded if the closure grows past `cap`.
  static PermGroup close(std::vector<Permutation> generators, int degree,
                         std::size_t cap = kDefaultCap);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(int i) const { return elements_[i]; }

  bool contains(const Permutation& p) const;
  // Index of p in the sorted element list; throws if absent.
  int index_of(const Permutation& p) const;
  std::optional<int> find(const Permutation& p) const;
  int identity_index() const;
  // Product and inverse on element indices.
  int mult(int a, int b) const;
  int inv(int a) const;

  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int point) const;
  bool is_transitive() const;
  PermGroup stabilizer(int point) const;

  // Subset operations take sorted lists of element indices.
  bool is_subgroup(const std::vector<int>& subset) const;
  bool is_normal(const std::vector<int>& subset) const;  // throws NotASubgroup
  std::vector<int> derived_subgroup(const std::vector<int>& subset) const;
  std::vector<std::vector<int>> derived_series() const;
  bool is_solvable() const;

  // Returns m if the group is dihedral D_2m with m >= 3 in the abstract
  // sense: |G| = 2m, some a of order m and involution b outside <a> with
  // b a b = a^-1.
  std::optional<int> recognize_dihedral() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, int> index_;

  void build_index();
};

// The natural action of D_2m on m points: closure of the m-cycle and a
// reversal. Requires m >= 3.
PermGroup dihedral_natural_action(int m);

}  // namespace ybcs
