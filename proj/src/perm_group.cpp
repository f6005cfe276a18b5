#include "ybcs/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ybcs/errors.hpp"

namespace ybcs {

PermGroup PermGroup::close(std::vector<Permutation> generators, int degree,
                           std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw ValidationError("generator degree mismatch");

  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeded cap");
        queue.push_back(next);
      }
      // Generators need not include inverses; close under them too.
      Permutation prev = g.inverse() * cur;
      if (seen.insert(prev).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeded cap");
        queue.push_back(prev);
      }
    }
  }

  PermGroup grp;
  grp.degree_ = degree;
  grp.generators_ = std::move(generators);
  grp.elements_.assign(seen.begin(), seen.end());
  grp.build_index();
  return grp;
}

PermGroup PermGroup::trivial(int degree) { return close({}, degree); }

void PermGroup::build_index() {
  index_.clear();
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    index_[elements_[i].images()] = i;
}

bool PermGroup::contains(const Permutation& p) const {
  return index_.count(p.images()) != 0;
}

std::optional<int> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PermGroup::index_of(const Permutation& p) const {
  auto found = find(p);
  if (!found) throw InternalInvariantError("element not in group");
  return *found;
}

int PermGroup::identity_index() const {
  return index_of(Permutation::identity(degree_));
}

int PermGroup::mult(int a, int b) const {
  return index_of(elements_[a] * elements_[b]);
}

int PermGroup::inv(int a) const { return index_of(elements_[a].inverse()); }

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      orbit.push_back(x);
      for (const auto& g : elements_) {
        int y = g(x);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  for (auto& orb : orbits())
    if (std::binary_search(orb.begin(), orb.end(), point)) return orb;
  throw ValidationError("point out of range");
}

bool PermGroup::is_transitive() const {
  return degree_ >= 1 && orbits().size() == 1;
}

PermGroup PermGroup::stabilizer(int point) const {
  std::vector<Permutation> stab_elems;
  for (const auto& g : elements_)
    if (g(point) == point) stab_elems.push_back(g);
  PermGroup grp;
  grp.degree_ = degree_;
  grp.generators_ = stab_elems;
  grp.elements_ = std::move(stab_elems);
  std::sort(grp.elements_.begin(), grp.elements_.end());
  grp.build_index();
  // Orbit-stabilizer sanity: |orbit|*|stab| = |G|.
  if (orbit_of(point).size() * grp.order() != order())
    throw InternalInvariantError("orbit-stabilizer law violated");
  return grp;
}

bool PermGroup::is_subgroup(const std::vector<int>& subset) const {
  if (subset.empty()) return false;
  std::vector<char> member(elements_.size(), 0);
  for (int i : subset) member.at(i) = 1;
  if (!member[identity_index()]) return false;
  for (int a : subset)
    for (int b : subset)
      if (!member[mult(a, b)]) return false;
  return true;
}

bool PermGroup::is_normal(const std::vector<int>& subset) const {
  if (!is_subgroup(subset))
    throw ValidationError("NotASubgroup: normality asked of a non-subgroup");
  std::vector<char> member(elements_.size(), 0);
  for (int i : subset) member[i] = 1;
  for (int g = 0; g < static_cast<int>(elements_.size()); ++g) {
    int gi = inv(g);
    for (int h : subset)
      if (!member[mult(mult(g, h), gi)]) return false;
  }
  return true;
}

std::vector<int> PermGroup::derived_subgroup(const std::vector<int>& subset) const {
  std::set<int> gens;
  for (int a : subset)
    for (int b : subset)
      gens.insert(mult(mult(a, b), mult(inv(a), inv(b))));
  // Close under multiplication inside the ambient element list.
  std::set<int> closed(gens.begin(), gens.end());
  closed.insert(identity_index());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closed.begin(), closed.end());
    for (int a : cur)
      for (int b : cur)
        if (closed.insert(mult(a, b)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

std::vector<std::vector<int>> PermGroup::derived_series() const {
  std::vector<int> whole(elements_.size());
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) whole[i] = i;
  std::vector<std::vector<int>> series{whole};
  while (true) {
    std::vector<int> next = derived_subgroup(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

bool PermGroup::is_solvable() const {
  return derived_series().back().size() == 1;
}

std::optional<int> PermGroup::recognize_dihedral() const {
  if (order() % 2 != 0) return std::nullopt;
  int m = static_cast<int>(order()) / 2;
  if (m < 3) return std::nullopt;
  for (const auto& a : elements_) {
    if (a.order() != m) continue;
    // Powers of a.
    std::set<Permutation> cyc;
    Permutation p = Permutation::identity(degree_);
    for (int k = 0; k < m; ++k) {
      cyc.insert(p);
      p = a * p;
    }
    Permutation ainv = a.inverse();
    for (const auto& b : elements_) {
      if (b.order() != 2 || cyc.count(b)) continue;
      if (b * a * b == ainv) return m;
    }
  }
  return std::nullopt;
}

PermGroup dihedral_natural_action(int m) {
  if (m < 3) throw ValidationError("dihedral action needs m >= 3");
  std::vector<int> rot(m), rev(m);
  for (int i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    rev[i] = (m - i) % m;
  }
  return PermGroup::close(
      {Permutation::from_images(rot), Permutation::from_images(rev)}, m);
}

}  // namespace ybcs
