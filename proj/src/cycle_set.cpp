#include "ybcs/cycle_set.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "ybcs/errors.hpp"

namespace ybcs {

namespace {

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

}  // namespace

CycleSet CycleSet::validate(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("empty cycle set (n = 0) is rejected");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(table[x].size()) != n)
      throw ValidationError("row " + std::to_string(x) + " has wrong length");
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
      int v = table[x][y];
      if (v < 0 || v >= n || seen[v])
        throw ValidationError("NonBijectiveRow(" + std::to_string(x) + ")");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][table[x][z]] != table[table[y][x]][table[y][z]])
          throw ValidationError("CycleLawViolation" + triple(x, y, z));
  // Finiteness guarantees a bijective square map; a failure here would
  // contradict the theory, not the input.
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    int t = table[x][x];
    if (seen[t])
      throw InternalInvariantError("SquareMapNotBijective");
    seen[t] = 1;
  }
  CycleSet cs;
  cs.n_ = n;
  cs.table_ = std::move(table);
  return cs;
}

CycleSet CycleSet::trivial(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = y;
  return validate(std::move(table));
}

Permutation CycleSet::sigma(int x) const {
  return Permutation::from_images(table_[x]);
}

Permutation CycleSet::square_map() const {
  std::vector<int> images(n_);
  for (int x = 0; x < n_; ++x) images[x] = table_[x][x];
  return Permutation::from_images(std::move(images));
}

Solution Solution::validate(std::vector<std::vector<int>> left,
                            std::vector<std::vector<int>> right) {
  const int n = static_cast<int>(left.size());
  if (n == 0 || static_cast<int>(right.size()) != n)
    throw ValidationError("solution tables empty or of unequal size");
  auto in_range = [n](const std::vector<std::vector<int>>& t) {
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row)
        if (v < 0 || v >= n) return false;
    }
    return true;
  };
  if (!in_range(left) || !in_range(right))
    throw ValidationError("solution table entry out of range");
  // Non-degeneracy: rows of `left` and columns of `right` are bijections.
  for (int x = 0; x < n; ++x) {
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
      if (seen[left[x][y]])
        throw ValidationError("Degenerate: y -> left(" + std::to_string(x) +
                              ",y) not bijective");
      seen[left[x][y]] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (seen[right[x][y]])
        throw ValidationError("Degenerate: x -> right(x," + std::to_string(y) +
                              ") not bijective");
      seen[right[x][y]] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = left[x][y], v = right[x][y];
      if (left[u][v] != x || right[u][v] != y)
        throw ValidationError("NotInvolutive at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
    }
  // Braid-form YBE on all triples.
  auto r12 = [&](std::array<int, 3> t) {
    return std::array<int, 3>{left[t[0]][t[1]], right[t[0]][t[1]], t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    return std::array<int, 3>{t[0], left[t[1]][t[2]], right[t[1]][t[2]]};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t))))
          throw ValidationError("YBEViolation" + triple(x, y, z));
      }
  Solution s;
  s.n_ = n;
  s.left_ = std::move(left);
  s.right_ = std::move(right);
  return s;
}

CycleSetMorphism CycleSetMorphism::validate(CycleSet source, CycleSet target,
                                            std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.size())
    throw ValidationError("morphism map has wrong length");
  for (int v : map)
    if (v < 0 || v >= target.size())
      throw ValidationError("morphism image out of range");
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y)
      if (map[source.op(x, y)] != target.op(map[x], map[y]))
        throw ValidationError("not a cycle set morphism at (" +
                              std::to_string(x) + "," + std::to_string(y) + ")");
  return CycleSetMorphism{std::move(source), std::move(target), std::move(map)};
}

bool CycleSetMorphism::is_surjective() const {
  std::vector<char> hit(target.size(), 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool CycleSetMorphism::is_injective() const {
  std::vector<char> hit(target.size(), 0);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Solution to_solution(const CycleSet& cs) {
  const int n = cs.size();
  std::vector<std::vector<int>> left(n, std::vector<int>(n)),
      right(n, std::vector<int>(n));
  std::vector<Permutation> sigma_inv(n);
  for (int y = 0; y < n; ++y) sigma_inv[y] = cs.sigma(y).inverse();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      right[x][y] = sigma_inv[y](x);
      left[x][y] = cs.op(right[x][y], y);
    }
  Solution sol = Solution::validate(std::move(left), std::move(right));
  // Symmetric form r(y.x, y) = (x.y, x).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sol.r(cs.op(y, x), y) != std::pair<int, int>{cs.op(x, y), x})
        throw InternalInvariantError("symmetric form of r violated");
  return sol;
}

CycleSet from_solution(const Solution& sol) {
  const int n = sol.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    // sigma(x) is the inverse of y -> y^x = right(y, x).
    for (int y = 0; y < n; ++y) table[x][sol.right(y, x)] = y;
  }
  return CycleSet::validate(std::move(table));
}

std::vector<std::vector<int>> orbit_partition(const CycleSet& cs) {
  const int n = cs.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = find(y), b = find(cs.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, block] : blocks) {
    sub_cycle_set(cs, block);  // each orbit induces a sub-cycle set
    out.push_back(std::move(block));
  }
  return out;
}

bool is_indecomposable(const CycleSet& cs) {
  return orbit_partition(cs).size() == 1;
}

CycleSet sub_cycle_set(const CycleSet& cs, const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<int> pos(cs.size(), -1);
  for (int i = 0; i < m; ++i) pos[subset[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = cs.op(subset[i], subset[j]);
      if (pos[v] < 0)
        throw ValidationError("subset not closed under the operation");
      table[i][j] = pos[v];
    }
  return CycleSet::validate(std::move(table));
}

std::pair<CycleSet, CycleSetMorphism> retraction(const CycleSet& cs) {
  const int n = cs.size();
  // Classes are fibers of x -> row(x), numbered by first appearance.
  std::map<std::vector<int>, int> class_of_row;
  std::vector<int> cls(n);
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = class_of_row.try_emplace(
        cs.table()[x], static_cast<int>(class_of_row.size()));
    cls[x] = it->second;
  }
  const int m = static_cast<int>(class_of_row.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int& cell = table[cls[x]][cls[y]];
      int v = cls[cs.op(x, y)];
      if (cell == -1)
        cell = v;
      else if (cell != v)
        throw InternalInvariantError(
            "WellDefinednessFailure: retraction operation inconsistent");
    }
  CycleSet quotient = CycleSet::validate(std::move(table));
  CycleSetMorphism proj = CycleSetMorphism::validate(cs, quotient, cls);
  return {std::move(quotient), std::move(proj)};
}

bool is_irretractable(const CycleSet& cs) {
  return retraction(cs).first.size() == cs.size();
}

std::optional<int> multipermutation_level(const CycleSet& cs) {
  CycleSet cur = cs;
  int level = 0;
  while (cur.size() > 1) {
    CycleSet next = retraction(cur).first;
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
    ++level;
  }
  return level;
}

CycleSet adjoin_zero(const CycleSet& cs) {
  const int n = cs.size();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table[x][y] = cs.op(x, y);
    table[x][n] = n;  // x.z = z
    table[n][x] = x;  // z.y = y
  }
  table[n][n] = n;
  return CycleSet::validate(std::move(table));
}

CycleSet relabel(const CycleSet& cs, const Permutation& pi) {
  const int n = cs.size();
  Permutation inv = pi.inverse();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = pi(cs.op(inv(i), inv(j)));
  return CycleSet::validate(std::move(table));
}

namespace {

// Compares the relabeling of `cs` under `pi` (given with its inverse)
// against `ref` in row-major order. Returns -1/0/+1.
int compare_relabeled(const CycleSet& cs, const std::vector<int>& pi,
                      const std::vector<int>& pinv,
                      const std::vector<std::vector<int>>& ref) {
  const int n = cs.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = pi[cs.op(pinv[i], pinv[j])];
      if (v != ref[i][j]) return v < ref[i][j] ? -1 : 1;
    }
  return 0;
}

}  // namespace

std::pair<CycleSet, Permutation> canonical_form_with_witness(const CycleSet& cs) {
  const int n = cs.size();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::vector<int>> best = cs.table();
  std::vector<int> best_pi = pi;
  std::vector<int> pinv(n);
  do {
    for (int i = 0; i < n; ++i) pinv[pi[i]] = i;
    if (compare_relabeled(cs, pi, pinv, best) < 0) {
      best_pi = pi;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) best[i][j] = pi[cs.op(pinv[i], pinv[j])];
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return {CycleSet::validate(std::move(best)),
          Permutation::from_images(std::move(best_pi))};
}

CycleSet canonical_form(const CycleSet& cs) {
  return canonical_form_with_witness(cs).first;
}

bool is_canonical(const CycleSet& cs) {
  const int n = cs.size();
  std::vector<int> pi(n), pinv(n);
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin(), pi.end())) {
    for (int i = 0; i < n; ++i) pinv[pi[i]] = i;
    if (compare_relabeled(cs, pi, pinv, cs.table()) < 0) return false;
  }
  return true;
}

std::optional<Permutation> is_isomorphic(const CycleSet& a, const CycleSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto [ca, pa] = canonical_form_with_witness(a);
  auto [cb, pb] = canonical_form_with_witness(b);
  if (ca != cb) return std::nullopt;
  Permutation witness = pb.inverse() * pa;
  if (relabel(a, witness) != b)
    throw InternalInvariantError("isomorphism witness failed to verify");
  return witness;
}

}  // namespace ybcs
