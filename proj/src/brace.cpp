#include "ybcs/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "ybcs/errors.hpp"

namespace ybcs {

namespace {

bool rows_are_permutations(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool is_associative(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

bool has_neutral_zero(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a) return false;
  return true;
}

std::vector<int> inverses_for(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] == 0 && t[b][a] == 0) inv[a] = b;
  return inv;
}

}  // namespace

Brace Brace::validate(std::vector<std::vector<int>> add,
                      std::vector<std::vector<int>> circle) {
  const int n = static_cast<int>(add.size());
  if (n == 0 || static_cast<int>(circle.size()) != n)
    throw ValidationError("brace tables empty or of unequal order");
  if (!rows_are_permutations(add) || !is_associative(add))
    throw ValidationError("AddNotAbelianGroup");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) throw ValidationError("AddNotAbelianGroup");
  if (!rows_are_permutations(circle) || !is_associative(circle))
    throw ValidationError("CircleNotGroup");
  if (!has_neutral_zero(add) || !has_neutral_zero(circle))
    throw ValidationError("NeutralMismatch");
  std::vector<int> neg = inverses_for(add), inv = inverses_for(circle);
  if (std::count(neg.begin(), neg.end(), -1) > 0)
    throw ValidationError("AddNotAbelianGroup");
  if (std::count(inv.begin(), inv.end(), -1) > 0)
    throw ValidationError("CircleNotGroup");
  // Guarnieri-Vendramin law (a+b)∘c = (a∘c) − c + (b∘c).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = circle[add[a][b]][c];
        int rhs = add[add[circle[a][c]][neg[c]]][circle[b][c]];
        if (lhs != rhs)
          throw ValidationError("GVViolation(" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
      }
  Brace br;
  br.n_ = n;
  br.add_ = std::move(add);
  br.circ_ = std::move(circle);
  br.neg_ = std::move(neg);
  br.inv_ = std::move(inv);
  return br;
}

Brace Brace::trivial_cyclic(int n) {
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) add[a][b] = (a + b) % n;
  auto circle = add;
  return validate(std::move(add), std::move(circle));
}

Permutation Brace::sigma_perm(int b) const {
  std::vector<int> images(n_);
  for (int c = 0; c < n_; ++c) images[c] = dot(b, c);
  return Permutation::from_images(std::move(images));
}

int Brace::add_order(int a) const {
  int ord = 1;
  for (int x = a; x != 0; x = add_[x][a]) ++ord;
  return a == 0 ? 1 : ord;
}

BraceSubset socle(const Brace& b) {
  std::vector<int> members;
  for (int a = 0; a < b.order(); ++a) {
    bool trivial_action = true;
    for (int c = 0; c < b.order() && trivial_action; ++c)
      trivial_action = (b.dot(a, c) == c);
    if (trivial_action) members.push_back(a);
  }
  return BraceSubset{&b, std::move(members)};
}

bool is_additive_subgroup(const BraceSubset& s) {
  const Brace& b = *s.parent;
  std::vector<char> member(b.order(), 0);
  for (int a : s.members) member[a] = 1;
  if (s.members.empty() || !member[0]) return false;
  for (int a : s.members)
    for (int c : s.members)
      if (!member[b.add(a, c)]) return false;
  return true;
}

bool is_right_ideal(const BraceSubset& s) {
  if (!is_additive_subgroup(s)) return false;
  const Brace& b = *s.parent;
  std::vector<char> member(b.order(), 0);
  for (int a : s.members) member[a] = 1;
  // sigma-invariance; for finite braces this is equivalent to closure
  // under the exponent action.
  for (int g = 0; g < b.order(); ++g)
    for (int a : s.members)
      if (!member[b.dot(g, a)]) return false;
  return true;
}

bool is_ideal(const BraceSubset& s) {
  if (!is_right_ideal(s)) return false;
  const Brace& b = *s.parent;
  std::vector<char> member(b.order(), 0);
  for (int a : s.members) member[a] = 1;
  for (int g = 0; g < b.order(); ++g)
    for (int a : s.members)
      if (!member[b.circle(b.circle(g, a), b.inv(g))]) return false;
  return true;
}

std::pair<Brace, std::vector<int>> quotient(const Brace& b, const BraceSubset& ideal) {
  if (!is_ideal(ideal)) throw ValidationError("NotAnIdeal");
  const int n = b.order();
  // Cosets a + I, numbered by minimal representative; the coset of 0
  // has minimal representative 0 and so becomes element 0.
  std::vector<int> min_rep(n);
  for (int a = 0; a < n; ++a) {
    int m = a;
    for (int i : ideal.members) m = std::min(m, b.add(a, i));
    min_rep[a] = m;
  }
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (min_rep[a] == a) reps.push_back(a);
  std::vector<int> cls(n);
  for (int a = 0; a < n; ++a)
    cls[a] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), min_rep[a]) -
                              reps.begin());
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qadd(m, std::vector<int>(m)),
      qcirc(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      qadd[i][j] = cls[b.add(reps[i], reps[j])];
      qcirc[i][j] = cls[b.circle(reps[i], reps[j])];
    }
  // Representative-independence of both operations.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (cls[b.add(a, c)] != qadd[cls[a]][cls[c]] ||
          cls[b.circle(a, c)] != qcirc[cls[a]][cls[c]])
        throw InternalInvariantError("quotient operation not well-defined");
  return {Brace::validate(std::move(qadd), std::move(qcirc)), std::move(cls)};
}

std::vector<BraceSubset> primary_decomposition(const Brace& b) {
  const int n = b.order();
  std::set<int> primes;
  int rem = n;
  for (int p = 2; p * p <= rem; ++p)
    while (rem % p == 0) {
      primes.insert(p);
      rem /= p;
    }
  if (rem > 1) primes.insert(rem);

  std::vector<BraceSubset> out;
  std::size_t product = 1;
  for (int p : primes) {
    std::vector<int> members;
    for (int a = 0; a < n; ++a) {
      int ord = b.add_order(a);
      while (ord % p == 0) ord /= p;
      if (ord == 1) members.push_back(a);
    }
    product *= members.size();
    out.push_back(BraceSubset{&b, std::move(members)});
  }
  for (const auto& comp : out)
    if (!is_right_ideal(comp))
      throw InternalInvariantError("primary component is not a right ideal");
  if (!primes.empty() && product != static_cast<std::size_t>(n))
    throw InternalInvariantError("primary components do not sum to A");
  return out;
}

Prop2Report check_prop2(const Brace& b, const BraceSubset& i, const BraceSubset& j) {
  if (!is_right_ideal(i) || !is_right_ideal(j))
    throw ValidationError("DecompositionInvalid: not right ideals");
  std::vector<int> inter;
  std::set_intersection(i.members.begin(), i.members.end(), j.members.begin(),
                        j.members.end(), std::back_inserter(inter));
  if (inter != std::vector<int>{0} ||
      i.members.size() * j.members.size() != static_cast<std::size_t>(b.order()))
    throw ValidationError("DecompositionInvalid: not a direct sum");
  std::vector<char> hit(b.order(), 0);
  for (int a : i.members)
    for (int c : j.members) {
      int s = b.add(a, c);
      if (hit[s]) throw ValidationError("DecompositionInvalid: sums collide");
      hit[s] = 1;
    }

  Prop2Report rep;
  for (int a : i.members)
    for (int c : j.members) {
      // b∘a = (b^a . a) ∘ b^a  with b ranging over J.
      int exp_ca = b.exponent(c, a);
      int lhs = b.circle(c, a);
      int rhs = b.circle(b.dot(exp_ca, a), exp_ca);
      if (lhs != rhs) rep.mutual_action_identity = false;
    }
  if (is_ideal(i)) {
    rep.ideal_identities_checked = true;
    for (int a : i.members)
      for (int c : j.members) {
        if (b.dot(a, c) != c) rep.ideal_identities_hold = false;
        if (b.dot(c, a) != b.circle(b.circle(c, a), b.inv(c)))
          rep.ideal_identities_hold = false;
      }
  }
  return rep;
}

bool is_cycle_base(const Brace& b, const std::vector<int>& s) {
  if (s.empty()) return b.order() == 1;
  std::vector<char> member(b.order(), 0);
  for (int a : s) member[a] = 1;
  for (int g = 0; g < b.order(); ++g)
    for (int a : s)
      if (!member[b.dot(g, a)]) return false;
  // Additive generation: the monoid closure is a subgroup by finiteness.
  std::set<int> gen(s.begin(), s.end());
  gen.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(gen.begin(), gen.end());
    for (int a : cur)
      for (int c : s)
        if (gen.insert(b.add(a, c)).second) grew = true;
  }
  return static_cast<int>(gen.size()) == b.order();
}

std::vector<int> additive_invariant_factors(const Brace& b) {
  const int n = b.order();
  if (n == 1) return {};
  // Per prime p: c_k = #{a | p^k a = 0} determines the type partition.
  std::map<int, std::vector<int>> exponents_by_prime;  // p -> cyclic factor exps
  for (const auto& comp : primary_decomposition(b)) {
    int p = 0;
    for (int a : comp.members)
      if (a != 0) {
        int ord = b.add_order(a);
        for (p = 2; ord % p != 0; ++p) {}
        break;
      }
    if (p == 0) continue;  // trivial component cannot occur, but be safe
    int e_max = 0;
    for (int a : comp.members) {
      int ord = b.add_order(a), e = 0;
      while (ord > 1) {
        ord /= p;
        ++e;
      }
      e_max = std::max(e_max, e);
    }
    // f_k = log_p #{a in A_p | order divides p^k}.
    std::vector<int> f(e_max + 1, 0);
    for (int k = 0; k <= e_max; ++k) {
      int pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      int count = 0;
      for (int a : comp.members)
        if (pk % b.add_order(a) == 0) ++count;
      while (count > 1) {
        count /= p;
        ++f[k];
      }
    }
    // Number of factors of order >= p^k is f_k - f_{k-1}.
    std::vector<int> exps;
    for (int k = 1; k <= e_max; ++k) {
      int at_least_k = f[k] - f[k - 1];
      int at_least_k1 = (k + 1 <= e_max) ? f[k + 1] - f[k] : 0;
      for (int t = 0; t < at_least_k - at_least_k1; ++t) exps.push_back(k);
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    exponents_by_prime[p] = std::move(exps);
  }
  std::size_t slots = 0;
  for (auto& [p, exps] : exponents_by_prime) slots = std::max(slots, exps.size());
  std::vector<int> factors(slots, 1);
  for (auto& [p, exps] : exponents_by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      int pk = 1;
      for (int t = 0; t < exps[i]; ++t) pk *= p;
      factors[i] *= pk;
    }
  // Largest-first pairing gives divisibility d_1 | d_2 | ...; report ascending.
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace ybcs
