#include "ybcs/ax_builder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "ybcs/errors.hpp"

namespace ybcs {

FreeVector::FreeVector(CycleSet base, std::vector<long long> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != base_.size())
    throw ValidationError("coefficient vector has wrong length");
}

FreeVector FreeVector::zero(const CycleSet& base) {
  return FreeVector(base, std::vector<long long>(base.size(), 0));
}

FreeVector FreeVector::generator(const CycleSet& base, int x) {
  std::vector<long long> c(base.size(), 0);
  c.at(x) = 1;
  return FreeVector(base, std::move(c));
}

void FreeVector::check_same_base(const FreeVector& other) const {
  if (!(base_ == other.base_)) throw ValidationError("BaseMismatch");
}

Permutation FreeVector::perm() const {
  const int n = base_.size();
  Permutation p = Permutation::identity(n);
  Permutation t_inv = base_.square_map().inverse();
  for (int x = 0; x < n; ++x)
    for (long long k = 0; k < coeffs_[x]; ++k) p = base_.sigma(p(x)) * p;
  for (int x = 0; x < n; ++x)
    for (long long k = 0; k > coeffs_[x]; --k) {
      // Removing e_x: q(x) = T^-1(p(x)) and q = sigma(q(x))^-1 ∘ p.
      int qx = t_inv(p(x));
      p = base_.sigma(qx).inverse() * p;
    }
  return p;
}

FreeVector operator+(const FreeVector& a, const FreeVector& b) {
  a.check_same_base(b);
  std::vector<long long> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return FreeVector(a.base(), std::move(c));
}

FreeVector operator-(const FreeVector& a, const FreeVector& b) {
  a.check_same_base(b);
  std::vector<long long> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return FreeVector(a.base(), std::move(c));
}

FreeVector vec_dot(const FreeVector& a, const FreeVector& b) {
  a.check_same_base(b);
  Permutation p = a.perm();
  std::vector<long long> c(b.coeffs().size(), 0);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    c[p(i)] += b.coeffs()[i];
  return FreeVector(a.base(), std::move(c));
}

FreeVector vec_exp(const FreeVector& a, const FreeVector& b) {
  a.check_same_base(b);
  Permutation p = b.perm().inverse();
  std::vector<long long> c(a.coeffs().size(), 0);
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    c[p(i)] += a.coeffs()[i];
  return FreeVector(a.base(), std::move(c));
}

FreeVector vec_circle(const FreeVector& a, const FreeVector& b) {
  return vec_exp(a, b) + b;
}

int AXBrace::element_of(const Permutation& p) const {
  for (int i = 0; i < static_cast<int>(perm_of.size()); ++i)
    if (perm_of[i] == p) return i;
  throw InternalInvariantError("permutation not an element of A(X)");
}

namespace {

// Replays a generator word on a starting permutation via the additive
// recursion perm(a + e_x) = sigma(perm(a)(x)) ∘ perm(a).
Permutation replay(const CycleSet& cs, Permutation p, const std::vector<int>& word) {
  for (int x : word) p = cs.sigma(p(x)) * p;
  return p;
}

}  // namespace

AXBrace build_ax(const CycleSet& cs, std::size_t cap) {
  const int n = cs.size();
  AXBrace ax;
  std::map<std::vector<int>, int> index;

  // BFS from 0 (identity permutation), expanding generators in index
  // order, so each element's first word is its lex-least shortest word.
  Permutation id = Permutation::identity(n);
  ax.perm_of.push_back(id);
  ax.rep_word.push_back({});
  index[id.images()] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int x = 0; x < n; ++x) {
      Permutation next = cs.sigma(ax.perm_of[cur](x)) * ax.perm_of[cur];
      if (index.count(next.images())) continue;
      if (ax.perm_of.size() >= cap)
        throw CapExceeded("ClosureCapExceeded building A(X)");
      int idx = static_cast<int>(ax.perm_of.size());
      index[next.images()] = idx;
      ax.perm_of.push_back(next);
      auto word = ax.rep_word[cur];
      word.push_back(x);
      ax.rep_word.push_back(std::move(word));
      queue.push_back(idx);
    }
  }

  const int order = static_cast<int>(ax.perm_of.size());
  auto lookup = [&](const Permutation& p) {
    auto it = index.find(p.images());
    if (it == index.end())
      throw InternalInvariantError(
          "WellDefinednessFailure: A(X) closure not closed");
    return it->second;
  };

  // Addition replays one summand's representative word on the other;
  // the circle operation is composition of the induced permutations.
  std::vector<std::vector<int>> add(order, std::vector<int>(order)),
      circle(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      add[g][h] = lookup(replay(cs, ax.perm_of[g], ax.rep_word[h]));
      circle[g][h] = lookup(ax.perm_of[g] * ax.perm_of[h]);
    }
  ax.brace = Brace::validate(std::move(add), std::move(circle));

  ax.sigma.resize(n);
  for (int x = 0; x < n; ++x) ax.sigma[x] = lookup(cs.sigma(x));

  // Equivariance of sigma (both directions) and the morphism property
  // into the brace's dot operation.
  for (int x = 0; x < n; ++x) {
    int sx = ax.sigma[x];
    Permutation sx_perm = cs.sigma(x);
    Permutation sx_inv = sx_perm.inverse();
    for (int y = 0; y < n; ++y) {
      if (ax.brace.dot(sx, ax.sigma[y]) != ax.sigma[sx_perm(y)])
        throw InternalInvariantError("sigma is not equivariant (Prop. 3)");
      int lhs = ax.brace.dot(ax.brace.inv(sx), ax.sigma[y]);
      if (lhs != ax.sigma[sx_inv(y)])
        throw InternalInvariantError("sigma is not equivariant under inverses");
    }
  }
  std::vector<int> sigma_image(ax.sigma.begin(), ax.sigma.end());
  std::sort(sigma_image.begin(), sigma_image.end());
  sigma_image.erase(std::unique(sigma_image.begin(), sigma_image.end()),
                    sigma_image.end());
  if (!is_cycle_base(ax.brace, sigma_image))
    throw InternalInvariantError("sigma(X) is not a cycle base of A(X)");
  return ax;
}

PermGroup permutation_group(const CycleSet& cs, std::size_t cap) {
  std::vector<Permutation> gens;
  gens.reserve(cs.size());
  for (int x = 0; x < cs.size(); ++x) gens.push_back(cs.sigma(x));
  PermGroup g = PermGroup::close(std::move(gens), cs.size(), cap);
  if (!g.is_solvable())
    throw InternalInvariantError("G(X) is not solvable");
  return g;
}

std::vector<int> induced_af(const CycleSetMorphism& f, const AXBrace& ax_source,
                            const AXBrace& ax_target) {
  if (!f.is_surjective()) throw ValidationError("NotSurjective");
  const CycleSet& target_cs = f.target;
  const int order = static_cast<int>(ax_source.perm_of.size());

  // Map rep word x1..xk to the element reached by f(x1)..f(xk).
  std::map<std::vector<int>, int> target_index;
  for (int i = 0; i < static_cast<int>(ax_target.perm_of.size()); ++i)
    target_index[ax_target.perm_of[i].images()] = i;
  std::vector<int> out(order);
  for (int g = 0; g < order; ++g) {
    std::vector<int> word;
    word.reserve(ax_source.rep_word[g].size());
    for (int x : ax_source.rep_word[g]) word.push_back(f.map[x]);
    Permutation p = replay(target_cs, Permutation::identity(target_cs.size()), word);
    auto it = target_index.find(p.images());
    if (it == target_index.end())
      throw InternalInvariantError("WellDefinednessFailure: A(f) image escaped A(Y)");
    out[g] = it->second;
  }

  // Well-definedness certified by the homomorphism property on both
  // operations over all pairs, plus the commuting sigma diagram.
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) {
      if (out[ax_source.brace.add(g, h)] != ax_target.brace.add(out[g], out[h]) ||
          out[ax_source.brace.circle(g, h)] !=
              ax_target.brace.circle(out[g], out[h]))
        throw InternalInvariantError("WellDefinednessFailure: A(f) not a morphism");
    }
  for (int x = 0; x < f.source.size(); ++x)
    if (out[ax_source.sigma[x]] != ax_target.sigma[f.map[x]])
      throw InternalInvariantError("A(f) diagram does not commute");
  std::vector<char> hit(ax_target.perm_of.size(), 0);
  for (int v : out) hit[v] = 1;
  if (std::count(hit.begin(), hit.end(), 0) > 0)
    throw InternalInvariantError("A(f) is not surjective");
  return out;
}

std::vector<int> induced_af(const CycleSetMorphism& f) {
  AXBrace ax_source = build_ax(f.source);
  AXBrace ax_target = build_ax(f.target);
  return induced_af(f, ax_source, ax_target);
}

}  // namespace ybcs
