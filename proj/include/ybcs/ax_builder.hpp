#pragma once

#include <cstddef>
#include <vector>

#include "ybcs/brace.hpp"
#include "ybcs/cycle_set.hpp"
#include "ybcs/perm_group.hpp"
#include "ybcs/permutation.hpp"

namespace ybcs {

// An element of the free abelian group on a cycle set X: an integer
// coefficient vector indexed by X, carrying the extended dot, circle
// and exponent arithmetic.
class FreeVector {
 public:
  FreeVector(CycleSet base, std::vector<long long> coeffs);
  static FreeVector zero(const CycleSet& base);
  static FreeVector generator(const CycleSet& base, int x);

  const CycleSet& base() const { return base_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  // The permutation of X induced by the adjoint action of this vector,
  // computed by peeling one generator at a time via
  // perm(a + e_x) = sigma(perm(a)(x)) ∘ perm(a).
  Permutation perm() const;

  friend FreeVector operator+(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator-(const FreeVector& a, const FreeVector& b);
  friend bool operator==(const FreeVector&, const FreeVector&) = default;

 private:
  CycleSet base_;
  std::vector<long long> coeffs_;

  void check_same_base(const FreeVector& other) const;
  friend FreeVector vec_dot(const FreeVector&, const FreeVector&);
  friend FreeVector vec_exp(const FreeVector&, const FreeVector&);
};

// a.b: coordinatewise application of perm(a) to b.
FreeVector vec_dot(const FreeVector& a, const FreeVector& b);
// a^b: coordinatewise application of perm(b)^-1 to a.
FreeVector vec_exp(const FreeVector& a, const FreeVector& b);
// a∘b = a^b + b.
FreeVector vec_circle(const FreeVector& a, const FreeVector& b);

// The finite brace A(X) together with its dictionary back to X:
// elements are canonically identified with the permutations of X they
// induce, the circle operation is composition, and sigma embeds the
// retraction of X as a cycle base.
struct AXBrace {
  Brace brace;
  std::vector<Permutation> perm_of;          // element -> permutation of X
  std::vector<int> sigma;                    // x -> element index of sigma(x)
  std::vector<std::vector<int>> rep_word;    // lex-least BFS generator word
  int element_of(const Permutation& p) const;  // throws if absent
};

// Builds A(X) by breadth-first additive closure from 0.
// Verifies all brace axioms, the equivariance of sigma, and that
// sigma(X) is a cycle base. Throws CapExceeded past `cap` elements.
AXBrace build_ax(const CycleSet& cs, std::size_t cap = PermGroup::kDefaultCap);

// G(X): the closure of {sigma(x)}; equals the adjoint group of A(X).
PermGroup permutation_group(const CycleSet& cs,
                            std::size_t cap = PermGroup::kDefaultCap);

// The brace morphism A(f) : A(X) -> A(Y) induced by a surjective cycle
// set morphism, as an element map (index in build_ax(X) order).
// Verified to preserve both operations, to be surjective, and to make
// the sigma diagram commute. Throws NotSurjective / ValidationError.
std::vector<int> induced_af(const CycleSetMorphism& f, const AXBrace& ax_source,
                            const AXBrace& ax_target);
std::vector<int> induced_af(const CycleSetMorphism& f);

}  // namespace ybcs
