#pragma once

#include <utility>
#include <vector>

#include "ybcs/permutation.hpp"

namespace ybcs {

// A finite brace on {0..N-1} given by two full Cayley tables sharing
// the neutral element 0: an abelian addition and the adjoint (circle)
// operation, linked by (a+b)∘c = (a∘c) − c + (b∘c).
class Brace {
 public:
  // Full axiom check; throws ValidationError naming the first violated
  // axiom (AddNotAbelianGroup, CircleNotGroup, NeutralMismatch,
  // GVViolation(a,b,c)).
  static Brace validate(std::vector<std::vector<int>> add,
                        std::vector<std::vector<int>> circle);

  // The brace with circle = add on the cyclic group Z_n.
  static Brace trivial_cyclic(int n);

  int order() const { return n_; }
  int add(int a, int b) const { return add_[a][b]; }
  int circle(int a, int b) const { return circ_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }  // adjoint inverse a'
  int sub(int a, int b) const { return add_[a][neg_[b]]; }
  const std::vector<std::vector<int>>& add_table() const { return add_; }
  const std::vector<std::vector<int>>& circle_table() const { return circ_; }

  // Exponent action a^c = (a∘c) − c, so that a∘c = a^c + c.
  int exponent(int a, int c) const { return sub(circ_[a][c], c); }
  // Cycle-set operation b.c = (c+b)∘b'; sigma(b) = b.(−) is a bijection.
  int dot(int b, int c) const { return circ_[add_[c][b]][inv_[b]]; }
  Permutation sigma_perm(int b) const;

  // Ring-style product ab = a∘b − a − b, derived helper only.
  int ring_product(int a, int b) const { return sub(sub(circ_[a][b], a), b); }

  // Additive order of an element.
  int add_order(int a) const;

  bool operator==(const Brace&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> add_, circ_;
  std::vector<int> neg_, inv_;
};

// A subset of a brace's elements, classified by the predicates below.
struct BraceSubset {
  const Brace* parent = nullptr;
  std::vector<int> members;  // sorted
};

// Soc(A) = {a | a.b = b for all b}; always an ideal.
BraceSubset socle(const Brace& b);

bool is_additive_subgroup(const BraceSubset& s);
// Additive subgroup invariant under every sigma(b) (equivalently,
// closed under a -> a^b; the two closures agree for finite braces).
bool is_right_ideal(const BraceSubset& s);
// Right ideal that is also normal in the adjoint group.
bool is_ideal(const BraceSubset& s);

// Quotient brace by an ideal, with the projection map.
// Coset of 0 is element 0. Throws NotAnIdeal.
std::pair<Brace, std::vector<int>> quotient(const Brace& b, const BraceSubset& ideal);

// The p-primary components of (A,+), ordered by increasing p.
// Each is a right ideal; together they form an internal direct sum.
std::vector<BraceSubset> primary_decomposition(const Brace& b);

struct Prop2Report {
  bool mutual_action_identity = true;     // b∘a = (b^a . a) ∘ b^a
  bool ideal_identities_checked = false;  // only when I is an ideal
  bool ideal_identities_hold = true;      // a.b = b and b.a = b∘a∘b'
};

// Verifies the mutual-adjoint-action identities on a decomposition
// A = I ⊕ J of right ideals. Throws DecompositionInvalid if I, J do
// not form one.
Prop2Report check_prop2(const Brace& b, const BraceSubset& i, const BraceSubset& j);

// True iff s is invariant under every sigma(a) and additively generates A.
bool is_cycle_base(const Brace& b, const std::vector<int>& s);

// Invariant factors d_1 | d_2 | ... of the additive group.
std::vector<int> additive_invariant_factors(const Brace& b);

}  // namespace ybcs
