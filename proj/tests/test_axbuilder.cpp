#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ybcs/ax_builder.hpp"
#include "ybcs/errors.hpp"

using namespace ybcs;
using ybcs::testing::example2;
using ybcs::testing::indecomposable2;

namespace {

FreeVector random_vector(const CycleSet& base, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<long long> c(base.size());
  for (auto& v : c) v = coeff(rng);
  return FreeVector(base, std::move(c));
}

}  // namespace

TEST_CASE("vec_perm on small vectors") {
  CycleSet cs = example2();
  CHECK(FreeVector::zero(cs).perm().is_identity());
  for (int x = 0; x < cs.size(); ++x)
    CHECK(FreeVector::generator(cs, x).perm() == cs.sigma(x));

  // perm(e_0 + e_1) = sigma(sigma(0)(1)) ∘ sigma(0).
  FreeVector v = FreeVector::generator(cs, 0) + FreeVector::generator(cs, 1);
  CHECK(v.perm() == cs.sigma(cs.op(0, 1)) * cs.sigma(0));

  // The defining recursion holds through negative coefficients:
  // perm(a + e_x) = sigma(perm(a)(x)) ∘ perm(a) for arbitrary a.
  std::mt19937 rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    FreeVector a = random_vector(cs, rng);
    CHECK((a - a).perm().is_identity());
    for (int x = 0; x < cs.size(); ++x) {
      Permutation pa = a.perm();
      CHECK((a + FreeVector::generator(cs, x)).perm() ==
            cs.sigma(pa(x)) * pa);
    }
  }
}

TEST_CASE("free vector laws over the 4-element example") {
  CycleSet cs = example2();
  std::mt19937 rng(20240815);
  for (int rep = 0; rep < 300; ++rep) {
    FreeVector a = random_vector(cs, rng), b = random_vector(cs, rng),
               c = random_vector(cs, rng);
    CHECK(vec_dot(a, b + c) == vec_dot(a, b) + vec_dot(a, c));
    CHECK(vec_dot(a + b, c).perm() ==
          vec_dot(vec_dot(a, b), vec_dot(a, c)).perm());
    CHECK(vec_dot(a + b, c) == vec_dot(vec_dot(a, b), vec_dot(a, c)));
    CHECK(vec_circle(a, b) == vec_exp(a, b) + b);
    CHECK(vec_dot(vec_circle(a, b), c) == vec_dot(a, vec_dot(b, c)));
    CHECK(vec_exp(a + b, c) == vec_exp(a, c) + vec_exp(b, c));
    CHECK(vec_exp(a, vec_circle(b, c)) == vec_exp(vec_exp(a, b), c));
    // b∘a = (b^a . a) ∘ b^a.
    FreeVector ba = vec_exp(b, a);
    CHECK(vec_circle(b, a) == vec_circle(vec_dot(ba, a), ba));
  }
  CHECK_THROWS_AS(vec_dot(FreeVector::zero(cs), FreeVector::zero(CycleSet::trivial(4))),
                  ValidationError);
}

TEST_CASE("circle neutral laws") {
  CycleSet cs = example2();
  std::mt19937 rng(5);
  FreeVector zero = FreeVector::zero(cs);
  for (int rep = 0; rep < 20; ++rep) {
    FreeVector a = random_vector(cs, rng);
    CHECK(vec_circle(a, zero) == a);
    CHECK(vec_circle(zero, a) == a);
    CHECK(vec_exp(a, zero) == a);
  }
}

TEST_CASE("build_ax on the trivial cycle set") {
  AXBrace ax = build_ax(CycleSet::trivial(3));
  CHECK(ax.brace.order() == 1);
}

TEST_CASE("build_ax on the 2-element indecomposable set") {
  AXBrace ax = build_ax(indecomposable2());
  CHECK(ax.brace.order() == 2);
  CHECK(ax.brace.add_table() == ax.brace.circle_table());
}

TEST_CASE("build_ax on the 4-element example") {
  CycleSet cs = example2();
  AXBrace ax = build_ax(cs);
  CHECK(ax.brace.order() == 8);

  PermGroup g = permutation_group(cs);
  CHECK(g.order() == 8);
  CHECK(g.recognize_dihedral() == 4);

  // The adjoint structure is permutation composition and the element
  // set is exactly G(X).
  for (const auto& p : ax.perm_of) CHECK(g.contains(p));
  for (int a = 0; a < ax.brace.order(); ++a)
    for (int b = 0; b < ax.brace.order(); ++b)
      CHECK(ax.perm_of[ax.brace.circle(a, b)] == ax.perm_of[a] * ax.perm_of[b]);

  // sigma is a cycle set morphism into the brace dot (Prop. 3).
  for (int x = 0; x < cs.size(); ++x)
    for (int y = 0; y < cs.size(); ++y)
      CHECK(ax.brace.dot(ax.sigma[x], ax.sigma[y]) == ax.sigma[cs.op(x, y)]);
}

TEST_CASE("free vectors with equal action map to the same A(X) element") {
  CycleSet cs = example2();
  AXBrace ax = build_ax(cs);
  std::mt19937 rng(17);
  for (int rep = 0; rep < 100; ++rep) {
    FreeVector a = random_vector(cs, rng);
    FreeVector b = random_vector(cs, rng);
    // a and a + (b - b) differ as free vectors but act identically.
    FreeVector collided = a + b - b;
    CHECK(ax.element_of(a.perm()) == ax.element_of(collided.perm()));
  }
}

TEST_CASE("permutation_group of adjoin_zero extends G(X) fixing the new point") {
  CycleSet cs = example2();
  CycleSet y = adjoin_zero(cs);
  PermGroup gx = permutation_group(cs);
  PermGroup gy = permutation_group(y);
  CHECK(gy.order() == gx.order());
  for (const auto& p : gy.elements()) CHECK(p(4) == 4);
}

TEST_CASE("induced_af") {
  CycleSet cs = example2();
  SUBCASE("identity morphism induces the identity") {
    std::vector<int> id{0, 1, 2, 3};
    CycleSetMorphism f = CycleSetMorphism::validate(cs, cs, id);
    std::vector<int> af = induced_af(f);
    for (std::size_t i = 0; i < af.size(); ++i) CHECK(af[i] == static_cast<int>(i));
  }
  SUBCASE("retraction of a retractable set induces a surjective brace morphism") {
    CycleSet triv = CycleSet::trivial(3);
    auto [ret, proj] = retraction(triv);
    std::vector<int> af = induced_af(proj);  // all verification is internal
    CHECK(af.size() == build_ax(triv).brace.order());
  }
  SUBCASE("non-surjective maps are rejected") {
    CycleSet triv2 = CycleSet::trivial(2);
    CycleSetMorphism f = CycleSetMorphism::validate(triv2, triv2, {0, 0});
    CHECK_FALSE(f.is_surjective());
    CHECK_THROWS_WITH_AS(induced_af(f), "NotSurjective", ValidationError);
  }
}

TEST_CASE("sigma into A(Y) does not factor through A(Z)") {
  // Z = {x, 0} inside Y = X ⊔ {0} embeds injectively into A(Y) via
  // sigma_Y, while sigma_Z collapses Z; so the composite cannot factor
  // through A(Z).
  CycleSet y = adjoin_zero(example2());
  AXBrace ax_y = build_ax(y);
  CHECK(ax_y.sigma[0] != ax_y.sigma[4]);  // injective on Z = {0-th element, zero}

  CycleSet z = sub_cycle_set(y, {0, 4});
  AXBrace ax_z = build_ax(z);
  CHECK(ax_z.brace.order() == 1);  // sigma_Z collapses everything
}
