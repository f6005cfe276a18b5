// Acceptance suite: runs every acceptance criterion end to end and
// prints one pass/fail line per criterion. Exits nonzero on any
// failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "naive_oracle.hpp"
#include "ybcs/ax_builder.hpp"
#include "ybcs/brace.hpp"
#include "ybcs/covering.hpp"
#include "ybcs/cycle_set.hpp"
#include "ybcs/enumeration.hpp"
#include "ybcs/frobenius.hpp"
#include "ybcs/json_io.hpp"

using namespace ybcs;

namespace {

int g_failures = 0;

void require(bool cond, const std::string& detail) {
  if (!cond) throw std::runtime_error(detail);
}

void criterion(int num, const std::string& name, const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (failure.empty()) {
    std::printf("[PASS] criterion %d: %s (%.2fs)\n", num, name.c_str(), secs);
  } else {
    std::printf("[FAIL] criterion %d: %s — %s\n", num, name.c_str(),
                failure.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

int jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Enumerated classes per size, computed once and shared.
std::map<int, std::vector<CycleSet>>& classes_by_size() {
  static std::map<int, std::vector<CycleSet>> cache;
  return cache;
}

const std::vector<CycleSet>& classes(int n) {
  auto& cache = classes_by_size();
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, enumerate_all(n, {}, jobs())).first;
  return it->second;
}

void criterion1_example2_end_to_end() {
  nlohmann::json doc = nlohmann::json::parse(
      R"({"n": 4, "sigma": [[1,4,3,2],[2,3,4,1],[4,1,2,3],[3,2,1,4]]})");
  CycleSet cs = cycle_set_from_json(doc);  // all 64 triples checked
  require(cs == ybcs::testing::example2(), "JSON does not decode to the example");

  Solution sol = to_solution(cs);  // YBE, involutivity, non-degeneracy
  require(from_solution(sol) == cs, "roundtrip failed");

  PermGroup g = permutation_group(cs);
  require(g.order() == 8, "|G(X)| != 8");
  require(g.recognize_dihedral() == 4, "G(X) not recognized as D8");
  require(g.is_transitive(), "G(X) not transitive");
  require(is_irretractable(cs), "not irretractable");
  require(classify_action(g).kind == ActionKind::TransitiveOther,
          "action not Transitive-Other");

  AXBrace ax = build_ax(cs);  // brace axioms verified internally
  require(ax.brace.order() == 8, "|A(X)| != 8");
  for (const auto& p : ax.perm_of)
    require(g.contains(p), "adjoint group differs from G(X)");

  require(fundamental_group(cs).order() == 2, "|pi1| != 2");
  auto [cover, report] = universal_covering(cs);
  require(cover.size() == 8, "covering size != 8");
  require(report.is_simply_transitive, "covering action not Regular");
  // A(p) bijectivity is verified inside universal_covering.

  require(ramirez_check(cs).verdict == RamirezVerdict::CounterexampleEvenCase,
          "not flagged as even-case counterexample");
}

void criterion2_frobenius_scan() {
  ScanReport report = frobenius_scan(6, jobs());
  require(report.flagged.empty() && !report.violation,
          "a Frobenius action was flagged");
}

void criterion3_ramirez_scan() {
  ScanReport report = ramirez_scan(6, jobs());
  require(!report.violation, "odd-case violation flagged");
  bool even_counterexample_at_4 = false;
  for (const auto& f : report.flagged) {
    PermGroup g = permutation_group(f.cs);
    auto m = g.recognize_dihedral();
    require(m.has_value(), "flagged instance without dihedral G(X)");
    if (*m == 3) {
      require(f.cs.size() == 6, "D6 hit with |X| != 6");
      require(fundamental_group(f.cs).order() == 1, "D6 hit with nontrivial pi1");
    }
    if (f.reason == "CounterexampleEvenCase" && f.cs.size() <= 4)
      even_counterexample_at_4 = true;
    require(f.cs.size() != 3 || *m != 3, "D6 hit with |X| = 3");
  }
  require(even_counterexample_at_4,
          "no even-case counterexample found at size <= 4");
}

void criterion4_proposition4() {
  for (int m : {3, 5, 7, 9, 15}) {
    PermGroup g = dihedral_natural_action(m);
    ActionClassification c = classify_action(g);
    require(c.kind == ActionKind::Frobenius,
            "m = " + std::to_string(m) + " not Frobenius");
    FrobeniusStructureReport rep = verify_frobenius_structure(c, g);
    require(rep.kernel_order == static_cast<std::size_t>(m) &&
                rep.complement_order == 2,
            "kernel/complement orders wrong at m = " + std::to_string(m));
    // Kernel = rotation subgroup = the fixed-point-free elements + 1.
    for (int i : *c.kernel)
      require(g.element(i).is_identity() ||
                  g.element(i).fixed_point_count() == 0,
              "kernel contains a fixing element");
    require(rep.complement_divides_kernel_minus_one && rep.orders_coprime,
            "divisibility consequences failed at m = " + std::to_string(m));
  }
  for (int m : {4, 6, 8})
    require(classify_action(dihedral_natural_action(m)).kind !=
                ActionKind::Frobenius,
            "m = " + std::to_string(m) + " wrongly Frobenius");
}

void criterion5_completeness_oracle() {
  for (int n = 1; n <= 4; ++n) {
    long long naive = ybcs::testing::naive_count(n);
    long long fast = static_cast<long long>(classes(n).size());
    require(naive == fast, "count mismatch at n = " + std::to_string(n) +
                               " (naive " + std::to_string(naive) + ", search " +
                               std::to_string(fast) + ")");
  }
}

void criterion6_brace_invariants() {
  for (int n = 1; n <= 5; ++n)
    for (const CycleSet& cs : classes(n)) {
      // build_ax verifies the brace axioms, Prop. 3 equivariance in
      // both directions, and that sigma(X) is a cycle base.
      AXBrace ax = build_ax(cs);
      const Brace& b = ax.brace;
      require(b.order() == permutation_group(cs).order(), "|A(X)| != |G(X)|");
      const int N = b.order();
      for (int a = 0; a < N; ++a)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) {
            require(b.dot(a, b.add(c, d)) == b.add(b.dot(a, c), b.dot(a, d)),
                    "left distributivity failed");
            require(b.dot(b.add(a, c), d) == b.dot(b.dot(a, c), b.dot(a, d)),
                    "additive symmetry failed");
            require(b.circle(a, c) == b.add(b.exponent(a, c), c),
                    "circle/exponent dictionary failed");
            require(b.dot(b.circle(a, c), d) == b.dot(a, b.dot(c, d)),
                    "module law failed");
            require(b.exponent(b.add(a, c), d) ==
                        b.add(b.exponent(a, d), b.exponent(c, d)),
                    "exponent additivity failed");
            require(b.exponent(a, b.circle(c, d)) ==
                        b.exponent(b.exponent(a, c), d),
                    "exponent composition failed");
          }
      require(is_ideal(socle(b)), "socle not an ideal");
      auto comps = primary_decomposition(b);
      for (const auto& comp : comps) {
        require(is_right_ideal(comp), "primary component not a right ideal");
        if (comps.size() < 2) continue;
        // Complement: everything of additive order coprime to the
        // component's prime.
        int p = 2;
        while (b.add_order(comp.members[1]) % p != 0) ++p;
        std::vector<int> others;
        for (int a = 0; a < N; ++a)
          if (b.add_order(a) % p != 0) others.push_back(a);
        Prop2Report rep = check_prop2(b, comp, BraceSubset{&b, others});
        require(rep.mutual_action_identity, "Eq. (13) failed on a decomposition");
      }
    }
}

void criterion7_covering_suite() {
  for (int n = 1; n <= 5; ++n)
    for (const CycleSet& cs : classes(n)) {
      if (!is_indecomposable(cs)) continue;
      PermGroup g = permutation_group(cs);
      PermGroup pi1 = fundamental_group(cs);
      require(pi1.order() * cs.size() == g.order(), "|pi1|*|X| != |G(X)|");
      // universal_covering verifies its full postcondition suite.
      auto [cover, report] = universal_covering(cs);
      require(fundamental_group(cover).order() == 1,
              "covering has nontrivial pi1");
    }
}

void criterion8_example1_fixture() {
  CycleSet cs = ybcs::testing::example2();
  CycleSet y = adjoin_zero(cs);
  require(is_irretractable(y), "Y = X + {0} not irretractable");

  require(cs.op(0, 0) == 0, "fixture element x with x.x = x missing");
  CycleSet z = sub_cycle_set(y, {0, 4});
  require(z == CycleSet::trivial(2), "Z does not have the trivial table");
  require(retraction(z).first.size() == 1, "Z not retractable");

  AXBrace ax_y = build_ax(y);
  require(ax_y.sigma[0] != ax_y.sigma[4],
          "sigma_Y not injective on Z");  // composite Z -> A(Y) injective
  AXBrace ax_z = build_ax(z);
  require(ax_z.brace.order() == 1, "sigma_Z does not collapse Z");
  // |sigma_Y(Z)| = 2 > |A(Z)| = 1: the composite cannot factor.
}

void criterion9_free_vector_laws() {
  CycleSet cs = ybcs::testing::example2();
  std::mt19937 rng(123456);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_vec = [&] {
    std::vector<long long> c(cs.size());
    for (auto& v : c) v = coeff(rng);
    return FreeVector(cs, std::move(c));
  };
  for (int rep = 0; rep < 1000; ++rep) {
    FreeVector a = random_vec(), b = random_vec(), c = random_vec();
    require(vec_dot(a, b + c) == vec_dot(a, b) + vec_dot(a, c), "Eq. (5)");
    require(vec_dot(a + b, c) == vec_dot(vec_dot(a, b), vec_dot(a, c)),
            "Eq. (6)");
    require(vec_circle(a, b) == vec_exp(a, b) + b, "Eq. (7)");
    require(vec_dot(vec_circle(a, b), c) == vec_dot(a, vec_dot(b, c)),
            "Eq. (8)");
    require(vec_exp(a + b, c) == vec_exp(a, c) + vec_exp(b, c),
            "exponent additivity");
    require(vec_exp(a, vec_circle(b, c)) == vec_exp(vec_exp(a, b), c),
            "exponent composition");
    FreeVector ba = vec_exp(b, a);
    require(vec_circle(b, a) == vec_circle(vec_dot(ba, a), ba), "Eq. (13)");
  }
}

}  // namespace

int main() {
  criterion(1, "4-element example end to end", criterion1_example2_end_to_end);
  criterion(4, "odd dihedral groups are Frobenius, even are not",
            criterion4_proposition4);
  criterion(5, "enumeration completeness against the naive oracle",
            criterion5_completeness_oracle);
  criterion(6, "brace invariant suite over all classes of size <= 5",
            criterion6_brace_invariants);
  criterion(7, "covering suite over indecomposable classes of size <= 5",
            criterion7_covering_suite);
  criterion(8, "adjoin-zero fixture and non-factorization",
            criterion8_example1_fixture);
  criterion(9, "free-vector laws on 1000 random triples",
            criterion9_free_vector_laws);
  criterion(2, "no Frobenius action among all cycle sets of size <= 6",
            criterion2_frobenius_scan);
  criterion(3, "dihedral scan: odd case forced, even counterexample found",
            criterion3_ramirez_scan);
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
