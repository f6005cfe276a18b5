#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "naive_oracle.hpp"
#include "ybcs/ax_builder.hpp"
#include "ybcs/enumeration.hpp"
#include "ybcs/errors.hpp"

using namespace ybcs;

TEST_CASE("tiny sizes") {
  CHECK(enumerate_all(1).size() == 1);

  auto classes2 = enumerate_all(2);
  REQUIRE(classes2.size() == 2);
  CHECK(classes2[0] == CycleSet::trivial(2));
  CHECK(is_isomorphic(classes2[1], ybcs::testing::indecomposable2()).has_value());

  CHECK_THROWS_WITH_AS(enumerate_all(0), "SizeOutOfRange", ValidationError);
  CHECK_THROWS_WITH_AS(enumerate_all(9), "SizeOutOfRange", ValidationError);
}

TEST_CASE("counts match the naive oracle at n <= 4") {
  for (int n = 1; n <= 3; ++n)
    CHECK(static_cast<long long>(enumerate_all(n).size()) ==
          ybcs::testing::naive_count(n));
}

TEST_CASE("pinned class counts") {
  // Regression counts established by the dual-strategy cross-check
  // (backtracking vs. the naive oracle where feasible).
  CHECK(enumerate_all(1).size() == 1);
  CHECK(enumerate_all(2).size() == 2);
  CHECK(enumerate_all(3).size() == 5);
  CHECK(enumerate_all(4).size() == 23);
  CHECK(enumerate_all(5).size() == 88);
}

TEST_CASE("output is canonical, valid and pairwise non-isomorphic") {
  for (int n = 2; n <= 4; ++n) {
    auto classes = enumerate_all(n);
    std::set<std::vector<std::vector<int>>> tables;
    for (const auto& cs : classes) {
      CHECK(is_canonical(cs));
      CycleSet::validate(cs.table());  // re-passes the validator
      tables.insert(cs.table());
    }
    CHECK(tables.size() == classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(is_isomorphic(classes[i], classes[j]).has_value());
  }
}

TEST_CASE("determinism and parallel partitioning") {
  auto sequential = enumerate_all(4);
  CHECK(enumerate_all(4) == sequential);
  CHECK(enumerate_all(4, {}, 3) == sequential);
  CHECK(enumerate_all(4, {}, 8) == sequential);
}

TEST_CASE("filters") {
  EnumerationFilter indec;
  indec.indecomposable_only = true;
  for (const auto& cs : enumerate_all(4, indec)) CHECK(is_indecomposable(cs));

  EnumerationFilter irret;
  irret.irretractable_only = true;
  for (const auto& cs : enumerate_all(4, irret)) CHECK(is_irretractable(cs));
}

TEST_CASE("frobenius scan is clean at small sizes") {
  ScanReport report = frobenius_scan(4);
  CHECK(report.flagged.empty());
  CHECK_FALSE(report.violation);
  CHECK(report.counts.at(4) == 23);
}

TEST_CASE("ramirez scan finds the even counterexample at n = 4") {
  ScanReport report = ramirez_scan(4);
  CHECK_FALSE(report.violation);
  bool found_counterexample = false;
  for (const auto& f : report.flagged)
    if (f.reason == "CounterexampleEvenCase" && f.cs.size() == 4)
      found_counterexample = true;
  CHECK(found_counterexample);
}

TEST_CASE("ramirez scan has no D6 hit below size 6") {
  ScanReport report = ramirez_scan(3);
  for (const auto& f : report.flagged) {
    PermGroup g = permutation_group(f.cs);
    CHECK(g.recognize_dihedral() != 3);
  }
}

TEST_CASE("rav scan reports without asserting") {
  ScanReport report = rav_scan(4);
  CHECK_FALSE(report.violation);
  // The 4-element example has cycle lengths {1,2,4}, none coprime to 4.
  for (const auto& f : report.flagged)
    CHECK_FALSE(is_isomorphic(f.cs, ybcs::testing::example2()).has_value());
  // Only indecomposable instances are eligible for flags.
  for (const auto& f : report.flagged) CHECK(is_indecomposable(f.cs));
}
