#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ybcs/cycle_set.hpp"

namespace ybcs {

struct EnumerationFilter {
  bool indecomposable_only = false;
  bool irretractable_only = false;
  // Optional extra predicate applied last.
  std::function<bool(const CycleSet&)> extra;

  bool accepts(const CycleSet& cs) const;
};

inline constexpr int kDefaultMaxSize = 8;

// Isomorph-free exhaustive generation of cycle sets of size n: exactly
// one representative per isomorphism class (the canonical form), in a
// deterministic order. Backtracks over rows in lex order, pruning by
// the cycle-set law on fully determined triples; leaves are kept iff
// the table equals its canonical form.
// `jobs` > 1 splits the search at the first-row choice; the output
// order is identical to a sequential run.
// Throws ValidationError("SizeOutOfRange") outside [1, max_size].
void enumerate(int n, const EnumerationFilter& filter,
               const std::function<void(const CycleSet&)>& sink, int jobs = 1,
               int max_size = kDefaultMaxSize);

std::vector<CycleSet> enumerate_all(int n, const EnumerationFilter& filter = {},
                                    int jobs = 1,
                                    int max_size = kDefaultMaxSize);

struct FlaggedInstance {
  CycleSet cs;
  std::string reason;
};

struct ScanReport {
  std::string scan;
  int n_max = 0;
  std::map<int, long long> counts;  // instances examined, per size
  std::vector<FlaggedInstance> flagged;
  double elapsed_seconds = 0.0;
  // True when a flagged instance contradicts a theorem (exit status 2).
  bool violation = false;
};

// Checks that G(X) never acts as a Frobenius group on X, over all
// cycle sets of size <= n_max. Any Frobenius hit is re-verified and
// flagged as a theorem violation.
ScanReport frobenius_scan(int n_max, int jobs = 1,
                          int max_size = kDefaultMaxSize);

// Lists all indecomposable instances with dihedral G(X) = D_2m.
// Odd m with |X| != 2m is flagged as a violation; even-m
// counterexamples to the original conjecture are recorded.
ScanReport ramirez_scan(int n_max, int jobs = 1, int max_size = kDefaultMaxSize);

// Flags indecomposable instances where some sigma(x) contains a cycle
// of length > 1 coprime to |X|: counterexample candidates to the open
// decomposability question, reported but never asserted absent.
ScanReport rav_scan(int n_max, int jobs = 1, int max_size = kDefaultMaxSize);

}  // namespace ybcs
