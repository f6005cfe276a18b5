#include "ybcs/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <thread>

#include "ybcs/ax_builder.hpp"
#include "ybcs/covering.hpp"
#include "ybcs/errors.hpp"
#include "ybcs/frobenius.hpp"

namespace ybcs {

bool EnumerationFilter::accepts(const CycleSet& cs) const {
  if (indecomposable_only && !is_indecomposable(cs)) return false;
  if (irretractable_only && !is_irretractable(cs)) return false;
  if (extra && !extra(cs)) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> all_rows(int n) {
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 0);
  std::vector<std::vector<int>> rows;
  do {
    rows.push_back(row);
  } while (std::next_permutation(row.begin(), row.end()));
  return rows;
}

class Search {
 public:
  Search(int n, const std::vector<std::vector<int>>& rows,
         const EnumerationFilter& filter,
         const std::function<void(const CycleSet&)>& sink)
      : n_(n), rows_(rows), filter_(filter), sink_(sink),
        table_(n, std::vector<int>(n)) {}

  // Explores the subtree below a fixed first-row choice.
  void run_first_row(int row_index) {
    // A lex-minimal table has t[0][0] <= 1: relabeling can always move a
    // diagonal fixed point of the square map to position 0, or failing
    // that send t[i][i] to 1.  Larger values never survive is_canonical.
    if (rows_[row_index][0] > 1) return;
    table_[0] = rows_[row_index];
    if (consistent_after(0)) assign(1);
  }

  void run_all() {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      run_first_row(static_cast<int>(i));
  }

 private:
  void assign(int r) {
    if (r == n_) {
      accept_leaf();
      return;
    }
    // If some already-checked triple pins down row r, the cycle law
    // row_a . row_x = row_b . row_y leaves a single candidate; any other
    // row would fail consistent_after anyway.
    if (std::optional<std::vector<int>> forced = forced_row(r)) {
      table_[r] = *std::move(forced);
      if (row_admissible(r) && consistent_after(r)) assign(r + 1);
      return;
    }
    for (const auto& row : rows_) {
      table_[r] = row;
      if (row_admissible(r) && consistent_after(r)) assign(r + 1);
    }
  }

  // With rows x, y and a = t[x][y] assigned and b = t[y][x] == r not
  // yet assigned, the law t[a][t[x][z]] = t[b][t[y][z]] determines row
  // r as row_a . row_x . row_y^-1 (and symmetrically).
  std::optional<std::vector<int>> forced_row(int r) const {
    for (int x = 0; x < r; ++x)
      for (int y = 0; y < r; ++y) {
        int a = table_[x][y], b = table_[y][x];
        int known, kx, ky;  // row r = row_known . row_kx . row_ky^-1
        if (a < r && b == r) {
          known = a, kx = x, ky = y;
        } else if (b < r && a == r) {
          known = b, kx = y, ky = x;
        } else {
          continue;
        }
        std::vector<int> row(n_);
        for (int z = 0; z < n_; ++z)
          row[table_[ky][z]] = table_[known][table_[kx][z]];
        return row;
      }
    return std::nullopt;
  }

  // Companion to the t[0][0] <= 1 first-row prune: when t[0][0] == 1
  // the square map of a canonical table is fixed-point-free.
  bool row_admissible(int r) const {
    return table_[0][0] == 0 || table_[r][r] != r;
  }

  // Checks the cycle-set law on all triples that became fully
  // determined when row r was assigned.
  bool consistent_after(int r) const {
    for (int x = 0; x <= r; ++x)
      for (int y = 0; y <= r; ++y) {
        int a = table_[x][y], b = table_[y][x];
        if (a > r || b > r) continue;
        if (x != r && y != r && a != r && b != r) continue;
        for (int z = 0; z < n_; ++z)
          if (table_[a][table_[x][z]] != table_[b][table_[y][z]]) return false;
      }
    return true;
  }

  void accept_leaf() {
    CycleSet cs = CycleSet::validate(table_);
    if (!is_canonical(cs)) return;
    if (filter_.accepts(cs)) sink_(cs);
  }

  int n_;
  const std::vector<std::vector<int>>& rows_;
  const EnumerationFilter& filter_;
  const std::function<void(const CycleSet&)>& sink_;
  std::vector<std::vector<int>> table_;
};

}  // namespace

void enumerate(int n, const EnumerationFilter& filter,
               const std::function<void(const CycleSet&)>& sink, int jobs,
               int max_size) {
  if (n < 1 || n > max_size) throw ValidationError("SizeOutOfRange");
  std::vector<std::vector<int>> rows = all_rows(n);
  if (jobs <= 1) {
    Search search(n, rows, filter, sink);
    search.run_all();
    return;
  }
  // Workers own disjoint first-row subtrees; buckets are then emitted
  // in first-row order, matching the sequential output exactly.
  std::vector<std::vector<CycleSet>> buckets(rows.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < rows.size(); i += jobs) {
        auto collect = [&](const CycleSet& cs) { buckets[i].push_back(cs); };
        Search search(n, rows, filter, collect);
        search.run_first_row(static_cast<int>(i));
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& bucket : buckets)
    for (const auto& cs : bucket) sink(cs);
}

std::vector<CycleSet> enumerate_all(int n, const EnumerationFilter& filter,
                                    int jobs, int max_size) {
  std::vector<CycleSet> out;
  enumerate(n, filter, [&](const CycleSet& cs) { out.push_back(cs); }, jobs,
            max_size);
  return out;
}

namespace {

ScanReport run_scan(
    const std::string& name, int n_max, int jobs, int max_size,
    const EnumerationFilter& filter,
    const std::function<void(const CycleSet&, ScanReport&)>& visit) {
  auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.scan = name;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    report.counts[n] = 0;
    enumerate(n, filter,
              [&](const CycleSet& cs) {
                ++report.counts[n];
                visit(cs, report);
              },
              jobs, max_size);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace

ScanReport frobenius_scan(int n_max, int jobs, int max_size) {
  return run_scan(
      "frobenius", n_max, jobs, max_size, {},
      [](const CycleSet& cs, ScanReport& report) {
        PermGroup g = permutation_group(cs);
        ActionClassification c = classify_action(g);
        if (c.kind == ActionKind::Frobenius) {
          // Re-verify before flagging; a hit contradicts the theorem.
          verify_frobenius_structure(c, g);
          report.flagged.push_back({cs, "G(X) acts as a Frobenius group"});
          report.violation = true;
        }
      });
}

ScanReport ramirez_scan(int n_max, int jobs, int max_size) {
  EnumerationFilter filter;
  filter.indecomposable_only = true;
  return run_scan(
      "ramirez", n_max, jobs, max_size, filter,
      [](const CycleSet& cs, ScanReport& report) {
        RamirezResult res = ramirez_check(cs);
        if (res.verdict == RamirezVerdict::NotApplicable) return;
        report.flagged.push_back({cs, to_string(res.verdict)});
        if (res.verdict == RamirezVerdict::OddCaseViolation)
          report.violation = true;
      });
}

ScanReport rav_scan(int n_max, int jobs, int max_size) {
  EnumerationFilter filter;
  filter.indecomposable_only = true;
  return run_scan(
      "rav", n_max, jobs, max_size, filter,
      [](const CycleSet& cs, ScanReport& report) {
        for (int x = 0; x < cs.size(); ++x)
          for (int len : cs.sigma(x).cycle_lengths())
            if (len > 1 && std::gcd(len, cs.size()) == 1) {
              report.flagged.push_back(
                  {cs, "sigma(" + std::to_string(x) + ") has a cycle of length " +
                           std::to_string(len) + " coprime to |X|"});
              return;
            }
      });
}

}  // namespace ybcs
