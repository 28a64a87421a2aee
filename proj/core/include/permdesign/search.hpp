#pragma once

#include "permdesign/design.hpp"
#include "permdesign/perm_set.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace permdesign {

/// Node budgets are explicit configuration. For the branched sharp-set
/// search the budget applies per top-level branch, which keeps outcomes
/// identical for every worker count even when a budget binds.
struct SearchBudget {
  std::uint64_t max_nodes = 20'000'000;
};

enum class SearchStatus { found, exhausted, inconclusive };

struct MinDesignSearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  int n = 0;
  int t = 0;
  int max_size = 0;
  std::optional<PermSet> design;
  std::optional<DesignReport> report; // re-verification of any hit
  std::uint64_t subsets_checked = 0;
  // progress marker for inconclusive runs: sizes below this were exhausted
  int last_complete_size = 0;
  std::string predicate;
};

/// Size-ascending exhaustive scan over the identity-containing subsets of
/// S_n (every design class has such a representative, frequencies being
/// translation invariant). Returns the first t-design found together with
/// its re-verified report, or an exhaustion certificate. Capped at n <= 5.
MinDesignSearchResult exhaustive_min_design(int n, int t, int max_size,
                                            const SearchBudget& budget = {});

struct SharpSearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  int n = 0;
  int t = 0;
  std::optional<PermSet> set;
  std::optional<DesignReport> report;
  /// found: nodes expanded inside the successful branch;
  /// exhausted/inconclusive: total over all branches. Both are independent
  /// of the worker count.
  std::uint64_t nodes = 0;
  std::uint64_t branches_aborted = 0;
};

/// Backtracking search for a sharply t-transitive set: t = 1 builds n
/// permutations pairwise at distance n (a Latin square), t = 2 builds
/// n(n-1) permutations pairwise at distance >= n-1. Candidates are tried in
/// lexicographic order; the reported set is the lexicographically least
/// success regardless of worker count. Caps: n <= 8 for t = 1, n <= 5 for
/// t = 2.
SharpSearchResult search_sharp_set(int n, int t, int workers = 1,
                                   const SearchBudget& budget = {});

} // namespace permdesign
