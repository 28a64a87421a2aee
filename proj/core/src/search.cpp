#include "permdesign/search.hpp"

#include "permdesign/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace permdesign {

namespace {

std::vector<Permutation> all_permutations_sorted(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    images[static_cast<std::size_t>(x - 1)] = x;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out; // next_permutation walks lexicographic order from the identity
}

struct BranchOutcome {
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::optional<std::vector<int>> chain; // ascending indices of a success
};

struct SharpContext {
  const std::vector<Permutation>* perms = nullptr;
  int min_distance = 0;
  std::size_t target = 0;
  std::uint64_t budget = 0;
};

bool sharp_dfs(const SharpContext& ctx, std::vector<int>& chain,
               const std::vector<int>& candidates, BranchOutcome& outcome) {
  if (chain.size() == ctx.target)
    return true;
  if (chain.size() + candidates.size() < ctx.target)
    return false;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    if (++outcome.nodes > ctx.budget) {
      outcome.aborted = true;
      return false;
    }
    const int chosen = candidates[idx];
    std::vector<int> next;
    next.reserve(candidates.size() - idx);
    for (std::size_t j = idx + 1; j < candidates.size(); ++j)
      if (distance((*ctx.perms)[static_cast<std::size_t>(chosen)],
                   (*ctx.perms)[static_cast<std::size_t>(candidates[j])]) >=
          ctx.min_distance)
        next.push_back(candidates[j]);
    chain.push_back(chosen);
    if (sharp_dfs(ctx, chain, next, outcome))
      return true;
    chain.pop_back();
    if (outcome.aborted)
      return false;
  }
  return false;
}

BranchOutcome explore_branch(const SharpContext& ctx, int first) {
  BranchOutcome outcome;
  std::vector<int> chain{first};
  std::vector<int> candidates;
  const auto& perms = *ctx.perms;
  for (std::size_t j = static_cast<std::size_t>(first) + 1; j < perms.size();
       ++j)
    if (distance(perms[static_cast<std::size_t>(first)], perms[j]) >=
        ctx.min_distance)
      candidates.push_back(static_cast<int>(j));
  if (sharp_dfs(ctx, chain, candidates, outcome))
    outcome.chain = std::move(chain);
  return outcome;
}

} // namespace

MinDesignSearchResult exhaustive_min_design(int n, int t, int max_size,
                                            const SearchBudget& budget) {
  if (n < 1 || n > 5)
    throw error("exhaustive design search is capped at n <= 5");
  if (t < 1 || t > n)
    throw error("exhaustive design search needs 1 <= t <= n");
  if (max_size < 1)
    throw error("max_size must be at least 1");

  std::vector<Permutation> perms = all_permutations_sorted(n);
  const int total = static_cast<int>(perms.size());
  const int size_cap = std::min(max_size, total);

  MinDesignSearchResult result;
  result.n = n;
  result.t = t;
  result.max_size = max_size;
  result.predicate =
      "first " + std::to_string(t) + "-design (moment criterion) among the "
      "subsets of S_" + std::to_string(n) +
      " that contain the identity, enumerated in ascending size with "
      "combinations of the remaining permutations in lexicographic one-line "
      "order";

  FrequencyVector space = space_frequencies(n);
  std::vector<Rational> space_moments;
  for (int i = 1; i <= t; ++i)
    space_moments.push_back(moment(space, i));

  auto is_design = [&](const PermSet& set) {
    FrequencyVector freq = frequencies(set);
    for (int i = 1; i <= t; ++i)
      if (moment(freq, i) != space_moments[static_cast<std::size_t>(i - 1)])
        return false;
    return true;
  };

  for (int size = 1; size <= size_cap; ++size) {
    const int k = size - 1; // identity is always in
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      combo[static_cast<std::size_t>(i)] = i + 1; // indices into perms, 0 is id
    while (true) {
      if (++result.subsets_checked > budget.max_nodes) {
        result.status = SearchStatus::inconclusive;
        --result.subsets_checked;
        return result;
      }
      std::vector<Permutation> members{perms[0]};
      for (int idx : combo)
        members.push_back(perms[static_cast<std::size_t>(idx)]);
      PermSet candidate(n, std::move(members));
      if (is_design(candidate)) {
        result.status = SearchStatus::found;
        result.report = analyze(candidate, t); // search trusts nothing
        result.design = std::move(candidate);
        return result;
      }
      // advance the combination odometer
      int pos = k - 1;
      while (pos >= 0 &&
             combo[static_cast<std::size_t>(pos)] == total - (k - pos))
        --pos;
      if (pos < 0)
        break;
      ++combo[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k; ++j)
        combo[static_cast<std::size_t>(j)] =
            combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    result.last_complete_size = size;
  }
  result.status = SearchStatus::exhausted;
  return result;
}

SharpSearchResult search_sharp_set(int n, int t, int workers,
                                   const SearchBudget& budget) {
  if (t != 1 && t != 2)
    throw error("sharp search supports t in {1, 2}");
  if (t == 1 && (n < 1 || n > 8))
    throw error("sharp search with t = 1 is capped at n <= 8");
  if (t == 2 && (n < 2 || n > 5))
    throw error("sharp search with t = 2 needs 2 <= n <= 5");
  if (workers < 1)
    throw error("worker count must be at least 1");

  std::vector<Permutation> perms = all_permutations_sorted(n);
  SharpContext ctx;
  ctx.perms = &perms;
  ctx.min_distance = (t == 1) ? n : n - 1;
  ctx.target = (t == 1) ? static_cast<std::size_t>(n)
                        : static_cast<std::size_t>(n) * (n - 1);
  ctx.budget = budget.max_nodes;

  const int branches = static_cast<int>(perms.size());
  // Each worker walks its own branches in ascending order and stops at its
  // first success. The branch owning the lexicographically least solution is
  // always fully reached, so the reduced result does not depend on the
  // worker count.
  std::vector<std::map<int, BranchOutcome>> explored(
      static_cast<std::size_t>(workers));

  auto run = [&](int w) {
    for (int b = w; b < branches; b += workers) {
      BranchOutcome outcome = explore_branch(ctx, b);
      bool hit = outcome.chain.has_value();
      explored[static_cast<std::size_t>(w)].emplace(b, std::move(outcome));
      if (hit)
        break;
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(run, w);
    for (auto& thread : threads)
      thread.join();
  }

  std::map<int, BranchOutcome> merged;
  for (auto& per_worker : explored)
    for (auto& [branch, outcome] : per_worker)
      merged.emplace(branch, std::move(outcome));

  SharpSearchResult result;
  result.n = n;
  result.t = t;

  int best_branch = -1;
  for (const auto& [branch, outcome] : merged) {
    if (outcome.chain) {
      best_branch = branch;
      break;
    }
  }

  if (best_branch >= 0) {
    const BranchOutcome& winner = merged.at(best_branch);
    std::vector<Permutation> members;
    members.reserve(winner.chain->size());
    for (int idx : *winner.chain)
      members.push_back(perms[static_cast<std::size_t>(idx)]);
    PermSet found(n, std::move(members));
    result.status = SearchStatus::found;
    result.nodes = winner.nodes;
    for (const auto& [branch, outcome] : merged) {
      if (branch >= best_branch)
        break;
      if (outcome.aborted)
        ++result.branches_aborted;
    }
    // re-verify before reporting anything
    Transitivity verified = is_t_transitive(found, t);
    if (!verified.transitive || !verified.sharp)
      throw error("sharp search produced a non-sharp set; this is a defect");
    result.report = analyze(found, t);
    result.set = std::move(found);
    return result;
  }

  bool any_aborted = false;
  for (const auto& [branch, outcome] : merged) {
    result.nodes += outcome.nodes;
    if (outcome.aborted) {
      any_aborted = true;
      ++result.branches_aborted;
    }
  }
  result.status =
      any_aborted ? SearchStatus::inconclusive : SearchStatus::exhausted;
  return result;
}

} // namespace permdesign
