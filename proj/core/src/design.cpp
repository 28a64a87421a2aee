#include "permdesign/design.hpp"

#include "permdesign/charlier.hpp"
#include "permdesign/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace permdesign {

namespace {

// Integer distance histogram over unordered pairs, split by rows across
// workers. Each worker owns the rows i with i % workers == w.
std::vector<std::uint64_t> pair_histogram(const PermSet& set, int workers) {
  const auto& elems = set.elements();
  const int n = set.degree();
  const std::size_t m = elems.size();
  if (workers < 1)
    throw error("worker count must be at least 1");

  auto run = [&](int w, std::vector<std::uint64_t>& hist) {
    for (std::size_t i = static_cast<std::size_t>(w); i < m;
         i += static_cast<std::size_t>(workers))
      for (std::size_t j = i + 1; j < m; ++j)
        ++hist[static_cast<std::size_t>(distance(elems[i], elems[j]))];
  };

  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(workers),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  if (workers == 1) {
    run(0, partial[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(run, w, std::ref(partial[static_cast<std::size_t>(w)]));
    for (auto& thread : threads)
      thread.join();
  }

  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < hist.size(); ++i)
      hist[i] += part[i];
  return hist;
}

int half_range(int n) { return n / 2; }

// Ranks an ordered distinct-entry t-tuple (1-based points) among the
// n(n-1)...(n-t+1) such tuples, in lexicographic order.
std::uint64_t rank_tuple(const std::vector<int>& tuple, int n) {
  std::uint64_t rank = 0;
  std::uint64_t used_mask = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    int below = 0;
    for (int v = 1; v < tuple[j]; ++v)
      if (!(used_mask & (std::uint64_t{1} << v)))
        ++below;
    rank = rank * static_cast<std::uint64_t>(n - static_cast<int>(j)) +
           static_cast<std::uint64_t>(below);
    used_mask |= std::uint64_t{1} << tuple[j];
  }
  return rank;
}

// Advances an ordered distinct-entry tuple in lexicographic order; returns
// false after the last one.
bool next_tuple(std::vector<int>& tuple, int n) {
  const int t = static_cast<int>(tuple.size());
  for (int pos = t - 1; pos >= 0; --pos) {
    std::uint64_t used = 0;
    for (int j = 0; j < pos; ++j)
      used |= std::uint64_t{1} << tuple[static_cast<std::size_t>(j)];
    for (int candidate = tuple[static_cast<std::size_t>(pos)] + 1;
         candidate <= n; ++candidate) {
      if (used & (std::uint64_t{1} << candidate))
        continue;
      tuple[static_cast<std::size_t>(pos)] = candidate;
      used |= std::uint64_t{1} << candidate;
      // smallest unused completion to the right
      int fill = 1;
      for (int j = pos + 1; j < t; ++j) {
        while (used & (std::uint64_t{1} << fill))
          ++fill;
        tuple[static_cast<std::size_t>(j)] = fill;
        used |= std::uint64_t{1} << fill;
      }
      return true;
    }
  }
  return false;
}

// Saturates instead of overflowing; a saturated value always exceeds any
// in-memory set size, so the pigeonhole early-exit still fires.
std::uint64_t tuple_count(int n, int t) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t count = 1;
  for (int i = 0; i < t; ++i) {
    if (count > cap / static_cast<std::uint64_t>(n - i))
      return cap;
    count *= static_cast<std::uint64_t>(n - i);
  }
  return count;
}

} // namespace

FrequencyVector frequencies(const PermSet& set, int workers) {
  const int n = set.degree();
  const Int size = set.size();
  std::vector<std::uint64_t> hist = pair_histogram(set, workers);

  FrequencyVector freq;
  freq.n = n;
  freq.f.resize(static_cast<std::size_t>(n) + 1);
  const Int total = size * size;
  // diagonal pairs sit at distance 0; off-diagonal counts double for order
  freq.f[0] = make_rational(size, total);
  for (int i = 1; i <= n; ++i)
    freq.f[static_cast<std::size_t>(i)] =
        make_rational(2 * Int(hist[static_cast<std::size_t>(i)]), total);
  return freq;
}

FrequencyVector space_frequencies(int n) {
  if (n < 1)
    throw error("space frequencies need degree at least 1");
  RencontresTable table = rencontres(n);
  Int n_fact = factorial(n);
  FrequencyVector freq;
  freq.n = n;
  freq.f.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    freq.f[static_cast<std::size_t>(i)] = make_rational(valency(table, i), n_fact);
  return freq;
}

Rational moment(const FrequencyVector& freq, int i) {
  if (i < 1)
    throw error("moment order must be at least 1");
  Rational sum = 0;
  for (int j = 0; j <= freq.n; ++j) {
    Int power = 1;
    for (int e = 0; e < i; ++e)
      power *= j;
    sum += freq.f[static_cast<std::size_t>(j)] * power;
  }
  return sum;
}

bool is_t_design_moments(const PermSet& set, int t) {
  if (t < 1 || t > set.degree())
    throw error("moment criterion needs 1 <= t <= n");
  FrequencyVector freq = frequencies(set);
  FrequencyVector space = space_frequencies(set.degree());
  for (int i = 1; i <= t; ++i)
    if (moment(freq, i) != moment(space, i))
      return false;
  return true;
}

Rational dual_frequency(const FrequencyVector& freq, int k) {
  if (k < 1 || k > half_range(freq.n))
    throw error("dual frequency index must be in [1..n/2]");
  IntPolynomial poly = reversed_charlier(k, freq.n);
  Rational sum = 0;
  for (int i = 0; i <= freq.n; ++i)
    sum += freq.f[static_cast<std::size_t>(i)] * poly(i);
  return sum;
}

bool is_t_design_dual(const PermSet& set, int t) {
  if (t < 1 || t > half_range(set.degree()))
    throw error("dual criterion is only guaranteed for t <= n/2");
  FrequencyVector freq = frequencies(set);
  for (int k = 1; k <= t; ++k)
    if (dual_frequency(freq, k) != 0)
      return false;
  return true;
}

bool is_t_design_tcrit(const PermSet& set, int t) {
  const int n = set.degree();
  if (t < 1)
    throw error("criterion needs t >= 1");
  if (n < 2 * t)
    throw error("criterion requires n >= 2t");
  FrequencyVector freq = frequencies(set);
  for (int k = 1; k <= t; ++k) {
    IntPolynomial poly = reversed_charlier(k, n);
    Int at_zero = poly(0);
    Rational lhs = 0;
    for (int i = 1; i <= n; ++i)
      lhs += freq.f[static_cast<std::size_t>(i)] * (at_zero - poly(i));
    if (lhs != Rational(at_zero))
      return false;
  }
  return true;
}

Transitivity is_t_transitive(const PermSet& set, int t) {
  const int n = set.degree();
  if (t < 1 || t > n)
    throw error("transitivity needs 1 <= t <= n");
  if (n > 62)
    throw error("transitivity check supports degree up to 62");

  const std::uint64_t targets = tuple_count(n, t);
  // fewer elements than tuples cannot even cover them
  if (static_cast<std::uint64_t>(set.size()) < targets)
    return {false, false};

  std::vector<std::uint32_t> stamp(targets, 0);
  std::vector<std::uint32_t> count(targets, 0);
  std::uint32_t generation = 0;

  std::vector<int> source(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j)
    source[static_cast<std::size_t>(j)] = j + 1;

  bool sharp = true;
  std::vector<int> image(static_cast<std::size_t>(t));
  do {
    ++generation;
    std::uint64_t covered = 0;
    for (const auto& sigma : set.elements()) {
      for (int j = 0; j < t; ++j)
        image[static_cast<std::size_t>(j)] =
            sigma.images()[static_cast<std::size_t>(
                source[static_cast<std::size_t>(j)] - 1)];
      std::uint64_t r = rank_tuple(image, n);
      if (stamp[r] != generation) {
        stamp[r] = generation;
        count[r] = 0;
        ++covered;
      }
      ++count[r];
      if (count[r] > 1)
        sharp = false;
    }
    if (covered != targets)
      return {false, false};
  } while (next_tuple(source, n));

  return {true, sharp};
}

bool is_group(const PermSet& set) {
  for (const auto& sigma : set.elements())
    for (const auto& tau : set.elements())
      if (!set.contains(sigma.compose(tau)))
        return false;
  return true;
}

int orbit_count(const PermSet& group) {
  if (!is_group(group))
    throw error("orbit count requires a group");
  long long total_fixed = 0;
  for (const auto& sigma : group.elements())
    total_fixed += sigma.fixed_points();
  if (total_fixed % group.size() != 0)
    throw error("orbit count is not integral"); // impossible for a group
  return static_cast<int>(total_fixed / group.size());
}

Int design_bound(int n, int t) {
  if (t < 1 || t > n)
    throw error("design bound needs 1 <= t <= n");
  return falling_factorial(Int(n), t);
}

Int cor2_bound(int n) { return Int(n - 1) * (n - 1) + 1; }

bool sm_bound_exceeds_cor2(int n) {
  if (n < 2)
    throw error("bound comparison needs n >= 2");
  return design_bound(n, 2) > cor2_bound(n);
}

IntPolynomial tuple_count_polynomial(int n, int t) {
  if (t < 1 || t > n)
    throw error("tuple-count polynomial needs 1 <= t <= n");
  IntPolynomial out = IntPolynomial::constant(1);
  for (int s = 0; s < t; ++s)
    out = out * IntPolynomial(std::vector<Int>{n - s, -1});
  return out;
}

bool burnside_tuple_identity(int n, int t) {
  if (t < 1 || t > n)
    throw error("tuple identity needs 1 <= t <= n");
  RencontresTable table = rencontres(n);
  Int n_fact = factorial(n);

  Int lhs = 0;
  for (int i = 0; i <= n; ++i)
    lhs += falling_factorial(Int(i), t) * table.w[static_cast<std::size_t>(i)];

  IntPolynomial poly = tuple_count_polynomial(n, t);
  Int rhs = 0;
  for (int j = 0; j <= n; ++j)
    rhs += poly(j) * valency(table, j);

  return lhs == n_fact && rhs == n_fact;
}

std::vector<Rational> tight_frequencies(int n, int t) {
  if (t < 1)
    throw error("tight frequencies need t >= 1");
  if (n < 2 * t)
    throw error("tight frequencies require n >= 2t");

  // Unknowns f_{n-t+1..n}; equation k:
  //   sum_j f_{n-t+1+j} (c_k(n) - c_k(n - (n-t+1+j))) = c_k(n)
  std::vector<std::vector<Rational>> matrix(
      static_cast<std::size_t>(t),
      std::vector<Rational>(static_cast<std::size_t>(t) + 1));
  for (int k = 1; k <= t; ++k) {
    IntPolynomial poly = reversed_charlier(k, n);
    Int at_zero = poly(0);
    auto& row = matrix[static_cast<std::size_t>(k - 1)];
    for (int j = 0; j < t; ++j)
      row[static_cast<std::size_t>(j)] = Rational(at_zero - poly(n - t + 1 + j));
    row[static_cast<std::size_t>(t)] = Rational(at_zero);
  }

  // exact Gaussian elimination
  for (int col = 0; col < t; ++col) {
    int pivot = -1;
    for (int row = col; row < t; ++row) {
      if (matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] !=
          0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0)
      throw error("singular tight-frequency system at n=" + std::to_string(n) +
                  ", t=" + std::to_string(t));
    std::swap(matrix[static_cast<std::size_t>(col)],
              matrix[static_cast<std::size_t>(pivot)]);
    const Rational lead =
        matrix[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int c = col; c <= t; ++c)
      matrix[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)] /= lead;
    for (int row = 0; row < t; ++row) {
      if (row == col)
        continue;
      const Rational factor =
          matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (factor == 0)
        continue;
      for (int c = col; c <= t; ++c)
        matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] -=
            factor *
            matrix[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }

  std::vector<Rational> out(static_cast<std::size_t>(t));
  for (int j = 0; j < t; ++j)
    out[static_cast<std::size_t>(j)] =
        matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
  return out;
}

DesignReport analyze(const PermSet& set, int t, int workers) {
  const int n = set.degree();
  if (t < 1 || t > n)
    throw error("analyze needs 1 <= t <= n");

  DesignReport report;
  report.n = n;
  report.size = set.size();
  report.t = t;
  report.freq = frequencies(set, workers);

  FrequencyVector space = space_frequencies(n);
  bool moments_ok = true;
  for (int i = 1; i <= t; ++i) {
    MomentComparison cmp;
    cmp.i = i;
    cmp.value = moment(report.freq, i);
    cmp.space_value = moment(space, i);
    cmp.equal = cmp.value == cmp.space_value;
    moments_ok = moments_ok && cmp.equal;
    report.moments.push_back(std::move(cmp));
  }
  report.criterion_moments = moments_ok ? Verdict::yes : Verdict::no;

  const int dual_limit = std::min(t, half_range(n));
  for (int k = 1; k <= dual_limit; ++k)
    report.dual_frequencies.push_back({k, dual_frequency(report.freq, k)});

  if (t <= half_range(n)) {
    report.criterion_dual =
        is_t_design_dual(set, t) ? Verdict::yes : Verdict::no;
    report.criterion_tcrit =
        is_t_design_tcrit(set, t) ? Verdict::yes : Verdict::no;
    if (report.criterion_dual != report.criterion_moments ||
        report.criterion_tcrit != report.criterion_moments)
      throw error("criteria disagreement at n=" + std::to_string(n) +
                  ", t=" + std::to_string(t) + "; this is a defect");
  }

  report.sm_bound = design_bound(n, t);
  report.cor2_bound_t2 = cor2_bound(n);
  report.meets_sm_equality = Int(set.size()) == report.sm_bound;

  report.max_transitivity = 0;
  report.sharply_transitive = false;
  for (int level = 1; level <= n; ++level) {
    Transitivity result = is_t_transitive(set, level);
    if (!result.transitive)
      break;
    report.max_transitivity = level;
    report.sharply_transitive = result.sharp;
  }
  report.group = is_group(set);
  return report;
}

} // namespace permdesign
