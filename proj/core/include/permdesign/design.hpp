#pragma once

#include "permdesign/combinatorics.hpp"
#include "permdesign/perm_set.hpp"
#include "permdesign/polynomial.hpp"
#include "permdesign/rational.hpp"

#include <vector>

namespace permdesign {

/// Distance distribution of a permutation set over ordered pairs:
/// f[i] = |{(x,y) in D^2 : d(x,y) = i}| / |D|^2. Always f[0] = 1/|D|,
/// f[1] = 0, sum f[i] = 1.
struct FrequencyVector {
  int n = 0;
  std::vector<Rational> f; // size n+1

  bool operator==(const FrequencyVector&) const = default;
};

/// Exact frequency vector. With workers > 1 the pair histogram is split
/// across threads; sub-histograms are integers merged by addition, so the
/// result is bit-identical for every worker count.
FrequencyVector frequencies(const PermSet& set, int workers = 1);

/// Frequencies of the whole symmetric group: f[i] = v_i / n!.
FrequencyVector space_frequencies(int n);

/// sum_j f[j] * j^i for i >= 1.
Rational moment(const FrequencyVector& freq, int i);

/// Canonical criterion, valid for every 1 <= t <= n: the first t power
/// moments of the distance distribution match those of the whole group.
bool is_t_design_moments(const PermSet& set, int t);

/// Unnormalized dual frequency sum_i c_k(n-i) f[i] for 1 <= k <= n/2.
/// Rescaling the orthonormal system does not move zeros, so this vanishes
/// exactly when the normalized dual frequency does.
Rational dual_frequency(const FrequencyVector& freq, int k);

/// Dual-frequency criterion; only guaranteed (and only accepted) for
/// t <= floor(n/2).
bool is_t_design_dual(const PermSet& set, int t);

/// Reversed-Charlier criterion
///   sum_{i=1..n} f_i (c_k(n) - c_k(n-i)) = c_k(n)  for k = 1..t,
/// an algebraic rearrangement of the dual criterion; requires n >= 2t.
bool is_t_design_tcrit(const PermSet& set, int t);

struct Transitivity {
  bool transitive = false;
  bool sharp = false; // every ordered tuple pair reached exactly once
};

/// Counts, for every ordered pair of distinct-entry t-tuples (a, b), the
/// elements mapping a to b elementwise.
Transitivity is_t_transitive(const PermSet& set, int t);

/// Closure under composition; for a finite subset of a finite group this
/// already forces identity and inverses.
bool is_group(const PermSet& set);

/// Orbits of a permutation group on [1..n] via the average number of fixed
/// points; rejects non-groups, asserts exact divisibility.
int orbit_count(const PermSet& group);

/// n(n-1)...(n-t+1), the general design size bound.
Int design_bound(int n, int t);

/// (n-1)^2 + 1, the dimension bound specific to t = 2.
Int cor2_bound(int n);

/// Whether the t = 2 design bound n(n-1) strictly exceeds (n-1)^2 + 1;
/// holds for every n >= 3.
bool sm_bound_exceeds_cor2(int n);

/// (n-x)(n-1-x)...(n-t+1-x); evaluates to the design bound at 0.
IntPolynomial tuple_count_polynomial(int n, int t);

/// Checks both forms of the tuple-counting identity exactly:
///   sum_i i(i-1)...(i-t+1) w_i = n!   and
///   sum_j P_t(j) v_j = n!  with P_t = tuple_count_polynomial(n, t).
bool burnside_tuple_identity(int n, int t);

/// For n >= 2t: the t nonzero tail frequencies f_{n-t+1..n} of a design
/// meeting the bound with equality (f_i = 0 for i in [1..n-t]), obtained by
/// exact Gaussian elimination on the reversed-Charlier equations.
std::vector<Rational> tight_frequencies(int n, int t);

enum class Verdict { yes, no, not_applicable };

struct MomentComparison {
  int i = 0;
  Rational value;
  Rational space_value;
  bool equal = false;
};

struct DualFrequencyEntry {
  int k = 0;
  Rational value;
};

/// Everything the `verify` command reports. Construction evaluates every
/// applicable criterion and throws if they disagree (they never should; a
/// disagreement is a defect and must surface, not be averaged away).
struct DesignReport {
  int n = 0;
  int size = 0;
  int t = 0;
  FrequencyVector freq;
  std::vector<MomentComparison> moments;            // i = 1..t
  std::vector<DualFrequencyEntry> dual_frequencies; // k = 1..min(t, n/2)
  Verdict criterion_moments = Verdict::no;
  Verdict criterion_dual = Verdict::not_applicable;
  Verdict criterion_tcrit = Verdict::not_applicable;
  Int sm_bound;
  Int cor2_bound_t2;
  bool meets_sm_equality = false;
  int max_transitivity = 0; // largest t' <= n with t'-transitivity
  bool sharply_transitive = false;
  bool group = false;

  bool is_design() const { return criterion_moments == Verdict::yes; }
};

DesignReport analyze(const PermSet& set, int t, int workers = 1);

} // namespace permdesign
