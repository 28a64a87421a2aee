#pragma once

#include "permdesign/perm_set.hpp"

#include <cstdint>
#include <vector>

namespace permdesign {

/// The n powers of the cycle (1 2 ... n): rows of the addition table of Z_n,
/// pairwise at distance n.
PermSet cyclic_group(int n);

/// The five rows of the smallest Latin square that is not a group table:
/// {12345, 24153, 35421, 41532, 53214}. Pairwise distance 5, not closed
/// under composition.
PermSet nongroup_latin5();

/// Rows of a Latin square as permutations (row r maps column to entry).
/// Rejects anything that is not a Latin square over symbols 1..n.
PermSet from_latin_square(const std::vector<std::vector<int>>& rows);

/// Inverse of from_latin_square: requires |D| = n with pairwise distance n.
/// Rows come out in canonical (sorted) order.
std::vector<std::vector<int>> to_latin_square(const PermSet& set);

/// {x -> ax + b : a,b in GF(q), a != 0} acting on the canonical field
/// enumeration; q(q-1) elements, a sharply 2-transitive group.
PermSet affine_group(int q);

/// {x -> a x^3 + b : a,b in GF(9), a != 0}; 72 permutations of [1..9].
/// Cubing is a field automorphism of GF(9), so this is sharply 2-transitive
/// as a set, yet it is not closed under composition.
PermSet twisted_affine_9();

/// The (q+1)q(q-1) fractional-linear maps x -> (ax+b)/(cx+d), ad-bc != 0,
/// on the projective line over GF(q): field points at their canonical
/// positions 1..q, the point at infinity last at q+1. Sharply 3-transitive.
PermSet pgl2(int q);

inline constexpr std::uint64_t default_closure_cap = 3628800; // 10!

/// Smallest composition-closed superset of the generators (breadth-first
/// closure). Aborts with a diagnostic when the closure would exceed the cap.
PermSet group_closure(const PermSet& generators,
                      std::uint64_t size_cap = default_closure_cap);

} // namespace permdesign
