#ifndef LPPFORGE_PERM_HPP
#define LPPFORGE_PERM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lppforge/error.hpp"

namespace lppforge {

/// Permutation of {0..n-1} stored as its image array.
using Perm = std::vector<std::uint8_t>;

/// q permutations beta_0..beta_{q-1} whose pairwise quotients
/// inverse(beta_i) * beta_j are fixed-point-free.
using PermTuple = std::vector<Perm>;

Perm identity_perm(int n);
bool is_permutation(const Perm& a);

/// Composition convention, fixed project-wide: compose(a, b) applies b first,
/// then a; compose(a, b)[x] = a[b[x]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

bool has_fixed_point(const Perm& a);

/// Multiset of cycle lengths (ascending), fixed points included as 1s.
std::vector<int> cycle_type(const Perm& a);

/// Disjoint cycles, each rotated to start at its smallest point, sorted by
/// that point. Fixed points are omitted.
std::vector<std::vector<int>> cycles(const Perm& a);
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cs);

int perm_order(const Perm& a);

/// True iff the quotients are pairwise fixed-point-free, i.e. no two entries
/// agree anywhere. Throws WrongLength unless exactly n permutations of
/// {0..n-1} are given.
bool tuple_valid(const PermTuple& tuple);

/// (sigma beta_0 delta, ..., sigma beta_{q-1} delta); validity is preserved.
PermTuple tuple_transform(const Perm& sigma, const PermTuple& omega, const Perm& delta);

/// Witnesses (sigma, delta) with sigma beta_i delta = gamma_i for every i, if
/// any exist. Exhausts the q! choices of delta; intended for small q only.
std::optional<std::pair<Perm, Perm>> tuples_equivalent(const PermTuple& omega,
                                                       const PermTuple& gamma);

} // namespace lppforge

#endif
