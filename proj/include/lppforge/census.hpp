#ifndef LPPFORGE_CENSUS_HPP
#define LPPFORGE_CENSUS_HPP

#include <functional>
#include <map>
#include <optional>

#include "lppforge/ortho.hpp"

namespace lppforge {

/// Hard ceiling for full tuple enumeration. Documented, not silent: larger
/// orders throw TooLarge.
inline constexpr int kMaxEnumerationOrder = 5;

struct CensusOptions {
    int workers = 1;
    /// LPP-companion counting per tuple; defaults on for q <= 4 where the
    /// search is cheap.
    std::optional<bool> with_companions;
    /// Equivalence-class count (orbit partition under row, column and symbol
    /// permutations).
    bool with_equivalence_classes = true;
    /// Enumeration ceiling; raising it past kMaxEnumerationOrder is the
    /// caller's own risk.
    int max_order = kMaxEnumerationOrder;
};

struct CensusReport {
    int q = 0;
    long long total_lpps = 0;
    /// canonical e -> number of tuples whose set IS an e-Klenian group
    std::map<int, long long> eklenian_counts;
    /// canonical e -> number of tuples whose set is a coset of such a group
    std::map<int, long long> equivalent_by_e;
    long long equivalent_to_eklenian = 0;
    std::optional<long long> lpps_with_lpp_companion;
    /// companion count -> how many LPPs have exactly that many
    std::map<long long, long long> companion_counts;
    std::optional<long long> equivalence_classes;
};

/// Visit every valid tuple exactly once (row-by-row backtracking with
/// fixed-point-free pruning). Single-threaded, deterministic order.
void enumerate_lpps(const Field::Ptr& field, const std::function<bool(const PermTuple&)>& visit,
                    int max_order = kMaxEnumerationOrder);

/// Tuple count; the beta_0 loop is partitioned across workers.
long long count_lpps(const Field::Ptr& field, int workers = 1,
                     int max_order = kMaxEnumerationOrder);

CensusReport census(const Field::Ptr& field, const CensusOptions& opts = {});

/// Number of distinct e-Klenian subgroups of Sigma_q: formula (q-1)!/phi(q)
/// for e = 0, exhaustive generator-pair search otherwise.
long long count_eklenian_subgroups(const Field::Ptr& field, int e);

} // namespace lppforge

#endif
