#include "lppforge/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <thread>
#include <unordered_set>

namespace lppforge {

namespace {

long ipow(int b, int e) {
    long v = 1;
    for (int i = 0; i < e; ++i) v *= b;
    return v;
}

void check_order(const Field::Ptr& field, int max_order) {
    require(field->q() <= max_order, errc::too_large,
            "order " + std::to_string(field->q()) + " exceeds enumeration limit " +
                std::to_string(max_order));
}

// Row-by-row tuple enumeration. rows[i][j] = beta_i(j); a valid tuple is a
// matrix whose rows are permutations and whose columns never repeat a value,
// i.e. a Latin square read as rows-of-images.
struct TupleDFS {
    int q;
    std::vector<Perm> rows;
    std::vector<std::uint32_t> colmask;
    std::function<bool(const PermTuple&)> visit;
    bool stopped = false;

    explicit TupleDFS(int q_) : q(q_), rows(q_, Perm(q_)), colmask(q_, 0) {}

    void place_first(const Perm& first) {
        rows[0] = first;
        for (int j = 0; j < q; ++j) colmask[j] = 1u << first[j];
        extend(1);
        for (int j = 0; j < q; ++j) colmask[j] = 0;
    }

    void extend(int i) {
        if (stopped) return;
        if (i == q) {
            if (!visit(rows)) stopped = true;
            return;
        }
        cell(i, 0, 0);
    }

    void cell(int i, int j, std::uint32_t rowmask) {
        if (stopped) return;
        if (j == q) {
            extend(i + 1);
            return;
        }
        std::uint32_t avail = ((1u << q) - 1) & ~(rowmask | colmask[j]);
        while (avail && !stopped) {
            const int v = std::countr_zero(avail);
            const std::uint32_t bit = avail & -avail;
            avail ^= bit;
            rows[i][j] = static_cast<std::uint8_t>(v);
            colmask[j] |= bit;
            cell(i, j + 1, rowmask | bit);
            colmask[j] ^= bit;
        }
    }
};

std::vector<Perm> all_perms_of(int q) {
    std::vector<Perm> out;
    Perm p = identity_perm(q);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t pack_rows(const PermTuple& rows) {
    const int q = static_cast<int>(rows.size());
    std::uint64_t key = 0;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) key = key * q + rows[i][j];
    return key;
}

// Per-worker census accumulator.
struct CensusPartial {
    long long total = 0;
    std::map<int, long long> eklenian_counts;
    std::map<int, long long> equivalent_by_e;
    long long equivalent = 0;
    std::map<long long, long long> companion_counts;
    long long with_companion = 0;
    std::vector<std::uint64_t> keys;

    void merge(const CensusPartial& other) {
        total += other.total;
        equivalent += other.equivalent;
        with_companion += other.with_companion;
        for (auto [k, v] : other.eklenian_counts) eklenian_counts[k] += v;
        for (auto [k, v] : other.equivalent_by_e) equivalent_by_e[k] += v;
        for (auto [k, v] : other.companion_counts) companion_counts[k] += v;
        keys.insert(keys.end(), other.keys.begin(), other.keys.end());
    }
};

// Orbit partition of the enumerated squares under row swaps, column swaps and
// symbol swaps (adjacent transpositions generate all of them).
long long orbit_class_count(std::vector<std::uint64_t>& keys, int q) {
    std::unordered_set<std::uint64_t> all(keys.begin(), keys.end());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(all.size());
    std::vector<std::uint8_t> cells(static_cast<size_t>(q) * q);
    auto unpack = [&](std::uint64_t key) {
        for (int c = q * q - 1; c >= 0; --c) {
            cells[c] = static_cast<std::uint8_t>(key % q);
            key /= q;
        }
    };
    auto pack = [&](const std::vector<std::uint8_t>& cs) {
        std::uint64_t key = 0;
        for (auto v : cs) key = key * q + v;
        return key;
    };

    long long classes = 0;
    std::vector<std::uint64_t> queue;
    for (std::uint64_t start : keys) {
        if (seen.count(start)) continue;
        ++classes;
        queue.assign(1, start);
        seen.insert(start);
        while (!queue.empty()) {
            std::uint64_t cur = queue.back();
            queue.pop_back();
            unpack(cur);
            auto push = [&](const std::vector<std::uint8_t>& cs) {
                std::uint64_t key = pack(cs);
                if (seen.insert(key).second) queue.push_back(key);
            };
            std::vector<std::uint8_t> tmp(cells);
            for (int s = 0; s + 1 < q; ++s) {
                // rows s <-> s+1
                tmp = cells;
                for (int j = 0; j < q; ++j)
                    std::swap(tmp[static_cast<size_t>(s) * q + j],
                              tmp[static_cast<size_t>(s + 1) * q + j]);
                push(tmp);
                // columns s <-> s+1
                tmp = cells;
                for (int i = 0; i < q; ++i)
                    std::swap(tmp[static_cast<size_t>(i) * q + s],
                              tmp[static_cast<size_t>(i) * q + s + 1]);
                push(tmp);
                // symbols s <-> s+1
                tmp = cells;
                for (auto& v : tmp) {
                    if (v == s)
                        v = static_cast<std::uint8_t>(s + 1);
                    else if (v == s + 1)
                        v = static_cast<std::uint8_t>(s);
                }
                push(tmp);
            }
        }
    }
    return classes;
}

} // namespace

void enumerate_lpps(const Field::Ptr& field, const std::function<bool(const PermTuple&)>& visit,
                    int max_order) {
    check_order(field, max_order);
    const int q = field->q();
    TupleDFS dfs(q);
    dfs.visit = visit;
    for (const Perm& first : all_perms_of(q)) {
        dfs.place_first(first);
        if (dfs.stopped) return;
    }
}

long long count_lpps(const Field::Ptr& field, int workers, int max_order) {
    check_order(field, max_order);
    const int q = field->q();
    const auto firsts = all_perms_of(q);
    workers = std::max(1, workers);
    std::vector<long long> counts(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            TupleDFS dfs(q);
            dfs.visit = [&](const PermTuple&) {
                ++counts[w];
                return true;
            };
            for (size_t i = w; i < firsts.size(); i += workers) dfs.place_first(firsts[i]);
        });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

CensusReport census(const Field::Ptr& field, const CensusOptions& opts) {
    check_order(field, opts.max_order);
    const int q = field->q(), p = field->p(), r = field->r();
    const bool companions = opts.with_companions.value_or(q <= 4);
    const int workers = std::max(1, opts.workers);
    const auto firsts = all_perms_of(q);
    const Perm id = identity_perm(q);

    std::vector<CensusPartial> parts(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            CensusPartial& acc = parts[w];
            std::vector<Perm> normalized(q);
            TupleDFS dfs(q);
            dfs.visit = [&](const PermTuple& rows) {
                ++acc.total;
                // Coset test: the set is a coset of an e-Klenian group iff
                // beta_0^{-1} * set is such a group.
                const Perm inv0 = inverse(rows[0]);
                for (int i = 0; i < q; ++i) normalized[i] = compose(inv0, rows[i]);
                if (auto e = eklenian_parameter(normalized, p, r)) {
                    ++acc.equivalent;
                    ++acc.equivalent_by_e[*e];
                    // A coset containing the identity is the group itself, so
                    // the tuple is an ordering of an e-Klenian group.
                    if (std::find(rows.begin(), rows.end(), id) != rows.end())
                        ++acc.eklenian_counts[*e];
                }
                if (companions) {
                    long long n = count_lpp_companions(rows);
                    ++acc.companion_counts[n];
                    if (n > 0) ++acc.with_companion;
                }
                if (opts.with_equivalence_classes) acc.keys.push_back(pack_rows(rows));
                return true;
            };
            for (size_t i = w; i < firsts.size(); i += workers) dfs.place_first(firsts[i]);
        });
    }
    for (auto& th : pool) th.join();

    CensusPartial all;
    for (const auto& part : parts) all.merge(part);

    CensusReport report;
    report.q = q;
    report.total_lpps = all.total;
    report.eklenian_counts = std::move(all.eklenian_counts);
    report.equivalent_by_e = std::move(all.equivalent_by_e);
    report.equivalent_to_eklenian = all.equivalent;
    if (companions) {
        report.lpps_with_lpp_companion = all.with_companion;
        report.companion_counts = std::move(all.companion_counts);
    }
    if (opts.with_equivalence_classes)
        report.equivalence_classes = orbit_class_count(all.keys, q);
    return report;
}

long long count_eklenian_subgroups(const Field::Ptr& field, int e) {
    const int p = field->p(), r = field->r(), q = field->q();
    require(e >= 0 && e <= r, errc::bad_exponent, "need 0 <= e <= r");
    require(q <= 9, errc::too_large, "subgroup census is limited to q <= 9");
    const int l = static_cast<int>(ipow(p, e));
    const int t = q / l;

    if (l == 1 || t == 1) {
        // Cyclic case: full-length cycles modulo the phi(q) generators each
        // group contains.
        long long cycles_total = 1;
        for (int i = 2; i <= q - 1; ++i) cycles_total *= i;
        long long phi = ipow(p, r - 1) * (p - 1);
        return cycles_total / phi;
    }

    auto type_matches = [](const Perm& g, int len, int copies) {
        auto ct = cycle_type(g);
        return static_cast<int>(ct.size()) == copies &&
               std::all_of(ct.begin(), ct.end(), [&](int c) { return c == len; });
    };

    std::vector<Perm> alphas, betas;
    Perm perm = identity_perm(q);
    do {
        if (type_matches(perm, l, t)) alphas.push_back(perm);
        if (type_matches(perm, t, l)) betas.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<Perm>> groups;
    for (const auto& a : alphas) {
        for (const auto& b : betas) {
            if (compose(a, b) != compose(b, a)) continue;
            std::set<Perm> elems;
            Perm bp = identity_perm(q);
            bool ok = true;
            for (int j = 0; j < t && ok; ++j) {
                Perm prod = bp;
                for (int i = 0; i < l && ok; ++i) {
                    ok = elems.insert(prod).second;
                    prod = compose(a, prod);
                }
                bp = compose(b, bp);
            }
            if (!ok) continue;
            const Perm id = identity_perm(q);
            for (const auto& g : elems)
                if (g != id && has_fixed_point(g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            groups.emplace(elems.begin(), elems.end());
        }
    }
    return static_cast<long long>(groups.size());
}

} // namespace lppforge
