#include "lppforge/ortho.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace lppforge {

bool is_orthogonal_system(const std::vector<MPoly>& fs) {
    require(!fs.empty(), errc::arity_mismatch, "empty system");
    const int n = fs[0].nvars();
    const int m = static_cast<int>(fs.size());
    const Field& F = fs[0].field();
    const int q = F.q();
    require(m <= n, errc::arity_mismatch, "more polynomials than variables");
    for (const auto& f : fs) {
        require(f.nvars() == n, errc::arity_mismatch, "mixed variable counts");
        require(same_field(f.field(), F), errc::field_mismatch, "mixed fields");
    }

    std::vector<std::vector<felem>> tables;
    tables.reserve(m);
    for (const auto& f : fs) tables.push_back(value_table(f));

    long points = static_cast<long>(tables[0].size());
    long targets = 1;
    for (int i = 0; i < m; ++i) targets *= q;
    const long expected = points / targets;
    std::vector<long> hits(targets, 0);
    for (long I = 0; I < points; ++I) {
        long key = 0;
        for (int i = 0; i < m; ++i) key = key * q + F.index_of(tables[i][I]);
        ++hits[key];
    }
    return std::all_of(hits.begin(), hits.end(), [&](long h) { return h == expected; });
}

bool is_companion(const MPoly& f, const MPoly& g) {
    require(f.nvars() == 2 && g.nvars() == 2, errc::arity_mismatch,
            "companions are bivariate");
    return is_orthogonal_system({f, g});
}

bigint companion_count(int q) {
    bigint fact = 1;
    for (int i = 2; i <= q; ++i) fact *= i;
    bigint out = 1;
    for (int i = 0; i < q; ++i) out *= fact;
    return out;
}

namespace {

// Fibers of a bivariate permutation polynomial, each of size q, points in
// row-major scan order.
std::vector<std::vector<std::pair<int, int>>> level_sets(const MPoly& f) {
    const Field& F = f.field();
    const int q = F.q();
    LatinSquare V = value_grid(f);
    std::vector<std::vector<std::pair<int, int>>> sets(q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) sets[V.at(i, j)].emplace_back(i, j);
    return sets;
}

MPoly poly_from_grid(const Field::Ptr& field, const std::vector<std::uint8_t>& grid) {
    std::vector<felem> table(grid.size());
    for (size_t I = 0; I < grid.size(); ++I) table[I] = field->element(grid[I]);
    return interpolate(field, 2, table);
}

} // namespace

void enumerate_companions(const MPoly& f, const std::function<bool(const MPoly&)>& visit) {
    require(is_permutation_poly(f), errc::not_permutation,
            "companions exist only for permutation polynomials");
    const Field::Ptr field = f.field_ptr();
    const int q = field->q();
    require(q <= 3, errc::too_large,
            "full companion enumeration is limited to q <= 3; use sample_companions");
    auto sets = level_sets(f);

    std::vector<Perm> all_perms;
    Perm p = identity_perm(q);
    do {
        all_perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const long count = static_cast<long>(all_perms.size());
    std::vector<long> pick(q, 0);
    std::vector<std::uint8_t> grid(static_cast<size_t>(q) * q);
    while (true) {
        for (int i = 0; i < q; ++i) {
            const Perm& sigma = all_perms[pick[i]];
            for (int j = 0; j < q; ++j) {
                auto [x, y] = sets[i][j];
                grid[static_cast<size_t>(x) * q + y] = sigma[j];
            }
        }
        if (!visit(poly_from_grid(field, grid))) return;
        int i = q - 1;
        while (i >= 0 && ++pick[i] == count) pick[i--] = 0;
        if (i < 0) break;
    }
}

std::vector<MPoly> sample_companions(const MPoly& f, int count, std::uint64_t seed) {
    require(is_permutation_poly(f), errc::not_permutation,
            "companions exist only for permutation polynomials");
    const Field::Ptr field = f.field_ptr();
    const int q = field->q();
    auto sets = level_sets(f);
    std::mt19937_64 rng(seed);
    std::vector<MPoly> out;
    out.reserve(count);
    std::vector<std::uint8_t> grid(static_cast<size_t>(q) * q);
    for (int s = 0; s < count; ++s) {
        for (int i = 0; i < q; ++i) {
            Perm sigma = identity_perm(q);
            std::shuffle(sigma.begin(), sigma.end(), rng);
            for (int j = 0; j < q; ++j) {
                auto [x, y] = sets[i][j];
                grid[static_cast<size_t>(x) * q + y] = sigma[j];
            }
        }
        out.push_back(poly_from_grid(field, grid));
    }
    return out;
}

namespace {

// Backtracking over level-value assignments S[i][j] = sigma_i(c_j) with three
// mutually exclusive masks: sigma_i a permutation (row), pairwise everywhere-
// distinct levels per first coordinate (col), and per second coordinate
// (diag, via beta_i(j)). Solutions biject with LPP companions.
template <typename OnSolution>
void lpp_companion_search(const PermTuple& tuple, OnSolution&& on_solution) {
    const int q = static_cast<int>(tuple.size());
    const std::uint32_t full = (1u << q) - 1;
    std::vector<std::uint32_t> row(q, 0), col(q, 0), diag(q, 0);
    std::vector<std::uint8_t> S(static_cast<size_t>(q) * q);

    // Cell order: level-major.
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == q * q) {
            on_solution(S);
            return;
        }
        const int i = cell / q, j = cell % q;
        const int d = tuple[i][j];
        std::uint32_t avail = full & ~(row[i] | col[j] | diag[d]);
        while (avail) {
            const int v = std::countr_zero(avail);
            const std::uint32_t bit = avail & -avail;
            avail ^= bit;
            row[i] |= bit;
            col[j] |= bit;
            diag[d] |= bit;
            S[static_cast<size_t>(i) * q + j] = static_cast<std::uint8_t>(v);
            self(self, cell + 1);
            row[i] ^= bit;
            col[j] ^= bit;
            diag[d] ^= bit;
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<MPoly> enumerate_lpp_companions(const MPoly& f) {
    const Field::Ptr field = f.field_ptr();
    const int q = field->q();
    require(q <= 5, errc::too_large, "LPP companion enumeration is limited to q <= 5");
    PermTuple tuple = lpp_to_tuple(f);  // throws NotLPP when f is not an LPP

    std::vector<MPoly> out;
    std::vector<std::uint8_t> grid(static_cast<size_t>(q) * q);
    lpp_companion_search(tuple, [&](const std::vector<std::uint8_t>& S) {
        // g(c_j, beta_i(c_j)) = c_{S[i][j]}
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                grid[static_cast<size_t>(j) * q + tuple[i][j]] = S[static_cast<size_t>(i) * q + j];
        out.push_back(poly_from_grid(field, grid));
    });
    return out;
}

long long count_lpp_companions(const PermTuple& tuple) {
    long long n = 0;
    lpp_companion_search(tuple, [&](const std::vector<std::uint8_t>&) { ++n; });
    return n;
}

MPoly linear_companion(const MPoly& f) {
    const Field::Ptr field = f.field_ptr();
    const Field& F = *field;
    require(F.q() >= 3, errc::unsupported_order, "linear companions require q >= 3");
    require(f.nvars() == 2, errc::arity_mismatch, "expected a bivariate polynomial");
    felem a = 0, b = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] == 1 && e[1] == 0)
            a = c;
        else if (e[0] == 0 && e[1] == 1)
            b = c;
        else
            require(e[0] == 0 && e[1] == 0, errc::not_linear_lpp,
                    "polynomial is not linear");
    }
    require(a != 0 && b != 0, errc::not_linear_lpp,
            "linear LPPs need nonzero coefficients on both variables");
    // u = c*a, v = (c+1)*b for the first c outside {0, -1}; then
    // a*v - b*u = a*b != 0.
    felem cc = 0;
    bool found = false;
    for (int i = 0; i < F.q() && !found; ++i) {
        cc = F.element(i);
        found = cc != 0 && F.add(cc, F.one()) != 0;
    }
    MPoly g(field, 2);
    g = add(g, MPoly::monomial(field, 2, {1, 0}, F.mul(cc, a)));
    g = add(g, MPoly::monomial(field, 2, {0, 1}, F.mul(F.add(cc, F.one()), b)));
    return g;
}

MPoly klenian_companion(const EKlenianGroup& group, const MPoly& f,
                        const KlenianCompanionOptions& opts) {
    const Field::Ptr field = group.field;
    const Field& F = *field;
    const int q = F.q(), l = group.l, t = group.t;
    require(F.p() % 2 == 1, errc::even_characteristic,
            "the companion construction requires odd q");
    require(same_field(f.field(), F), errc::field_mismatch, "group and polynomial fields differ");

    Perm g_base = opts.g_base.empty() ? identity_perm(q) : opts.g_base;
    require(is_permutation(g_base) && static_cast<int>(g_base.size()) == q,
            errc::invalid_generators, "g_base must be a permutation of the q points");
    std::vector<int> pts(q);
    if (opts.point_order.empty()) {
        // Group-aligned point order: p_k = (alpha^i beta^j)(c_0) for k = i+jl.
        // For the canonical block generators this is the field order itself;
        // for custom generators it is the alignment the construction needs to
        // stay an LPP.
        for (int k = 0; k < q; ++k) pts[k] = group.elements[k][0];
    } else {
        require(static_cast<int>(opts.point_order.size()) == q, errc::invalid_order,
                "point order must list all q indices");
        std::vector<bool> seen(q, false);
        for (int k = 0; k < q; ++k) {
            int v = opts.point_order[k];
            require(v >= 0 && v < q && !seen[v], errc::invalid_order,
                    "point order must be a bijection of the indices");
            seen[v] = true;
            pts[k] = v;
        }
    }

    std::vector<std::uint8_t> grid(static_cast<size_t>(q) * q, 0);
    std::vector<bool> filled(static_cast<size_t>(q) * q, false);
    for (int k = 0; k < q; ++k) {
        const int i = k % l, j = k / l;
        const int x = pts[k];
        for (int m = 0; m < q; ++m) {
            const int a = m % l, b = m / l;
            const Perm& ga = group.elements[((a + i) % l) + ((b + j) % t) * l];
            const int y = g_base[ga[x]];
            const size_t cell = static_cast<size_t>(x) * q + y;
            require(!filled[cell], errc::not_companions, "level sets overlap");
            filled[cell] = true;
            grid[cell] = static_cast<std::uint8_t>(m);
        }
    }
    require(std::all_of(filled.begin(), filled.end(), [](bool v) { return v; }),
            errc::not_companions, "level sets do not cover the grid");

    MPoly g = poly_from_grid(field, grid);
    require(is_lpp(g), errc::not_companions, "construction did not yield an LPP");
    require(is_companion(f, g), errc::not_companions,
            "construction did not yield a companion of f");
    return g;
}

MolsSet mols_from_pair(const MPoly& f, const MPoly& g) {
    require(is_lpp(f) && is_lpp(g), errc::not_companions, "inputs must be LPPs");
    require(is_companion(f, g), errc::not_companions, "inputs are not companions");
    const Field& F = f.field();
    MolsSet set;
    for (int i = 0; i < F.q(); ++i) {
        felem a = F.element(i);
        if (a == 0) continue;
        set.polys.push_back(add(f, scale(g, a)));
    }
    require(is_mols(set), errc::not_companions, "pencil is not pairwise orthogonal");
    return set;
}

MolsSet mols_separated(const Field::Ptr& field, const MPoly& f, const MPoly& h) {
    const Field& F = *field;
    require(f.nvars() == 1 && h.nvars() == 1, errc::arity_mismatch,
            "separated construction takes univariate polynomials");
    require(same_field(f.field(), F) && same_field(h.field(), F), errc::field_mismatch,
            "mixed fields");
    require(is_permutation_poly(f) && is_permutation_poly(h), errc::not_permutation,
            "both inputs must be permutation polynomials");
    MPoly fx = sum_lpp(f, MPoly(field, 1));   // f(x) + 0*y
    MPoly hy = sum_lpp(MPoly(field, 1), h);   // 0*x + h(y)
    MolsSet set;
    for (int i = 0; i < F.q(); ++i) {
        felem a = F.element(i);
        if (a == 0) continue;
        set.polys.push_back(add(fx, scale(hy, a)));
    }
    require(is_mols(set), errc::not_permutation, "construction failed orthogonality check");
    return set;
}

bool is_mols(const MolsSet& set) {
    if (set.polys.size() <= 1) return true;
    const Field& F = set.polys[0].field();
    for (const auto& f : set.polys) {
        require(f.nvars() == 2, errc::order_mismatch, "grids must be bivariate");
        require(same_field(f.field(), F), errc::order_mismatch, "mixed orders in set");
    }
    for (size_t i = 0; i < set.polys.size(); ++i)
        for (size_t j = i + 1; j < set.polys.size(); ++j)
            if (!is_orthogonal_system({set.polys[i], set.polys[j]})) return false;
    return true;
}

bool is_complete(const MolsSet& set) {
    return !set.polys.empty() && set.size() == set.q() - 1;
}

bool all_members_latin(const MolsSet& set) {
    return std::all_of(set.polys.begin(), set.polys.end(), [](const MPoly& f) { return is_lpp(f); });
}

} // namespace lppforge
