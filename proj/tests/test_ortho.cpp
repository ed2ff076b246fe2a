#include <doctest.h>

#include <random>

#include "lppforge/ortho.hpp"
#include "lppforge/serialize.hpp"

using namespace lppforge;

namespace {

MPoly from_terms(const Field::Ptr& F, int nvars,
                 const std::vector<std::pair<std::vector<long>, long>>& terms) {
    MPoly f(F, nvars);
    for (const auto& [e, c] : terms) f = add(f, MPoly::monomial(F, nvars, e, F->from_int(c)));
    return f;
}

// The order-7 reference pair.
std::pair<MPoly, MPoly> f7_pair(const Field::Ptr& F7) {
    MPoly f = from_terms(F7, 2,
                         {{{5, 0}, 1}, {{0, 5}, -1}, {{4, 0}, -1}, {{0, 4}, 1},
                          {{3, 0}, 3}, {{0, 3}, 4}, {{2, 0}, 2}, {{0, 2}, 5},
                          {{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 6}});
    MPoly g = from_terms(F7, 2,
                         {{{5, 0}, 2}, {{0, 5}, -1}, {{4, 0}, 5}, {{0, 4}, 1},
                          {{3, 0}, -1}, {{0, 3}, 4}, {{2, 0}, 4}, {{0, 2}, 5},
                          {{1, 0}, 2}, {{0, 1}, -1}, {{0, 0}, 4}});
    return {f, g};
}

} // namespace

TEST_CASE("orthogonal systems") {
    auto F3 = Field::make(3, 1);
    MPoly x = MPoly::variable(F3, 2, 0), y = MPoly::variable(F3, 2, 1);
    SUBCASE("a permutation polynomial alone") {
        CHECK(is_orthogonal_system({add(x, y)}));
        CHECK(!is_orthogonal_system({multiply(x, y)}));
    }
    SUBCASE("the coordinate system") { CHECK(is_orthogonal_system({x, y})); }
    SUBCASE("duplicated polynomial fails") { CHECK(!is_orthogonal_system({add(x, y), add(x, y)})); }
    SUBCASE("more polynomials than variables") {
        CHECK_THROWS_AS(static_cast<void>(is_orthogonal_system({x, y, add(x, y)})), Error);
    }
}

TEST_CASE("companions") {
    SUBCASE("reference pair over F7") {
        auto F7 = Field::make(7, 1);
        auto [f, g] = f7_pair(F7);
        CHECK(is_companion(f, g));
        CHECK(is_companion(g, f));
    }
    SUBCASE("linear pair over F3") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        MPoly g = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 2}});
        CHECK(is_companion(f, g));
    }
    SUBCASE("x+y and x+y+1 over F2 are not companions") {
        auto F2 = Field::make(2, 1);
        MPoly f = from_terms(F2, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        MPoly g = add(f, MPoly::constant(F2, 2, 1));
        CHECK(!is_companion(f, g));
    }
}

TEST_CASE("general companion enumeration") {
    SUBCASE("q=2: four companions") {
        auto F2 = Field::make(2, 1);
        MPoly f = from_terms(F2, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        std::vector<MPoly> all;
        enumerate_companions(f, [&](const MPoly& g) {
            all.push_back(g);
            return true;
        });
        CHECK(all.size() == 4);
        CHECK(companion_count(2) == 4);
        for (const auto& g : all) CHECK(is_companion(f, g));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
    }
    SUBCASE("q=3: 216 companions") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        long n = 0;
        enumerate_companions(f, [&](const MPoly&) {
            ++n;
            return true;
        });
        CHECK(n == 216);
        CHECK(companion_count(3) == 216);
    }
    SUBCASE("q=4 full enumeration is refused; sampling works") {
        auto F4 = Field::make(2, 2);
        MPoly f = from_terms(F4, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        CHECK_THROWS_AS(enumerate_companions(f, [](const MPoly&) { return true; }), Error);
        auto samples = sample_companions(f, 5, 42);
        CHECK(samples.size() == 5);
        for (const auto& g : samples) CHECK(is_companion(f, g));
        CHECK(sample_companions(f, 5, 42) == samples);  // seeded determinism
    }
    SUBCASE("non-permutation input") {
        auto F3 = Field::make(3, 1);
        CHECK_THROWS_AS(enumerate_companions(MPoly::constant(F3, 2, 1),
                                             [](const MPoly&) { return true; }),
                        Error);
    }
}

TEST_CASE("LPP companion search") {
    SUBCASE("x+y over F2 has none") {
        auto F2 = Field::make(2, 1);
        MPoly f = from_terms(F2, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        CHECK(enumerate_lpp_companions(f).empty());
    }
    SUBCASE("x+y over F3 has six, all verified") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        auto found = enumerate_lpp_companions(f);
        CHECK(found.size() == 6);
        for (const auto& g : found) {
            CHECK(is_lpp(g));
            CHECK(is_companion(f, g));
        }
        CHECK(count_lpp_companions(lpp_to_tuple(f)) == 6);
    }
    SUBCASE("the order-4 cycle polynomial has none") {
        auto plain = Field::make(2, 2);
        std::vector<std::vector<int>> order;
        for (const char* lbl : {"0", "1", "u", "u+1"})
            order.push_back(plain->coeffs(plain->parse(lbl)));
        auto F4 = Field::make(2, 2, std::vector<int>{1, 1, 1}, order);
        Perm beta = perm_from_cycle_string(*F4, "(0,1,u,u+1)");
        auto G = cycle_group(F4, beta);
        CHECK(enumerate_lpp_companions(eklenian_poly(G, beta)).empty());
        CHECK(enumerate_lpp_companions(max_degree_lpp_2(F4)).empty());
    }
}

TEST_CASE("linear companions") {
    SUBCASE("x+y over F3 gives x+2y") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        MPoly g = linear_companion(f);
        CHECK(g == from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 2}}));
        CHECK(is_companion(f, g));
    }
    SUBCASE("2x+3y+1 over F5") {
        auto F5 = Field::make(5, 1);
        MPoly f = from_terms(F5, 2, {{{1, 0}, 2}, {{0, 1}, 3}, {{0, 0}, 1}});
        MPoly g = linear_companion(f);
        CHECK(is_lpp(g));
        CHECK(is_companion(f, g));
    }
    SUBCASE("characteristic 2 picks a base point past 0 and 1") {
        auto F4 = Field::make(2, 2);
        MPoly f = from_terms(F4, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        MPoly g = linear_companion(f);
        CHECK(is_lpp(g));
        CHECK(is_companion(f, g));
    }
    SUBCASE("errors") {
        auto F2 = Field::make(2, 1);
        MPoly f2 = from_terms(F2, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        CHECK_THROWS_AS(static_cast<void>(linear_companion(f2)), Error);
        auto F5 = Field::make(5, 1);
        CHECK_THROWS_AS(static_cast<void>(linear_companion(
                            from_terms(F5, 2, {{{2, 0}, 1}, {{0, 1}, 1}}))),
                        Error);
        CHECK_THROWS_AS(static_cast<void>(linear_companion(
                            from_terms(F5, 2, {{{1, 0}, 1}}))),
                        Error);
    }
}

TEST_CASE("group companion construction") {
    SUBCASE("works for every odd order up to 9 and every block exponent") {
        for (auto [p, r] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
            auto F = Field::make(p, r);
            for (int e = 0; e <= r; ++e) {
                auto G = eklenian_group(F, e);
                MPoly f = eklenian_poly(G);
                MPoly g = klenian_companion(G, f);
                CHECK(is_lpp(g));
                CHECK(is_companion(f, g));
            }
        }
    }
    SUBCASE("even order is rejected up front") {
        auto F4 = Field::make(2, 2);
        auto G = eklenian_group(F4, 1);
        MPoly f = eklenian_poly(G);
        try {
            static_cast<void>(klenian_companion(G, f));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == errc::even_characteristic);
        }
    }
    SUBCASE("custom-generator groups need no extra options") {
        auto F7 = Field::make(7, 1);
        Perm beta = perm_from_cycle_string(*F7, "(2,0,1,3,5,6,4)");
        auto G = cycle_group(F7, beta);
        MPoly f = eklenian_poly(G, beta);
        MPoly g = klenian_companion(G, f);
        CHECK(is_lpp(g));
        CHECK(is_companion(f, g));
    }
}

TEST_CASE("MOLS constructions") {
    SUBCASE("pencil from the F7 reference pair") {
        auto F7 = Field::make(7, 1);
        auto [f, g] = f7_pair(F7);
        MolsSet set = mols_from_pair(f, g);
        CHECK(set.size() == 6);
        CHECK(is_mols(set));
        CHECK(is_complete(set));
        // the a=1 member is f+g and is orthogonal to f itself
        CHECK(is_orthogonal_system({set.polys[0], f}));
        CHECK(set.polys[0] == add(f, g));
    }
    SUBCASE("linear pencil over F3") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        MPoly g = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 2}});
        MolsSet set = mols_from_pair(f, g);
        CHECK(set.size() == 2);
        CHECK(is_mols(set));
        CHECK(is_complete(set));
    }
    SUBCASE("non-companions are rejected") {
        auto F3 = Field::make(3, 1);
        MPoly f = from_terms(F3, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
        CHECK_THROWS_AS(static_cast<void>(mols_from_pair(f, f)), Error);
    }
    SUBCASE("separated construction") {
        auto F5 = Field::make(5, 1);
        MPoly id5 = MPoly::variable(F5, 1, 0);
        MolsSet set = mols_separated(F5, id5, id5);
        CHECK(set.size() == 4);
        CHECK(is_mols(set));
        CHECK(is_complete(set));
        CHECK(all_members_latin(set));

        auto F4 = Field::make(2, 2);
        MPoly id4 = MPoly::variable(F4, 1, 0);
        MolsSet s4 = mols_separated(F4, id4, id4);
        CHECK(s4.size() == 3);
        CHECK(is_mols(s4));
        CHECK(is_complete(s4));

        auto F7 = Field::make(7, 1);
        MolsSet s7 = mols_separated(F7, MPoly::monomial(F7, 1, {5}, F7->one()),
                                    MPoly::monomial(F7, 1, {5}, F7->one()));
        CHECK(s7.size() == 6);
        CHECK(is_mols(s7));
        CHECK(all_members_latin(s7));

        // x^3 is a permutation when gcd(3, q-1) = 1
        auto F5b = Field::make(5, 1);
        MolsSet s5 = mols_separated(F5b, MPoly::monomial(F5b, 1, {3}, F5b->one()),
                                    MPoly::monomial(F5b, 1, {3}, F5b->one()));
        CHECK(s5.size() == 4);
        CHECK(is_mols(s5));
    }
    SUBCASE("separated requires permutation polynomials") {
        auto F5 = Field::make(5, 1);
        CHECK_THROWS_AS(static_cast<void>(mols_separated(F5, MPoly::monomial(F5, 1, {2}, F5->one()),
                                                         MPoly::variable(F5, 1, 0))),
                        Error);
        // x^3 over F_7 is not a permutation: gcd(3, 6) = 3
        auto F7 = Field::make(7, 1);
        CHECK_THROWS_AS(static_cast<void>(mols_separated(F7, MPoly::monomial(F7, 1, {3}, F7->one()),
                                                         MPoly::variable(F7, 1, 0))),
                        Error);
    }
}

TEST_CASE("MOLS predicates") {
    auto F5 = Field::make(5, 1);
    MPoly id5 = MPoly::variable(F5, 1, 0);
    MolsSet set = mols_separated(F5, id5, id5);
    SUBCASE("singleton is vacuously orthogonal, not complete") {
        MolsSet one{{set.polys[0]}};
        CHECK(is_mols(one));
        CHECK(!is_complete(one));
    }
    SUBCASE("duplicate square fails") {
        MolsSet dup{{set.polys[0], set.polys[0]}};
        CHECK(!is_mols(dup));
    }
    SUBCASE("mixed orders are rejected") {
        auto F3 = Field::make(3, 1);
        MolsSet mixed{{set.polys[0],
                       add(MPoly::variable(F3, 2, 0), MPoly::variable(F3, 2, 1))}};
        CHECK_THROWS_AS(static_cast<void>(is_mols(mixed)), Error);
    }
}

TEST_CASE("pencil transforms preserve orthogonality") {
    auto F7 = Field::make(7, 1);
    auto [f, g] = f7_pair(F7);
    std::mt19937 rng(2024);
    int tested = 0;
    while (tested < 8) {
        felem a = static_cast<felem>(rng() % 7), b = static_cast<felem>(rng() % 7);
        felem c = static_cast<felem>(rng() % 7), d = static_cast<felem>(rng() % 7);
        if (F7->sub(F7->mul(a, d), F7->mul(b, c)) == 0) continue;
        MPoly u = add(scale(f, a), scale(g, b));
        MPoly v = add(scale(f, c), scale(g, d));
        CHECK(is_orthogonal_system({u, v}));
        ++tested;
    }
}
