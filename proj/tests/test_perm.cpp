#include <doctest.h>

#include <random>

#include "lppforge/perm.hpp"
#include "lppforge/serialize.hpp"

using namespace lppforge;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    Perm p = identity_perm(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// The nine permutations attached to x^5 + y^5 over F_9 (order 0,1,2,u,...).
PermTuple f9_tuple(const Field& F9) {
    const char* printed[9] = {
        "(1,2)(u,2u)(u+1,2u+2)(u+2,2u+1)",
        "(0,1)(u,u+1)(u+2,2u)(2u+1,2u+2)",
        "(0,2)(u,2u+1)(u+1,u+2)(2u,2u+2)",
        "(0,2u)(1,2u+1)(2,u+1)(u+2,2u+2)",
        "(0,u+1)(1,2u)(2,2u+1)(u,u+2)",
        "(0,2u+1)(1,u+1)(2,2u)(u,2u+2)",
        "(0,u)(1,2u+2)(2,u+2)(u+1,2u+1)",
        "(0,u+2)(1,u)(2,2u+2)(u+1,2u)",
        "(0,2u+2)(1,u+2)(2,u)(2u,2u+1)"};
    PermTuple tuple;
    for (const char* s : printed) tuple.push_back(perm_from_cycle_string(F9, s));
    return tuple;
}

Field::Ptr make_f9_31() {
    auto plain = Field::make(3, 2, std::vector<int>{2, 2, 1});
    std::vector<std::vector<int>> order;
    for (const char* lbl : {"0", "1", "2", "u", "u+1", "u+2", "2u", "2u+1", "2u+2"})
        order.push_back(plain->coeffs(plain->parse(lbl)));
    return Field::make(3, 2, std::vector<int>{2, 2, 1}, order);
}

} // namespace

TEST_CASE("composition and inverse") {
    std::mt19937 rng(1);
    for (int n : {2, 4, 5, 7}) {
        for (int t = 0; t < 10; ++t) {
            Perm a = random_perm(n, rng);
            CHECK(compose(a, inverse(a)) == identity_perm(n));
            CHECK(compose(inverse(a), a) == identity_perm(n));
        }
    }
    // (0,1)*(0,1) = id in Sigma_2
    Perm t{1, 0};
    CHECK(compose(t, t) == identity_perm(2));
    // right operand acts first
    Perm a{1, 2, 0}, b{0, 2, 1};
    CHECK(compose(a, b)[1] == a[b[1]]);
    CHECK_THROWS_AS(static_cast<void>(compose(a, identity_perm(4))), Error);
}

TEST_CASE("fixed points and cycle type") {
    CHECK(has_fixed_point(identity_perm(4)));
    CHECK(cycle_type(identity_perm(4)) == std::vector<int>{1, 1, 1, 1});
    Perm d{1, 0, 3, 2};  // (0,1)(2,3)
    CHECK(!has_fixed_point(d));
    CHECK(cycle_type(d) == std::vector<int>{2, 2});

    // the 8-cycle on F_8 elements listed in power order
    auto plain = Field::make(2, 3, std::vector<int>{1, 1, 0, 1});
    std::vector<std::vector<int>> order;
    for (const char* lbl : {"0", "u", "u^2", "u+1", "u^2+u", "u^2+u+1", "u^2+1", "1"})
        order.push_back(plain->coeffs(plain->parse(lbl)));
    auto F8 = Field::make(2, 3, std::vector<int>{1, 1, 0, 1}, order);
    Perm beta = perm_from_cycle_string(*F8, "(0,1,u^2+1,u,u^2+u,u^2,u^2+u+1,u+1)");
    CHECK(cycle_type(beta) == std::vector<int>{8});
}

TEST_CASE("tuple validity") {
    SUBCASE("Sigma_2") {
        CHECK(tuple_valid({identity_perm(2), Perm{1, 0}}));
        CHECK(!tuple_valid({identity_perm(2), identity_perm(2)}));
    }
    SUBCASE("wrong length throws") {
        CHECK_THROWS_AS(static_cast<void>(tuple_valid({identity_perm(3), Perm{1, 2, 0}})), Error);
    }
    SUBCASE("the F9 tuple is valid and quotients are fixed-point-free") {
        auto F9 = make_f9_31();
        auto tuple = f9_tuple(*F9);
        CHECK(tuple_valid(tuple));
        CHECK(!has_fixed_point(compose(inverse(tuple[0]), tuple[1])));
    }
}

TEST_CASE("tuple transform") {
    auto id2 = identity_perm(2);
    PermTuple omega{id2, Perm{1, 0}};
    SUBCASE("identity transform") { CHECK(tuple_transform(id2, omega, id2) == omega); }
    SUBCASE("swap by sigma") {
        PermTuple got = tuple_transform(Perm{1, 0}, omega, id2);
        CHECK(got == PermTuple{Perm{1, 0}, id2});
    }
    SUBCASE("validity is preserved for random sigma, delta") {
        std::mt19937 rng(77);
        auto F9 = make_f9_31();
        std::vector<PermTuple> tuples{f9_tuple(*F9)};
        PermTuple t3{Perm{0, 1, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}};
        tuples.push_back(t3);
        for (const auto& t : tuples) {
            const int n = static_cast<int>(t.size());
            for (int trial = 0; trial < 20; ++trial) {
                PermTuple out = tuple_transform(random_perm(n, rng), t, random_perm(n, rng));
                CHECK(tuple_valid(out));
            }
        }
    }
}

TEST_CASE("tuple equivalence") {
    std::mt19937 rng(5);
    PermTuple t3{Perm{0, 1, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}};
    SUBCASE("reflexive with identity witness") {
        auto w = tuples_equivalent(t3, t3);
        REQUIRE(w.has_value());
        CHECK(w->first == identity_perm(3));
        CHECK(w->second == identity_perm(3));
    }
    SUBCASE("constructive round-trip finds a witness") {
        for (int trial = 0; trial < 10; ++trial) {
            Perm s = random_perm(3, rng), d = random_perm(3, rng);
            PermTuple gamma = tuple_transform(s, t3, d);
            auto w = tuples_equivalent(t3, gamma);
            REQUIRE(w.has_value());
            CHECK(tuple_transform(w->first, t3, w->second) == gamma);
        }
    }
    SUBCASE("symmetry and transitivity on witnessed pairs") {
        for (int trial = 0; trial < 5; ++trial) {
            PermTuple b = tuple_transform(random_perm(3, rng), t3, random_perm(3, rng));
            PermTuple c = tuple_transform(random_perm(3, rng), b, random_perm(3, rng));
            CHECK(tuples_equivalent(b, t3).has_value());
            CHECK(tuples_equivalent(t3, c).has_value());
        }
    }
    SUBCASE("the handmade order-5 tuple is not equivalent to cycle-power tuples") {
        auto F5 = Field::make(5, 1);
        PermTuple handmade;
        for (const char* s : {"(1,2,4,3)", "(0,1)(2,3,4)", "(0,2)(1,4)", "(0,3)",
                              "(0,4)(1,3,2)"})
            handmade.push_back(perm_from_cycle_string(*F5, s));
        REQUIRE(tuple_valid(handmade));
        Perm c5 = perm_from_cycle_string(*F5, "(0,1,2,3,4)");
        PermTuple powers(5), shifted(5);
        Perm acc = identity_perm(5);
        for (int i = 0; i < 5; ++i) {
            powers[i] = acc;
            shifted[i] = compose(c5, acc);
            acc = compose(c5, acc);
        }
        CHECK(!tuples_equivalent(handmade, powers).has_value());
        CHECK(!tuples_equivalent(handmade, shifted).has_value());
    }
}
