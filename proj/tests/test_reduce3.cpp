#include <catch2/catch_amalgamated.hpp>

#include "orbivir/invariants.hpp"
#include "orbivir/reduce3.hpp"

using namespace orbivir;

TEST_CASE("no descendants: unchanged with weight 1") {
    std::vector<Insertion> ins{{0, "p1"}, {0, "p2"}, {0, "p3"}};
    auto out = reduce_threefold(ins);
    REQUIRE(out.size() == 1);
    CHECK(out[0].weight == 1);
    CHECK(out[0].insertions == ins);
    CHECK(!out[0].irreducible);
}

TEST_CASE("dilaton removes tau_1(1)") {
    // <tau_1(1) p1 p2 p3> = (n - 2) <p1 p2 p3> with n = 3 remaining points,
    // matching the genus-zero dilaton equation on М_{0,4}:
    // <tau_1 tau_0^3> = 1 * <tau_0^3>.
    std::vector<Insertion> ins{{1, "1"}, {0, "p1"}, {0, "p2"}, {0, "p3"}};
    auto out = reduce_threefold(ins);
    REQUIRE(out.size() == 1);
    CHECK(out[0].weight == 1);
    REQUIRE(out[0].insertions.size() == 3);
    CHECK(untwisted_invariant({1, 0, 0, 0}) == untwisted_invariant({0, 0, 0}));

    // five remaining points: factor 3
    std::vector<Insertion> five{{1, "1"}, {0, "a"}, {0, "b"}, {0, "c"}, {0, "d"}, {0, "e"}};
    auto out5 = reduce_threefold(five);
    REQUIRE(out5.size() == 1);
    CHECK(out5[0].weight == 3);
}

TEST_CASE("string distributes decrements") {
    std::vector<Insertion> ins{{0, "1"}, {1, "a"}, {0, "p"}};
    auto out = reduce_threefold(ins);
    REQUIRE(out.size() == 1);
    CHECK(out[0].weight == 1);
    CHECK(out[0].insertions == std::vector<Insertion>{{0, "a"}, {0, "p"}});
}

TEST_CASE("vanishing dilaton factor kills the branch") {
    // string: tau_2(1) -> tau_1(1); the subsequent dilaton factor
    // (#remaining - 2) = 0 annihilates the whole term.
    std::vector<Insertion> ins{{0, "1"}, {2, "1"}, {0, "x"}, {0, "y"}};
    auto out = reduce_threefold(ins);
    CHECK(out.empty());
}

TEST_CASE("irreducible configuration is reported, not rejected") {
    std::vector<Insertion> ins{{2, "g"}, {0, "p"}, {0, "q"}};
    auto out = reduce_threefold(ins);
    REQUIRE(out.size() == 1);
    CHECK(out[0].irreducible);
}

TEST_CASE("repeated string reductions terminate on primaries") {
    std::vector<Insertion> ins{{0, "1"}, {3, "1"}, {0, "1"}, {0, "1"}, {0, "1"}};
    auto out = reduce_threefold(ins);
    Rational total = 0;
    for (const auto& term : out) {
        REQUIRE(!term.irreducible);
        for (const auto& i : term.insertions)
            CHECK(i.exponent == 0);
        total += term.weight;
    }
    CHECK(total == 1);
}

TEST_CASE("string then dilaton chains reduce mixed descendants") {
    std::vector<Insertion> ins{{0, "1"}, {2, "1"}, {0, "x"}, {0, "y"}, {0, "z"}};
    auto out = reduce_threefold(ins);
    // string: tau_2(1) -> tau_1(1); dilaton then removes it with factor
    // (#remaining - 2) = 1, leaving the three primaries.
    REQUIRE(out.size() == 1);
    CHECK(out[0].weight == 1);
    CHECK(out[0].insertions == std::vector<Insertion>{{0, "x"}, {0, "y"}, {0, "z"}});
    CHECK(!out[0].irreducible);
}
