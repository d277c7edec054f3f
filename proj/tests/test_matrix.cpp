#include <catch2/catch_amalgamated.hpp>

#include "orbivir/matrix.hpp"

using namespace orbivir;

TEST_CASE("matrix arithmetic") {
    RatMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    RatMatrix i = RatMatrix::identity(2);
    CHECK(a * i == a);
    CHECK((a - a).is_zero());
    RatMatrix sq = a * a;
    CHECK(sq(0, 0) == 7);
    CHECK(sq(0, 1) == 10);
    CHECK(sq(1, 0) == 15);
    CHECK(sq(1, 1) == 22);
    CHECK(a.transpose()(0, 1) == 3);
}

TEST_CASE("determinant and solve") {
    RatMatrix a(3, 3);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(0, 2) = 1;
    a(1, 0) = 1;
    a(1, 1) = 3;
    a(1, 2) = 2;
    a(2, 0) = 1;
    a(2, 1) = 0;
    a(2, 2) = 0;
    CHECK(a.determinant() == make_rational(-1, 1));
    std::vector<Rational> b{4, 5, 6};
    auto x = a.solve(b);
    auto back = a.apply(x);
    CHECK(back == b);

    RatMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK(singular.determinant() == 0);
    CHECK_THROWS_AS(singular.solve({1, 1}), singular_system_error);
}

TEST_CASE("inverse") {
    RationalRng rng(5);
    RatMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            a(r, c) = rng.next_allow_zero();
    a(0, 0) += 100; // keep it comfortably nonsingular
    a(1, 1) += 100;
    a(2, 2) += 100;
    CHECK(a * a.inverse() == RatMatrix::identity(3));
}

TEST_CASE("random solve round-trips exactly") {
    RationalRng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                a(r, c) = rng.next_allow_zero();
        if (a.determinant() == 0)
            continue;
        std::vector<Rational> x0 = rng.vector(4);
        auto b = a.apply(x0);
        CHECK(a.solve(b) == x0);
    }
}
