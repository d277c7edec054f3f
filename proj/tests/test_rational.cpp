#include <catch2/catch_amalgamated.hpp>

#include "orbivir/rational.hpp"

using namespace orbivir;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    Rational x = make_rational(6, -4);
    CHECK(numerator(x) == -3);
    CHECK(denominator(x) == 2);
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), error);
}

TEST_CASE("serialization round-trips with the sign on the numerator") {
    CHECK(to_string(make_rational(-3, 2)) == "-3/2");
    CHECK(to_string(make_rational(5, 1)) == "5");
    CHECK(parse_rational("-3/2") == make_rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK_THROWS_AS(parse_rational("x/2"), parse_error);
    CHECK_THROWS_AS(parse_rational(""), parse_error);
}

TEST_CASE("round-trip on random rationals") {
    RationalRng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.next_allow_zero();
        CHECK(parse_rational(to_string(x)) == x);
    }
}

TEST_CASE("floor and fractional part") {
    CHECK(rational_floor(make_rational(7, 2)) == 3);
    CHECK(rational_floor(make_rational(-7, 2)) == -4);
    CHECK(fractional_part(make_rational(-7, 2)) == make_rational(1, 2));
    CHECK(fractional_part(Rational(5)) == 0);
}

TEST_CASE("integrality checks") {
    CHECK(is_integer(Rational(4)));
    CHECK(!is_integer(make_rational(4, 3)));
    CHECK(to_integer(make_rational(12, 4)) == 3);
    CHECK_THROWS_AS(to_integer(make_rational(1, 3)), inconsistency_error);
}
