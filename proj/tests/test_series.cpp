#include <catch2/catch_amalgamated.hpp>

#include "orbivir/series.hpp"

using namespace orbivir;

namespace {
Var t(int m) { return Var{0, m}; }
} // namespace

TEST_CASE("series arithmetic and derivative") {
    Truncation tr{4, 4};
    SeriesPolynomial f(tr);
    // f = t1 t0 + 3 t2
    f.add_term(Mono::single(t(1)) * Mono::single(t(0)), 1);
    f.add_term(Mono::single(t(2)), 3);

    auto df = f.derivative(t(1));
    CHECK(df.coefficient(Mono::single(t(0))) == 1);
    CHECK(df.terms().size() == 1);

    auto d2 = f.derivative(t(2));
    CHECK(d2.coefficient(Mono::one()) == 3);

    auto g = f * f;
    CHECK(g.coefficient(Mono::single(t(2), 2)) == 9);
    CHECK(g.coefficient(Mono::single(t(1)) * Mono::single(t(0)) * Mono::single(t(2))) == 6);
}

TEST_CASE("identity operator behaviour and power derivative") {
    Truncation tr{3, 5};
    SeriesPolynomial f(tr);
    f.add_term(Mono::single(t(0), 3), make_rational(1, 6));
    auto df = f.derivative(t(0));
    CHECK(df.coefficient(Mono::single(t(0), 2)) == make_rational(1, 2));
}

TEST_CASE("truncation drops are counted") {
    Truncation tr{2, 2};
    SeriesPolynomial f(tr);
    f.add_term(Mono::single(t(0), 2), 1);
    CHECK(f.dropped() == 0);
    f.add_term(Mono::single(t(0), 3), 1); // degree 3 > 2
    CHECK(f.dropped() == 1);
    f.add_term(Mono::single(t(5)), 1); // mode 5 > 2
    CHECK(f.dropped() == 2);
    CHECK(f.terms().size() == 1);
}

TEST_CASE("hbar bookkeeping is exempt from degree truncation") {
    Truncation tr{2, 2};
    SeriesPolynomial f(tr);
    f.add_term(Mono::single(t(0), 2).with_hbar(-3), 1);
    CHECK(f.dropped() == 0);
    CHECK(f.coefficient(Mono::single(t(0), 2).with_hbar(-3)) == 1);
    auto shifted = f.shift_hbar(2);
    CHECK(shifted.coefficient(Mono::single(t(0), 2).with_hbar(-1)) == 1);
}

TEST_CASE("times_var respects ordering of variables") {
    Truncation tr{4, 4};
    SeriesPolynomial f(tr);
    f.add_term(Mono::single(Var{1, 2}), 1);
    auto g = f.times_var(Var{0, 1});
    Mono expect = Mono::single(Var{0, 1}) * Mono::single(Var{1, 2});
    CHECK(g.coefficient(expect) == 1);
}
