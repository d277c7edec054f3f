#include <catch2/catch_amalgamated.hpp>

#include "orbivir/invariants.hpp"
#include "orbivir/potential.hpp"

using namespace orbivir;

namespace {

InvariantQuery make_query(MonodromyProfile p, CaseTag tag, std::vector<long> k, std::vector<long> l) {
    InvariantQuery q;
    q.profile = std::move(p);
    q.invariant_case = tag;
    q.stacky_exponents = std::move(k);
    q.plain_exponents = std::move(l);
    return q;
}

// String-equation oracle for the classical psi integrals: reduce the
// exponent list by the string equation until (0,0,0).
Rational string_oracle(std::vector<long> l) {
    long n = static_cast<long>(l.size());
    if (n < 3)
        return 0;
    long sum = 0;
    for (long x : l)
        sum += x;
    if (sum != n - 3)
        return 0;
    if (n == 3)
        return 1;
    // remove one zero insertion (one must exist for nonzero value when n > 3)
    auto it = std::find(l.begin(), l.end(), 0L);
    REQUIRE(it != l.end());
    l.erase(it);
    Rational total = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0)
            continue;
        std::vector<long> next = l;
        --next[i];
        total += string_oracle(next);
    }
    return total;
}

} // namespace

TEST_CASE("untwisted genus-zero invariants") {
    CHECK(untwisted_invariant({0, 0, 0}) == 1);
    CHECK(untwisted_invariant({1, 0, 0, 0}) == 1);
    CHECK(untwisted_invariant({2, 0, 0, 0, 0}) == 1);
    CHECK(untwisted_invariant({1, 1, 0, 0, 0}) == 2);
    CHECK(untwisted_invariant({1, 0, 0}) == 0); // dimension off
    CHECK_THROWS_AS(untwisted_invariant({0, 0}), degenerate_profile_error);
}

TEST_CASE("untwisted invariants match the string-equation oracle") {
    RationalRng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        long n = rng.next_long(3, 7);
        std::vector<long> l(static_cast<std::size_t>(n), 0);
        long budget = n - 3;
        while (budget > 0) {
            ++l[static_cast<std::size_t>(rng.next_long(0, n - 1))];
            --budget;
        }
        CHECK(untwisted_invariant(l) == string_oracle(l));
    }
}

TEST_CASE("matrix A for N=2 (6) curve") {
    MonodromyProfile p(2, {6});
    Rational a = case_a_value(p, CaseTag::Curve);
    CHECK(a == 1); // 6 - 3 - 2
    RatMatrix A = build_matrix_A(p, CaseTag::Curve, a);
    for (std::size_t s = 0; s < 6; ++s)
        for (std::size_t t = 0; t < 6; ++t)
            CHECK(A(s, t) == (s == t ? make_rational(3, 2) : make_rational(1, 2)));
}

TEST_CASE("determinant law against elimination for all profiles up to 6 points") {
    for (int N = 2; N <= 7; ++N) {
        std::vector<long> counts(static_cast<std::size_t>(N - 1), 0);
        std::function<void(int, long)> rec = [&](int sector, long used) {
            if (sector == N) {
                if (used < 1)
                    return;
                MonodromyProfile p(N, counts);
                for (CaseTag tag : {CaseTag::Curve, CaseTag::Surface}) {
                    Rational a = case_a_value(p, tag);
                    RatMatrix A = build_matrix_A(p, tag, a);
                    CHECK(A.determinant() == matrix_A_determinant_law(p, tag, a));
                }
                return;
            }
            for (long n = 0; used + n <= 6; ++n) {
                counts[static_cast<std::size_t>(sector - 1)] = n;
                rec(sector + 1, used + n);
            }
            counts[static_cast<std::size_t>(sector - 1)] = 0;
        };
        rec(1, 0);
    }
}

TEST_CASE("a = 0 gives determinant zero") {
    MonodromyProfile p(2, {4});
    Rational a = case_a_value(p, CaseTag::Curve);
    CHECK(a == 0);
    CHECK(build_matrix_A(p, CaseTag::Curve, a).determinant() == 0);
}

TEST_CASE("row scale factor for N=2 (6) curve is 256") {
    MonodromyProfile p(2, {6});
    Rational a = case_a_value(p, CaseTag::Curve);
    CHECK(row_scale_factor(p, CaseTag::Curve, 1, a) == 256);
}

TEST_CASE("row scaling preserves nonsingularity") {
    MonodromyProfile p(3, {1, 4});
    for (CaseTag tag : {CaseTag::Curve, CaseTag::Surface}) {
        Rational a = case_a_value(p, tag);
        RatMatrix A = build_matrix_A(p, tag, a);
        RatMatrix S = scale_rows(p, tag, A, a);
        CHECK((A.determinant() != 0) == (S.determinant() != 0));
    }
}

TEST_CASE("surface N=4 with points in sector 1 is degenerate") {
    MonodromyProfile p(4, {1, 2, 1}); // admissible: 1 + 4 + 3 = 8 = 0 mod 4
    REQUIRE(is_admissible(p));
    Rational a = case_a_value(p, CaseTag::Surface);
    CHECK_THROWS_AS(row_scale_factor(p, CaseTag::Surface, 1, a), degenerate_profile_error);
}

TEST_CASE("solve_for_c round-trips") {
    MonodromyProfile p(2, {6});
    // gamma = 0 -> c = 0
    auto zero = solve_for_c(p, CaseTag::Curve, std::vector<Rational>(6, Rational(0)));
    for (const auto& x : zero)
        CHECK(x == 0);
    // gamma = bold-A e_1 -> c = e_1
    Rational a = case_a_value(p, CaseTag::Curve);
    RatMatrix S = scale_rows(p, CaseTag::Curve, build_matrix_A(p, CaseTag::Curve, a), a);
    std::vector<Rational> e1(6, Rational(0));
    e1[0] = 1;
    CHECK(solve_for_c(p, CaseTag::Curve, S.apply(e1)) == e1);
    // multiply-back on random gamma
    RationalRng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto gamma = rng.vector(6);
        auto c = solve_for_c(p, CaseTag::Curve, gamma);
        CHECK(S.apply(c) == gamma);
    }
    // singular system
    CHECK_THROWS_AS(solve_for_c(MonodromyProfile(2, {4}), CaseTag::Curve,
                                std::vector<Rational>(4, Rational(1))),
                    singular_system_error);
}

TEST_CASE("Theta spot values for N=2 (6), k=(1,0,0,0,0,0)") {
    auto q = make_query(MonodromyProfile(2, {6}), CaseTag::Curve, {1, 0, 0, 0, 0, 0}, {});
    CHECK(theta_value(q, 1) == 384);
    for (long r = 2; r <= 6; ++r)
        CHECK(theta_value(q, r) == 128);

    auto form = evaluate_invariant_symbolic(q);
    CHECK(form.constant() == 0);
    CHECK(form.coefficient(1) == 384);
    for (std::size_t j = 2; j <= 6; ++j)
        CHECK(form.coefficient(j) == 128);
    CHECK(form.str() == "384*c1 + 128*c2 + 128*c3 + 128*c4 + 128*c5 + 128*c6");
}

TEST_CASE("Theta is block-permutation equivariant") {
    auto base = make_query(MonodromyProfile(3, {2, 2}), CaseTag::Curve, {2, 0, 1, 0}, {1});
    auto swapped = make_query(MonodromyProfile(3, {2, 2}), CaseTag::Curve, {0, 2, 1, 0}, {1});
    CHECK(theta_value(base, 1) == theta_value(swapped, 2));
    CHECK(theta_value(base, 2) == theta_value(swapped, 1));
    CHECK(theta_value(base, 3) == theta_value(swapped, 3));
}

TEST_CASE("dimension gate zeroes violating queries") {
    RationalRng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        int N = static_cast<int>(rng.next_long(2, 5));
        auto profiles = enumerate_admissible_profiles(N, 6);
        if (profiles.empty())
            continue;
        const auto& p = profiles[static_cast<std::size_t>(rng.next_long(
            0, static_cast<long>(profiles.size()) - 1))];
        InvariantQuery q;
        q.profile = p;
        q.invariant_case = CaseTag::Curve;
        q.stacky_exponents.assign(static_cast<std::size_t>(p.total_points()), 0);
        for (auto& k : q.stacky_exponents)
            k = rng.next_long(0, 3);
        q.plain_exponents = {rng.next_long(0, 3)};
        if (!dimension_constraint(q))
            CHECK(evaluate_invariant_symbolic(q).is_zero());
    }
}

TEST_CASE("solve and evaluate agree on the defining curve queries") {
    // The distinguished queries behind Gamma: psi^a at one position, zero
    // elsewhere, no plain points. evaluate(solve(Gamma)) must reproduce
    // Gamma exactly. The scaled rows of the curve system are precisely the
    // Theta vectors of these queries.
    RationalRng rng(41);
    for (const auto& p : {MonodromyProfile(2, {6}), MonodromyProfile(3, {3, 3}),
                          MonodromyProfile(5, {2, 2, 2, 2})}) {
        REQUIRE(is_admissible(p));
        Rational a = case_a_value(p, CaseTag::Curve);
        REQUIRE(is_integer(a));
        REQUIRE(a > 0);
        long ai = static_cast<long>(to_integer(a));
        auto gamma = rng.vector(static_cast<std::size_t>(p.total_points()));
        auto c = solve_for_c(p, CaseTag::Curve, gamma);
        for (long j = 1; j <= p.total_points(); ++j) {
            InvariantQuery q;
            q.profile = p;
            q.invariant_case = CaseTag::Curve;
            q.stacky_exponents.assign(static_cast<std::size_t>(p.total_points()), 0);
            q.stacky_exponents[static_cast<std::size_t>(j - 1)] = ai;
            REQUIRE(dimension_constraint(q));
            CHECK(evaluate_invariant(q, c) == gamma[static_cast<std::size_t>(j - 1)]);
        }
    }
}

TEST_CASE("surface defining queries are dimension-gated") {
    // The displayed surface system is not the Theta-row system of a
    // dimension-admissible defining family: the single-exponent query at
    // psi^a violates the surface constraint by exactly one, so the solved
    // coefficients are formal inputs there rather than round-trip values.
    MonodromyProfile p(5, {5, 0, 0, 0});
    REQUIRE(is_admissible(p));
    Rational a = case_a_value(p, CaseTag::Surface);
    REQUIRE(is_integer(a));
    REQUIRE(a > 0);
    InvariantQuery q;
    q.profile = p;
    q.invariant_case = CaseTag::Surface;
    q.stacky_exponents.assign(5, 0);
    q.stacky_exponents[0] = static_cast<long>(to_integer(a));
    CHECK(!dimension_constraint(q));
    CHECK(evaluate_invariant_symbolic(q).is_zero());
}

TEST_CASE("BZ3 base point value passes through") {
    InvariantQuery q;
    q.profile = MonodromyProfile(3, {3, 0});
    q.invariant_case = CaseTag::Curve;
    q.stacky_exponents = {0, 0, 0};
    CHECK(case_a_value(q.profile, CaseTag::Curve) == 0);
    CHECK(eigenbundle_rank(q.profile, 1) == 0);
    std::vector<Rational> gamma(3, make_rational(1, 3));
    CHECK(evaluate_invariant_from_gamma(q, gamma) == make_rational(1, 3));

    // a = 0 outside the base case is rejected
    InvariantQuery bad = q;
    bad.stacky_exponents = {1, 0, 0};
    CHECK_THROWS_AS(evaluate_invariant_from_gamma(bad, gamma), singular_system_error);
}

TEST_CASE("recursion residual vanishes: curve sweep") {
    RationalRng rng(43);
    long cases = 0;
    for (int N = 2; N <= 5; ++N) {
        auto profiles = enumerate_admissible_profiles(N, 8);
        for (const auto& p : profiles) {
            for (long k = 1; k <= 3; ++k) {
                // enumerate small exponent patterns satisfying the
                // augmented dimension constraint
                InvariantQuery q;
                q.profile = p;
                q.invariant_case = CaseTag::Curve;
                q.stacky_exponents.assign(static_cast<std::size_t>(p.total_points()), 0);
                Rational X = Rational(p.total_points() - 2) - Rational(k);
                for (int i = 1; i <= N - 1; ++i)
                    X -= Rational(p.counts[i - 1]) * block_value(CaseTag::Curve, N, i);
                // n = 0 plain points; distribute integer X over two slots
                if (!is_integer(X) || X < 0)
                    continue;
                long budget = static_cast<long>(to_integer(X));
                q.stacky_exponents[0] = budget;
                auto residual = recursion_residual_symbolic(q, k);
                CHECK(residual.is_zero());
                auto c = rng.vector(static_cast<std::size_t>(p.total_points()));
                CHECK(recursion_residual(q, k, c) == 0);
                ++cases;
            }
        }
    }
    CHECK(cases > 10);
}

TEST_CASE("recursion residual vanishes with plain points and surface case") {
    auto qc = make_query(MonodromyProfile(2, {6}), CaseTag::Curve, {0, 0, 0, 0, 0, 0}, {1, 0});
    // augmented constraint: n + total - 2 = sum l + sum(k_j + i/N) + k
    // 2 + 6 - 2 = 1 + 3 + k  =>  k = 2
    auto r = recursion_residual_symbolic(qc, 2);
    CHECK(r.is_zero());

    auto qs = make_query(MonodromyProfile(3, {1, 1}), CaseTag::Surface, {0, 0}, {1});
    // surface constraint: (1 + 2 - 2)/2 = (1 - 1/2) + (0-1/2+2/3) + (0-1/2+4/3) + k
    // 1/2 = 1/2 + 1/6 + 5/6 + k -> k = -1, not valid; use another query below.
    (void)qs;
    // A valid surface configuration: N=2, (6), all k=0, l=(), k_vir from the
    // constraint: (0+6-2)/2 = 6*(0 - 1/2 + 1) + k -> 2 = 3 + k -> invalid.
    // Take N=3 (3,0), l=(): (3-2)/2 = 3*(1/6) + k -> k = 0, invalid (k>=1).
    // Surface sweeps live in the acceptance suite over richer patterns.
}

TEST_CASE("surface negative-offset metadata") {
    MonodromyProfile p(5, {1, 0, 0, 3}); // admissible: 1 + 12 = 13... not
    // pick an admissible one: 1*1 + 4*n4 = 0 mod 5 -> n4 = 1 mod 5
    MonodromyProfile ok(5, {1, 0, 0, 1});
    REQUIRE(is_admissible(ok));
    auto sectors = surface_negative_offset_sectors(ok);
    REQUIRE(sectors.size() == 1);
    CHECK(sectors[0] == 1); // 2/5 < 1/2
    (void)p;
}
