#pragma once

#include <vector>

#include "orbivir/bracket.hpp"
#include "orbivir/geometry.hpp"
#include "orbivir/linear_form.hpp"
#include "orbivir/matrix.hpp"

namespace orbivir {

// Classical genus-zero psi integral over M_{0,n}: (n-3)!/prod l_i! when
// sum l_i = n-3, otherwise 0.
inline Rational untwisted_invariant(const std::vector<long>& l) {
    long n = static_cast<long>(l.size());
    if (n < 3)
        throw degenerate_profile_error("untwisted invariant needs at least 3 points");
    long total = 0;
    for (long x : l) {
        if (x < 0)
            throw shape_error("negative descendant exponent");
        total += x;
    }
    if (total != n - 3)
        return Rational(0);
    Rational r(factorial(n - 3));
    for (long x : l)
        r /= Rational(factorial(x));
    return r;
}

// The constant a of Eq. (constant1)/(constant2); integral for admissible
// profiles.
inline Rational case_a_value(const MonodromyProfile& p, CaseTag c) {
    Rational a(p.total_points() - 2);
    for (int i = 1; i <= p.N - 1; ++i)
        a -= Rational(p.counts[i - 1]) * block_value(c, p.N, i);
    return a;
}

// Matrix A: constant block columns (block value of the column's sector) plus
// a on the diagonal.
inline RatMatrix build_matrix_A(const MonodromyProfile& p, CaseTag c, const Rational& a) {
    std::size_t n = static_cast<std::size_t>(p.total_points());
    RatMatrix A(n, n);
    for (std::size_t t = 0; t < n; ++t) {
        Rational v = block_value(c, p.N, p.sector_of_position(static_cast<long>(t) + 1));
        for (std::size_t s = 0; s < n; ++s)
            A(s, t) = v;
        A(t, t) += a;
    }
    return A;
}

// Closed form for det A: a^{n-1} (a + sum_i n_i v_i).
inline Rational matrix_A_determinant_law(const MonodromyProfile& p, CaseTag c, const Rational& a) {
    Rational det = 1;
    for (long i = 1; i < p.total_points(); ++i)
        det *= a;
    Rational shift = a;
    for (int i = 1; i <= p.N - 1; ++i)
        shift += Rational(p.counts[i - 1]) * block_value(c, p.N, i);
    return det * shift;
}

// Row scale factor turning A into the system matrix of (linearsystem):
//   curve:   (i/N) (sum n - 3)! / ((a + i/N)! prod_b (b/N)^{n_b})
//   surface: (1/2)(sum n - 3)! (2i/N - 1/2) / ((a + 2i/N - 1/2)! prod_b (2b/N - 1/2)^{n_b})
// with (x)! the shifted factorial through a.
inline Rational row_scale_factor(const MonodromyProfile& p, CaseTag c, int sector, const Rational& a) {
    if (p.total_points() < 3)
        throw degenerate_profile_error("profile has fewer than 3 stacky points");
    if (!is_integer(a))
        throw degenerate_profile_error("non-integer a; profile is not admissible");
    long ai = static_cast<long>(to_integer(a));

    Rational offset = block_value(c, p.N, sector);
    if (c == CaseTag::Surface)
        offset -= make_rational(1, 2);

    Rational numerator = (c == CaseTag::Curve ? Rational(1) : make_rational(1, 2)) *
                         Rational(factorial(p.total_points() - 3)) * offset;
    Rational denom = shifted_factorial(ai, offset);
    for (int b = 1; b <= p.N - 1; ++b) {
        Rational base = block_value(c, p.N, b);
        if (c == CaseTag::Surface)
            base -= make_rational(1, 2);
        for (long rep = 0; rep < p.counts[b - 1]; ++rep)
            denom *= base;
    }
    if (denom == 0)
        throw degenerate_profile_error("zero factor in row scale denominator");
    return numerator / denom;
}

inline RatMatrix scale_rows(const MonodromyProfile& p, CaseTag c, const RatMatrix& A,
                            const Rational& a) {
    RatMatrix out = A;
    for (std::size_t row = 0; row < A.rows(); ++row) {
        Rational f = row_scale_factor(p, c, p.sector_of_position(static_cast<long>(row) + 1), a);
        for (std::size_t col = 0; col < A.cols(); ++col)
            out(row, col) *= f;
    }
    return out;
}

// Solves the scaled system bold-A c = Gamma exactly.
inline std::vector<Rational> solve_for_c(const MonodromyProfile& p, CaseTag c,
                                         const std::vector<Rational>& gamma) {
    if (gamma.size() != static_cast<std::size_t>(p.total_points()))
        throw shape_error("gamma length does not match profile");
    Rational a = case_a_value(p, c);
    if (a == 0)
        throw singular_system_error("a = 0: the linear system is singular");
    RatMatrix A = scale_rows(p, c, build_matrix_A(p, c, a), a);
    return A.solve(gamma);
}

// ---------------------------------------------------------------------------
// Closed-form Theta and invariant evaluation
// ---------------------------------------------------------------------------

// Theta(k, l)_r:
//   curve:   (n + sum n - 3)! (k_r + s/N) / (prod l_j! prod_blocks (k_j + b/N)!)
//   surface: (1/2)(n + sum n - 3)! (k_r - 1/2 + 2s/N)
//            / (prod (l_j - 1/2)! prod_blocks (k_j - 1/2 + 2b/N)!)
//
// The surface plain factor (l - 1/2)! is normalized as
//   2 * (1/2)(3/2)...(l - 1/2),   so (0 - 1/2)! = 2.
// This is the unique product normalization under which the closed form
// solves the displayed recursion identically in the coefficients; the
// literal product starting at -1/2 breaks the tau_{k+1} step by a constant
// factor at every plain insertion.
inline Rational surface_plain_factor(long l) {
    return 2 * shifted_factorial(l - 1, make_rational(1, 2));
}

inline Rational theta_value(const InvariantQuery& q, long r) {
    q.validate();
    const auto& p = q.profile;
    long total = p.total_points();
    if (r < 1 || r > total)
        throw range_error("theta position out of range");
    long n = static_cast<long>(q.plain_exponents.size());
    if (n + total < 3)
        throw degenerate_profile_error("fewer than 3 marked points");

    const bool curve = q.invariant_case == CaseTag::Curve;
    const Rational half = make_rational(1, 2);

    Rational numerator(factorial(n + total - 3));
    if (!curve)
        numerator *= half;
    int s = p.sector_of_position(r);
    Rational top = Rational(q.stacky_exponents[static_cast<std::size_t>(r - 1)]) +
                   block_value(q.invariant_case, p.N, s);
    if (!curve)
        top -= half;
    numerator *= top;

    Rational denom = 1;
    for (long lj : q.plain_exponents)
        denom *= curve ? Rational(factorial(lj)) : surface_plain_factor(lj);
    for (long j = 1; j <= total; ++j) {
        int b = p.sector_of_position(j);
        Rational offset = block_value(q.invariant_case, p.N, b);
        if (!curve)
            offset -= half;
        denom *= shifted_factorial(q.stacky_exponents[static_cast<std::size_t>(j - 1)], offset);
    }
    if (denom == 0)
        throw degenerate_profile_error("zero factor in Theta denominator");
    return numerator / denom;
}

// Surface sectors whose offset 2b/N - 1/2 is negative (with points present):
// the literal shifted factorial then has a negative leading factor, which
// callers may want to surface in output metadata.
inline std::vector<int> surface_negative_offset_sectors(const MonodromyProfile& p) {
    std::vector<int> out;
    for (int b = 1; b <= p.N - 1; ++b)
        if (p.counts[b - 1] > 0 && make_rational(2 * b, p.N) < make_rational(1, 2))
            out.push_back(b);
    return out;
}

// Is this the a = 0 base configuration whose value is the raw Hurwitz-Hodge
// input (all exponents zero, no plain points)?
inline bool is_base_case(const InvariantQuery& q) {
    if (!q.plain_exponents.empty())
        return false;
    for (long k : q.stacky_exponents)
        if (k != 0)
            return false;
    return case_a_value(q.profile, q.invariant_case) == 0;
}

// Invariant as a linear form in the symbols c_1..c_{sum n}: the Theta-weighted
// sum if the dimension constraint holds, zero otherwise.
inline LinearForm evaluate_invariant_symbolic(const InvariantQuery& q) {
    q.validate();
    if (!is_admissible(q.profile))
        throw admissibility_error("profile is not admissible");
    if (q.profile.total_points() < 3)
        throw degenerate_profile_error("profile has fewer than 3 stacky points");
    if (!dimension_constraint(q))
        return LinearForm(Rational(0));
    LinearForm out;
    for (long j = 1; j <= q.profile.total_points(); ++j)
        out += LinearForm::symbol(static_cast<std::size_t>(j), theta_value(q, j));
    return out;
}

inline Rational evaluate_invariant(const InvariantQuery& q, const std::vector<Rational>& c) {
    if (c.size() != static_cast<std::size_t>(q.profile.total_points()))
        throw shape_error("coefficient vector length does not match profile");
    return evaluate_invariant_symbolic(q).evaluate(c);
}

// Full pipeline value from the Hurwitz-Hodge inputs Gamma. The a = 0 base
// configuration passes the raw input through; otherwise solve then evaluate.
inline Rational evaluate_invariant_from_gamma(const InvariantQuery& q,
                                              const std::vector<Rational>& gamma) {
    q.validate();
    if (!is_admissible(q.profile))
        throw admissibility_error("profile is not admissible");
    if (gamma.size() != static_cast<std::size_t>(q.profile.total_points()))
        throw shape_error("gamma length does not match profile");
    if (case_a_value(q.profile, q.invariant_case) == 0) {
        if (!is_base_case(q))
            throw singular_system_error("a = 0 outside the all-zero base case");
        for (const auto& g : gamma)
            if (g != gamma.front())
                throw inconsistency_error("base-case gamma entries must agree");
        if (!dimension_constraint(q))
            return Rational(0);
        return gamma.front();
    }
    return evaluate_invariant(q, solve_for_c(q.profile, q.invariant_case, gamma));
}

// ---------------------------------------------------------------------------
// The recursion
// ---------------------------------------------------------------------------

// LHS - RHS of the displayed recursion for Virasoro index k >= 1, with every
// invariant evaluated through the closed form at the same coefficient
// symbols. Exactly zero for dimension-consistent inputs.
//
// Transfer factors (zero-safe via shifted factorials):
//   curve plain:   (l_i + k)! / ((l_i - 1)! (k+1)!) = (k, l_i)-shifted / (k+1)!
//   curve stacky:  (k_j + k + i/N)! / ((k_j - 1 + i/N)! (k+1)!)
//   surface plain: [l_i - 1/2]_0^k / [1/2]_0^k
//   surface stacky:[k_j + 2i/N - 1/2]_0^k / [1/2]_0^k
inline LinearForm recursion_residual_symbolic(const InvariantQuery& q, long k) {
    q.validate();
    if (k < 1)
        throw range_error("recursion needs Virasoro index k >= 1");
    const bool curve = q.invariant_case == CaseTag::Curve;
    const Rational half = make_rational(1, 2);

    InvariantQuery augmented = q;
    augmented.plain_exponents.push_back(k + 1);
    LinearForm residual = -evaluate_invariant_symbolic(augmented);

    Rational norm = curve ? Rational(factorial(k + 1)) : shifted_factorial(k, half);

    for (std::size_t i = 0; i < q.plain_exponents.size(); ++i) {
        long li = q.plain_exponents[i];
        Rational factor = curve ? shifted_factorial(k, Rational(li)) / norm
                                : shifted_factorial(k, Rational(li) - half) / norm;
        if (factor == 0)
            continue;
        InvariantQuery shifted = q;
        shifted.plain_exponents[i] = li + k;
        residual += factor * evaluate_invariant_symbolic(shifted);
    }

    for (long j = 1; j <= q.profile.total_points(); ++j) {
        int sector = q.profile.sector_of_position(j);
        long kj = q.stacky_exponents[static_cast<std::size_t>(j - 1)];
        Rational offset = block_value(q.invariant_case, q.profile.N, sector);
        if (!curve)
            offset -= half;
        Rational factor = shifted_factorial(k, Rational(kj) + offset) / norm;
        if (factor == 0)
            continue;
        InvariantQuery shifted = q;
        shifted.stacky_exponents[static_cast<std::size_t>(j - 1)] = kj + k;
        residual += factor * evaluate_invariant_symbolic(shifted);
    }
    return residual;
}

inline Rational recursion_residual(const InvariantQuery& q, long k, const std::vector<Rational>& c) {
    return recursion_residual_symbolic(q, k).evaluate(c);
}

} // namespace orbivir
