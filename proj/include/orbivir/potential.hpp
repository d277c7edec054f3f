#pragma once

#include <functional>
#include <map>
#include <vector>

#include "orbivir/invariants.hpp"
#include "orbivir/virasoro_ops.hpp"

namespace orbivir {

namespace detail {

// Non-increasing multisets of `size` non-negative entries with the given sum
// and entry bound.
inline void enumerate_multisets(long size, long sum, long max_entry,
                                const std::function<void(const std::vector<long>&)>& emit,
                                std::vector<long>& acc) {
    if (size == 0) {
        if (sum == 0)
            emit(acc);
        return;
    }
    long cap = acc.empty() ? max_entry : std::min(max_entry, acc.back());
    cap = std::min(cap, sum);
    for (long v = cap; v >= 0; --v) {
        if (sum - v > v * (size - 1))
            continue; // remaining entries (<= v each) cannot reach the sum
        acc.push_back(v);
        enumerate_multisets(size - 1, sum - v, max_entry, emit, acc);
        acc.pop_back();
    }
}

inline void enumerate_multisets(long size, long sum, long max_entry,
                                const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> acc;
    enumerate_multisets(size, sum, max_entry, emit, acc);
}

// 1 / prod (multiplicity!) over equal entries of a sorted multiset.
inline Rational symmetry_factor(const std::vector<long>& sorted) {
    Rational f = 1;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        f /= Rational(factorial(static_cast<long>(j - i)));
        i = j;
    }
    return f;
}

} // namespace detail

// Admissible profiles for the model with 3 <= sum n_i <= max_points.
inline std::vector<MonodromyProfile> enumerate_admissible_profiles(int N, long max_points,
                                                                   long min_points = 3) {
    std::vector<MonodromyProfile> out;
    std::vector<long> counts(static_cast<std::size_t>(N - 1), 0);
    std::function<void(int, long)> rec = [&](int sector, long used) {
        if (sector == N - 1) {
            MonodromyProfile p(N, counts);
            if (p.total_points() >= min_points && is_admissible(p))
                out.push_back(p);
            return;
        }
        for (long n = 0; used + n <= max_points; ++n) {
            counts[static_cast<std::size_t>(sector)] = n;
            rec(sector + 1, used + n);
        }
        counts[static_cast<std::size_t>(sector)] = 0;
    };
    rec(0, 0);
    return out;
}

// Coefficient symbols per profile, keyed by the count vector.
using ProfileCoefficients = std::map<std::vector<long>, std::vector<Rational>>;

// Coefficients for the potential assembly are drawn per sector block, not
// per position: the generating function identifies the marked points of one
// block (the exponential collapse of the alpha monomials), so the closed
// forms feeding it must be block-symmetric. Geometric Hurwitz-Hodge inputs
// are block-constant automatically; fully independent c entries exist only
// as linear-system bookkeeping.
inline ProfileCoefficients random_profile_coefficients(const std::vector<MonodromyProfile>& profiles,
                                                       RationalRng& rng) {
    ProfileCoefficients c;
    for (const auto& p : profiles) {
        std::vector<Rational> v;
        for (int i = 1; i <= p.N - 1; ++i) {
            Rational block = rng.next();
            for (long rep = 0; rep < p.counts[i - 1]; ++rep)
                v.push_back(block);
        }
        c[p.counts] = std::move(v);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Degree-zero genus-zero potential, truncated
// ---------------------------------------------------------------------------
//
// Assembled from closed forms, in the rescaled frame where the untwisted
// one-point classes couple with unit weight:
//   d = 1:  F = sum_m s_m <<tau_m>> + alpha blocks
//   d = 2:  F = sum_m r_m <<tau_m>> + (1/2) sum s_l s_m <<tau_l tau_m>> + alpha blocks
// with <<...>> the classical psi-integral series and the alpha blocks the
// Theta-closed-form invariants weighted by the profile's c symbols.

inline SeriesPolynomial assemble_potential(const WeightedProjectiveModel& model, Truncation trunc,
                                           CaseTag invariant_case, const ProfileCoefficients& coeffs) {
    if (model.dim != 1 && model.dim != 2)
        throw unsupported_model_error("potential assembly supports d = 1 and d = 2");
    SeriesPolynomial F(trunc);
    const long D = trunc.max_degree;
    const long M = trunc.max_mode;

    // Untwisted blocks: one distinguished top-class insertion (s for d=1,
    // r for d=2), arbitrarily many identity descendants.
    auto add_one_point_block = [&](int cls) {
        for (int m = 0; m <= M; ++m) {
            for (long n = 2; n + 1 <= D; ++n) {
                long need = n - 2 - m; // sum of identity exponents
                if (need < 0)
                    continue;
                detail::enumerate_multisets(n, need, M, [&](const std::vector<long>& ls) {
                    std::vector<long> all(ls);
                    all.push_back(m);
                    Rational inv = untwisted_invariant(all);
                    if (inv == 0)
                        return;
                    Mono mono = Mono::single(Var{cls, m});
                    for (long b : ls)
                        mono = mono * Mono::single(var_t(static_cast<int>(b)));
                    F.add_term(mono, inv * detail::symmetry_factor(ls));
                });
            }
        }
    };

    if (model.dim == 1) {
        add_one_point_block(kClsS);
    } else {
        add_one_point_block(kClsR);
        // two xi insertions
        for (int m1 = 0; m1 <= M; ++m1)
            for (int m2 = m1; m2 <= M; ++m2)
                for (long n = 1; n + 2 <= D; ++n) {
                    long need = n - 1 - m1 - m2;
                    if (need < 0)
                        continue;
                    detail::enumerate_multisets(n, need, M, [&](const std::vector<long>& ls) {
                        std::vector<long> all(ls);
                        all.push_back(m1);
                        all.push_back(m2);
                        Rational inv = untwisted_invariant(all);
                        if (inv == 0)
                            return;
                        Mono mono = Mono::single(var_s(m1)) * Mono::single(var_s(m2));
                        Rational sym = detail::symmetry_factor(ls);
                        if (m1 == m2)
                            sym /= 2;
                        for (long b : ls)
                            mono = mono * Mono::single(var_t(static_cast<int>(b)));
                        F.add_term(mono, inv * sym);
                    });
                }
    }

    // Stacky blocks, one per admissible profile with at least 3 points.
    for (const auto& [counts, c] : coeffs) {
        MonodromyProfile profile(model.N, counts);
        long total = profile.total_points();
        if (total > D)
            continue;
        if (c.size() != static_cast<std::size_t>(total))
            throw shape_error("profile coefficient vector has wrong length");

        // The dimension constraint pins sum l + sum k for each number of
        // plain points:
        //   curve:   n + total - 2 - sum n_i i/N
        //   surface: (n + total - 2)/2 + (n + total)/2 - sum n_i 2i/N
        for (long n = 0; n + total <= D; ++n) {
            Rational X;
            if (invariant_case == CaseTag::Curve) {
                X = Rational(n + total - 2);
                for (int i = 1; i <= model.N - 1; ++i)
                    X -= Rational(counts[i - 1]) * block_value(CaseTag::Curve, model.N, i);
            } else {
                X = make_rational(n + total - 2, 2) + make_rational(n + total, 2);
                for (int i = 1; i <= model.N - 1; ++i)
                    X -= Rational(counts[i - 1]) * block_value(CaseTag::Surface, model.N, i);
            }
            if (!is_integer(X) || X < 0)
                continue;
            long budget = static_cast<long>(to_integer(X));

            for (long lsum = 0; lsum <= budget; ++lsum) {
                detail::enumerate_multisets(n, lsum, M, [&](const std::vector<long>& ls) {
                    // distribute budget - lsum over the sector blocks
                    std::function<void(int, long, std::vector<std::vector<long>>&)> blocks =
                        [&](int sector, long remaining, std::vector<std::vector<long>>& chosen) {
                            if (sector == model.N) {
                                if (remaining != 0)
                                    return;
                                InvariantQuery q;
                                q.profile = profile;
                                q.invariant_case = invariant_case;
                                q.plain_exponents = ls;
                                for (const auto& blk : chosen)
                                    for (long kv : blk)
                                        q.stacky_exponents.push_back(kv);
                                if (!dimension_constraint(q))
                                    return;
                                Rational inv = evaluate_invariant(q, c);
                                if (inv == 0)
                                    return;
                                Mono mono;
                                Rational sym = detail::symmetry_factor(ls);
                                for (long b : ls)
                                    mono = mono * Mono::single(var_t(static_cast<int>(b)));
                                for (int i = 1; i <= model.N - 1; ++i) {
                                    sym *= detail::symmetry_factor(chosen[static_cast<std::size_t>(i - 1)]);
                                    for (long kv : chosen[static_cast<std::size_t>(i - 1)])
                                        mono = mono * Mono::single(var_alpha(i, static_cast<int>(kv)));
                                }
                                F.add_term(mono, inv * sym);
                            } else {
                                long sz = counts[static_cast<std::size_t>(sector - 1)];
                                long lo = 0, hi = remaining;
                                for (long s = lo; s <= hi; ++s)
                                    detail::enumerate_multisets(sz, s, M, [&](const std::vector<long>& ks) {
                                        chosen.push_back(ks);
                                        blocks(sector + 1, remaining - s, chosen);
                                        chosen.pop_back();
                                    });
                            }
                        };
                    std::vector<std::vector<long>> chosen;
                    blocks(1, budget - lsum, chosen);
                });
            }
        }
    }
    return F;
}

// ---------------------------------------------------------------------------
// z / x / y block extraction
// ---------------------------------------------------------------------------

struct ZBlockReport {
    // Main-route contributions, classified by monomial content. For d = 1
    // all four are identically zero; for d = 2 only z_block carries the
    // assertion and the untwisted part is the (out-of-scope) w potential.
    SeriesPolynomial x_block;     // pure t
    SeriesPolynomial y_block;     // s-linear, no alpha
    SeriesPolynomial z_block;     // alpha content from the displayed route
    SeriesPolynomial untwisted_w; // d = 2 only: everything else without alpha
    // Separately reported cross contributions (d = 2).
    SeriesPolynomial cross_alpha_alpha;
    SeriesPolynomial cross_r_t;
    long dropped = 0;
};

namespace detail {

inline bool mono_has_alpha(const Mono& m) {
    for (const auto& [v, e] : m.vars)
        if (is_alpha(v))
            return true;
    return false;
}

inline long mono_degree_of_cls(const Mono& m, int cls) {
    long d = 0;
    for (const auto& [v, e] : m.vars)
        if (v.cls == cls)
            d += e;
    return d;
}

} // namespace detail

// Applies the transcribed L_k to the truncated closed-form potential and
// buckets the resulting coefficient functions. Vanishing of the x/y/z blocks
// is the content of the degree-zero Virasoro constraints; the cross buckets
// are reported, not asserted.
inline ZBlockReport z_block_coefficients(const WeightedProjectiveModel& model, long k,
                                         Truncation window, const ProfileCoefficients& coeffs,
                                         const ChernScalars& chern) {
    if (model.dim != 1 && model.dim != 2)
        throw unsupported_model_error("z extraction supports d = 1 and d = 2");
    const CaseTag tag = model.dim == 1 ? CaseTag::Curve : CaseTag::Surface;

    // Margins so that every window coefficient is truncation-safe: sources
    // of a window monomial gain at most degree 2 (double derivatives) and
    // mode k+1 (the dt_{k+1} term).
    Truncation full{window.max_mode + static_cast<int>(k) + 1, window.max_degree + 2};
    SeriesPolynomial F = assemble_potential(model, full, tag, coeffs);

    ExpOperator op = model.dim == 1
                         ? build_explicit_Lk_curve(model.N, k, full.max_mode, chern.c)
                         : build_explicit_Lk_surface(model.N, k, full.max_mode, chern);
    auto buckets = apply_to_exponential(op, F);

    ZBlockReport report;
    report.x_block = SeriesPolynomial(full);
    report.y_block = SeriesPolynomial(full);
    report.z_block = SeriesPolynomial(full);
    report.untwisted_w = SeriesPolynomial(full);
    report.cross_alpha_alpha = SeriesPolynomial(full);
    report.cross_r_t = SeriesPolynomial(full);

    for (auto& [bucket, series] : buckets) {
        report.dropped += series.dropped();
        for (const auto& [m, c] : series.terms()) {
            if (bucket == OpBucket::AlphaAlpha) {
                report.cross_alpha_alpha.add_term(m, c);
                continue;
            }
            if (bucket == OpBucket::RT) {
                report.cross_r_t.add_term(m, c);
                continue;
            }
            if (detail::mono_has_alpha(m)) {
                report.z_block.add_term(m, c);
            } else if (model.dim == 1) {
                long sdeg = detail::mono_degree_of_cls(m, kClsS);
                if (sdeg == 0)
                    report.x_block.add_term(m, c);
                else if (sdeg == 1)
                    report.y_block.add_term(m, c);
                else
                    report.untwisted_w.add_term(m, c);
            } else {
                report.untwisted_w.add_term(m, c);
            }
        }
    }
    return report;
}

// Window filter for assertions: the coefficients guaranteed complete at the
// assembled truncation.
inline std::map<Mono, Rational> window_coefficients(const SeriesPolynomial& s, Truncation window) {
    std::map<Mono, Rational> out;
    for (const auto& [m, c] : s.terms())
        if (window.admits(m))
            out.emplace(m, c);
    return out;
}

} // namespace orbivir
