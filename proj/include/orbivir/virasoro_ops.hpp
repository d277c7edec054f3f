#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbivir/bracket.hpp"
#include "orbivir/geometry.hpp"
#include "orbivir/series.hpp"

namespace orbivir {

// Variable numbering shared by the potential and the displayed operators:
// t couples to 1, s to xi, r to [X] (surfaces), alpha^i to gamma_i.
inline constexpr int kClsT = 0;
inline constexpr int kClsS = 1;
inline constexpr int kClsR = 2;
inline constexpr int kClsAlphaBase = 10; // alpha^i has cls = kClsAlphaBase + i

inline Var var_t(int mode) { return Var{kClsT, mode}; }
inline Var var_s(int mode) { return Var{kClsS, mode}; }
inline Var var_r(int mode) { return Var{kClsR, mode}; }
inline Var var_alpha(int sector, int mode) { return Var{kClsAlphaBase + sector, mode}; }

inline bool is_alpha(Var v) { return v.cls >= kClsAlphaBase; }
inline int alpha_sector(Var v) { return v.cls - kClsAlphaBase; }

// Descendant variable of the model basis class idx at the given mode.
inline Var var_for_basis(const WeightedProjectiveModel& model, std::size_t idx, int mode) {
    if (model.is_twisted(idx))
        return var_alpha(model.twist_sector(idx), mode);
    if (idx == 0)
        return var_t(mode);
    if (idx == 1)
        return var_s(mode);
    if (idx == 2)
        return var_r(mode);
    throw range_error("basis class without a descendant coordinate");
}

// Origin tag for contributions whose vanishing is not part of the displayed
// z-functions and is therefore reported separately instead of asserted.
enum class OpBucket { Main, AlphaAlpha, RT };

inline std::string to_string(OpBucket b) {
    switch (b) {
    case OpBucket::Main:
        return "main";
    case OpBucket::AlphaAlpha:
        return "alpha-alpha";
    case OpBucket::RT:
        return "r-t";
    }
    return "?";
}

// A differential operator in the descendant variables, kept as structured
// terms so it can be conjugated through exp(F/hbar) without expanding the
// exponential:
//   P1   c * d/dw          -> c * dF/dw * hbar^{-1}
//   QP   c * v * d/dw      -> c * v * dF/dw * hbar^{-1}
//   PP   c * hbar d2/dv dw -> c * (dF/dv dF/dw * hbar^{-1} + d2F/dv dw)
//   MULT c * monomial      -> itself
struct ExpTerm {
    enum class Kind { P1, QP, PP, MULT } kind;
    Rational coeff;
    Var v{};
    Var w{};
    Mono mono{};
    OpBucket bucket = OpBucket::Main;
};

struct ExpOperator {
    std::vector<ExpTerm> terms;

    void p1(Rational c, Var w, OpBucket b = OpBucket::Main) {
        if (c != 0 && w.mode >= 0)
            terms.push_back({ExpTerm::Kind::P1, std::move(c), {}, w, {}, b});
    }
    void qp(Rational c, Var v, Var w, OpBucket b = OpBucket::Main) {
        if (c != 0 && v.mode >= 0 && w.mode >= 0)
            terms.push_back({ExpTerm::Kind::QP, std::move(c), v, w, {}, b});
    }
    void pp(Rational c, Var v, Var w, OpBucket b = OpBucket::Main) {
        if (c != 0 && v.mode >= 0 && w.mode >= 0)
            terms.push_back({ExpTerm::Kind::PP, std::move(c), v, w, {}, b});
    }
    void mult(Rational c, Mono m, OpBucket b = OpBucket::Main) {
        if (c != 0)
            terms.push_back({ExpTerm::Kind::MULT, std::move(c), {}, {}, std::move(m), b});
    }
};

// L e^{F/hbar} / e^{F/hbar}, computed on the genus-zero potential F (an
// hbar-free series) and returned per origin bucket. Derivatives of F are
// cached per variable.
inline std::map<OpBucket, SeriesPolynomial> apply_to_exponential(const ExpOperator& op,
                                                                 const SeriesPolynomial& F) {
    std::map<Var, SeriesPolynomial> dF;
    auto deriv = [&](Var v) -> const SeriesPolynomial& {
        auto it = dF.find(v);
        if (it == dF.end())
            it = dF.emplace(v, F.derivative(v)).first;
        return it->second;
    };

    std::map<OpBucket, SeriesPolynomial> out;
    auto& main = out[OpBucket::Main];
    main = SeriesPolynomial(F.truncation());

    auto sink = [&](OpBucket b) -> SeriesPolynomial& {
        auto it = out.find(b);
        if (it == out.end())
            it = out.emplace(b, SeriesPolynomial(F.truncation())).first;
        return it->second;
    };

    for (const auto& t : op.terms) {
        SeriesPolynomial& acc = sink(t.bucket);
        switch (t.kind) {
        case ExpTerm::Kind::P1:
            acc += t.coeff * deriv(t.w).shift_hbar(-1);
            break;
        case ExpTerm::Kind::QP:
            acc += t.coeff * deriv(t.w).times_var(t.v).shift_hbar(-1);
            break;
        case ExpTerm::Kind::PP: {
            acc += t.coeff * (deriv(t.v) * deriv(t.w)).shift_hbar(-1);
            acc += t.coeff * deriv(t.v).derivative(t.w);
            break;
        }
        case ExpTerm::Kind::MULT: {
            SeriesPolynomial m(F.truncation());
            m.add_term(t.mono, t.coeff);
            acc += m;
            break;
        }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The displayed Virasoro operators for P(1,N) and P(1,1,N)
// ---------------------------------------------------------------------------

// Opaque scalars in front of the first-Chern blocks; the displays carry them
// verbatim and no identity checked here depends on their values.
struct ChernScalars {
    Rational c;
    Rational c_abs_sq;
};

inline ChernScalars default_chern_scalars(int dim) {
    Rational c(dim + 1);
    return ChernScalars{c, c * c};
}

// Curve display: L_k for P(1,N), k >= 1. qp families are enumerated up to
// source mode `mode_bound` (sources beyond the potential's truncation act as
// zero).
inline ExpOperator build_explicit_Lk_curve(int N, long k, int mode_bound,
                                           const Rational& chern_c = Rational(2)) {
    if (k < 1)
        throw unsupported_model_error("explicit display exists for k >= 1 only");
    ExpOperator op;
    auto br = [&](const Rational& x, long i) { return bracket_symbol(x, i, k); };

    op.p1(-br(1, 0), var_t(static_cast<int>(k) + 1));
    for (int m = 0; m <= mode_bound; ++m) {
        op.qp(br(m, 0), var_t(m), var_t(static_cast<int>(k) + m));
        op.qp(br(m + 1, 0), var_s(m), var_s(static_cast<int>(k) + m));
        for (int i = 1; i <= N - 1; ++i)
            op.qp(br(Rational(m) + make_rational(i, N), 0), var_alpha(i, m),
                  var_alpha(i, static_cast<int>(k) + m));
    }

    op.p1(-chern_c * br(1, 1), var_s(static_cast<int>(k)));
    for (int m = 0; m <= mode_bound; ++m)
        op.qp(chern_c * br(m, 1), var_t(m), var_s(static_cast<int>(k) + m - 1));
    for (long m = 0; m <= k - 2; ++m) {
        Rational sign((m % 2 == 0) ? -1 : 1); // (-1)^{m+1}
        op.pp(chern_c / 2 * sign * br(Rational(-m - 1), 1), var_s(static_cast<int>(m)),
              var_s(static_cast<int>(k - m - 2)));
    }
    return op;
}

// Surface display: L_k for P(1,1,N), k >= 1. The hbar cross blocks that can
// feed alpha monomials are tagged for separate reporting.
inline ExpOperator build_explicit_Lk_surface(int N, long k, int mode_bound,
                                             const ChernScalars& chern) {
    if (k < 1)
        throw unsupported_model_error("explicit display exists for k >= 1 only");
    ExpOperator op;
    auto br = [&](const Rational& x, long i) { return bracket_symbol(x, i, k); };
    const Rational half = make_rational(1, 2);
    const int ik = static_cast<int>(k);

    op.p1(-br(half, 0), var_t(ik + 1));
    for (int m = 0; m <= mode_bound; ++m) {
        op.qp(br(Rational(m) - half, 0), var_t(m), var_t(ik + m));
        op.qp(br(Rational(m) + half, 0), var_s(m), var_s(ik + m));
        op.qp(br(Rational(m) + 3 * half, 0), var_r(m), var_r(ik + m));
        for (int i = 1; i <= N - 1; ++i)
            op.qp(br(Rational(m) + make_rational(2 * i, N) - half, 0), var_alpha(i, m),
                  var_alpha(i, ik + m));
    }

    for (long m = 0; m <= k - 1; ++m) {
        Rational sign((m % 2 == 0) ? -1 : 1); // (-1)^{m+1}
        op.pp(sign * br(Rational(-m) - 3 * half, 1), var_r(static_cast<int>(m)),
              var_t(static_cast<int>(k - m - 1)), OpBucket::RT);
        op.pp(sign / 2 * br(Rational(-m) - half, 1), var_s(static_cast<int>(m)),
              var_s(static_cast<int>(k - m - 1)));
        for (int i = 1; i <= N - 1; ++i)
            op.pp(sign * br(Rational(-m) - make_rational(2 * i, N) + half, 1),
                  var_alpha(i, static_cast<int>(m)), var_alpha(N - i, static_cast<int>(k - m - 1)),
                  OpBucket::AlphaAlpha);
    }

    op.p1(-chern.c * br(half, 1), var_s(ik));
    for (int m = 0; m <= mode_bound; ++m) {
        op.qp(chern.c * br(Rational(m) - half, 1), var_t(m), var_s(ik + m - 1));
        op.qp(chern.c * br(Rational(m) + half, 1), var_s(m), var_r(ik + m - 1));
    }
    for (long m = 0; m <= k - 2; ++m) {
        Rational sign((m % 2 == 0) ? -1 : 1);
        op.pp(chern.c * sign * br(Rational(-m) - 3 * half, 1), var_r(static_cast<int>(m)),
              var_s(static_cast<int>(k - m - 2)));
    }

    op.p1(-chern.c_abs_sq * br(half, 2), var_r(ik - 1));
    for (int m = 0; m <= mode_bound; ++m)
        op.qp(chern.c_abs_sq * br(Rational(m) - half, 2), var_t(m), var_r(ik + m - 2));
    for (long m = 0; m <= k - 3; ++m) {
        Rational sign((m % 2 == 0) ? -1 : 1);
        op.pp(chern.c_abs_sq / 2 * sign * br(Rational(-m) - 3 * half, 2), var_r(static_cast<int>(m)),
              var_r(static_cast<int>(k - m - 3)));
    }

    if (k == 1) {
        Mono t0sq = Mono::single(var_t(0), 2).with_hbar(-1);
        op.mult(half, t0sq);
    }
    return op;
}

// String operator (the m = -1 constraint) over the full basis of a model:
// -dt_0 + sum t_m d/dt_{m-1} + (1/2 hbar)(t_0, t_0)_eta.
inline ExpOperator build_string_operator(const WeightedProjectiveModel& model, const RatMatrix& eta,
                                         int mode_bound) {
    ExpOperator op;
    op.p1(Rational(-1), var_t(0));
    for (std::size_t idx = 0; idx < model.basis_size(); ++idx)
        for (int m = 1; m <= mode_bound; ++m)
            op.qp(Rational(1), var_for_basis(model, idx, m), var_for_basis(model, idx, m - 1));
    for (std::size_t a = 0; a < model.basis_size(); ++a)
        for (std::size_t b = 0; b < model.basis_size(); ++b)
            if (eta(a, b) != 0) {
                Mono m = Mono::single(var_for_basis(model, a, 0)) *
                         Mono::single(var_for_basis(model, b, 0));
                op.mult(eta(a, b) / 2, m.with_hbar(-1));
            }
    return op;
}

// ---------------------------------------------------------------------------
// L_0 versus L_0': symbolic coefficient comparison
// ---------------------------------------------------------------------------

// Normal-form symbol of a quadratic differential operator in the descendant
// variables, used to compare transcriptions coefficientwise.
struct OpSymbolTerm {
    enum class Kind { P1, QP, PP, QQ } kind;
    Var v{};
    Var w{};

    auto operator<=>(const OpSymbolTerm&) const = default;
};

using OperatorSymbol = std::map<OpSymbolTerm, Rational>;

inline void symbol_add(OperatorSymbol& s, OpSymbolTerm t, const Rational& c) {
    if (c == 0)
        return;
    if (t.kind == OpSymbolTerm::Kind::QQ || t.kind == OpSymbolTerm::Kind::PP)
        if (t.w < t.v)
            std::swap(t.v, t.w);
    auto it = s.find(t);
    if (it == s.end()) {
        s.emplace(t, c);
    } else {
        it->second += c;
        if (it->second == 0)
            s.erase(it);
    }
}

// L_0' display: -(3-r)/2 dt_1^0 + sum (mu_a + m + 1/2) t_m^a dt_m^a
// - R_0^b dt_0^b + sum_{m>=1} R_a^b t_m^a dt_{m-1}^b + (1/2hbar) R_{ab} t_0^a t_0^b.
// Constant terms are omitted on both sides of the comparison.
inline OperatorSymbol build_L0_prime_symbol(const WeightedProjectiveModel& model, const RatMatrix& rho,
                                            const RatMatrix& eta, int mode_bound) {
    const std::size_t n = model.basis_size();
    OperatorSymbol sym;
    int r = model.dim;
    symbol_add(sym, {OpSymbolTerm::Kind::P1, {}, var_for_basis(model, 0, 1)},
               -make_rational(3 - r, 2));
    for (std::size_t a = 0; a < n; ++a)
        for (int m = 0; m <= mode_bound; ++m)
            symbol_add(sym,
                       {OpSymbolTerm::Kind::QP, var_for_basis(model, a, m), var_for_basis(model, a, m)},
                       model.mu_eigenvalue(a) + Rational(m) + make_rational(1, 2));
    // rho(phi_a) = sum_b rho(b, a) phi_b, so R_a^b = rho(b, a).
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Rational& R = rho(b, a);
            if (R == 0)
                continue;
            if (a == 0)
                symbol_add(sym, {OpSymbolTerm::Kind::P1, {}, var_for_basis(model, b, 0)}, -R);
            for (int m = 1; m <= mode_bound; ++m)
                symbol_add(sym,
                           {OpSymbolTerm::Kind::QP, var_for_basis(model, a, m),
                            var_for_basis(model, b, m - 1)},
                           R);
        }
    // R_{ab} t_0^a t_0^b with R_{ab} = (rho(phi_a), phi_b)_eta.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational low = 0;
            for (std::size_t g = 0; g < n; ++g)
                low += rho(g, a) * eta(g, b);
            if (low != 0)
                symbol_add(sym,
                           {OpSymbolTerm::Kind::QQ, var_for_basis(model, a, 0),
                            var_for_basis(model, b, 0)},
                           low / 2);
        }
    return sym;
}

// L_0 from the general closed expansion of L_m (specialized to m = 0; the
// hbar double-derivative sums are empty there).
inline OperatorSymbol build_L0_general_symbol(const WeightedProjectiveModel& model, const RatMatrix& rho,
                                              const RatMatrix& eta, int mode_bound) {
    const std::size_t n = model.basis_size();
    OperatorSymbol sym;
    const long m = 0;
    int r = model.dim;

    std::vector<RatMatrix> rho_powers{RatMatrix::identity(n)};
    for (long i = 1; i <= m + 2; ++i)
        rho_powers.push_back(rho * rho_powers.back());

    for (long i = 0; i <= m + 1; ++i) {
        const RatMatrix& rho_power = rho_powers[static_cast<std::size_t>(i)];
        // -[(3-r)/2]_i^m (R^i)_0^b dt_{m-i+1}^b
        for (std::size_t b = 0; b < n; ++b) {
            const Rational& Ri = rho_power(b, 0);
            if (Ri != 0 && m - i + 1 >= 0)
                symbol_add(sym,
                           {OpSymbolTerm::Kind::P1, {},
                            var_for_basis(model, b, static_cast<int>(m - i + 1))},
                           -bracket_symbol(make_rational(3 - r, 2), i, m) * Ri);
        }
        // sum_k [mu_a + k + 1/2]_i^m (R^i)_a^b t_k^a dt_{k+m-i}^b
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Rational& Ri = rho_power(b, a);
                if (Ri == 0)
                    continue;
                for (int k = 0; k <= mode_bound; ++k) {
                    long target = k + m - i;
                    if (target < 0)
                        continue;
                    Rational arg = model.mu_eigenvalue(a) + Rational(k) + make_rational(1, 2);
                    symbol_add(sym,
                               {OpSymbolTerm::Kind::QP, var_for_basis(model, a, k),
                                var_for_basis(model, b, static_cast<int>(target))},
                               bracket_symbol(arg, i, m) * Ri);
                }
            }
    }
    // (1/2hbar)(R^{m+1})_{ab} t_0^a t_0^b.
    const RatMatrix& rho_top = rho_powers[static_cast<std::size_t>(m + 1)];
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational low = 0;
            for (std::size_t g = 0; g < n; ++g)
                low += rho_top(g, a) * eta(g, b);
            if (low != 0)
                symbol_add(sym,
                           {OpSymbolTerm::Kind::QQ, var_for_basis(model, a, 0),
                            var_for_basis(model, b, 0)},
                           low / 2);
        }
    return sym;
}

// Do the non-constant parts of L_0 (general expansion) and L_0' agree?
inline bool compare_L0_nonconstant(const WeightedProjectiveModel& model, const RatMatrix& rho,
                                   const RatMatrix& eta, int mode_bound = 8) {
    return build_L0_general_symbol(model, rho, eta, mode_bound) ==
           build_L0_prime_symbol(model, rho, eta, mode_bound);
}

inline bool compare_L0_nonconstant(const WeightedProjectiveModel& model) {
    return compare_L0_nonconstant(model, model.rho_matrix(), model.pairing_matrix());
}

} // namespace orbivir
