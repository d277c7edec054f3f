#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "orbivir/matrix.hpp"
#include "orbivir/rational.hpp"
#include "orbivir/series.hpp"
#include "orbivir/theta_z.hpp"

namespace orbivir {

// Quadratic monomials in the Darboux coordinates {p_a^mu, q_b^nu}. A Var
// here is (cls = cohomology basis index, mode = a). Monomials are stored
// canonically: QQ and PP with sorted variable pairs, QP with the q variable
// first.
enum class QuadKind { QQ, QP, PP };

struct QuadMono {
    QuadKind kind = QuadKind::QQ;
    Var x; // QQ/PP: smaller var; QP: the q variable
    Var y;

    static QuadMono qq(Var a, Var b) {
        if (b < a)
            std::swap(a, b);
        return {QuadKind::QQ, a, b};
    }
    static QuadMono pp(Var a, Var b) {
        if (b < a)
            std::swap(a, b);
        return {QuadKind::PP, a, b};
    }
    static QuadMono qp(Var q, Var p) { return {QuadKind::QP, q, p}; }

    auto operator<=>(const QuadMono&) const = default;
};

// Truncated quadratic Hamiltonian: finitely many quadratic Darboux
// monomials, modes bounded by the producer.
struct QuadraticHamiltonian {
    std::map<QuadMono, Rational> terms;

    void add(const QuadMono& m, const Rational& c) {
        if (c == 0)
            return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    QuadraticHamiltonian& operator+=(const QuadraticHamiltonian& o) {
        for (const auto& [m, c] : o.terms)
            add(m, c);
        return *this;
    }

    friend QuadraticHamiltonian operator*(const Rational& s, QuadraticHamiltonian h) {
        if (s == 0)
            return QuadraticHamiltonian{};
        for (auto& [m, c] : h.terms)
            c *= s;
        return h;
    }

    bool is_zero() const { return terms.empty(); }
};

namespace detail {

// A quadratic monomial as its two factors (side, var); side 0 = q, 1 = p.
inline std::pair<std::pair<int, Var>, std::pair<int, Var>> factors(const QuadMono& m) {
    switch (m.kind) {
    case QuadKind::QQ:
        return {{0, m.x}, {0, m.y}};
    case QuadKind::QP:
        return {{0, m.x}, {1, m.y}};
    case QuadKind::PP:
        return {{1, m.x}, {1, m.y}};
    }
    throw error("unreachable");
}

inline QuadMono from_factors(std::pair<int, Var> a, std::pair<int, Var> b) {
    if (a.first == 0 && b.first == 0)
        return QuadMono::qq(a.second, b.second);
    if (a.first == 1 && b.first == 1)
        return QuadMono::pp(a.second, b.second);
    if (a.first == 0)
        return QuadMono::qp(a.second, b.second);
    return QuadMono::qp(b.second, a.second);
}

// {p_v, q_w} = delta_{vw}, {q,q} = {p,p} = 0.
inline int fundamental_bracket(const std::pair<int, Var>& f, const std::pair<int, Var>& g) {
    if (f.second != g.second)
        return 0;
    if (f.first == 1 && g.first == 0)
        return 1;
    if (f.first == 0 && g.first == 1)
        return -1;
    return 0;
}

} // namespace detail

// Poisson bracket of quadratic Hamiltonians (a quadratic again), expanded by
// the derivation rule over the two factors of each monomial.
inline QuadraticHamiltonian poisson_bracket(const QuadraticHamiltonian& A, const QuadraticHamiltonian& B) {
    QuadraticHamiltonian out;
    for (const auto& [ma, ca] : A.terms) {
        auto [a1, a2] = detail::factors(ma);
        for (const auto& [mb, cb] : B.terms) {
            auto [b1, b2] = detail::factors(mb);
            const Rational c = ca * cb;
            if (int s = detail::fundamental_bracket(a1, b1))
                out.add(detail::from_factors(a2, b2), c * s);
            if (int s = detail::fundamental_bracket(a1, b2))
                out.add(detail::from_factors(a2, b1), c * s);
            if (int s = detail::fundamental_bracket(a2, b1))
                out.add(detail::from_factors(a1, b2), c * s);
            if (int s = detail::fundamental_bracket(a2, b2))
                out.add(detail::from_factors(a1, b1), c * s);
        }
    }
    return out;
}

// Quantized quadratic differential operator acting on Fock-space polynomials
// in the q coordinates.
struct FockTerm {
    QuadKind kind;
    Rational coeff;
    Var x;
    Var y;
};

struct FockOperator {
    std::vector<FockTerm> terms;

    static FockOperator quantize(const QuadraticHamiltonian& h) {
        FockOperator op;
        op.terms.reserve(h.terms.size());
        for (const auto& [m, c] : h.terms)
            op.terms.push_back({m.kind, c, m.x, m.y});
        return op;
    }

    // q_a q_b -> q_a q_b / hbar;  q_a p_b -> q_a d/dq_b;  p_a p_b -> hbar d/dq_a d/dq_b.
    SeriesPolynomial apply(const SeriesPolynomial& f) const {
        SeriesPolynomial out(f.truncation());
        for (const auto& t : terms) {
            switch (t.kind) {
            case QuadKind::QQ:
                out += t.coeff * f.times_var(t.x).times_var(t.y).shift_hbar(-1);
                break;
            case QuadKind::QP:
                out += t.coeff * f.derivative(t.y).times_var(t.x);
                break;
            case QuadKind::PP:
                out += t.coeff * f.derivative(t.x).derivative(t.y).shift_hbar(1);
                break;
            }
        }
        return out;
    }
};

inline FockOperator quantize(const QuadraticHamiltonian& h) { return FockOperator::quantize(h); }

// Central scalar [A^, B^] - ({A,B})^ of two quadratic Hamiltonians. The
// difference must act as a constant; it is measured on the constant
// polynomial and cross-checked on the supplied probes.
inline Rational cocycle(const QuadraticHamiltonian& A, const QuadraticHamiltonian& B,
                        const std::vector<SeriesPolynomial>& probes = {}) {
    FockOperator a = quantize(A);
    FockOperator b = quantize(B);
    FockOperator pb = quantize(poisson_bracket(A, B));

    auto difference = [&](const SeriesPolynomial& f) {
        SeriesPolynomial d = a.apply(b.apply(f));
        d -= b.apply(a.apply(f));
        d -= pb.apply(f);
        return d;
    };

    Truncation t{8, 6};
    SeriesPolynomial one(t);
    one.add_term(Mono::one(), 1);
    SeriesPolynomial base = difference(one);
    for (const auto& [m, c] : base.terms())
        if (!(m == Mono::one()))
            throw inconsistency_error("cocycle difference is not constant on 1");
    Rational value = base.coefficient(Mono::one());

    for (const auto& f : probes) {
        SeriesPolynomial d = difference(f);
        d -= value * f;
        if (!d.is_zero())
            throw inconsistency_error("cocycle difference is not a constant operator");
        if (d.dropped() != 0)
            throw inconsistency_error("cocycle probe exceeded truncation");
    }
    return value;
}

// Quadratic Hamiltonian h_A(f) = (1/2) Omega(Af, f) of an infinitesimally
// symplectic theta-z operator, truncated to Darboux modes <= max_mode.
//
// f = sum q_b^nu phi_nu z^b + sum p_a^mu phi^mu (-z)^{-a-1}, and
// Omega(u, v) = sum_k (-1)^k (u_k, v_{-1-k})_eta.
inline QuadraticHamiltonian hamiltonian_of_operator(const ThetaZOperator& A, const RatMatrix& eta,
                                                    int max_mode) {
    const std::size_t n = A.matrix_size();
    if (eta.rows() != n || eta.cols() != n)
        throw shape_error("pairing matrix size mismatch");
    const RatMatrix eta_inv = eta.inverse();

    // Symbol-weighted Laurent coefficients of f: exponent -> list of
    // (side, var, vector).
    struct Piece {
        int side; // 0 = q, 1 = p
        Var var;
        std::vector<Rational> vec;
    };
    std::map<int, std::vector<Piece>> f_coeff;
    for (int b = 0; b <= max_mode; ++b)
        for (std::size_t nu = 0; nu < n; ++nu) {
            std::vector<Rational> v(n);
            v[nu] = 1;
            f_coeff[b].push_back({0, Var{static_cast<int>(nu), b}, std::move(v)});
        }
    for (int a = 0; a <= max_mode; ++a)
        for (std::size_t mu = 0; mu < n; ++mu) {
            // phi^mu = sum_nu (eta^{-1})_{mu nu} phi_nu, weight (-1)^{a+1}.
            std::vector<Rational> v(n);
            for (std::size_t nu = 0; nu < n; ++nu)
                v[nu] = eta_inv(mu, nu) * ((a % 2 == 0) ? Rational(-1) : Rational(1));
            f_coeff[-a - 1].push_back({1, Var{static_cast<int>(mu), a}, std::move(v)});
        }

    auto eta_pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (eta(i, j) != 0)
                    r += x[i] * eta(i, j) * y[j];
        }
        return r;
    };

    QuadraticHamiltonian h;
    for (const auto& [k0, pieces] : f_coeff) {
        for (const auto& piece : pieces) {
            // A maps z^{k0} vec to sum_j z^{k0+j} P_j(k0) vec.
            auto image = A.apply_to_monomial(Rational(k0), piece.vec);
            for (const auto& [ke, w] : image) {
                // Pair with f at exponent -1-k, weight (-1)^k, k = exponent of the image.
                BigInt kb = to_integer(ke);
                if (kb < std::numeric_limits<int>::min() || kb > std::numeric_limits<int>::max())
                    throw range_error("exponent overflow");
                int k = static_cast<int>(kb);
                auto other = f_coeff.find(-1 - k);
                if (other == f_coeff.end())
                    continue;
                Rational sign((k % 2 == 0) ? 1 : -1);
                for (const auto& g : other->second) {
                    Rational val = sign * eta_pair(w, g.vec);
                    if (val == 0)
                        continue;
                    val /= 2; // the 1/2 in front of Omega(Af, f)
                    QuadMono mono = detail::from_factors({piece.side, piece.var}, {g.side, g.var});
                    h.add(mono, val);
                }
            }
        }
    }
    return h;
}

} // namespace orbivir
