#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbivir/matrix.hpp"
#include "orbivir/rational.hpp"

namespace orbivir {

// Polynomial in theta = z d/dz with square-matrix coefficients. The matrix
// indices live on the cohomology basis, so coefficients commute with theta
// but not with each other.
class ThetaPoly {
  public:
    ThetaPoly() = default;
    explicit ThetaPoly(RatMatrix constant) { coeffs_.push_back(std::move(constant)); }

    static ThetaPoly zero(std::size_t n) { return ThetaPoly(RatMatrix(n, n)); }

    static ThetaPoly theta(std::size_t n) {
        ThetaPoly p;
        p.coeffs_.push_back(RatMatrix(n, n));
        p.coeffs_.push_back(RatMatrix::identity(n));
        return p;
    }

    std::size_t matrix_size() const { return coeffs_.empty() ? 0 : coeffs_[0].rows(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const RatMatrix& coeff(std::size_t e) const { return coeffs_[e]; }
    std::size_t coeff_count() const { return coeffs_.size(); }

    void set_coeff(std::size_t e, RatMatrix m) {
        if (coeffs_.size() <= e)
            coeffs_.resize(e + 1, RatMatrix(m.rows(), m.cols()));
        coeffs_[e] = std::move(m);
    }

    bool is_zero() const {
        for (const auto& m : coeffs_)
            if (!m.is_zero())
                return false;
        return true;
    }

    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero())
            coeffs_.pop_back();
        if (coeffs_.size() == 1 && coeffs_[0].is_zero())
            coeffs_.clear();
    }

    ThetaPoly& operator+=(const ThetaPoly& o) {
        if (coeffs_.empty())
            return *this = o;
        if (o.coeffs_.empty())
            return *this;
        std::size_t n = matrix_size();
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), RatMatrix(n, n));
        for (std::size_t e = 0; e < o.coeffs_.size(); ++e)
            coeffs_[e] += o.coeffs_[e];
        return *this;
    }

    friend ThetaPoly operator*(const Rational& s, ThetaPoly p) {
        for (auto& m : p.coeffs_)
            m = s * m;
        return p;
    }

    // Product with matrix-ordered coefficients: (sum A_e theta^e)(sum B_f theta^f).
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty())
            return ThetaPoly();
        std::size_t n = a.matrix_size();
        ThetaPoly c;
        c.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, RatMatrix(n, n));
        for (std::size_t e = 0; e < a.coeffs_.size(); ++e) {
            if (a.coeffs_[e].is_zero())
                continue;
            for (std::size_t f = 0; f < b.coeffs_.size(); ++f)
                c.coeffs_[e + f] += a.coeffs_[e] * b.coeffs_[f];
        }
        return c;
    }

    // P(theta + shift), expanded by binomials.
    ThetaPoly shifted(const Rational& shift) const {
        if (coeffs_.empty() || shift == 0)
            return *this;
        std::size_t n = matrix_size();
        ThetaPoly out;
        out.coeffs_.assign(coeffs_.size(), RatMatrix(n, n));
        // (theta + shift)^e expanded once per exponent.
        std::vector<Rational> binom{Rational(1)};
        std::vector<Rational> pow_shift{Rational(1)};
        for (std::size_t e = 0; e < coeffs_.size(); ++e) {
            if (!coeffs_[e].is_zero()) {
                // coefficients of (theta+shift)^e: C(e,j) shift^{e-j} theta^j
                Rational c = 1;
                for (std::size_t j = 0; j <= e; ++j) {
                    // c = C(e,j) shift^{e-j}
                    Rational term = c;
                    for (std::size_t m = 0; m < e - j; ++m)
                        term *= shift;
                    out.coeffs_[j] += term * coeffs_[e];
                    c = c * Rational(static_cast<long>(e - j)) / Rational(static_cast<long>(j + 1));
                }
            }
        }
        return out;
    }

    // P(k) as a matrix, for scalar (possibly half-integer) k.
    RatMatrix evaluate(const Rational& k) const {
        if (coeffs_.empty())
            return RatMatrix();
        RatMatrix acc(matrix_size(), matrix_size());
        Rational kp = 1;
        for (std::size_t e = 0; e < coeffs_.size(); ++e) {
            acc += kp * coeffs_[e];
            kp *= k;
        }
        return acc;
    }

    bool operator==(const ThetaPoly& o) const {
        ThetaPoly a = *this, b = o;
        a.trim();
        b.trim();
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<RatMatrix> coeffs_; // by theta power
};

// Finite sum of normal-form terms z^j P_j(theta). Rewriting uses only
// theta z^k = z^k (theta + k).
class ThetaZOperator {
  public:
    ThetaZOperator() = default;
    explicit ThetaZOperator(std::size_t matrix_size) : n_(matrix_size) {}

    static ThetaZOperator zero(std::size_t n) { return ThetaZOperator(n); }

    static ThetaZOperator identity(std::size_t n) {
        ThetaZOperator op(n);
        op.add_term(0, ThetaPoly(RatMatrix::identity(n)));
        return op;
    }

    static ThetaZOperator z_power(std::size_t n, int j) {
        ThetaZOperator op(n);
        op.add_term(j, ThetaPoly(RatMatrix::identity(n)));
        return op;
    }

    static ThetaZOperator theta(std::size_t n) {
        ThetaZOperator op(n);
        op.add_term(0, ThetaPoly::theta(n));
        return op;
    }

    static ThetaZOperator constant(RatMatrix m) {
        ThetaZOperator op(m.rows());
        op.add_term(0, ThetaPoly(std::move(m)));
        return op;
    }

    std::size_t matrix_size() const { return n_; }
    const std::map<int, ThetaPoly>& terms() const { return terms_; }

    void add_term(int j, ThetaPoly p) {
        p.trim();
        if (p.is_zero())
            return;
        auto it = terms_.find(j);
        if (it == terms_.end()) {
            terms_.emplace(j, std::move(p));
        } else {
            it->second += p;
            it->second.trim();
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    ThetaZOperator& operator+=(const ThetaZOperator& o) {
        require_compatible(o);
        for (const auto& [j, p] : o.terms_)
            add_term(j, p);
        return *this;
    }

    ThetaZOperator& operator-=(const ThetaZOperator& o) {
        require_compatible(o);
        for (const auto& [j, p] : o.terms_)
            add_term(j, Rational(-1) * p);
        return *this;
    }

    friend ThetaZOperator operator+(ThetaZOperator a, const ThetaZOperator& b) { return a += b; }
    friend ThetaZOperator operator-(ThetaZOperator a, const ThetaZOperator& b) { return a -= b; }

    friend ThetaZOperator operator*(const Rational& s, ThetaZOperator op) {
        std::map<int, ThetaPoly> out;
        for (auto& [j, p] : op.terms_) {
            ThetaPoly q = s * p;
            q.trim();
            if (!q.is_zero())
                out.emplace(j, std::move(q));
        }
        op.terms_ = std::move(out);
        return op;
    }

    // z^{j1} P(theta) z^{j2} Q(theta) = z^{j1+j2} P(theta + j2) Q(theta).
    friend ThetaZOperator operator*(const ThetaZOperator& a, const ThetaZOperator& b) {
        a.require_compatible(b);
        ThetaZOperator c(a.n_);
        for (const auto& [j1, p] : a.terms_)
            for (const auto& [j2, q] : b.terms_)
                c.add_term(j1 + j2, p.shifted(Rational(j2)) * q);
        return c;
    }

    // Action on a monomial z^k v: z^j P_j(theta) (z^k v) = z^{k+j} P_j(k) v.
    // The exponent may be half-integer; this is what the definitional oracle
    // uses.
    std::map<Rational, std::vector<Rational>> apply_to_monomial(const Rational& k,
                                                                const std::vector<Rational>& v) const {
        if (v.size() != n_)
            throw shape_error("monomial vector size mismatch");
        std::map<Rational, std::vector<Rational>> out;
        for (const auto& [j, p] : terms_) {
            std::vector<Rational> w = p.evaluate(k).apply(v);
            bool nonzero = false;
            for (const auto& x : w)
                if (x != 0)
                    nonzero = true;
            if (!nonzero)
                continue;
            Rational e = k + j;
            auto it = out.find(e);
            if (it == out.end()) {
                out.emplace(e, std::move(w));
            } else {
                for (std::size_t i = 0; i < n_; ++i)
                    it->second[i] += w[i];
            }
        }
        // prune exact cancellations
        for (auto it = out.begin(); it != out.end();) {
            bool nonzero = false;
            for (const auto& x : it->second)
                if (x != 0)
                    nonzero = true;
            it = nonzero ? std::next(it) : out.erase(it);
        }
        return out;
    }

    bool operator==(const ThetaZOperator& o) const {
        if (n_ != o.n_)
            return false;
        ThetaZOperator d = *this;
        d -= o;
        return d.is_zero();
    }

    // Plain-text dump, one normal-form term per line: "z^j * [matrix] * theta^e".
    std::string dump() const {
        std::ostringstream os;
        for (const auto& [j, p] : terms_) {
            for (std::size_t e = 0; e < p.coeff_count(); ++e) {
                if (p.coeff(e).is_zero())
                    continue;
                os << "z^" << j << " * [";
                for (std::size_t r = 0; r < n_; ++r) {
                    if (r)
                        os << "; ";
                    for (std::size_t c = 0; c < n_; ++c) {
                        if (c)
                            os << ", ";
                        os << to_string(p.coeff(e)(r, c));
                    }
                }
                os << "] * theta^" << e << "\n";
            }
        }
        return os.str();
    }

  private:
    void require_compatible(const ThetaZOperator& o) const {
        if (n_ != o.n_)
            throw shape_error("theta-z operator size mismatch");
    }

    std::size_t n_ = 0;
    std::map<int, ThetaPoly> terms_;
};

inline ThetaZOperator commutator(const ThetaZOperator& a, const ThetaZOperator& b) {
    return a * b - b * a;
}

// Virasoro generator L_m^{mu,rho} in normal form. The first-quantized
// generator is oriented like the classical l_m = -z^{m+1} d/dz, which is the
// orientation that satisfies [L_m, L_n] = (m-n) L_{m+n}; concretely
//   L_m = z^{-1} C^{m+1},   C = z(mu - theta - 1/2) - rho,
// and the m = -1 operator is z^{-1} (the string equation).
inline ThetaZOperator build_Lm(const RatMatrix& mu, const RatMatrix& rho, long m) {
    if (mu.rows() != mu.cols() || rho.rows() != rho.cols() || mu.rows() != rho.rows())
        throw shape_error("mu and rho must be square matrices of equal size");
    if (m < -1)
        throw range_error("Virasoro index must be >= -1");
    std::size_t n = mu.rows();

    ThetaPoly lin; // mu - 1/2 - theta
    lin.set_coeff(0, mu - (make_rational(1, 2) * RatMatrix::identity(n)));
    lin.set_coeff(1, Rational(-1) * RatMatrix::identity(n));

    ThetaZOperator c(n);
    c.add_term(1, lin);
    c.add_term(0, ThetaPoly(Rational(-1) * rho));

    ThetaZOperator acc = ThetaZOperator::z_power(n, -1);
    for (long i = 0; i <= m; ++i)
        acc = acc * c;
    return acc;
}

} // namespace orbivir
