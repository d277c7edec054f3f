#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbivir/rational.hpp"

namespace orbivir {

// One descendant coordinate. `cls` is a small integer naming the cohomology
// class family (the potential assembly and the Fock machinery each fix their
// own numbering), `mode` the descendant level.
struct Var {
    int cls = 0;
    int mode = 0;

    auto operator<=>(const Var&) const = default;
};

// Monomial in the Var coordinates times an integer power of hbar. The hbar
// power may be negative (genus expansion) and does not count toward the
// truncation degree.
struct Mono {
    std::vector<std::pair<Var, int>> vars; // sorted by Var, exponents > 0
    int hbar = 0;

    static Mono one() { return Mono{}; }

    static Mono single(Var v, int e = 1) {
        Mono m;
        if (e != 0)
            m.vars.emplace_back(v, e);
        return m;
    }

    long degree() const {
        long d = 0;
        for (const auto& [v, e] : vars)
            d += e;
        return d;
    }

    int max_mode() const {
        int m = 0;
        for (const auto& [v, e] : vars)
            m = std::max(m, v.mode);
        return m;
    }

    int exponent(Var v) const {
        auto it = std::lower_bound(vars.begin(), vars.end(), v,
                                   [](const auto& p, const Var& q) { return p.first < q; });
        return (it != vars.end() && it->first == v) ? it->second : 0;
    }

    Mono with_hbar(int delta) const {
        Mono m = *this;
        m.hbar += delta;
        return m;
    }

    // Product of monomials.
    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono out;
        out.hbar = a.hbar + b.hbar;
        out.vars.reserve(a.vars.size() + b.vars.size());
        auto ia = a.vars.begin(), ib = b.vars.begin();
        while (ia != a.vars.end() || ib != b.vars.end()) {
            if (ib == b.vars.end() || (ia != a.vars.end() && ia->first < ib->first))
                out.vars.push_back(*ia++);
            else if (ia == a.vars.end() || ib->first < ia->first)
                out.vars.push_back(*ib++);
            else {
                out.vars.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    // Divide by v (one power); returns false if v absent.
    bool remove_one(Var v) {
        for (auto it = vars.begin(); it != vars.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0)
                    vars.erase(it);
                return true;
            }
        }
        return false;
    }

    auto operator<=>(const Mono&) const = default;

    std::string str() const;
};

// Truncation bounds: every stored monomial has all modes <= max_mode and
// total degree <= max_degree.
struct Truncation {
    int max_mode = 0;
    long max_degree = 0;

    bool admits(const Mono& m) const {
        return m.degree() <= max_degree && m.max_mode() <= max_mode;
    }
};

// Sparse truncated polynomial over the rationals. Dropped monomials (those
// that would exceed the truncation) are counted, never silently lost.
class SeriesPolynomial {
  public:
    SeriesPolynomial() = default;
    explicit SeriesPolynomial(Truncation t) : trunc_(t) {}

    const Truncation& truncation() const { return trunc_; }
    long dropped() const { return dropped_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Mono& m, const Rational& c) {
        if (c == 0)
            return;
        if (!trunc_.admits(m)) {
            ++dropped_;
            return;
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SeriesPolynomial& operator+=(const SeriesPolynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        dropped_ += o.dropped_;
        return *this;
    }

    SeriesPolynomial& operator-=(const SeriesPolynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        dropped_ += o.dropped_;
        return *this;
    }

    friend SeriesPolynomial operator+(SeriesPolynomial a, const SeriesPolynomial& b) { return a += b; }
    friend SeriesPolynomial operator-(SeriesPolynomial a, const SeriesPolynomial& b) { return a -= b; }

    SeriesPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend SeriesPolynomial operator*(const Rational& s, SeriesPolynomial p) { return p *= s; }

    friend SeriesPolynomial operator*(const SeriesPolynomial& a, const SeriesPolynomial& b) {
        SeriesPolynomial out(a.trunc_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    // Partial derivative with respect to v.
    SeriesPolynomial derivative(Var v) const {
        SeriesPolynomial out(trunc_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            Mono reduced = m;
            reduced.remove_one(v);
            out.add_term(reduced, c * e);
        }
        return out;
    }

    // Multiplication by a single variable (mode bound enforced).
    SeriesPolynomial times_var(Var v) const {
        SeriesPolynomial out(trunc_);
        Mono vm = Mono::single(v);
        for (const auto& [m, c] : terms_)
            out.add_term(m * vm, c);
        return out;
    }

    SeriesPolynomial shift_hbar(int delta) const {
        SeriesPolynomial out(trunc_);
        for (const auto& [m, c] : terms_)
            out.add_term(m.with_hbar(delta), c);
        return out;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << to_string(c) << ")" << m.str();
        }
        return os.str();
    }

  private:
    Truncation trunc_;
    std::map<Mono, Rational> terms_;
    long dropped_ = 0;
};

inline std::string Mono::str() const {
    std::ostringstream os;
    for (const auto& [v, e] : vars) {
        os << "*x[" << v.cls << "," << v.mode << "]";
        if (e != 1)
            os << "^" << e;
    }
    if (hbar != 0)
        os << "*h^" << hbar;
    return os.str();
}

} // namespace orbivir
