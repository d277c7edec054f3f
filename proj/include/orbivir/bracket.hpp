#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "orbivir/rational.hpp"

namespace orbivir {

// Shifted factorial (x)!-style product (k + x)! := x(1+x)...(k+x), i.e.
// prod_{m=0}^{k} (m + x). Empty product (k < 0) is 1; a zero factor yields 0
// and callers dividing by the result must reject that case themselves.
inline Rational shifted_factorial(long k, const Rational& x) {
    Rational r = 1;
    for (long m = 0; m <= k; ++m)
        r *= (x + m);
    return r;
}

// Coefficients of prod_{i=0}^{k} (s + x + i) as a polynomial in s.
// coefficients[i] is the symbol [x]_i^k; there are k+2 of them and the top
// one is 1.
struct BracketTable {
    Rational x;
    long k = 0;
    std::vector<Rational> coefficients;

    static BracketTable build(const Rational& x, long k) {
        if (k < 0)
            throw range_error("bracket table needs k >= 0");
        BracketTable t;
        t.x = x;
        t.k = k;
        std::vector<Rational> poly{x, Rational(1)}; // s + x
        for (long i = 1; i <= k; ++i) {
            // multiply by (s + x + i)
            std::vector<Rational> next(poly.size() + 1);
            Rational c = x + i;
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j] * c;
                next[j + 1] += poly[j];
            }
            poly = std::move(next);
        }
        t.coefficients = std::move(poly);
        return t;
    }

    const Rational& at(long i) const {
        if (i < 0 || i > k + 1)
            throw range_error("bracket index out of range");
        return coefficients[static_cast<std::size_t>(i)];
    }
};

namespace detail {

// The symbols are evaluated thousands of times per recursion sweep, so
// tables are cached per (x, k). The cache is synchronized; workers may also
// bypass it by building tables locally.
inline const BracketTable& cached_bracket_table(const Rational& x, long k) {
    static std::map<std::pair<Rational, long>, BracketTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(x, k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, BracketTable::build(x, k)).first;
    return it->second;
}

} // namespace detail

// [x]_i^k, the coefficient of s^i in prod_{j=0}^{k} (s + x + j).
inline Rational bracket_symbol(const Rational& x, long i, long k) {
    if (k < 0)
        throw range_error("bracket symbol needs k >= 0");
    if (i < 0 || i > k + 1)
        throw range_error("bracket index out of range");
    return detail::cached_bracket_table(x, k).at(i);
}

} // namespace orbivir
