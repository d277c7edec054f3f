#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbivir/common.hpp"

namespace orbivir {

// Every scalar in the engine is an exact rational. boost::multiprecision
// keeps values in lowest terms with a positive denominator, which is the
// storage invariant the rest of the code relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline BigInt to_integer(const Rational& x) {
    if (!is_integer(x))
        throw inconsistency_error("expected integer, got " + x.str());
    return numerator(x);
}

// floor(x) for rationals, exact.
inline BigInt rational_floor(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x))
        --q;
    return q;
}

// fractional part <x> = x - floor(x), always in [0,1).
inline Rational fractional_part(const Rational& x) {
    return x - Rational(rational_floor(x));
}

inline BigInt factorial(long n) {
    if (n < 0)
        throw range_error("factorial of negative integer");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// Serialization: "p/q" with the sign on the numerator, plain "p" when q = 1.
inline std::string to_string(const Rational& x) {
    if (is_integer(x))
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal: '" + text + "'");
    }
}

// Deterministic rational fuzz source. All randomized sweeps take an explicit
// seed so a failing case can be replayed exactly.
class RationalRng {
  public:
    explicit RationalRng(std::uint64_t seed) : engine_(seed) {}

    // Nonzero rational with small numerator/denominator.
    Rational next() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        int n = num(engine_);
        if (n == 0)
            n = 1;
        return make_rational(n, den(engine_));
    }

    Rational next_allow_zero() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        return make_rational(num(engine_), den(engine_));
    }

    long next_long(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(engine_);
    }

    std::vector<Rational> vector(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v)
            x = next();
        return v;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace orbivir
