#pragma once

#include <string>
#include <vector>

#include "orbivir/rational.hpp"

namespace orbivir {

// One descendant insertion tau_k(class) in the genus-zero degree-zero
// threefold reduction; the identity class is spelled "1".
struct Insertion {
    long exponent = 0;
    std::string cls = "1";

    bool is_identity() const { return cls == "1"; }
    bool operator==(const Insertion&) const = default;
};

struct ReducedTerm {
    Rational weight;
    std::vector<Insertion> insertions;
    bool irreducible = false; // descendants left but no string/dilaton move applies
};

namespace detail {

inline bool all_primary(const std::vector<Insertion>& ins) {
    for (const auto& i : ins)
        if (i.exponent != 0)
            return false;
    return true;
}

inline void reduce_rec(Rational weight, std::vector<Insertion> ins, std::vector<ReducedTerm>& out) {
    if (all_primary(ins)) {
        out.push_back({std::move(weight), std::move(ins), false});
        return;
    }
    // string: remove one tau_0(1) insertion, distributing exponent decrements
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (ins[i].is_identity() && ins[i].exponent == 0) {
            std::vector<Insertion> rest;
            rest.reserve(ins.size() - 1);
            for (std::size_t j = 0; j < ins.size(); ++j)
                if (j != i)
                    rest.push_back(ins[j]);
            for (std::size_t j = 0; j < rest.size(); ++j) {
                if (rest[j].exponent == 0)
                    continue;
                std::vector<Insertion> next = rest;
                --next[j].exponent;
                reduce_rec(weight, std::move(next), out);
            }
            return;
        }
    }
    // dilaton: remove one tau_1(1), weight (remaining - 2)
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (ins[i].is_identity() && ins[i].exponent == 1) {
            std::vector<Insertion> rest;
            rest.reserve(ins.size() - 1);
            for (std::size_t j = 0; j < ins.size(); ++j)
                if (j != i)
                    rest.push_back(ins[j]);
            Rational factor(static_cast<long>(rest.size()) - 2);
            if (factor == 0)
                return; // the whole branch vanishes
            reduce_rec(weight * factor, std::move(rest), out);
            return;
        }
    }
    // descendants remain but neither equation applies
    out.push_back({std::move(weight), std::move(ins), true});
}

} // namespace detail

// Repeatedly applies the genus-zero string and dilaton equations. Terminates
// with primary insertion lists; configurations the dimension argument cannot
// reach are returned flagged irreducible rather than rejected.
inline std::vector<ReducedTerm> reduce_threefold(const std::vector<Insertion>& insertions) {
    std::vector<ReducedTerm> raw;
    detail::reduce_rec(Rational(1), insertions, raw);
    // merge identical insertion lists
    std::vector<ReducedTerm> merged;
    for (auto& term : raw) {
        bool found = false;
        for (auto& m : merged)
            if (m.insertions == term.insertions && m.irreducible == term.irreducible) {
                m.weight += term.weight;
                found = true;
                break;
            }
        if (!found)
            merged.push_back(std::move(term));
    }
    std::erase_if(merged, [](const ReducedTerm& t) { return t.weight == 0; });
    return merged;
}

} // namespace orbivir
