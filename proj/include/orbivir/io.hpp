#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "orbivir/geometry.hpp"

namespace orbivir {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline long parse_long(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size())
            throw parse_error("trailing characters in integer '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("bad integer literal '" + s + "'");
    }
}

} // namespace detail

// Profile literal: "N=3;n=3,0".
inline MonodromyProfile parse_profile(const std::string& text) {
    auto parts = detail::split(text, ';');
    if (parts.size() != 2 || parts[0].rfind("N=", 0) != 0 || parts[1].rfind("n=", 0) != 0)
        throw parse_error("profile literal must look like \"N=3;n=3,0\"");
    long N = detail::parse_long(parts[0].substr(2));
    if (N < 2)
        throw parse_error("profile needs N >= 2");
    std::vector<long> counts;
    for (const auto& c : detail::split(parts[1].substr(2), ','))
        counts.push_back(detail::parse_long(c));
    if (counts.size() != static_cast<std::size_t>(N - 1))
        throw parse_error("profile needs exactly N-1 counts");
    return MonodromyProfile(static_cast<int>(N), std::move(counts));
}

inline std::string profile_literal(const MonodromyProfile& p) {
    std::ostringstream os;
    os << "N=" << p.N << ";n=";
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
        if (i)
            os << ",";
        os << p.counts[i];
    }
    return os.str();
}

// Model literals: "P(1,N=3)", "P(1,1,N=4)", "P(1,1,1,N=3)" for the weighted
// projective stacks, "P(a=2,b=3)" for the appendix checks.
struct ParsedModel {
    bool is_pab = false;
    WeightedProjectiveModel wp{1, 2};
    long pab_a = 1, pab_b = 1;
};

inline ParsedModel parse_model(const std::string& text) {
    if (text.size() < 4 || text.front() != 'P' || text[1] != '(' || text.back() != ')')
        throw parse_error("model literal must look like \"P(1,N=3)\" or \"P(a=2,b=3)\"");
    auto inner = text.substr(2, text.size() - 3);
    auto parts = detail::split(inner, ',');
    ParsedModel out;
    if (!parts.empty() && parts[0].rfind("a=", 0) == 0) {
        if (parts.size() != 2 || parts[1].rfind("b=", 0) != 0)
            throw parse_error("P(a,b) literal must look like \"P(a=2,b=3)\"");
        out.is_pab = true;
        out.pab_a = detail::parse_long(parts[0].substr(2));
        out.pab_b = detail::parse_long(parts[1].substr(2));
        return out;
    }
    int ones = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] != "1")
            throw parse_error("weights before N must all be 1");
        ++ones;
    }
    if (parts.empty() || parts.back().rfind("N=", 0) != 0)
        throw parse_error("model literal must end with N=<value>");
    long N = detail::parse_long(parts.back().substr(2));
    if (ones < 1 || ones > 3)
        throw parse_error("supported models have 1 to 3 unit weights");
    if (N < 1)
        throw parse_error("model needs N >= 1");
    out.wp = WeightedProjectiveModel(ones, static_cast<int>(N));
    return out;
}

inline std::string model_literal(const WeightedProjectiveModel& m) {
    std::string s = "P(";
    for (int i = 0; i < m.dim; ++i)
        s += "1,";
    return s + "N=" + std::to_string(m.N) + ")";
}

} // namespace orbivir
