// Batch interface to the exact-rational engine: ranks and dimensions of
// admissible covers, Hurwitz-Hodge invariant evaluation, Virasoro block
// extraction, and the identity verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "orbivir/io.hpp"
#include "orbivir/reduce3.hpp"
#include "orbivir/verify.hpp"

using nlohmann::json;
using namespace orbivir;

namespace {

std::vector<long> parse_long_list(const std::string& text) {
    if (text.empty())
        return {};
    std::vector<long> out;
    for (const auto& part : detail::split(text, ','))
        out.push_back(detail::parse_long(part));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    if (text.empty())
        return {};
    std::vector<Rational> out;
    for (const auto& part : detail::split(text, ','))
        out.push_back(parse_rational(part));
    return out;
}

CaseTag parse_case(const std::string& text) {
    if (text == "curve")
        return CaseTag::Curve;
    if (text == "surface")
        return CaseTag::Surface;
    throw parse_error("case must be 'curve' or 'surface'");
}

struct CmdState {
    std::string model = "P(1,N=2)";
    std::string profile;
    std::string case_name = "curve";
    std::string k_list, l_list, gamma_list;
    std::string truncation = "4,4";
    bool symbolic_c = false;
    bool json_output = false;
    std::uint64_t seed = 1;
    long virasoro_k = 1;
    long max_weight = 20;
    std::string insertions; // reduce3: "1:2,p:0,q:0"
    std::string suite = "all";
};

Truncation parse_truncation(const std::string& text) {
    auto parts = parse_long_list(text);
    if (parts.size() != 2)
        throw parse_error("truncation must be 'M,D'");
    return Truncation{static_cast<int>(parts[0]), parts[1]};
}

int cmd_ranks(const CmdState& st) {
    MonodromyProfile p = parse_profile(st.profile);
    std::cout << "profile " << profile_literal(p) << "\n";
    if (!is_admissible(p)) {
        std::cout << "admissible: no (sum i*n_i = 0 mod N fails)\n";
        return 1;
    }
    std::cout << "admissible: yes\n";
    std::cout << "genus g = " << cover_genus(p) << "\n";
    for (int j = 1; j <= p.N - 1; ++j)
        std::cout << "r" << j << " = " << eigenbundle_rank(p, j) << "\n";
    long r1 = eigenbundle_rank(p, 1);
    long rN1 = eigenbundle_rank(p, p.N - 1);
    std::cout << "identity: r1+r(N-1)-1 = " << (r1 + rN1 - 1) << " = sum(n)-3 = "
              << (p.total_points() - 3) << "\n";
    for (CaseTag tag : {CaseTag::Curve, CaseTag::Surface})
        std::cout << "a (" << to_string(tag) << ") = " << to_string(case_a_value(p, tag)) << "\n";
    return 0;
}

InvariantQuery build_query(const CmdState& st, const MonodromyProfile& p) {
    InvariantQuery q;
    q.profile = p;
    q.invariant_case = parse_case(st.case_name);
    q.stacky_exponents = parse_long_list(st.k_list);
    q.plain_exponents = parse_long_list(st.l_list);
    q.validate();
    return q;
}

void warn_sign_sensitive(const InvariantQuery& q) {
    if (q.invariant_case != CaseTag::Surface)
        return;
    auto sectors = surface_negative_offset_sectors(q.profile);
    if (!sectors.empty()) {
        std::cout << "note: sectors with negative offset 2b/N - 1/2:";
        for (int b : sectors)
            std::cout << " " << b;
        std::cout << " (literal shifted factorials carry the sign)\n";
    }
}

int cmd_invariant(const CmdState& st) {
    MonodromyProfile p = parse_profile(st.profile);
    InvariantQuery q = build_query(st, p);
    warn_sign_sensitive(q);
    if (st.symbolic_c) {
        auto form = evaluate_invariant_symbolic(q);
        if (!dimension_constraint(q))
            std::cout << "0 (dimension constraint fails)\n";
        else
            std::cout << form.str() << "\n";
        return 0;
    }
    auto gamma = parse_rational_list(st.gamma_list);
    if (!dimension_constraint(q)) {
        std::cout << "0 (dimension constraint fails)\n";
        return 0;
    }
    std::cout << to_string(evaluate_invariant_from_gamma(q, gamma)) << "\n";
    return 0;
}

int cmd_invariant_json(const CmdState& st, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open JSON input '" + path + "'");
    json doc = json::parse(in);
    auto model = parse_model(doc.at("model").get<std::string>());
    (void)model;
    std::vector<long> counts;
    for (const auto& x : doc.at("profile"))
        counts.push_back(x.get<long>());
    MonodromyProfile p(static_cast<int>(counts.size()) + 1, counts);
    CaseTag tag = parse_case(doc.at("case").get<std::string>());
    std::vector<Rational> gamma;
    if (doc.contains("gamma"))
        for (const auto& g : doc.at("gamma"))
            gamma.push_back(parse_rational(g.get<std::string>()));

    json out = json::array();
    std::vector<json> queries(doc.at("queries").begin(), doc.at("queries").end());
    std::sort(queries.begin(), queries.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    for (const auto& entry : queries) {
        InvariantQuery q;
        q.profile = p;
        q.invariant_case = tag;
        for (const auto& k : entry.at("k"))
            q.stacky_exponents.push_back(k.get<long>());
        if (entry.contains("l"))
            for (const auto& l : entry.at("l"))
                q.plain_exponents.push_back(l.get<long>());
        json row;
        row["k"] = entry.at("k");
        row["l"] = entry.contains("l") ? entry.at("l") : json::array();
        if (!dimension_constraint(q)) {
            row["value"] = "0";
            row["note"] = "dimension constraint fails";
        } else if (gamma.empty()) {
            row["value"] = evaluate_invariant_symbolic(q).str();
        } else {
            row["value"] = to_string(evaluate_invariant_from_gamma(q, gamma));
        }
        out.push_back(row);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_solve_c(const CmdState& st) {
    MonodromyProfile p = parse_profile(st.profile);
    CaseTag tag = parse_case(st.case_name);
    auto gamma = parse_rational_list(st.gamma_list);
    auto c = solve_for_c(p, tag, gamma);
    for (std::size_t j = 0; j < c.size(); ++j)
        std::cout << "c" << (j + 1) << " = " << to_string(c[j]) << "\n";
    return 0;
}

int cmd_theta(const CmdState& st) {
    MonodromyProfile p = parse_profile(st.profile);
    InvariantQuery q = build_query(st, p);
    warn_sign_sensitive(q);
    for (long r = 1; r <= p.total_points(); ++r)
        std::cout << "Theta_" << r << " = " << to_string(theta_value(q, r)) << "\n";
    return 0;
}

int cmd_virasoro_z(const CmdState& st) {
    auto parsed = parse_model(st.model);
    if (parsed.is_pab)
        throw unsupported_model_error("virasoro-z needs a P(1,..,1,N) model");
    const auto& model = parsed.wp;
    Truncation window = parse_truncation(st.truncation);
    RationalRng rng(st.seed);
    auto profiles = enumerate_admissible_profiles(model.N, window.max_degree + 2);
    auto coeffs = random_profile_coefficients(profiles, rng);
    auto report = z_block_coefficients(model, st.virasoro_k, window, coeffs,
                                       default_chern_scalars(model.dim));

    auto count_nonzero = [&](const SeriesPolynomial& s) {
        long n = 0;
        for (const auto& [m, c] : window_coefficients(s, window))
            if (c != 0)
                ++n;
        return n;
    };
    std::cout << "model " << model_literal(model) << ", k = " << st.virasoro_k << ", window (mode <= "
              << window.max_mode << ", degree <= " << window.max_degree << ")\n";
    std::cout << "nonzero x coefficients: " << count_nonzero(report.x_block) << "\n";
    std::cout << "nonzero y coefficients: " << count_nonzero(report.y_block) << "\n";
    std::cout << "nonzero z coefficients: " << count_nonzero(report.z_block) << "\n";
    if (model.dim == 2) {
        std::cout << "cross d(alpha)d(alpha) monomials reported: "
                  << report.cross_alpha_alpha.terms().size() << "\n";
        std::cout << "cross d(r)d(t) monomials reported: " << report.cross_r_t.terms().size()
                  << "\n";
        std::cout << "untwisted (w) monomials, not asserted: " << report.untwisted_w.terms().size()
                  << "\n";
    }
    bool ok = count_nonzero(report.x_block) == 0 && count_nonzero(report.y_block) == 0 &&
              count_nonzero(report.z_block) == 0 &&
              (model.dim == 2 || count_nonzero(report.untwisted_w) == 0);
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_commutators(const CmdState& st) {
    auto parsed = parse_model(st.model);
    if (parsed.is_pab)
        throw unsupported_model_error("commutators needs a P(1,..,1,N) model");
    const auto& model = parsed.wp;
    RatMatrix mu = model.mu_matrix();
    RatMatrix rho = model.rho_matrix();
    long checked = 0;
    for (long m = -1; m <= 3; ++m)
        for (long n = -1; n <= 3; ++n) {
            auto lhs = commutator(build_Lm(mu, rho, m), build_Lm(mu, rho, n));
            bool ok = (m == n) ? lhs.is_zero()
                               : (lhs - Rational(m - n) * build_Lm(mu, rho, m + n)).is_zero();
            if (!ok) {
                std::cout << "FAIL at m=" << m << " n=" << n << "\n";
                return 1;
            }
            ++checked;
        }
    std::cout << "pass, " << checked << " pairs checked\n";
    return 0;
}

int cmd_cocycle() {
    auto result = orbivir::verify::cocycle_table();
    std::cout << (result.pass ? "pass" : "fail") << ", " << result.cases << " monomial pairs\n";
    return result.pass ? 0 : 1;
}

int cmd_stringy(const CmdState& st) {
    std::cout << "model  str(mu^2)  chi/12+(1/6)int(c1)  equal\n";
    bool all = true;
    for (long a = 1; a <= st.max_weight; ++a)
        for (long b = a; b <= st.max_weight; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            PabModel m(a, b);
            Rational lhs = supertrace_mu_squared(m);
            Rational rhs = stringy_rhs(m);
            bool eq = lhs == rhs;
            all = all && eq;
            std::cout << "P(" << a << "," << b << ")  " << to_string(lhs) << "  " << to_string(rhs)
                      << "  " << (eq ? "yes" : "NO") << "\n";
        }
    return all ? 0 : 1;
}

int cmd_reduce3(const CmdState& st) {
    // insertion list "cls:exp,cls:exp,..."
    std::vector<Insertion> ins;
    for (const auto& part : detail::split(st.insertions, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw parse_error("insertion must look like 'class:exponent'");
        ins.push_back({detail::parse_long(part.substr(colon + 1)), part.substr(0, colon)});
    }
    auto terms = reduce_threefold(ins);
    if (terms.empty()) {
        std::cout << "0\n";
        return 0;
    }
    for (const auto& t : terms) {
        std::cout << to_string(t.weight) << " * <";
        for (std::size_t i = 0; i < t.insertions.size(); ++i) {
            if (i)
                std::cout << " ";
            std::cout << "tau_" << t.insertions[i].exponent << "(" << t.insertions[i].cls << ")";
        }
        std::cout << ">" << (t.irreducible ? "  [irreducible]" : "") << "\n";
    }
    return 0;
}

int cmd_verify(const CmdState& st) {
    std::vector<orbivir::verify::SuiteResult> results;
    auto want = [&](const std::string& name) { return st.suite == "all" || st.suite == name; };
    if (want("ranks"))
        results.push_back(orbivir::verify::rank_identity(200, st.seed));
    if (want("genus"))
        results.push_back(orbivir::verify::cover_genus_n3());
    if (want("commutators"))
        results.push_back(orbivir::verify::commutators());
    if (want("cocycle"))
        results.push_back(orbivir::verify::cocycle_table());
    if (want("recursion"))
        results.push_back(orbivir::verify::recursion_closed_form(st.seed));
    if (want("determinant"))
        results.push_back(orbivir::verify::determinant_law());
    if (want("z-blocks"))
        results.push_back(orbivir::verify::z_block_vanishing(st.seed));
    if (want("bz3"))
        results.push_back(orbivir::verify::bz3_point());
    if (want("stringy"))
        results.push_back(orbivir::verify::stringy_identity(st.max_weight));
    if (want("libgober-wood"))
        results.push_back(orbivir::verify::libgober_wood());
    if (want("l0"))
        results.push_back(orbivir::verify::l0_consistency());
    if (want("theta"))
        results.push_back(orbivir::verify::theta_spot());
    if (results.empty())
        throw parse_error("unknown suite '" + st.suite + "'");
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.cases << " cases)"
                  << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational engine for degree-zero orbifold Gromov-Witten invariants of "
                 "weighted projective stacks"};
    app.require_subcommand(1);
    CmdState st;
    std::string json_input;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--model", st.model, "model literal, e.g. P(1,N=3) or P(a=2,b=3)");
        cmd->add_option("--profile", st.profile, "profile literal, e.g. N=3;n=3,0");
        cmd->add_option("--case", st.case_name, "curve | surface");
        cmd->add_option("--k", st.k_list, "stacky exponents, comma separated, block order");
        cmd->add_option("--l", st.l_list, "plain exponents, comma separated");
        cmd->add_option("--gamma", st.gamma_list, "Hurwitz-Hodge inputs, rationals p/q");
        cmd->add_flag("--symbolic-c", st.symbolic_c, "print a linear form in the c symbols");
        cmd->add_option("--truncation", st.truncation, "series truncation 'M,D'");
        cmd->add_option("--seed", st.seed, "seed for randomized sweeps");
        cmd->add_option("--json", json_input, "read the query batch from a JSON file");
    };

    auto* ranks = app.add_subcommand("ranks", "admissibility, genus, eigenbundle ranks");
    add_common(ranks);
    auto* invariant = app.add_subcommand("invariant", "evaluate one invariant");
    add_common(invariant);
    auto* solvec = app.add_subcommand("solve-c", "solve the scaled linear system for c");
    add_common(solvec);
    auto* theta = app.add_subcommand("theta", "Theta values of a query");
    add_common(theta);
    auto* vz = app.add_subcommand("virasoro-z", "z/x/y block extraction report");
    add_common(vz);
    vz->add_option("--virasoro-k", st.virasoro_k, "Virasoro index k >= 1");
    auto* comm = app.add_subcommand("commutators", "theta-z commutation relations");
    add_common(comm);
    auto* coc = app.add_subcommand("cocycle", "quantization cocycle table");
    add_common(coc);
    auto* stringy = app.add_subcommand("stringy", "Appendix identity table over coprime pairs");
    add_common(stringy);
    stringy->add_option("--max", st.max_weight, "largest weight to sweep");
    auto* red = app.add_subcommand("reduce3", "threefold string/dilaton reduction");
    add_common(red);
    red->add_option("--insertions", st.insertions, "list 'class:exp,class:exp,...'");
    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    add_common(ver);
    ver->add_option("suite", st.suite, "all | ranks | genus | commutators | cocycle | recursion | "
                                       "determinant | z-blocks | bz3 | stringy | libgober-wood | "
                                       "l0 | theta");
    ver->add_option("--max", st.max_weight, "stringy sweep bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ranks->parsed())
            return cmd_ranks(st);
        if (invariant->parsed())
            return json_input.empty() ? cmd_invariant(st) : cmd_invariant_json(st, json_input);
        if (solvec->parsed())
            return cmd_solve_c(st);
        if (theta->parsed())
            return cmd_theta(st);
        if (vz->parsed())
            return cmd_virasoro_z(st);
        if (comm->parsed())
            return cmd_commutators(st);
        if (coc->parsed())
            return cmd_cocycle();
        if (stringy->parsed())
            return cmd_stringy(st);
        if (red->parsed())
            return cmd_reduce3(st);
        if (ver->parsed())
            return cmd_verify(st);
    } catch (const orbivir::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
