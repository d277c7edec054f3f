#pragma once

#include <utility>
#include <vector>

#include "orbivir/geometry.hpp"

namespace orbivir {

// Hodge data of one inertia sector: the age and the alternating column
// chi(X_i, Omega^p).
struct SectorHodgeData {
    Rational age;
    long dim = 0;
    std::vector<std::pair<long, long>> chi; // (p, chi(Omega^p))
};

// Sector decomposition of I P(a,b): the curve sector plus (a-1)+(b-1) point
// sectors of ages i/a and j/b.
inline std::vector<SectorHodgeData> pab_sector_data(const PabModel& m) {
    std::vector<SectorHodgeData> sectors;
    sectors.push_back({Rational(0), 1, {{0, 1}, {1, -1}}});
    for (long i = 1; i <= m.a - 1; ++i)
        sectors.push_back({make_rational(i, m.a), 0, {{0, 1}}});
    for (long j = 1; j <= m.b - 1; ++j)
        sectors.push_back({make_rational(j, m.b), 0, {{0, 1}}});
    return sectors;
}

// str(mu^2) = sum_i sum_p (-1)^p (p + age_i - dim/2)^2 chi(X_i, Omega^p),
// computed sector by sector. The ambient dimension is 1 for P(a,b).
inline Rational supertrace_mu_squared(const PabModel& m) {
    Rational total = 0;
    const Rational half_dim = make_rational(1, 2);
    for (const auto& sector : pab_sector_data(m))
        for (const auto& [p, chi] : sector.chi) {
            Rational mu = Rational(p) + sector.age - half_dim;
            Rational sign((p % 2 == 0) ? 1 : -1);
            total += sign * mu * mu * Rational(chi);
        }
    return total;
}

// Degree of c_1(T_{P(a,b)}); geometric input for the weighted projective line.
inline Rational pab_c1_degree(const PabModel& m) {
    return make_rational(1, m.a) + make_rational(1, m.b);
}

// Right side of the stringy identity, assembled from the Euler
// characteristic of the coarse inertia space and the degree of c_1:
// chi/12 + (1/6) int c_1.
inline Rational stringy_rhs(const PabModel& m) {
    return make_rational(euler_characteristic_inertia(m), 12) + make_rational(1, 6) * pab_c1_degree(m);
}

// str(mu^2) over the Chen-Ruan basis of a P(1,...,1,N) model; all basis
// classes sit in even (p,p) bidegree, so the supertrace is a plain trace.
inline Rational str_mu_squared(const WeightedProjectiveModel& model) {
    Rational total = 0;
    for (std::size_t i = 0; i < model.basis_size(); ++i) {
        Rational mu = model.mu_eigenvalue(i);
        total += mu * mu;
    }
    return total;
}

// Manifold Hodge diamond h[p][q], validated for Serre symmetry.
struct HodgeDiamond {
    std::vector<std::vector<long>> h;

    long dim() const { return static_cast<long>(h.size()) - 1; }

    void validate() const {
        long d = dim();
        if (d < 0)
            throw shape_error("empty Hodge diamond");
        for (const auto& row : h)
            if (static_cast<long>(row.size()) != d + 1)
                throw shape_error("ragged Hodge diamond");
        for (long p = 0; p <= d; ++p)
            for (long q = 0; q <= d; ++q)
                if (h[p][q] != h[d - p][d - q])
                    throw shape_error("Hodge diamond violates Serre symmetry");
    }

    long chi_omega(long p) const {
        long c = 0;
        for (long q = 0; q <= dim(); ++q)
            c += ((q % 2 == 0) ? 1 : -1) * h[p][q];
        return c;
    }
};

inline HodgeDiamond projective_space_diamond(long dim) {
    HodgeDiamond d;
    d.h.assign(static_cast<std::size_t>(dim + 1), std::vector<long>(static_cast<std::size_t>(dim + 1), 0));
    for (long p = 0; p <= dim; ++p)
        d.h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
    return d;
}

// Libgober-Wood:
//   sum_p (-1)^p (p - dim/2)^2 chi(Omega^p) = (1/12)(dim chi_top + 2 int c_1 c_{dim-1}).
inline bool libgober_wood_check(const HodgeDiamond& diamond, long chi_top, const Rational& c1_cn1) {
    diamond.validate();
    long d = diamond.dim();
    Rational lhs = 0;
    for (long p = 0; p <= d; ++p) {
        Rational mu = Rational(p) - make_rational(d, 2);
        Rational sign((p % 2 == 0) ? 1 : -1);
        lhs += sign * mu * mu * Rational(diamond.chi_omega(p));
    }
    Rational rhs = make_rational(1, 12) * (Rational(d) * Rational(chi_top) + 2 * c1_cn1);
    return lhs == rhs;
}

// Conjectured genus-one values for P(a,b):
//   <psi>  = chi_top(IX)/24
//   <c_1>  = (1/24) int_{IIX} pi_2^* c_1 c_{top-1}; only the unique
//            positive-dimensional component of IIX (a copy of P(a,b))
//            contributes, giving (1/24)(1/a + 1/b).
inline std::pair<Rational, Rational> genus_one_predictions(const PabModel& m) {
    Rational psi = make_rational(euler_characteristic_inertia(m), 24);
    Rational c1 = make_rational(1, 24) * pab_c1_degree(m);
    return {psi, c1};
}

} // namespace orbivir
