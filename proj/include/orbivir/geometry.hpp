#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "orbivir/matrix.hpp"
#include "orbivir/rational.hpp"

namespace orbivir {

// Which lambda-class insertion the invariants carry: lambda_{r_1} for the
// weighted projective line, lambda_{r_1}^2 for the surface.
enum class CaseTag { Curve, Surface };

inline std::string to_string(CaseTag c) { return c == CaseTag::Curve ? "curve" : "surface"; }

// Per-sector block value entering the matrix A and the dimension counts:
// i/N for the curve, 2i/N for the surface.
inline Rational block_value(CaseTag c, int N, int i) {
    return c == CaseTag::Curve ? make_rational(i, N) : make_rational(2 * i, N);
}

// ---------------------------------------------------------------------------
// Monodromy profiles of admissible Z_N covers
// ---------------------------------------------------------------------------

// Multiset of stacky points by twist sector: counts[i-1] points of type
// omega^i for 1 <= i <= N-1.
struct MonodromyProfile {
    int N = 2;
    std::vector<long> counts; // n_1 .. n_{N-1}

    MonodromyProfile() = default;
    MonodromyProfile(int N_, std::vector<long> counts_) : N(N_), counts(std::move(counts_)) {
        if (N < 2)
            throw shape_error("profile needs N >= 2");
        if (counts.size() != static_cast<std::size_t>(N - 1))
            throw shape_error("profile needs N-1 sector counts");
        for (long n : counts)
            if (n < 0)
                throw shape_error("negative sector count");
    }

    long total_points() const {
        return std::accumulate(counts.begin(), counts.end(), 0L);
    }

    // M_i = n_0 + ... + n_i with n_0 = 0.
    long partial_sum(int i) const {
        long m = 0;
        for (int a = 1; a <= i; ++a)
            m += counts[a - 1];
        return m;
    }

    // Sector block containing 1-based position j: the i with M_{i-1} < j <= M_i.
    int sector_of_position(long j) const {
        if (j < 1 || j > total_points())
            throw range_error("stacky position out of range");
        long m = 0;
        for (int i = 1; i <= N - 1; ++i) {
            m += counts[i - 1];
            if (j <= m)
                return i;
        }
        throw range_error("stacky position out of range");
    }

    bool operator==(const MonodromyProfile&) const = default;
};

// Admissible iff sum_i i*n_i = 0 mod N.
inline bool is_admissible(const MonodromyProfile& p) {
    long long s = 0;
    for (int i = 1; i <= p.N - 1; ++i)
        s += static_cast<long long>(i) * p.counts[i - 1];
    return s % p.N == 0;
}

// Genus of the Z_N admissible cover of P^1 branched per the profile, from
// Riemann-Hurwitz: 2 - 2g = 2N - sum n_i (N - gcd(i, N)).
inline long cover_genus(const MonodromyProfile& p) {
    if (!is_admissible(p))
        throw admissibility_error("profile is not admissible");
    long long ram = 0;
    for (int i = 1; i <= p.N - 1; ++i)
        ram += p.counts[i - 1] * (p.N - std::gcd(static_cast<long>(i), static_cast<long>(p.N)));
    long long two_minus_2g = 2LL * p.N - ram;
    if ((two_minus_2g & 1LL) != 0)
        throw inconsistency_error("Riemann-Hurwitz parity failure");
    long long g = (2 - two_minus_2g) / 2;
    if (g < 0)
        throw inconsistency_error("negative cover genus");
    return static_cast<long>(g);
}

// Rank of the omega^j eigen-subbundle of the dual Hodge bundle,
// r_j = -1 + sum_i n_i <i j / N>. For j in {1, N-1} this reduces to the
// stacky Riemann-Roch expressions r_1 = sum n_i i/N - 1 and
// r_{N-1} = sum n_i (N-i)/N - 1.
inline long eigenbundle_rank(const MonodromyProfile& p, int j) {
    if (j < 1 || j > p.N - 1)
        throw range_error("sector index out of range");
    if (!is_admissible(p))
        throw admissibility_error("profile is not admissible");
    Rational r = -1;
    for (int i = 1; i <= p.N - 1; ++i)
        r += Rational(p.counts[i - 1]) * fractional_part(make_rational(static_cast<long long>(i) * j, p.N));
    if (!is_integer(r))
        throw inconsistency_error("non-integer eigenbundle rank");
    return static_cast<long>(to_integer(r));
}

// ---------------------------------------------------------------------------
// Weighted projective models P(1,...,1,N)
// ---------------------------------------------------------------------------

// Normalizations the displayed formulas do not fix; kept configurable.
struct PairingConfig {
    Rational untwisted_top; // (1, [X]) and more generally (H^p, H^{d-p})
    Rational twisted;       // (gamma_j, gamma_{N-j})
};

// Basis order: untwisted classes 1, xi, ..., [X] (p = 0..d), then the
// twisted point classes gamma_1 .. gamma_{N-1}.
struct WeightedProjectiveModel {
    int dim = 1; // d in {1,2,3}
    int N = 2;   // isotropy order; N = 1 models the underlying manifold P^d

    WeightedProjectiveModel() = default;
    WeightedProjectiveModel(int d, int N_) : dim(d), N(N_) {
        if (dim < 1 || dim > 3)
            throw shape_error("model dimension must be 1, 2 or 3");
        if (N < 1)
            throw shape_error("model needs N >= 1");
    }

    std::size_t basis_size() const { return static_cast<std::size_t>(dim + 1 + N - 1); }

    bool is_twisted(std::size_t idx) const { return idx > static_cast<std::size_t>(dim); }

    // Twist sector j of a twisted basis class.
    int twist_sector(std::size_t idx) const {
        if (!is_twisted(idx))
            throw range_error("untwisted class has no twist sector");
        return static_cast<int>(idx) - dim;
    }

    Rational age(std::size_t idx) const {
        if (!is_twisted(idx))
            return Rational(0);
        return make_rational(static_cast<long long>(dim) * twist_sector(idx), N);
    }

    std::string class_label(std::size_t idx) const {
        if (!is_twisted(idx)) {
            if (idx == 0)
                return "1";
            if (idx == 1)
                return "xi";
            if (idx == static_cast<std::size_t>(dim))
                return "[X]";
            return "xi^" + std::to_string(idx);
        }
        return "gamma_" + std::to_string(twist_sector(idx));
    }

    // mu eigenvalue p + age - d/2 of each basis class.
    Rational mu_eigenvalue(std::size_t idx) const {
        if (idx >= basis_size())
            throw range_error("basis index out of range");
        if (!is_twisted(idx))
            return Rational(static_cast<long>(idx)) - make_rational(dim, 2);
        return age(idx) - make_rational(dim, 2);
    }

    std::vector<std::pair<std::string, Rational>> mu_spectrum() const {
        std::vector<std::pair<std::string, Rational>> out;
        for (std::size_t i = 0; i < basis_size(); ++i)
            out.emplace_back(class_label(i), mu_eigenvalue(i));
        return out;
    }

    RatMatrix mu_matrix() const {
        RatMatrix m(basis_size(), basis_size());
        for (std::size_t i = 0; i < basis_size(); ++i)
            m(i, i) = mu_eigenvalue(i);
        return m;
    }

    PairingConfig default_pairing() const {
        return PairingConfig{make_rational(1, N), make_rational(1, N)};
    }

    // Orbifold Poincare pairing: block antidiagonal, H^{p,p} with
    // H^{d-p,d-p} and gamma_j with gamma_{N-j}.
    RatMatrix pairing_matrix(const PairingConfig& cfg) const {
        RatMatrix eta(basis_size(), basis_size());
        for (int p = 0; p <= dim; ++p)
            eta(static_cast<std::size_t>(p), static_cast<std::size_t>(dim - p)) = cfg.untwisted_top;
        for (int j = 1; j <= N - 1; ++j) {
            std::size_t a = static_cast<std::size_t>(dim + j);
            std::size_t b = static_cast<std::size_t>(dim + (N - j));
            eta(a, b) = cfg.twisted;
        }
        return eta;
    }

    RatMatrix pairing_matrix() const { return pairing_matrix(default_pairing()); }

    // Matrix of multiplication by c_1(T_X) = c * xi. On the untwisted block
    // xi shifts H^{p,p} to H^{p+1,p+1}; the restriction of an untwisted
    // degree-2 class to a point sector vanishes. The scalar c is
    // configuration; the commutation identities hold for any value.
    RatMatrix rho_matrix(const Rational& c) const {
        RatMatrix rho(basis_size(), basis_size());
        for (int p = 0; p + 1 <= dim; ++p)
            rho(static_cast<std::size_t>(p + 1), static_cast<std::size_t>(p)) = c;
        return rho;
    }

    RatMatrix rho_matrix() const { return rho_matrix(Rational(dim + 1)); }
};

// ---------------------------------------------------------------------------
// Weighted projective lines P(a,b) with coprime weights (appendix checks)
// ---------------------------------------------------------------------------

struct PabModel {
    long a = 1;
    long b = 1;

    PabModel(long a_, long b_) : a(a_), b(b_) {
        if (a < 1 || b < 1)
            throw unsupported_model_error("P(a,b) weights must be positive");
        if (std::gcd(a, b) != 1)
            throw unsupported_model_error("P(a,b) weights must be coprime");
    }
};

// Topological Euler characteristic of the coarse inertia space: the curve
// sector contributes chi(P^1) = 2 and each of the (a-1)+(b-1) point sectors
// contributes 1.
inline long euler_characteristic_inertia(const PabModel& m) {
    return m.a + m.b;
}

// ---------------------------------------------------------------------------
// Invariant queries and dimension constraints
// ---------------------------------------------------------------------------

// Stacky exponents are stored per sector block, in block order; positions
// M_{i-1}+1..M_i belong to sector i.
struct InvariantQuery {
    MonodromyProfile profile;
    std::vector<long> stacky_exponents; // k_1 .. k_{sum n_i}
    std::vector<long> plain_exponents;  // l_1 .. l_n
    CaseTag invariant_case = CaseTag::Curve;

    void validate() const {
        if (stacky_exponents.size() != static_cast<std::size_t>(profile.total_points()))
            throw shape_error("stacky exponent count does not match profile");
        for (long k : stacky_exponents)
            if (k < 0)
                throw shape_error("negative descendant exponent");
        for (long l : plain_exponents)
            if (l < 0)
                throw shape_error("negative descendant exponent");
    }
};

// Dimension constraint, with the Virasoro index as an optional shift
// (virasoro_k = 0 states the constraint for the plain invariant):
//   curve:   n + sum n_i - 2 = sum l + sum_blocks (k_j + i/N) + k
//   surface: (n + sum n_i - 2)/2 = sum (l - 1/2) + sum_blocks (k_j - 1/2 + 2i/N) + k
inline bool dimension_constraint(const InvariantQuery& q, long virasoro_k = 0) {
    q.validate();
    const auto& p = q.profile;
    long n = static_cast<long>(q.plain_exponents.size());
    Rational rhs = Rational(virasoro_k);
    Rational lhs;
    if (q.invariant_case == CaseTag::Curve) {
        lhs = Rational(n + p.total_points() - 2);
        for (long l : q.plain_exponents)
            rhs += l;
        for (long j = 1; j <= p.total_points(); ++j) {
            int s = p.sector_of_position(j);
            rhs += Rational(q.stacky_exponents[static_cast<std::size_t>(j - 1)]) + make_rational(s, p.N);
        }
    } else {
        lhs = make_rational(n + p.total_points() - 2, 2);
        for (long l : q.plain_exponents)
            rhs += Rational(l) - make_rational(1, 2);
        for (long j = 1; j <= p.total_points(); ++j) {
            int s = p.sector_of_position(j);
            rhs += Rational(q.stacky_exponents[static_cast<std::size_t>(j - 1)]) - make_rational(1, 2) +
                   make_rational(2 * s, p.N);
        }
    }
    return lhs == rhs;
}

} // namespace orbivir
