#pragma once

#include <string>
#include <vector>

#include "reebhom/graded_complex.hpp"
#include "reebhom/orbit.hpp"

namespace reebhom {

// The truncated equivariant complex of a single orbit is a pair of ladders
// ("twin towers"): generators u^l (x) gamma_Max and u^l (x) gamma_min for
// u-powers l = 0..N, where gamma_min / gamma_Max are the two nondegenerate
// orbits the circle of the underlying orbit splits into, with
// cz(gamma_min) = cz(gamma) - 1 and cz(gamma_Max) = cz(gamma).
//
// Grading (MinusCZ plus twice the u-power):
//   deg(u^l (x) Max) = -mu + 2l
//   deg(u^l (x) min) = -mu + 1 + 2l
//
// The differential has two components. phi0 stays at the same u-power and
// maps min -> Max: zero for a good orbit, multiplication by 2 for a bad one
// (the orientation sign is fixed to +2; homology over Q does not see it).
// phi1 drops the u-power by one and maps Max -> min: multiplication by the
// covering multiplicity k for a good orbit, zero for a bad one.
//
// Good tower, N = 2 (degrees increase upward, arrows lower degree by 1):
//
//   -mu+5   min_2
//   -mu+4   Max_2  --k-->  min_1
//   -mu+3   min_1
//   -mu+2   Max_1  --k-->  min_0
//   -mu+1   min_0
//   -mu     Max_0
//
// Everything cancels except Max_0 (degree -mu) and min_N (degree -mu+1+2N).
// For a bad tower the 2's are isomorphisms over Q and homology vanishes.

enum class TowerLeg { min, max };

struct TowerGenerator {
    long long u_power = 0;
    TowerLeg leg = TowerLeg::max;
    Degree degree = 0;

    friend bool operator==(const TowerGenerator&, const TowerGenerator&) = default;
};

struct TowerComplex {
    long long truncation = 0; // N
    long long cz_index = 0;   // mu of the underlying orbit
    long long multiplicity = 1;
    bool good = true;
    std::vector<TowerGenerator> generators;
    GradedComplex complex;
};

inline TowerComplex build_tower(long long mu, long long k, bool good, long long truncation) {
    if (truncation < 0) fail(errc::bad_dimension, "negative tower truncation");
    if (k < 1) fail(errc::bad_dimension, "multiplicity must be positive");

    TowerComplex t;
    t.truncation = truncation;
    t.cz_index = mu;
    t.multiplicity = k;
    t.good = good;

    // One generator per degree: Max_l at -mu+2l, min_l at -mu+1+2l.
    for (long long l = 0; l <= truncation; ++l) {
        t.generators.push_back({l, TowerLeg::max, -mu + 2 * l});
        t.generators.push_back({l, TowerLeg::min, -mu + 1 + 2 * l});
    }
    for (const auto& g : t.generators) t.complex.set_chain_rank(g.degree, 1);

    const Rational phi0 = good ? Rational(0) : Rational(2);
    const Rational phi1 = good ? to_rational(k) : Rational(0);
    for (long long l = 0; l <= truncation; ++l) {
        // d(min_l) = phi0 * Max_l
        RationalMatrix d_min(1, 1);
        d_min.at(0, 0) = phi0;
        t.complex.set_boundary(-mu + 1 + 2 * l, std::move(d_min));
        // d(Max_l) = phi1 * min_{l-1}, absent at the bottom of the tower
        if (l > 0) {
            RationalMatrix d_max(1, 1);
            d_max.at(0, 0) = phi1;
            t.complex.set_boundary(-mu + 2 * l, std::move(d_max));
        }
    }
    return t;
}

// Exact homology of the tower, straight from the elimination oracle. For a
// good orbit this is one class in degree -mu and one in degree -mu+1+2N;
// the latter escapes to infinity with N and dies in the limit. Bad towers
// are acyclic.
inline std::map<Degree, size_t> tower_homology(const TowerComplex& t) {
    return homology_ranks(t.complex);
}

// The N -> infinity module of a whole spectrum: the bottom class of every
// good tower survives (the stabilization maps are the identity on it and
// zero on the escaping class), so the limit has one rank per good orbit,
// in degree -cz under MinusCZ.
inline GradedRankModule limit_module(const OrbitSpectrum& s, Convention convention) {
    if (!s.genericity_checked)
        fail(errc::genericity_unchecked,
             "spectrum \"" + s.manifold_label + "\" has no genericity certificate");
    GradedRankModule m;
    m.action_cutoff = s.action_cutoff;
    m.convention = convention;
    for (const auto& r : s.records) {
        if (!r.is_good) continue;
        if (!r.cz_index)
            fail(errc::missing_indices,
                 "record " + r.base_id + "^" + std::to_string(r.iterate) +
                     " carries no Conley-Zehnder index");
        Degree d = convention == Convention::minus_cz ? -*r.cz_index : *r.cz_index;
        m.ranks[d] += 1;
    }
    if (!m.ranks.empty())
        m.degree_window = DegreeInterval{m.ranks.begin()->first, m.ranks.rbegin()->first};
    return m;
}

// Check that tower homology restricted to a window has stabilized between
// two truncation levels and agrees there with the limit contribution of the
// orbit. The window must end below the escaping class of the smaller tower.
inline bool stabilization_check(long long mu, long long k, bool good, long long n_small,
                                long long n_large, const DegreeInterval& window) {
    if (n_small > n_large) fail(errc::bad_dimension, "truncations out of order");
    if (!(window.hi < -mu + 1 + 2 * n_small))
        fail(errc::window_too_wide,
             "window reaches degree " + std::to_string(window.hi) +
                 " but the escaping class of the smaller tower sits at " +
                 std::to_string(-mu + 1 + 2 * n_small));

    auto restrict = [&window](const std::map<Degree, size_t>& h) {
        std::map<Degree, size_t> out;
        for (const auto& [d, r] : h)
            if (window.contains(d)) out[d] = r;
        return out;
    };
    auto small_h = restrict(tower_homology(build_tower(mu, k, good, n_small)));
    auto large_h = restrict(tower_homology(build_tower(mu, k, good, n_large)));
    if (small_h != large_h) return false;

    std::map<Degree, size_t> limit;
    if (good && window.contains(-mu)) limit[-mu] = 1;
    return small_h == limit;
}

} // namespace reebhom
