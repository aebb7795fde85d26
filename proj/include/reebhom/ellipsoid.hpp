#pragma once

#include <string>
#include <vector>

#include "reebhom/orbit.hpp"

namespace reebhom {

// Ellipsoid { sum_i (x_i^2 + y_i^2) / a_i = r^2 } in R^{2n} with the
// standard contact form. The Reeb flow rotates plane i with angular
// frequency 2 / (a_i r^2); the n simple orbits are the coordinate circles,
// with actions pi a_1 r^2 < ... < pi a_n r^2.
struct EllipsoidParams {
    std::vector<Rational> a; // strictly increasing, positive
    Rational r_squared = 1;

    size_t n() const { return a.size(); }
};

inline void require_valid(const EllipsoidParams& params) {
    if (params.a.empty()) fail(errc::bad_dimension, "ellipsoid needs at least one axis");
    if (!(params.r_squared > 0)) fail(errc::bad_dimension, "r^2 must be positive");
    for (size_t i = 0; i < params.a.size(); ++i) {
        if (!(params.a[i] > 0)) fail(errc::bad_dimension, "axes must be positive");
        if (i + 1 < params.a.size() && !(params.a[i] < params.a[i + 1]))
            fail(errc::bad_dimension, "axes must be strictly increasing");
    }
}

// Conley-Zehnder index of the N-th iterate of the k-th coordinate orbit
// (k is 1-based):
//     n - 1 + 2 sum_j floor(N a_k / a_j),
// the j = k term contributing exactly N. Each transverse plane j != k
// must be nonresonant: N a_k / a_j integral means a Floquet multiplier 1.
inline long long cz_ellipsoid(const EllipsoidParams& params, size_t k, long long iterate) {
    require_valid(params);
    if (k < 1 || k > params.n()) fail(errc::bad_dimension, "orbit index out of range");
    if (iterate < 1) fail(errc::bad_dimension, "iterate must be positive");

    const Rational& ak = params.a[k - 1];
    long long total = 0;
    for (size_t j = 1; j <= params.n(); ++j) {
        Rational ratio = to_rational(iterate) * ak / params.a[j - 1];
        if (j != k && is_integer(ratio))
            fail(errc::resonant_parameter,
                 "orbit " + std::to_string(k) + "^" + std::to_string(iterate) +
                     " resonates with plane " + std::to_string(j) + " (N a_k / a_j = " +
                     to_string(ratio) + ")");
        total += 2 * floor_to_ll(ratio);
    }
    return static_cast<long long>(params.n()) - 1 + total;
}

// Pairwise nonresonance below the cutoff: the common period of planes j, k
// is pi r^2 lcm(a_j, a_k) (lcm over the positive rationals); if that is
// below the cutoff some iterate below the cutoff is degenerate and the
// coordinate circles are not the whole orbit set.
inline bool ellipsoid_genericity(const EllipsoidParams& params, const Action& cutoff) {
    if (cutoff.unit != ActionUnit::pi_multiple)
        fail(errc::unit_mismatch, "ellipsoid cutoffs are pi-multiples");
    for (size_t i = 0; i < params.n(); ++i)
        for (size_t j = i + 1; j < params.n(); ++j)
            if (rational_lcm(params.a[i], params.a[j]) * params.r_squared < cutoff.value)
                return false;
    return true;
}

inline OrbitSpectrum enumerate_orbits(const EllipsoidParams& params, const Action& cutoff) {
    require_valid(params);
    if (!ellipsoid_genericity(params, cutoff))
        fail(errc::genericity_failed,
             "ellipsoid axes resonate below the cutoff " + to_string(cutoff.value) + "*pi");

    OrbitSpectrum s;
    {
        std::string label = "ellipsoid a=[";
        for (size_t i = 0; i < params.a.size(); ++i)
            label += (i ? "," : "") + to_string(params.a[i]);
        s.manifold_label = label + "] r2=" + to_string(params.r_squared);
    }
    s.action_cutoff = cutoff;
    s.genericity_checked = true;

    for (size_t k = 1; k <= params.n(); ++k) {
        const Rational simple_action = params.a[k - 1] * params.r_squared;
        long long simple_index = 0;
        for (long long it = 1; to_rational(it) * simple_action < cutoff.value; ++it) {
            ReebOrbitRecord r;
            r.base_id = "e" + std::string(k < 10 ? "0" : "") + std::to_string(k);
            r.iterate = it;
            r.action = pi_action(to_rational(it) * simple_action);
            r.cz_index = cz_ellipsoid(params, k, it);
            if (it == 1) simple_index = *r.cz_index;
            r.is_good = classify_orbit(simple_index, *r.cz_index) == GoodBad::good;
            s.records.push_back(std::move(r));
        }
    }
    sort_records(s.records);
    return s;
}

// Exact arithmetic certificate for the pinching argument: a hypersurface
// squeezed between the ellipsoids of radii r1 <= r2 with r2^2 < 2 r1^2
// admits an action window (pi a_n r2^2, 2 pi a_1 r1^2) containing a level T
// at which the truncated invariant of the outer ellipsoid has exactly n
// generators, all simple, whose actions can not be iterates of each other
// or of anything shorter than pi r1^2.
struct CheckedInequality {
    std::string description;
    Rational lhs;
    Rational rhs;
    bool strict = true;
    bool holds = false;

    friend bool operator==(const CheckedInequality&, const CheckedInequality&) = default;
};

struct EkelandLasryCertificate {
    size_t n = 0;
    bool pinching_ok = false;
    Action window_lo; // pi a_n r2^2
    Action window_hi; // 2 pi a_1 r1^2
    Action chosen_t;  // midpoint of the window
    std::vector<Action> generator_actions;
    Action min_period_bound; // pi r1^2
    long long distinct_count = 0;
    std::vector<CheckedInequality> audit;

    friend bool operator==(const EkelandLasryCertificate&, const EkelandLasryCertificate&) = default;
};

inline EkelandLasryCertificate ekeland_lasry_certificate(const std::vector<Rational>& a,
                                                         const Rational& r1_squared,
                                                         const Rational& r2_squared) {
    EllipsoidParams shape{a, r2_squared};
    require_valid(shape);
    if (!(r1_squared > 0) || r2_squared < r1_squared)
        fail(errc::bad_dimension, "need 0 < r1^2 <= r2^2");

    EkelandLasryCertificate cert;
    cert.n = a.size();

    auto check = [&cert](std::string what, Rational lhs, Rational rhs) {
        bool ok = lhs < rhs;
        cert.audit.push_back({std::move(what), std::move(lhs), std::move(rhs), true, ok});
        return ok;
    };
    auto check_le = [&cert](std::string what, Rational lhs, Rational rhs) {
        bool ok = lhs <= rhs;
        cert.audit.push_back({std::move(what), std::move(lhs), std::move(rhs), false, ok});
        return ok;
    };

    cert.pinching_ok = check("pinching r2^2 < 2 r1^2", r2_squared, 2 * r1_squared);
    if (!cert.pinching_ok)
        fail(errc::pinching_violated, "r2^2 = " + to_string(r2_squared) +
                                          " is not below 2 r1^2 = " + to_string(2 * r1_squared));

    const Rational window_lo = a.back() * r2_squared;
    const Rational window_hi = 2 * a.front() * r1_squared;
    if (!check("window a_n r2^2 < 2 a_1 r1^2", window_lo, window_hi))
        fail(errc::window_empty, "action window (" + to_string(window_lo) + "*pi, " +
                                     to_string(window_hi) + "*pi) is empty");
    cert.window_lo = pi_action(window_lo);
    cert.window_hi = pi_action(window_hi);
    cert.chosen_t = pi_action((window_lo + window_hi) / 2);

    for (const auto& ak : a) {
        Rational act = ak * r2_squared;
        if (!check("generator below T", act, cert.chosen_t.value))
            fail(errc::window_empty, "generator action not below the chosen level");
        if (!check_le("second iterate at or above T", cert.chosen_t.value, 2 * act))
            fail(errc::window_empty, "second iterate below the chosen level");
        cert.generator_actions.push_back(pi_action(act));
    }

    // every generator sits in [pi r1^2, 2 pi r1^2): no two are iterates of a
    // common shorter orbit
    cert.min_period_bound = pi_action(r1_squared);
    for (const auto& act : cert.generator_actions) {
        if (!check_le("minimal period bound <= generator", cert.min_period_bound.value,
                      act.value))
            fail(errc::window_empty, "generator action below the minimal period bound");
        if (!check("generator < 2 pi r1^2", act.value, 2 * r1_squared))
            fail(errc::window_empty, "generator action reaches twice the minimal period");
    }
    cert.distinct_count = static_cast<long long>(cert.n);
    return cert;
}

} // namespace reebhom
