#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "reebhom/orbit.hpp"

namespace reebhom {

// Circle bundles in a negative line bundle over a closed symplectic base B.
// With the contact form r^2 * (transgression form), periodic Reeb orbits on
// a bundle of radius profile e^f sit over the critical points of f, one
// fiber circle per critical point, so counting is pure Morse data of B.
// These records carry Morse indices, not Conley-Zehnder indices, and they
// never feed the graded invariant assembly; their job is the orbit-count
// lower bound.
struct BaseManifoldData {
    std::string label;
    std::vector<long long> betti;        // beta_0 .. beta_{dim B}
    std::vector<int> morse_indices;      // critical point indices, ascending

    friend bool operator==(const BaseManifoldData&, const BaseManifoldData&) = default;
};

// Sum of the Betti numbers: the orbit-count lower bound for the bundle.
inline long long orbit_lower_bound(const BaseManifoldData& base) {
    return std::accumulate(base.betti.begin(), base.betti.end(), 0LL);
}

// Shipped perfect-Morse catalogs.
//   cp(n):           base CP^{n-1}, one critical point of each even index
//                    0, 2, ..., 2(n-1) (the standard Fubini-Study height).
//   grassmannian(n): base G+(2, 2n), oriented 2-planes in R^{2n}; 2n
//                    critical points with indices 0, 2, ..., 2n-2 and
//                    2n-2, 2n, ..., 4n-4.
inline BaseManifoldData catalog(const std::string& name, long long n) {
    BaseManifoldData base;
    if (name == "cp") {
        if (n < 1) fail(errc::bad_dimension, "cp catalog needs n >= 1");
        base.label = "CP^" + std::to_string(n - 1);
        base.betti.assign(static_cast<size_t>(2 * (n - 1) + 1), 0);
        for (long long j = 0; j < n; ++j) {
            base.morse_indices.push_back(static_cast<int>(2 * j));
            base.betti[static_cast<size_t>(2 * j)] = 1;
        }
    } else if (name == "grassmannian") {
        if (n < 2) fail(errc::bad_dimension, "grassmannian catalog needs n >= 2");
        base.label = "G+(2," + std::to_string(2 * n) + ")";
        base.betti.assign(static_cast<size_t>(4 * n - 3), 0);
        for (long long j = 0; j < n; ++j) base.morse_indices.push_back(static_cast<int>(2 * j));
        for (long long j = 0; j < n; ++j)
            base.morse_indices.push_back(static_cast<int>(2 * n - 2 + 2 * j));
        std::sort(base.morse_indices.begin(), base.morse_indices.end());
        for (int idx : base.morse_indices) base.betti[static_cast<size_t>(idx)] += 1;
    } else {
        fail(errc::unknown_catalog, "no catalog named \"" + name + "\"");
    }
    return base;
}

// One base orbit per critical point; the iterate N fiber circle has action
// N * r^2. Bundle actions are plain rationals, not pi-multiples. Fiber
// rotation is modeled as good for every iterate.
inline OrbitSpectrum circle_bundle_spectrum(const BaseManifoldData& base,
                                            const Rational& r_squared,
                                            const Action& action_cutoff) {
    if (!(r_squared > 0)) fail(errc::bad_dimension, "r^2 must be positive");
    if (action_cutoff.unit != ActionUnit::plain)
        fail(errc::unit_mismatch, "circle-bundle cutoffs are plain actions");

    OrbitSpectrum s;
    s.manifold_label = "circle bundle over " + base.label + " r2=" + to_string(r_squared);
    s.action_cutoff = action_cutoff;
    s.genericity_checked = true; // Morse data is exact; nothing to perturb
    for (size_t i = 0; i < base.morse_indices.size(); ++i) {
        for (long long it = 1; to_rational(it) * r_squared < action_cutoff.value; ++it) {
            ReebOrbitRecord r;
            r.base_id = "crit" + std::string(i < 10 ? "0" : "") + std::to_string(i);
            r.iterate = it;
            r.action = plain_action(to_rational(it) * r_squared);
            r.morse_index = base.morse_indices[i];
            r.is_good = true;
            s.records.push_back(std::move(r));
        }
    }
    sort_records(s.records);
    return s;
}

// Hypothesis report for the pinched-bundle orbit count. Failures are
// recorded, not thrown: a report with lower_bound 0 and a reason is the
// honest outcome when a hypothesis fails.
struct BundleHypothesisReport {
    bool pinching_ok = false;      // r2^2 < 2 r1^2, exact
    bool lacunary_ok = false;      // Morse index set contains no consecutive pair
    bool min_period_ok = false;    // caller-asserted: minimal period >= r1^2
    bool filling_asserted = false; // caller-asserted Liouville filling of S_{R1}
    long long lower_bound = 0;
    std::vector<std::string> failures;

    friend bool operator==(const BundleHypothesisReport&, const BundleHypothesisReport&) = default;
};

inline BundleHypothesisReport check_bundle_hypotheses(const BaseManifoldData& base,
                                                      const Rational& r1_squared,
                                                      const Rational& r2_squared,
                                                      bool min_period_ok,
                                                      bool filling_asserted) {
    BundleHypothesisReport rep;
    rep.pinching_ok = r2_squared < 2 * r1_squared;
    if (!rep.pinching_ok)
        rep.failures.push_back("pinching failed: r2^2 = " + to_string(r2_squared) +
                               " >= 2 r1^2 = " + to_string(2 * r1_squared));

    std::set<long long> indices(base.morse_indices.begin(), base.morse_indices.end());
    rep.lacunary_ok = is_lacunary(indices);
    if (!rep.lacunary_ok)
        rep.failures.push_back("Morse index set of " + base.label + " is not lacunary");

    rep.min_period_ok = min_period_ok;
    if (!min_period_ok) rep.failures.push_back("minimal period bound not asserted");
    rep.filling_asserted = filling_asserted;
    if (!filling_asserted) rep.failures.push_back("Liouville filling not asserted");

    if (rep.failures.empty()) rep.lower_bound = orbit_lower_bound(base);
    return rep;
}

} // namespace reebhom
