#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebhom/orbit.hpp"

namespace reebhom {

// Perturbed Reeb flow on the Brieskorn sphere Sigma(p, 2, ..., 2) inside
// S^{4m+1} (n = 2m+1 complex coordinate planes besides w0). In suitable
// coordinates the flow is linear and diagonal, rotating the planes with
// angular frequencies
//     4/p,  2,  2(1+eps_1), 2(1-eps_1), ..., 2(1+eps_m), 2(1-eps_m).
// The surface equation w0^p + w1^2 + 2 sum_j w_{2j} w_{2j+1} = 0 leaves
// exactly these closed orbits when the frequencies do not resonate:
//   gamma0      in the (w0, w1) block, simple period p*pi,
//   gamma_j^+   the unit circle of the w_{2j} plane, period pi/(1+eps_j),
//   gamma_j^-   the unit circle of the w_{2j+1} plane, period pi/(1-eps_j),
// together with all their iterates.
struct BrieskornParams {
    long long p = 7;           // exponent; p = +-1 mod 8 gives the standard sphere
    long long m = 1;           // n = 2m+1, sphere dimension 4m+1
    std::vector<Rational> eps; // m perturbation weights, each in (0,1), distinct

    long long n() const { return 2 * m + 1; }
    bool sphere_exponent() const { return p % 8 == 1 || p % 8 == 7; }
};

inline bool valid_params(const BrieskornParams& params) {
    if (params.p < 2 || params.m < 1) return false;
    if (static_cast<long long>(params.eps.size()) != params.m) return false;
    for (size_t i = 0; i < params.eps.size(); ++i) {
        if (!(params.eps[i] > 0 && params.eps[i] < 1)) return false;
        for (size_t j = i + 1; j < params.eps.size(); ++j)
            if (params.eps[i] == params.eps[j]) return false;
    }
    return true;
}

// cz(gamma0^N) = 2Np(n-2) + 4N.
inline long long cz_gamma0(long long p, long long n, long long iterate) {
    if (p < 2 || n < 2 || iterate < 1) fail(errc::bad_dimension, "cz_gamma0 out of domain");
    return 2 * iterate * p * (n - 2) + 4 * iterate;
}

enum class BranchSign { plus, minus };

namespace detail {

// floor with a resonance guard: an exactly integral argument means the
// corresponding orbit has a transverse Floquet multiplier equal to one, the
// formula value is boundary-ambiguous, and the caller must reject.
inline long long checked_floor(const Rational& arg, const std::string& what) {
    if (is_integer(arg))
        fail(errc::resonant_parameter,
             what + " = " + to_string(arg) + " is an exact integer");
    return floor_to_ll(arg);
}

} // namespace detail

// cz(gamma_j^{+-, N}) =
//   2 floor(2N / (p(1 +- eps_j))) + 2 floor(N / (1 +- eps_j))
//   + 2 sum_{k != j} [ floor(N(1+eps_k)/(1 +- eps_j)) + floor(N(1-eps_k)/(1 +- eps_j)) ]
//   + n - 1.
// j is 1-based. Raises ResonantParameter when any floor argument is exactly
// integral (a degenerate iterate).
inline long long cz_gamma_pm(const BrieskornParams& params, long long j, BranchSign sign,
                             long long iterate) {
    if (!valid_params(params)) fail(errc::bad_dimension, "invalid Brieskorn parameters");
    if (j < 1 || j > params.m) fail(errc::bad_dimension, "branch index out of range");
    if (iterate < 1) fail(errc::bad_dimension, "iterate must be positive");

    const Rational eps_j = params.eps[static_cast<size_t>(j - 1)];
    const Rational denom =
        sign == BranchSign::plus ? Rational(1 + eps_j) : Rational(1 - eps_j);
    const Rational n_over = to_rational(iterate) / denom;
    const std::string tag = "gamma" + std::to_string(j) +
                            (sign == BranchSign::plus ? "+" : "-") + "^" +
                            std::to_string(iterate);

    long long total = 0;
    total += 2 * detail::checked_floor(to_rational(2 * iterate) / (to_rational(params.p) * denom),
                                       tag + ": 2N/(p(1+-eps_j))");
    total += 2 * detail::checked_floor(n_over, tag + ": N/(1+-eps_j)");
    for (long long k = 1; k <= params.m; ++k) {
        if (k == j) continue;
        const Rational eps_k = params.eps[static_cast<size_t>(k - 1)];
        total += 2 * detail::checked_floor(to_rational(iterate) * (1 + eps_k) / denom,
                                           tag + ": N(1+eps_k)/(1+-eps_j)");
        total += 2 * detail::checked_floor(to_rational(iterate) * (1 - eps_k) / denom,
                                           tag + ": N(1-eps_k)/(1+-eps_j)");
    }
    return total + params.n() - 1;
}

namespace detail {

// All rotation frequencies of the flow. The first entry is 4/p, the second
// is 2; the pair of those two is the resonance that cuts out gamma0 itself
// and is therefore not an obstruction.
inline std::vector<Rational> brieskorn_frequencies(const BrieskornParams& params) {
    std::vector<Rational> f;
    f.push_back(make_rational(4, params.p));
    f.push_back(Rational(2));
    for (const auto& e : params.eps) {
        f.push_back(2 * (1 + e));
        f.push_back(2 * (1 - e));
    }
    return f;
}

// Smallest t > 0 with t*w and t*w' both in 2*pi*Z, returned as the
// coefficient of pi.
inline Rational common_period_pi(const Rational& w1, const Rational& w2) {
    return rational_lcm(Rational(2) / w1, Rational(2) / w2);
}

} // namespace detail

// The smooth-sphere identification holds for p = +-1 mod 8; the orbit and
// index computations do not depend on it, so it is reported, never enforced.
inline std::string sphere_note(const BrieskornParams& params) {
    return "p = " + std::to_string(params.p) +
           (params.sphere_exponent() ? " is +-1 mod 8: the boundary is a standard sphere"
                                     : " is not +-1 mod 8: no sphere identification claimed");
}

struct BrieskornOrbitFamily {
    std::string base_id;
    Rational simple_action_pi; // action of the simple orbit, as a pi-coefficient
};

inline std::vector<BrieskornOrbitFamily> brieskorn_families(const BrieskornParams& params) {
    std::vector<BrieskornOrbitFamily> fams;
    fams.push_back({"gamma0", to_rational(params.p)});
    for (long long j = 1; j <= params.m; ++j) {
        const Rational& e = params.eps[static_cast<size_t>(j - 1)];
        fams.push_back({"gamma" + std::to_string(j) + "+", 1 / (1 + e)});
        fams.push_back({"gamma" + std::to_string(j) + "-", 1 / (1 - e)});
    }
    return fams;
}

// Finite non-resonance certificate below the cutoff. True iff
//  (a) the parameters are structurally valid,
//  (b) every pair of distinct rotation frequencies other than {4/p, 2} has
//      its least common period at or above the cutoff (the {4/p, 2} pair
//      resonates at p*pi by construction: that resonance IS the gamma0
//      family, which the enumeration lists), and
//  (c) no index computation needed below the cutoff hits an integral floor.
// (b) implies completeness of the orbit list and nondegeneracy of every
// listed iterate strictly below the cutoff; (c) re-checks that on the
// actual evaluations.
inline bool check_genericity(const BrieskornParams& params, const Action& action_cutoff) {
    if (action_cutoff.unit != ActionUnit::pi_multiple)
        fail(errc::unit_mismatch, "Brieskorn cutoffs are pi-multiples");
    if (!valid_params(params)) return false;

    const auto freqs = detail::brieskorn_frequencies(params);
    for (size_t i = 0; i < freqs.size(); ++i)
        for (size_t j = i + 1; j < freqs.size(); ++j) {
            if (i == 0 && j == 1) continue; // the gamma0 pair
            if (detail::common_period_pi(freqs[i], freqs[j]) < action_cutoff.value)
                return false;
        }

    // dry-run every index evaluation needed below the cutoff
    try {
        for (const auto& fam : brieskorn_families(params)) {
            if (fam.base_id == "gamma0") continue;
            const long long j = std::stoll(fam.base_id.substr(5, fam.base_id.size() - 6));
            const BranchSign sign =
                fam.base_id.back() == '+' ? BranchSign::plus : BranchSign::minus;
            for (long long it = 1; to_rational(it) * fam.simple_action_pi < action_cutoff.value; ++it)
                (void)cz_gamma_pm(params, j, sign, it);
        }
    } catch (const reeb_error& e) {
        if (e.code() == errc::resonant_parameter) return false;
        throw;
    }
    return true;
}

// Complete orbit spectrum below the cutoff: gamma0, gamma_j^{+-} and all
// iterates, with exact actions and indices, good/bad classified against the
// simple orbit of each family.
inline OrbitSpectrum enumerate_orbits(const BrieskornParams& params,
                                      const Action& action_cutoff) {
    if (!check_genericity(params, action_cutoff))
        fail(errc::genericity_failed,
             "Brieskorn parameters resonate below the cutoff " +
                 to_string(action_cutoff.value) + "*pi");

    OrbitSpectrum s;
    {
        std::string label = "brieskorn p=" + std::to_string(params.p) +
                            " m=" + std::to_string(params.m) + " eps=[";
        for (size_t i = 0; i < params.eps.size(); ++i)
            label += (i ? "," : "") + to_string(params.eps[i]);
        s.manifold_label = label + "]";
    }
    s.action_cutoff = action_cutoff;
    s.genericity_checked = true;

    auto index_of = [&params](const BrieskornOrbitFamily& fam, long long it) -> long long {
        if (fam.base_id == "gamma0") return cz_gamma0(params.p, params.n(), it);
        const long long j = std::stoll(fam.base_id.substr(5, fam.base_id.size() - 6));
        const BranchSign sign = fam.base_id.back() == '+' ? BranchSign::plus : BranchSign::minus;
        return cz_gamma_pm(params, j, sign, it);
    };

    for (const auto& fam : brieskorn_families(params)) {
        std::optional<long long> simple_index;
        for (long long it = 1; to_rational(it) * fam.simple_action_pi < action_cutoff.value; ++it) {
            ReebOrbitRecord r;
            r.base_id = fam.base_id;
            r.iterate = it;
            r.action = pi_action(to_rational(it) * fam.simple_action_pi);
            r.cz_index = index_of(fam, it);
            if (!simple_index) simple_index = r.cz_index;
            r.is_good = classify_orbit(*simple_index, *r.cz_index) == GoodBad::good;
            s.records.push_back(std::move(r));
        }
    }
    sort_records(s.records);
    return s;
}

} // namespace reebhom
