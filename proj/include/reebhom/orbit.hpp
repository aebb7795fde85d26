#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reebhom/rational.hpp"

namespace reebhom {

// Orbit actions come in two incompatible units: the sphere/ellipsoid/Brieskorn
// families measure actions as rational multiples of pi, the circle-bundle
// family as plain rationals (fiber period r^2). Comparing across units is a
// caller bug and is refused.
enum class ActionUnit { pi_multiple, plain };

inline const char* unit_name(ActionUnit u) {
    return u == ActionUnit::pi_multiple ? "pi" : "plain";
}

struct Action {
    Rational value;   // coefficient of pi, or the raw value, depending on unit
    ActionUnit unit = ActionUnit::pi_multiple;

    friend bool operator==(const Action& a, const Action& b) {
        return a.unit == b.unit && a.value == b.value;
    }
};

inline Action pi_action(Rational coefficient) {
    return Action{std::move(coefficient), ActionUnit::pi_multiple};
}

inline Action plain_action(Rational value) {
    return Action{std::move(value), ActionUnit::plain};
}

inline int compare(const Action& a, const Action& b) {
    if (a.unit != b.unit)
        fail(errc::unit_mismatch, std::string("cannot compare a ") + unit_name(a.unit) +
                                      "-unit action with a " + unit_name(b.unit) + "-unit one");
    return cmp(a.value, b.value);
}

inline bool operator<(const Action& a, const Action& b) { return compare(a, b) < 0; }
inline bool operator<=(const Action& a, const Action& b) { return compare(a, b) <= 0; }

enum class GoodBad { good, bad };

// An iterate is good when its Conley-Zehnder index has the same parity as the
// index of the underlying simple orbit; bad iterates cancel out of the
// equivariant invariant.
inline GoodBad classify_orbit(long long cz_simple, long long cz_iterate) {
    return ((cz_simple - cz_iterate) % 2 == 0) ? GoodBad::good : GoodBad::bad;
}

// No two consecutive integers. An index set with this property kills every
// degree-lowering differential between distinct generators.
inline bool is_lacunary(const std::set<long long>& indices) {
    for (long long v : indices)
        if (indices.count(v + 1)) return false;
    return true;
}

// One periodic Reeb orbit: the iterate'th cover of the simple orbit base_id.
// The covering multiplicity equals the iterate count.
struct ReebOrbitRecord {
    std::string base_id;
    long long iterate = 1;
    Action action;
    std::optional<long long> cz_index;
    bool is_good = true;
    std::optional<int> morse_index; // circle-bundle records carry this instead of cz

    long long multiplicity() const { return iterate; }

    friend bool operator==(const ReebOrbitRecord&, const ReebOrbitRecord&) = default;
};

// Finite, action-truncated orbit list for one contact manifold model.
// Sorted by (action, base_id, iterate); closed under iterates below the
// cutoff, so good/bad flags are always recomputable from stored data.
struct OrbitSpectrum {
    std::string manifold_label;
    std::vector<ReebOrbitRecord> records;
    Action action_cutoff;
    bool genericity_checked = false;

    friend bool operator==(const OrbitSpectrum&, const OrbitSpectrum&) = default;
};

inline void sort_records(std::vector<ReebOrbitRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const ReebOrbitRecord& a, const ReebOrbitRecord& b) {
                  int c = compare(a.action, b.action);
                  if (c != 0) return c < 0;
                  if (a.base_id != b.base_id) return a.base_id < b.base_id;
                  return a.iterate < b.iterate;
              });
}

// Structural sanity check used by tests and by the family generators:
// actions below cutoff, sorted, no duplicate (base_id, iterate), iterates
// closed downward, actions additive in the iterate, good flags consistent
// with the stored indices.
inline void validate_spectrum(const OrbitSpectrum& s) {
    std::map<std::string, std::map<long long, const ReebOrbitRecord*>> families;
    const ReebOrbitRecord* prev = nullptr;
    for (const auto& r : s.records) {
        if (r.iterate < 1) fail(errc::invalid_spectrum, "nonpositive iterate");
        if (!(r.action < s.action_cutoff))
            fail(errc::invalid_spectrum, "record at or above the action cutoff");
        if (prev) {
            int c = compare(prev->action, r.action);
            if (c > 0 || (c == 0 && (prev->base_id > r.base_id ||
                                     (prev->base_id == r.base_id && prev->iterate >= r.iterate))))
                fail(errc::invalid_spectrum, "records out of order");
        }
        auto& fam = families[r.base_id];
        if (!fam.emplace(r.iterate, &r).second)
            fail(errc::invalid_spectrum, "duplicate (base_id, iterate)");
        prev = &r;
    }
    for (const auto& [base, fam] : families) {
        auto simple = fam.find(1);
        if (simple == fam.end())
            fail(errc::invalid_spectrum, "family " + base + " misses its simple orbit");
        for (const auto& [n, rec] : fam) {
            if (rec->action.value != to_rational(n) * simple->second->action.value)
                fail(errc::invalid_spectrum, "action not additive in the iterate for " + base);
            if (rec->cz_index && simple->second->cz_index) {
                bool good = classify_orbit(*simple->second->cz_index, *rec->cz_index) ==
                            GoodBad::good;
                if (good != rec->is_good)
                    fail(errc::invalid_spectrum, "good/bad flag inconsistent for " + base);
            }
        }
        // closure under iterates below cutoff
        long long top = fam.rbegin()->first;
        for (long long n = 1; n <= top; ++n)
            if (!fam.count(n))
                fail(errc::invalid_spectrum, "family " + base + " misses iterate " +
                                            std::to_string(n));
    }
}

// Sub-spectrum of records with action strictly below the new cutoff.
inline OrbitSpectrum truncate_spectrum(const OrbitSpectrum& s, const Action& cutoff) {
    if (ActionUnit u = s.action_cutoff.unit; cutoff.unit != u)
        fail(errc::unit_mismatch, "truncation cutoff in the wrong unit");
    if (s.action_cutoff < cutoff)
        fail(errc::cutoff_exceeds_validity,
             "requested cutoff " + to_string(cutoff.value) + " exceeds certified cutoff " +
                 to_string(s.action_cutoff.value));
    OrbitSpectrum out;
    out.manifold_label = s.manifold_label;
    out.action_cutoff = cutoff;
    out.genericity_checked = s.genericity_checked;
    for (const auto& r : s.records)
        if (r.action < cutoff) out.records.push_back(r);
    return out;
}

enum class ParityClass { all_even, all_odd, mixed };

inline const char* parity_name(ParityClass p) {
    switch (p) {
    case ParityClass::all_even: return "AllEven";
    case ParityClass::all_odd: return "AllOdd";
    case ParityClass::mixed: return "Mixed";
    }
    return "?";
}

// Parity of the multiset of stored Conley-Zehnder indices; an empty spectrum
// counts as AllEven by convention.
inline ParityClass parity_report(const OrbitSpectrum& s) {
    bool saw_even = false, saw_odd = false;
    for (const auto& r : s.records) {
        if (!r.cz_index) continue;
        (*r.cz_index % 2 == 0 ? saw_even : saw_odd) = true;
    }
    if (saw_even && saw_odd) return ParityClass::mixed;
    if (saw_odd) return ParityClass::all_odd;
    return ParityClass::all_even;
}

// Grading convention: MinusCZ puts a generator coming from an orbit with
// Conley-Zehnder index mu in degree -mu; PlusCZ is the mirrored display
// convention. Cross-manifold comparisons are only meaningful up to even
// shift either way.
enum class Convention { minus_cz, plus_cz };

inline const char* convention_name(Convention c) {
    return c == Convention::minus_cz ? "MinusCZ" : "PlusCZ";
}

struct DegreeInterval {
    Degree lo = 0;
    Degree hi = -1; // empty when hi < lo

    bool empty() const { return hi < lo; }
    bool contains(Degree d) const { return lo <= d && d <= hi; }

    friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

inline DegreeInterval intersect(const DegreeInterval& a, const DegreeInterval& b) {
    DegreeInterval out{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (out.empty()) return DegreeInterval{}; // canonical empty
    return out;
}

// Finite graded rank function with an explicit validity window: degrees
// outside the window are not claimed complete at this action cutoff.
struct GradedRankModule {
    std::map<Degree, long long> ranks; // only nonzero ranks stored
    DegreeInterval degree_window;
    Action action_cutoff;
    Convention convention = Convention::minus_cz;

    long long rank_at(Degree d) const {
        auto it = ranks.find(d);
        return it == ranks.end() ? 0 : it->second;
    }

    friend bool operator==(const GradedRankModule&, const GradedRankModule&) = default;
};

// Total rank; a lower bound for the number of good orbits of action below
// the module's cutoff.
inline long long rank_lower_bound(const GradedRankModule& m) {
    long long total = 0;
    for (const auto& [d, r] : m.ranks) total += r;
    return total;
}

} // namespace reebhom
