#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reebhom/brieskorn.hpp"
#include "reebhom/tower.hpp"

namespace reebhom {

// Assembled invariant of one spectrum plus the provenance a reader needs to
// audit it: which hypotheses were checked, which were assumed, and the
// finite windows the ranks are valid on.
struct InvariantReport {
    GradedRankModule module;
    std::string source;
    bool lacunarity_ok = false;
    ParityClass parity = ParityClass::all_even;
    std::vector<std::string> notes; // caller-asserted hypotheses, recorded

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// The invariant exists only under lacunarity of the good-orbit index set;
// outside that regime no ranks are fabricated and assembly refuses.
inline InvariantReport assemble_invariant(const OrbitSpectrum& s, Convention convention) {
    if (!s.genericity_checked)
        fail(errc::genericity_unchecked,
             "spectrum \"" + s.manifold_label + "\" has no genericity certificate");

    std::set<long long> good_indices;
    for (const auto& r : s.records) {
        if (!r.cz_index)
            fail(errc::missing_indices, "record " + r.base_id + "^" +
                                            std::to_string(r.iterate) +
                                            " carries no Conley-Zehnder index");
        if (r.is_good) good_indices.insert(*r.cz_index);
    }
    if (!is_lacunary(good_indices)) {
        long long witness = 0;
        for (long long v : good_indices)
            if (good_indices.count(v + 1)) { witness = v; break; }
        fail(errc::lacunarity_failed,
             "good-orbit indices contain the consecutive pair {" + std::to_string(witness) +
                 ", " + std::to_string(witness + 1) + "}");
    }

    InvariantReport rep;
    rep.module = limit_module(s, convention);
    rep.source = s.manifold_label;
    rep.lacunarity_ok = true;
    rep.parity = parity_report(s);
    rep.notes.push_back("exact filling assumed for the source manifold");
    rep.notes.push_back("nondegeneracy certified below the action cutoff only");
    return rep;
}

struct ShiftComparison {
    enum class Verdict { equal_up_to_shift, distinct, inconclusive };

    Verdict verdict = Verdict::inconclusive;
    std::optional<long long> shift;          // set for equal_up_to_shift; even
    std::optional<Degree> witness_degree;    // set for distinct
    std::optional<std::pair<long long, long long>> witness_ranks;
    std::string reason;                      // set for inconclusive
    DegreeInterval window;                   // overlap backing the verdict
    long long max_shift = 0;

    friend bool operator==(const ShiftComparison&, const ShiftComparison&) = default;
};

inline const char* verdict_name(ShiftComparison::Verdict v) {
    switch (v) {
    case ShiftComparison::Verdict::equal_up_to_shift: return "EqualUpToShift";
    case ShiftComparison::Verdict::distinct: return "Distinct";
    case ShiftComparison::Verdict::inconclusive: return "Inconclusive";
    }
    return "?";
}

// Windowed comparison of two graded rank modules up to a global even shift.
// For each even s with |s| <= max_shift, ranks a(d) and b(d+s) are compared
// on the overlap of the validity windows. The first matching shift in the
// order 0, +2, -2, +4, -4, ... is reported (smallest |s|, positive on
// ties). Distinct requires every shift to be refuted on a nonempty overlap;
// if some shift can not even be tested, the comparison is inconclusive
// rather than a fabricated verdict.
inline ShiftComparison compare_up_to_even_shift(const GradedRankModule& a,
                                                const GradedRankModule& b,
                                                long long max_shift) {
    if (a.convention != b.convention)
        fail(errc::convention_mismatch, "modules graded under different conventions");
    if (max_shift < 0 || max_shift % 2 != 0)
        fail(errc::bad_dimension, "max_shift must be even and nonnegative");

    ShiftComparison cmp;
    cmp.max_shift = max_shift;
    cmp.window = intersect(a.degree_window, b.degree_window);

    std::vector<long long> shifts;
    shifts.push_back(0);
    for (long long s = 2; s <= max_shift; s += 2) {
        shifts.push_back(s);
        shifts.push_back(-s);
    }

    bool any_untestable = false;
    long long untestable_shift = 0;
    for (long long s : shifts) {
        DegreeInterval overlap =
            intersect(a.degree_window, DegreeInterval{b.degree_window.lo - s,
                                                      b.degree_window.hi - s});
        if (overlap.empty()) {
            if (!any_untestable) { any_untestable = true; untestable_shift = s; }
            continue;
        }
        bool match = true;
        for (Degree d = overlap.lo; d <= overlap.hi; ++d)
            if (a.rank_at(d) != b.rank_at(d + s)) { match = false; break; }
        if (match) {
            cmp.verdict = ShiftComparison::Verdict::equal_up_to_shift;
            cmp.shift = s;
            cmp.window = overlap;
            return cmp;
        }
    }

    if (any_untestable) {
        cmp.verdict = ShiftComparison::Verdict::inconclusive;
        cmp.reason = "shift " + std::to_string(untestable_shift) +
                     " can not be tested: the validity windows do not overlap";
        return cmp;
    }

    cmp.verdict = ShiftComparison::Verdict::distinct;
    // Prefer a witness degree inside the overlap common to every tested
    // shift where already the unshifted ranks disagree; otherwise the first
    // unshifted disagreement.
    DegreeInterval common{std::max(a.degree_window.lo, b.degree_window.lo + max_shift),
                          std::min(a.degree_window.hi, b.degree_window.hi - max_shift)};
    for (Degree d = common.lo; d <= common.hi; ++d)
        if (a.rank_at(d) != b.rank_at(d)) {
            cmp.witness_degree = d;
            cmp.witness_ranks = {a.rank_at(d), b.rank_at(d)};
            return cmp;
        }
    for (Degree d = cmp.window.lo; d <= cmp.window.hi; ++d)
        if (a.rank_at(d) != b.rank_at(d)) {
            cmp.witness_degree = d;
            cmp.witness_ranks = {a.rank_at(d), b.rank_at(d)};
            return cmp;
        }
    return cmp;
}

// The two-sphere comparison behind the exotic-contact-structure argument:
// run the whole pipeline for two exponents over the same perturbation and
// compare the invariants up to even shift. A Distinct verdict is evidence
// at this cutoff and window, not a statement about all degrees.
struct UstilovskyReport {
    InvariantReport first;
    InvariantReport second;
    ShiftComparison comparison;
    std::string caveat =
        "verdict holds for the computed windows and action cutoffs only";

    friend bool operator==(const UstilovskyReport&, const UstilovskyReport&) = default;
};

inline UstilovskyReport ustilovsky_report(long long p1, long long p2, long long m,
                                          const std::vector<Rational>& eps,
                                          const Action& action_cutoff, long long max_shift,
                                          Convention convention = Convention::minus_cz) {
    BrieskornParams params1{p1, m, eps};
    BrieskornParams params2{p2, m, eps};
    UstilovskyReport rep;
    rep.first = assemble_invariant(enumerate_orbits(params1, action_cutoff), convention);
    rep.first.notes.push_back(sphere_note(params1));
    rep.second = assemble_invariant(enumerate_orbits(params2, action_cutoff), convention);
    rep.second.notes.push_back(sphere_note(params2));
    rep.comparison = compare_up_to_even_shift(rep.first.module, rep.second.module, max_shift);
    return rep;
}

} // namespace reebhom
