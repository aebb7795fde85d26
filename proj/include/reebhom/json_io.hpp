#pragma once

#include <json.hpp>

#include "reebhom/ellipsoid.hpp"
#include "reebhom/invariants.hpp"
#include "reebhom/line_bundle.hpp"

// Canonical JSON shapes for every report the CLI can emit. Rationals are
// {"num": "...", "den": "..."} with decimal strings, so nothing is ever
// rounded; objects serialize with sorted keys, so identical values dump to
// identical bytes.

namespace reebhom {

inline constexpr int schema_version = 1;

using json = nlohmann::json;

inline json to_json(const Rational& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const json& j) {
    return make_rational(Integer(j.at("num").get<std::string>()),
                         Integer(j.at("den").get<std::string>()));
}

inline json to_json(const Action& a) {
    return json{{"unit", unit_name(a.unit)}, {"value", to_json(a.value)}};
}

inline Action action_from_json(const json& j) {
    std::string unit = j.at("unit").get<std::string>();
    if (unit != "pi" && unit != "plain") fail(errc::parse_error, "unknown action unit " + unit);
    return Action{rational_from_json(j.at("value")),
                  unit == "pi" ? ActionUnit::pi_multiple : ActionUnit::plain};
}

inline json to_json(const DegreeInterval& w) {
    if (w.empty()) return nullptr;
    return json{{"lo", w.lo}, {"hi", w.hi}};
}

inline DegreeInterval interval_from_json(const json& j) {
    if (j.is_null()) return DegreeInterval{};
    return DegreeInterval{j.at("lo").get<Degree>(), j.at("hi").get<Degree>()};
}

inline json to_json(const ReebOrbitRecord& r) {
    json j{{"base_id", r.base_id},
           {"iterate", r.iterate},
           {"action", to_json(r.action)},
           {"good", r.is_good}};
    if (r.cz_index) j["cz_index"] = *r.cz_index;
    if (r.morse_index) j["morse_index"] = *r.morse_index;
    return j;
}

inline ReebOrbitRecord record_from_json(const json& j) {
    ReebOrbitRecord r;
    r.base_id = j.at("base_id").get<std::string>();
    r.iterate = j.at("iterate").get<long long>();
    r.action = action_from_json(j.at("action"));
    r.is_good = j.at("good").get<bool>();
    if (j.contains("cz_index")) r.cz_index = j.at("cz_index").get<long long>();
    if (j.contains("morse_index")) r.morse_index = j.at("morse_index").get<int>();
    return r;
}

inline json to_json(const OrbitSpectrum& s) {
    json records = json::array();
    for (const auto& r : s.records) records.push_back(to_json(r));
    return json{{"manifold", s.manifold_label},
                {"action_cutoff", to_json(s.action_cutoff)},
                {"genericity_checked", s.genericity_checked},
                {"records", std::move(records)}};
}

inline OrbitSpectrum spectrum_from_json(const json& j) {
    OrbitSpectrum s;
    s.manifold_label = j.at("manifold").get<std::string>();
    s.action_cutoff = action_from_json(j.at("action_cutoff"));
    s.genericity_checked = j.at("genericity_checked").get<bool>();
    for (const auto& rec : j.at("records")) s.records.push_back(record_from_json(rec));
    return s;
}

inline json to_json(const GradedRankModule& m) {
    json ranks = json::array();
    for (const auto& [d, r] : m.ranks) ranks.push_back(json{{"degree", d}, {"rank", r}});
    return json{{"ranks", std::move(ranks)},
                {"degree_window", to_json(m.degree_window)},
                {"action_cutoff", to_json(m.action_cutoff)},
                {"convention", convention_name(m.convention)},
                {"total_rank", rank_lower_bound(m)}};
}

inline GradedRankModule module_from_json(const json& j) {
    GradedRankModule m;
    for (const auto& e : j.at("ranks"))
        m.ranks[e.at("degree").get<Degree>()] = e.at("rank").get<long long>();
    m.degree_window = interval_from_json(j.at("degree_window"));
    m.action_cutoff = action_from_json(j.at("action_cutoff"));
    std::string conv = j.at("convention").get<std::string>();
    if (conv != "MinusCZ" && conv != "PlusCZ")
        fail(errc::parse_error, "unknown convention " + conv);
    m.convention = conv == "MinusCZ" ? Convention::minus_cz : Convention::plus_cz;
    return m;
}

inline json to_json(const InvariantReport& rep) {
    return json{{"module", to_json(rep.module)},
                {"source", rep.source},
                {"lacunarity_ok", rep.lacunarity_ok},
                {"parity", parity_name(rep.parity)},
                {"notes", rep.notes}};
}

inline InvariantReport invariant_report_from_json(const json& j) {
    InvariantReport rep;
    rep.module = module_from_json(j.at("module"));
    rep.source = j.at("source").get<std::string>();
    rep.lacunarity_ok = j.at("lacunarity_ok").get<bool>();
    std::string par = j.at("parity").get<std::string>();
    rep.parity = par == "AllEven" ? ParityClass::all_even
                 : par == "AllOdd" ? ParityClass::all_odd
                                   : ParityClass::mixed;
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

inline json to_json(const ShiftComparison& cmp) {
    json j{{"verdict", verdict_name(cmp.verdict)},
           {"window", to_json(cmp.window)},
           {"max_shift", cmp.max_shift}};
    if (cmp.shift) j["shift"] = *cmp.shift;
    if (cmp.witness_degree) j["witness_degree"] = *cmp.witness_degree;
    if (cmp.witness_ranks)
        j["witness_ranks"] = json::array({cmp.witness_ranks->first, cmp.witness_ranks->second});
    if (!cmp.reason.empty()) j["reason"] = cmp.reason;
    return j;
}

inline ShiftComparison comparison_from_json(const json& j) {
    ShiftComparison cmp;
    std::string v = j.at("verdict").get<std::string>();
    cmp.verdict = v == "EqualUpToShift" ? ShiftComparison::Verdict::equal_up_to_shift
                  : v == "Distinct" ? ShiftComparison::Verdict::distinct
                                    : ShiftComparison::Verdict::inconclusive;
    cmp.window = interval_from_json(j.at("window"));
    cmp.max_shift = j.at("max_shift").get<long long>();
    if (j.contains("shift")) cmp.shift = j.at("shift").get<long long>();
    if (j.contains("witness_degree")) cmp.witness_degree = j.at("witness_degree").get<Degree>();
    if (j.contains("witness_ranks"))
        cmp.witness_ranks = {j.at("witness_ranks")[0].get<long long>(),
                             j.at("witness_ranks")[1].get<long long>()};
    if (j.contains("reason")) cmp.reason = j.at("reason").get<std::string>();
    return cmp;
}

inline json to_json(const UstilovskyReport& rep) {
    return json{{"first", to_json(rep.first)},
                {"second", to_json(rep.second)},
                {"comparison", to_json(rep.comparison)},
                {"caveat", rep.caveat}};
}

inline UstilovskyReport ustilovsky_from_json(const json& j) {
    UstilovskyReport rep;
    rep.first = invariant_report_from_json(j.at("first"));
    rep.second = invariant_report_from_json(j.at("second"));
    rep.comparison = comparison_from_json(j.at("comparison"));
    rep.caveat = j.at("caveat").get<std::string>();
    return rep;
}

inline json to_json(const CheckedInequality& ineq) {
    return json{{"description", ineq.description},
                {"lhs", to_json(ineq.lhs)},
                {"rhs", to_json(ineq.rhs)},
                {"strict", ineq.strict},
                {"holds", ineq.holds}};
}

inline CheckedInequality inequality_from_json(const json& j) {
    return CheckedInequality{j.at("description").get<std::string>(),
                             rational_from_json(j.at("lhs")), rational_from_json(j.at("rhs")),
                             j.at("strict").get<bool>(), j.at("holds").get<bool>()};
}

inline json to_json(const EkelandLasryCertificate& cert) {
    json actions = json::array();
    for (const auto& a : cert.generator_actions) actions.push_back(to_json(a));
    json audit = json::array();
    for (const auto& i : cert.audit) audit.push_back(to_json(i));
    return json{{"n", cert.n},
                {"pinching_ok", cert.pinching_ok},
                {"window_lo", to_json(cert.window_lo)},
                {"window_hi", to_json(cert.window_hi)},
                {"chosen_t", to_json(cert.chosen_t)},
                {"generator_actions", std::move(actions)},
                {"min_period_bound", to_json(cert.min_period_bound)},
                {"distinct_count", cert.distinct_count},
                {"audit", std::move(audit)}};
}

inline EkelandLasryCertificate certificate_from_json(const json& j) {
    EkelandLasryCertificate cert;
    cert.n = j.at("n").get<size_t>();
    cert.pinching_ok = j.at("pinching_ok").get<bool>();
    cert.window_lo = action_from_json(j.at("window_lo"));
    cert.window_hi = action_from_json(j.at("window_hi"));
    cert.chosen_t = action_from_json(j.at("chosen_t"));
    for (const auto& a : j.at("generator_actions"))
        cert.generator_actions.push_back(action_from_json(a));
    cert.min_period_bound = action_from_json(j.at("min_period_bound"));
    cert.distinct_count = j.at("distinct_count").get<long long>();
    for (const auto& i : j.at("audit")) cert.audit.push_back(inequality_from_json(i));
    return cert;
}

inline json to_json(const BaseManifoldData& base) {
    return json{{"label", base.label}, {"betti", base.betti},
                {"morse_indices", base.morse_indices}};
}

inline BaseManifoldData base_from_json(const json& j) {
    BaseManifoldData base;
    base.label = j.at("label").get<std::string>();
    base.betti = j.at("betti").get<std::vector<long long>>();
    base.morse_indices = j.at("morse_indices").get<std::vector<int>>();
    return base;
}

inline json to_json(const BundleHypothesisReport& rep) {
    return json{{"pinching_ok", rep.pinching_ok},
                {"lacunary_ok", rep.lacunary_ok},
                {"min_period_ok", rep.min_period_ok},
                {"filling_asserted", rep.filling_asserted},
                {"lower_bound", rep.lower_bound},
                {"failures", rep.failures}};
}

inline BundleHypothesisReport bundle_report_from_json(const json& j) {
    BundleHypothesisReport rep;
    rep.pinching_ok = j.at("pinching_ok").get<bool>();
    rep.lacunary_ok = j.at("lacunary_ok").get<bool>();
    rep.min_period_ok = j.at("min_period_ok").get<bool>();
    rep.filling_asserted = j.at("filling_asserted").get<bool>();
    rep.lower_bound = j.at("lower_bound").get<long long>();
    rep.failures = j.at("failures").get<std::vector<std::string>>();
    return rep;
}

// Top-level CLI envelope: {"schema_version": 1, "kind": ..., "payload": ...}.
inline json envelope(const std::string& kind, json payload) {
    return json{{"schema_version", schema_version},
                {"kind", kind},
                {"payload", std::move(payload)}};
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace reebhom
