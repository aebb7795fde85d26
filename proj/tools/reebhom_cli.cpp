// reebhom: exact computation of the positive S1-equivariant symplectic
// homology of a few contact-manifold families from their closed Reeb
// orbits, plus the pinching certificates that turn ranks into lower bounds
// on orbit counts. All arithmetic is exact rational; JSON output is
// canonical and byte-stable.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reebhom/json_io.hpp"
#include "reebhom/tower.hpp"

using namespace reebhom;

namespace {

struct OutputOptions {
    std::string format = "table";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--output", out.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", out.out_path, "write the report to this file instead of stdout");
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) fail(errc::parse_error, "can not open " + out.out_path);
    f << text;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) fail(errc::parse_error, "empty rational list");
    return out;
}

std::string action_text(const Action& a) {
    return to_string(a.value) + (a.unit == ActionUnit::pi_multiple ? "*pi" : "");
}

std::string module_table(const GradedRankModule& m) {
    std::ostringstream os;
    os << "  degree window: ";
    if (m.degree_window.empty())
        os << "(empty)\n";
    else
        os << "[" << m.degree_window.lo << ", " << m.degree_window.hi << "]\n";
    os << "  action cutoff: " << action_text(m.action_cutoff) << "\n";
    os << "  convention:    " << convention_name(m.convention) << "\n";
    os << "  total rank:    " << rank_lower_bound(m) << "\n";
    os << "  degree  rank\n";
    for (const auto& [d, r] : m.ranks) os << "  " << d << "\t" << r << "\n";
    return os.str();
}

std::string invariant_table(const InvariantReport& rep) {
    std::ostringstream os;
    os << "invariant of " << rep.source << "\n";
    os << "  parity:        " << parity_name(rep.parity) << "\n";
    os << "  lacunarity ok: " << (rep.lacunarity_ok ? "yes" : "no") << "\n";
    os << module_table(rep.module);
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string comparison_table(const ShiftComparison& cmp) {
    std::ostringstream os;
    os << "verdict: " << verdict_name(cmp.verdict);
    if (cmp.shift) os << "(" << *cmp.shift << ")";
    os << "\n";
    if (cmp.witness_degree)
        os << "  witness degree " << *cmp.witness_degree << ": ranks "
           << cmp.witness_ranks->first << " vs " << cmp.witness_ranks->second << "\n";
    if (!cmp.reason.empty()) os << "  reason: " << cmp.reason << "\n";
    if (!cmp.window.empty())
        os << "  window: [" << cmp.window.lo << ", " << cmp.window.hi << "]\n";
    os << "  max shift tested: " << cmp.max_shift << "\n";
    return os.str();
}

Convention parse_convention(const std::string& name) {
    if (name == "minus") return Convention::minus_cz;
    if (name == "plus") return Convention::plus_cz;
    fail(errc::parse_error, "unknown convention " + name);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"positive S1-equivariant symplectic homology from Reeb orbit data"};
    app.require_subcommand(1);

    // ---- brieskorn -------------------------------------------------------
    struct {
        long long p = 7, m = 1;
        std::string eps, cutoff, convention = "minus";
        bool spectrum = false;
        OutputOptions out;
    } bk;
    auto* cmd_bk = app.add_subcommand(
        "brieskorn", "invariant of the Brieskorn sphere Sigma(p,2,...,2)");
    cmd_bk->add_option("--p", bk.p, "exponent p >= 2")->required();
    cmd_bk->add_option("--m", bk.m, "half-rank m (sphere dimension 4m+1)")->required();
    cmd_bk->add_option("--eps", bk.eps, "comma list of m perturbations in (0,1)")->required();
    cmd_bk->add_option("--cutoff", bk.cutoff, "action cutoff as a multiple of pi")->required();
    cmd_bk->add_option("--convention", bk.convention, "grading: minus or plus");
    cmd_bk->add_flag("--spectrum", bk.spectrum, "include the orbit spectrum in the output");
    add_output_options(cmd_bk, bk.out);

    // ---- ellipsoid -------------------------------------------------------
    struct {
        std::string a, rsq = "1", cutoff, convention = "minus";
        bool spectrum = false;
        OutputOptions out;
    } el;
    auto* cmd_el = app.add_subcommand("ellipsoid", "invariant of an ellipsoid boundary");
    cmd_el->add_option("--a", el.a, "comma list of strictly increasing axes")->required();
    cmd_el->add_option("--rsq", el.rsq, "squared radius (default 1)");
    cmd_el->add_option("--cutoff", el.cutoff, "action cutoff as a multiple of pi")->required();
    cmd_el->add_option("--convention", el.convention, "grading: minus or plus");
    cmd_el->add_flag("--spectrum", el.spectrum, "include the orbit spectrum in the output");
    add_output_options(cmd_el, el.out);

    // ---- bundle ----------------------------------------------------------
    struct {
        std::string catalog_name, rsq = "1", cutoff, r1sq, r2sq;
        long long n = 2;
        bool min_period_ok = false, filling_asserted = false;
        OutputOptions out;
    } bu;
    auto* cmd_bu = app.add_subcommand(
        "bundle", "orbit counts for circle bundles in negative line bundles");
    cmd_bu->add_option("--catalog", bu.catalog_name, "base catalog: cp or grassmannian")
        ->required();
    cmd_bu->add_option("--n", bu.n, "catalog parameter")->required();
    cmd_bu->add_option("--rsq", bu.rsq, "squared fiber radius for the spectrum");
    cmd_bu->add_option("--cutoff", bu.cutoff, "plain action cutoff for the spectrum");
    cmd_bu->add_option("--r1sq", bu.r1sq, "inner pinching radius squared");
    cmd_bu->add_option("--r2sq", bu.r2sq, "outer pinching radius squared");
    cmd_bu->add_flag("--min-period-ok", bu.min_period_ok,
                     "assert the minimal period bound r1^2");
    cmd_bu->add_flag("--filling-asserted", bu.filling_asserted,
                     "assert the Liouville filling of the inner bundle");
    add_output_options(cmd_bu, bu.out);

    // ---- tower -----------------------------------------------------------
    struct {
        long long mu = 0, k = 1, truncation = 0;
        bool bad = false;
        OutputOptions out;
    } tw;
    auto* cmd_tw = app.add_subcommand("tower", "homology of one truncated orbit tower");
    cmd_tw->add_option("--mu", tw.mu, "Conley-Zehnder index of the orbit")->required();
    cmd_tw->add_option("--k", tw.k, "covering multiplicity")->required();
    cmd_tw->add_option("--truncation", tw.truncation, "u-power truncation N")->required();
    cmd_tw->add_flag("--bad", tw.bad, "treat the orbit as bad (default good)");
    add_output_options(cmd_tw, tw.out);

    // ---- distinguish -----------------------------------------------------
    struct {
        long long p1 = 7, p2 = 9, m = 1, max_shift = 40;
        std::string eps, cutoff, convention = "minus";
        OutputOptions out;
    } di;
    auto* cmd_di = app.add_subcommand(
        "distinguish", "compare two Brieskorn invariants up to even shift");
    cmd_di->add_option("--p1", di.p1)->required();
    cmd_di->add_option("--p2", di.p2)->required();
    cmd_di->add_option("--m", di.m)->required();
    cmd_di->add_option("--eps", di.eps, "comma list of m perturbations")->required();
    cmd_di->add_option("--cutoff", di.cutoff, "action cutoff as a multiple of pi")->required();
    cmd_di->add_option("--max-shift", di.max_shift, "largest even shift tested");
    cmd_di->add_option("--convention", di.convention, "grading: minus or plus");
    add_output_options(cmd_di, di.out);

    // ---- certify-el ------------------------------------------------------
    struct {
        std::string a, r1sq, r2sq;
        OutputOptions out;
    } ce;
    auto* cmd_ce = app.add_subcommand(
        "certify-el", "pinched-hypersurface certificate for n distinct orbits");
    cmd_ce->add_option("--a", ce.a, "comma list of strictly increasing axes")->required();
    cmd_ce->add_option("--r1sq", ce.r1sq, "inner radius squared")->required();
    cmd_ce->add_option("--r2sq", ce.r2sq, "outer radius squared")->required();
    add_output_options(cmd_ce, ce.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // --help is a success; any parse failure is usage
    }

    const OutputOptions* active_out = nullptr;
    try {
        if (cmd_bk->parsed()) {
            active_out = &bk.out;
            BrieskornParams params{bk.p, bk.m, parse_rational_list(bk.eps)};
            auto spectrum = enumerate_orbits(params, pi_action(parse_rational(bk.cutoff)));
            auto report = assemble_invariant(spectrum, parse_convention(bk.convention));
            report.notes.push_back(sphere_note(params));
            if (bk.out.format == "json") {
                json payload = to_json(report);
                if (bk.spectrum) payload["spectrum"] = to_json(spectrum);
                emit(bk.out, dump_canonical(envelope("invariant_report", payload)));
            } else {
                emit(bk.out, invariant_table(report));
            }
        } else if (cmd_el->parsed()) {
            active_out = &el.out;
            EllipsoidParams params{parse_rational_list(el.a), parse_rational(el.rsq)};
            auto spectrum = enumerate_orbits(params, pi_action(parse_rational(el.cutoff)));
            auto report = assemble_invariant(spectrum, parse_convention(el.convention));
            if (el.out.format == "json") {
                json payload = to_json(report);
                if (el.spectrum) payload["spectrum"] = to_json(spectrum);
                emit(el.out, dump_canonical(envelope("invariant_report", payload)));
            } else {
                emit(el.out, invariant_table(report));
            }
        } else if (cmd_bu->parsed()) {
            active_out = &bu.out;
            auto base = catalog(bu.catalog_name, bu.n);
            json payload{{"base", to_json(base)},
                         {"orbit_lower_bound", orbit_lower_bound(base)}};
            std::ostringstream table;
            table << "base " << base.label << ": orbit count lower bound "
                  << orbit_lower_bound(base) << "\n";
            if (!bu.cutoff.empty()) {
                auto spectrum = circle_bundle_spectrum(base, parse_rational(bu.rsq),
                                                       plain_action(parse_rational(bu.cutoff)));
                payload["spectrum"] = to_json(spectrum);
                table << "spectrum below " << to_string(spectrum.action_cutoff.value) << ": "
                      << spectrum.records.size() << " records\n";
            }
            if (!bu.r1sq.empty() || !bu.r2sq.empty()) {
                if (bu.r1sq.empty() || bu.r2sq.empty())
                    fail(errc::parse_error, "--r1sq and --r2sq must be given together");
                auto rep = check_bundle_hypotheses(base, parse_rational(bu.r1sq),
                                                   parse_rational(bu.r2sq), bu.min_period_ok,
                                                   bu.filling_asserted);
                payload["hypotheses"] = to_json(rep);
                table << "hypotheses: pinching " << (rep.pinching_ok ? "ok" : "FAILED")
                      << ", lacunary " << (rep.lacunary_ok ? "ok" : "FAILED")
                      << ", min period " << (rep.min_period_ok ? "ok" : "not asserted")
                      << ", filling " << (rep.filling_asserted ? "ok" : "not asserted")
                      << " -> lower bound " << rep.lower_bound << "\n";
                for (const auto& f : rep.failures) table << "  failure: " << f << "\n";
            }
            if (bu.out.format == "json")
                emit(bu.out, dump_canonical(envelope("bundle_report", payload)));
            else
                emit(bu.out, table.str());
        } else if (cmd_tw->parsed()) {
            active_out = &tw.out;
            auto tower = build_tower(tw.mu, tw.k, !tw.bad, tw.truncation);
            auto hom = tower_homology(tower);
            if (tw.out.format == "json") {
                json ranks = json::array();
                for (const auto& [d, r] : hom)
                    ranks.push_back(json{{"degree", d}, {"rank", r}});
                json payload{{"mu", tw.mu},
                             {"multiplicity", tw.k},
                             {"good", !tw.bad},
                             {"truncation", tw.truncation},
                             {"generators", tower.generators.size()},
                             {"verified", verify_complex(tower.complex)},
                             {"homology", std::move(ranks)}};
                emit(tw.out, dump_canonical(envelope("tower_report", payload)));
            } else {
                std::ostringstream os;
                os << (tw.bad ? "bad" : "good") << " tower mu=" << tw.mu << " k=" << tw.k
                   << " N=" << tw.truncation << ": " << tower.generators.size()
                   << " generators\n";
                if (hom.empty()) os << "  homology: 0\n";
                for (const auto& [d, r] : hom)
                    os << "  H_" << d << " rank " << r << "\n";
                emit(tw.out, os.str());
            }
        } else if (cmd_di->parsed()) {
            active_out = &di.out;
            auto report = ustilovsky_report(di.p1, di.p2, di.m, parse_rational_list(di.eps),
                                            pi_action(parse_rational(di.cutoff)), di.max_shift,
                                            parse_convention(di.convention));
            if (di.out.format == "json") {
                emit(di.out, dump_canonical(envelope("distinguish_report", to_json(report))));
            } else {
                std::ostringstream os;
                os << "p=" << di.p1 << " vs p=" << di.p2 << "\n"
                   << comparison_table(report.comparison) << "first:  total rank "
                   << rank_lower_bound(report.first.module) << "\nsecond: total rank "
                   << rank_lower_bound(report.second.module) << "\ncaveat: " << report.caveat
                   << "\n";
                emit(di.out, os.str());
            }
        } else if (cmd_ce->parsed()) {
            active_out = &ce.out;
            auto cert = ekeland_lasry_certificate(parse_rational_list(ce.a),
                                                  parse_rational(ce.r1sq),
                                                  parse_rational(ce.r2sq));
            if (ce.out.format == "json") {
                emit(ce.out, dump_canonical(envelope("ekeland_lasry_certificate",
                                                     to_json(cert))));
            } else {
                std::ostringstream os;
                os << "certificate for n=" << cert.n << " distinct orbits\n"
                   << "  window: (" << action_text(cert.window_lo) << ", "
                   << action_text(cert.window_hi) << ")\n"
                   << "  chosen T: " << action_text(cert.chosen_t) << "\n"
                   << "  minimal period bound: " << action_text(cert.min_period_bound) << "\n";
                for (const auto& a : cert.generator_actions)
                    os << "  generator action " << action_text(a) << "\n";
                emit(ce.out, os.str());
            }
        }
    } catch (const reeb_error& e) {
        const OutputOptions fallback;
        const OutputOptions& out = active_out ? *active_out : fallback;
        if (is_hypothesis_failure(e.code())) {
            if (out.format == "json") {
                json payload{{"error", errc_name(e.code())}, {"detail", e.what()}};
                emit(out, dump_canonical(envelope("hypothesis_failure", payload)));
            } else {
                emit(out, std::string("hypothesis failure: ") + e.what() + "\n");
            }
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
