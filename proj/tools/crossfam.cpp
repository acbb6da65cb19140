// crossfam: exact computations for L-initial cross-intersecting set systems.
//
//   compute  closed-form lambda_1 / lambda_2 / M for an instance
//   search   exhaustive maximum over ID tuples, extremal classification
//   scan     full g / f value tables with argmax
//   verify   lemma suites over one instance or a parameter sweep
//   set      one-shot lex/partner primitives
//
// Exit codes: 0 success / all checks pass, 1 mathematical discrepancy or
// check failure, 2 usage or validation error.  Thread count comes from
// CROSSFAM_THREADS (default: machine parallelism).

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossfam/search.hpp"
#include "crossfam/verify.hpp"

using nlohmann::json;
using namespace crossfam;

namespace {

std::vector<int> parse_kvector(const std::string& text) {
    std::vector<int> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ks.push_back(std::stoi(item));
    }
    std::vector<int> sorted = ks;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted != ks)
        std::cerr << "warning: k-vector reordered to nonincreasing: " << [&] {
            std::string s;
            for (size_t i = 0; i < sorted.size(); ++i) s += (i ? "," : "") + std::to_string(sorted[i]);
            return s;
        }() << "\n";
    return sorted;
}

json params_json(const Params& p) {
    return json{{"n", p.n}, {"t", p.t()}, {"k", p.ks}};
}

json ids_json(const std::vector<KSet>& ids) {
    json arr = json::array();
    for (const KSet& id : ids) arr.push_back(id.elems);
    return arr;
}

std::string ids_text(const std::vector<KSet>& ids) {
    std::string out = "(";
    for (size_t i = 0; i < ids.size(); ++i) out += (i ? " | " : "") + to_string(ids[i]);
    return out + ")";
}

json verdict_json(const CheckVerdict& v) {
    json j{{"name", v.name},
           {"params", v.params},
           {"status", v.status == CheckStatus::Pass     ? "pass"
                      : v.status == CheckStatus::Fail   ? "fail"
                                                        : "skipped"},
           {"checked", v.checked},
           {"skipped", v.skipped}};
    if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
    return j;
}

std::string classification_text(ExtremalClass c) {
    switch (c) {
        case ExtremalClass::C1Only: return "C1-only";
        case ExtremalClass::C2Only: return "C2-only";
        case ExtremalClass::Both: return "both";
        case ExtremalClass::Other: return "other";
    }
    return "?";
}

int cmd_compute(const Params& params, bool as_json) {
    Regime regime = classify(params);
    json report{{"params", params_json(params)}, {"regime", regime.str()}};
    std::ostringstream text;
    text << "regime: " << regime.str() << "\n";
    if (regime.is(Regime::Kind::Mixed) || regime.is(Regime::Kind::NonMixed)) {
        Objectives obj = m_formula(params);
        report["lambda1"] = obj.lambda1.str();
        report["lambda2"] = obj.lambda2.str();
        report["m_formula"] = obj.m.str();
        text << "lambda1 = " << obj.lambda1 << "\nlambda2 = " << obj.lambda2 << "\nM = " << obj.m
             << " (formula)\n";
        std::string argmax;
        if (obj.c1_attains) argmax += "C1";
        if (obj.c2_attains) argmax += argmax.empty() ? "C2" : ",C2";
        report["argmax_constructions"] = argmax;
        text << "argmax constructions: " << argmax << "\n";
        auto c1 = construction1(params).first;
        report["construction1_ids"] = ids_json(c1.ids);
        text << "construction1 ids: " << ids_text(c1.ids) << "\n";
        if (regime.is(Regime::Kind::Mixed)) {
            auto c2 = construction2(params).first;
            report["construction2_ids"] = ids_json(c2.ids);
            text << "construction2 ids: " << ids_text(c2.ids) << "\n";
        }
    } else {
        report["note"] = "no closed form for this regime; use search";
        text << "free pairs present or regime out of formula scope; use search\n";
    }
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int cmd_search(const Params& params, bool naive, bool list_extremal, bool as_json) {
    Regime regime = classify(params);
    SearchMode mode = (!naive && regime.is(Regime::Kind::Mixed)) ? SearchMode::Smart
                                                                 : SearchMode::Naive;
    auto t0 = std::chrono::steady_clock::now();
    SearchResult res = brute_force_M(params, mode);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json report{{"params", params_json(params)},
                {"regime", regime.str()},
                {"m_bruteforce", res.max_sum.str()},
                {"mode", mode == SearchMode::Smart ? "smart" : "naive"},
                {"timing", json{{"evaluated", res.evaluated}}}};
    bool discrepancy = false;
    std::ostringstream text;
    text << "regime: " << regime.str() << "\n";
    text << "M = " << res.max_sum << " (" << (mode == SearchMode::Smart ? "smart" : "naive")
         << " search, " << res.evaluated << " evaluations, " << secs << "s)\n";
    if (regime.is(Regime::Kind::Mixed) || regime.is(Regime::Kind::NonMixed)) {
        Objectives obj = m_formula(params);
        report["lambda1"] = obj.lambda1.str();
        report["lambda2"] = obj.lambda2.str();
        report["m_formula"] = obj.m.str();
        if (obj.m != res.max_sum) {
            discrepancy = true;
            text << "DISCREPANCY: formula gives " << obj.m << "\n";
        }
    }
    if (regime.is(Regime::Kind::Mixed)) {
        ExtremalClass cls = classify_extremal_set(params, res.extremal);
        report["classification"] = classification_text(cls);
        text << "extremal classification: " << classification_text(cls) << "\n";
        if (cls == ExtremalClass::Other) discrepancy = true;
    }
    if (list_extremal) {
        json arr = json::array();
        for (const auto& sys : res.extremal) {
            arr.push_back(ids_json(sys.ids));
            text << "extremal: " << ids_text(sys.ids) << "\n";
        }
        report["extremal_systems"] = arr;
    }
    report["discrepancy"] = discrepancy;
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text.str();
    return discrepancy ? 1 : 0;
}

int cmd_scan(const Params& params, const std::string& fn, const std::string& format,
             const std::string& out_path) {
    ScanTarget target = fn == "g" ? ScanTarget::G : ScanTarget::F;
    ScanResult res = scan(params, target);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("scan: cannot open " + out_path);
        out = &file;
    }
    if (format == "csv") {
        *out << "id,value\n";
        for (const auto& row : res.rows) *out << "\"" << to_string(row.id) << "\"," << row.value << "\n";
        *out << "\"argmax:";
        for (size_t i = 0; i < res.argmax.size(); ++i)
            *out << (i ? ";" : " ") << to_string(res.argmax[i]);
        *out << "\"," << res.max_value << "\n";
    } else {
        json rows = json::array();
        for (const auto& row : res.rows)
            rows.push_back(json{{"id", row.id.elems}, {"value", row.value.str()}});
        json j{{"params", params_json(params)},
               {"fn", fn},
               {"rows", rows},
               {"max", res.max_value.str()},
               {"argmax", ids_json(res.argmax)}};
        *out << j.dump(2) << "\n";
    }
    return 0;
}

unsigned parse_suites(const std::string& name) {
    if (name == "all") return SuiteAll;
    if (name == "parity") return SuiteParity;
    if (name == "unimodality") return SuiteUnimodality;
    if (name == "facts") return SuiteFacts;
    if (name == "theorem") return SuiteTheorem;
    throw CLI::ValidationError("--suite", "unknown suite " + name);
}

int cmd_verify(const std::string& suite_name, bool sweep, const std::string& kvec, int n,
               const std::string& ts_text, int kmax, int nmax, int ktmin, bool as_json) {
    unsigned suites = parse_suites(suite_name);
    SweepReport report;
    if (sweep) {
        SweepGrid grid;
        grid.ts.clear();
        std::stringstream ss(ts_text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) grid.ts.push_back(std::stoi(item));
        if (grid.ts.empty()) throw CLI::ValidationError("--t", "empty t list");
        grid.kmax = kmax;
        grid.nmax = nmax;
        grid.ktmin = ktmin;
        report = run_sweep(grid, suites);
    } else if (!kvec.empty()) {
        Params params(n, parse_kvector(kvec));
        if (suites & SuiteFacts) report.verdicts.push_back(check_fact_suite());
        if (suites & SuiteTheorem) report.verdicts.push_back(check_theorem(params));
        if (suites & SuiteParity) report.verdicts.push_back(check_parity_lemma(params));
        if (suites & SuiteUnimodality) {
            report.verdicts.push_back(check_unimodality_g(params));
            report.verdicts.push_back(check_prop_3_20(params));
            report.verdicts.push_back(check_unimodality_f(params));
        }
        for (const auto& v : report.verdicts) {
            if (v.status == CheckStatus::Pass) ++report.passes;
            if (v.status == CheckStatus::Fail) ++report.failures;
            if (v.status == CheckStatus::Skipped) ++report.skips;
        }
    } else if (suites == SuiteFacts) {
        report.verdicts.push_back(check_fact_suite());
        report.passes = report.verdicts[0].status == CheckStatus::Pass;
        report.failures = report.verdicts[0].status == CheckStatus::Fail;
    } else {
        throw CLI::ValidationError("verify", "give -n/-k, --sweep, or --suite facts");
    }
    if (as_json) {
        json checks = json::array();
        for (const auto& v : report.verdicts) checks.push_back(verdict_json(v));
        json j{{"checks", checks},
               {"passes", report.passes},
               {"failures", report.failures},
               {"skips", report.skips}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : report.verdicts) std::cout << v.str() << "\n";
        std::cout << report.passes << " pass, " << report.failures << " fail, " << report.skips
                  << " skipped\n";
    }
    return report.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for L-initial cross-intersecting set systems"};
    app.require_subcommand(1);

    std::string kvec, fn = "g", format = "csv", out_path, suite = "all", ts_text = "3,4";
    std::string set_arg, rank_arg;
    int n = 0, kmax = 5, nmax = 12, ktmin = 2, k = 0, target = 0;
    std::uint64_t cap = 1000000;
    bool as_json = false, naive = false, list_extremal = false, sweep = false;

    auto* compute = app.add_subcommand("compute", "closed-form lambda/M for an instance");
    compute->add_option("-n", n, "ground-set size")->required();
    compute->add_option("-k", kvec, "comma list of family sizes")->required();
    compute->add_flag("--json", as_json, "JSON report");

    auto* search_cmd = app.add_subcommand("search", "exhaustive maximum over ID tuples");
    search_cmd->add_option("-n", n, "ground-set size")->required();
    search_cmd->add_option("-k", kvec, "comma list of family sizes")->required();
    search_cmd->add_flag("--naive", naive, "force naive tuple enumeration");
    search_cmd->add_flag("--list-extremal", list_extremal, "print every extremal ID tuple");
    search_cmd->add_flag("--json", as_json, "JSON report");

    auto* scan_cmd = app.add_subcommand("scan", "value table of g or f");
    scan_cmd->add_option("-n", n, "ground-set size")->required();
    scan_cmd->add_option("-k", kvec, "comma list of family sizes")->required();
    scan_cmd->add_option("--fn", fn, "objective: g or f")->check(CLI::IsMember({"g", "f"}));
    scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "lemma suites");
    verify_cmd->add_option("--suite", suite, "all|parity|unimodality|facts|theorem");
    verify_cmd->add_option("-n", n, "ground-set size");
    verify_cmd->add_option("-k", kvec, "comma list of family sizes");
    verify_cmd->add_flag("--sweep", sweep, "run over a parameter grid");
    verify_cmd->add_option("--t", ts_text, "comma list of t values for the sweep");
    verify_cmd->add_option("--kmax", kmax, "max family size in the sweep");
    verify_cmd->add_option("--nmax", nmax, "max ground-set size in the sweep");
    verify_cmd->add_option("--ktmin", ktmin, "min k_t in the sweep");
    verify_cmd->add_flag("--json", as_json, "JSON report");

    auto* set_cmd = app.add_subcommand("set", "one-shot lex/partner primitives");
    set_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool needs_set) {
        sub->add_option("-n", n, "ground-set size")->required();
        if (needs_set) sub->add_option("set", set_arg, "comma list of elements")->required();
        return sub;
    };
    auto* op_rank = add_common(set_cmd->add_subcommand("rank", "position of a k-set"), true);
    op_rank->add_option("-k", k, "subset size")->required();
    auto* op_unrank = add_common(set_cmd->add_subcommand("unrank", "k-set at a position"), false);
    op_unrank->add_option("-k", k, "subset size")->required();
    op_unrank->add_option("-r", rank_arg, "1-based position")->required();
    add_common(set_cmd->add_subcommand("partner", "partner of a set"), true);
    auto* op_kp = add_common(set_cmd->add_subcommand("kpartner", "k-partner of a set"), true);
    op_kp->add_option("--target", target, "partner size")->required();
    auto* op_par = add_common(set_cmd->add_subcommand("parity", "target-size parity of a set"), true);
    op_par->add_option("--target", target, "parity size")->required();
    auto* op_mc = add_common(set_cmd->add_subcommand("maxcross", "largest cross-intersecting ID"), true);
    op_mc->add_option("--target", target, "family uniformity")->required();
    auto* op_mem = add_common(set_cmd->add_subcommand("members", "list an L-initial family"), true);
    op_mem->add_option("-k", k, "subset size")->required();
    op_mem->add_option("--cap", cap, "refuse families larger than this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(Params(n, parse_kvector(kvec)), as_json);
        if (search_cmd->parsed())
            return cmd_search(Params(n, parse_kvector(kvec)), naive, list_extremal, as_json);
        if (scan_cmd->parsed())
            return cmd_scan(Params(n, parse_kvector(kvec)), fn, format, out_path);
        if (verify_cmd->parsed())
            return cmd_verify(suite, sweep, kvec, n, ts_text, kmax, nmax, ktmin, as_json);
        if (set_cmd->parsed()) {
            CLI::App* op = set_cmd->get_subcommands().front();
            const std::string& name = op->get_name();
            if (name == "rank") {
                std::cout << rank(n, k, parse_kset(n, set_arg)) << "\n";
            } else if (name == "unrank") {
                std::cout << to_string(unrank(n, k, Count(rank_arg))) << "\n";
            } else if (name == "partner") {
                std::cout << to_string(partner(n, parse_kset(n, set_arg))) << "\n";
            } else if (name == "kpartner") {
                auto res = kpartner(n, parse_kset(n, set_arg), target);
                if (!res) {
                    std::cerr << "no " << target << "-set precedes the partner (initial segment)\n";
                    return 1;
                }
                std::cout << to_string(res->value) << "\n";
            } else if (name == "parity") {
                auto res = parity_of(n, parse_kset(n, set_arg), target);
                std::cout << (res ? to_string(*res) : "none") << "\n";
            } else if (name == "maxcross") {
                auto res = max_cross_id(n, parse_kset(n, set_arg), target);
                if (!res) {
                    std::cerr << "no nonempty " << target << "-uniform family is compatible\n";
                    return 1;
                }
                std::cout << to_string(*res) << "\n";
            } else if (name == "members") {
                for (const KSet& f : members(n, k, parse_kset(n, set_arg), cap))
                    std::cout << to_string(f) << "\n";
            }
            return 0;
        }
    } catch (const size_guard_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
