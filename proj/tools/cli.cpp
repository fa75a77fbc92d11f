#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "ycluster/errors.hpp"
#include "ycluster/mutclass.hpp"
#include "ycluster/quiver.hpp"
#include "ycluster/seed_engine.hpp"
#include "ycluster/ysystem_verify.hpp"

namespace ycluster::cli {

namespace {

const std::vector<std::string> kChecks = {"quiver-period", "tropical", "y-relations", "t-relations",
                                          "periodicity",   "dilog",    "coxeter",     "all"};

// Which semifield a check consumes; empty when it runs on its own data.
std::string needed_semifield(const std::string& check) {
    if (check == "y-relations" || check == "dilog") return "numeric";
    if (check == "t-relations") return "symbolic";
    return "";
}

// Writes via a temporary file and rename so readers never see a partial report.
void emit(const RunConfig& cfg, const nlohmann::json& j, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    const std::string tmp = cfg.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw DomainError("cannot write " + tmp);
        f << text;
    }
    std::filesystem::rename(tmp, cfg.out);
}

int run_length(const RunConfig& cfg) {
    const auto& d = cfg.family;
    return cfg.periods * d.y_period() + d.half_window() + d.n;
}

struct NumericPair {
    Trajectory plus, minus;
};

NumericPair numeric_runs(const RunConfig& cfg) {
    std::mt19937_64 streams(cfg.rng_seed);
    const std::uint64_t a = streams(), b = streams();
    const LabeledQuiver q = build_quiver(cfg.family);
    const MutationSchedule s = make_schedule(cfg.family);
    const int len = run_length(cfg);
    return {run(numeric_seed(q, a), s, len), run(numeric_seed(q, b), s, len)};
}

Trajectory single_run(const RunConfig& cfg, const std::string& semifield, int len) {
    const LabeledQuiver q = build_quiver(cfg.family);
    const MutationSchedule s = make_schedule(cfg.family);
    if (semifield == "tropical") return run(tropical_seed(q), s, len);
    if (semifield == "symbolic") return run(symbolic_seed(q, cfg.principal), s, len);
    std::mt19937_64 streams(cfg.rng_seed);
    return run(numeric_seed(q, streams()), s, len);
}

VerificationReport merged(VerificationReport a, const VerificationReport& b) {
    a.pass = a.pass && b.pass;
    a.residual = std::max(a.residual, b.residual);
    for (const auto& w : b.witnesses) a.witnesses.push_back(w);
    a.details = {{"plus_part", a.details}, {"minus_part", b.details}};
    a.elapsed_ms += b.elapsed_ms;
    return a;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    emit(cfg, to_json(build_quiver(cfg.family)), out);
    return 0;
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
    Trajectory t = single_run(cfg, cfg.semifield, cfg.periods * cfg.family.y_period());
    nlohmann::json j = to_json(t);
    if (cfg.semifield == "numeric") j["rng_seed"] = cfg.rng_seed;
    emit(cfg, j, out);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> checks;
    if (cfg.check == "all")
        checks = {"quiver-period", "tropical", "y-relations", "t-relations", "periodicity", "dilog", "coxeter"};
    else
        checks = {cfg.check};

    std::string semifield = cfg.semifield;
    if (cfg.check != "all") {
        std::string need = needed_semifield(cfg.check);
        if (!need.empty()) {
            if (cfg.semifield_given && cfg.semifield != need)
                throw DomainError("check " + cfg.check + " needs --semifield " + need);
            semifield = need;
        }
    }

    nlohmann::json reports = nlohmann::json::array();
    nlohmann::json skipped = nlohmann::json::array();
    bool all_pass = true;
    auto record = [&](const VerificationReport& r) {
        all_pass = all_pass && r.pass;
        reports.push_back(r.to_json());
    };

    std::optional<NumericPair> numeric;
    std::optional<Trajectory> other;
    auto numeric_data = [&]() -> NumericPair& {
        if (!numeric) numeric = numeric_runs(cfg);
        return *numeric;
    };
    auto other_data = [&]() -> Trajectory& {
        if (!other) other = single_run(cfg, semifield, run_length(cfg));
        return *other;
    };

    for (const auto& c : checks) {
        std::string need = needed_semifield(c);
        if (!need.empty() && need != semifield) {
            err << "warning: skipping " << c << " (needs the " << need << " semifield)\n";
            skipped.push_back(c);
            continue;
        }
        if (c == "quiver-period") {
            record(check_quiver_period(cfg.family));
            record(check_relation_templates(cfg.family));
        } else if (c == "tropical") {
            record(tropical_report(cfg.family));
        } else if (c == "y-relations") {
            auto& p = numeric_data();
            record(merged(check_y_relations(p.plus, cfg.tol_rel), check_y_relations(p.minus, cfg.tol_rel)));
        } else if (c == "t-relations") {
            if (cfg.principal) throw DomainError("t-relations need trivial coefficients; drop --principal");
            record(check_t_relations(other_data()));
        } else if (c == "periodicity") {
            if (semifield == "numeric") {
                auto& p = numeric_data();
                record(merged(check_periodicity(p.plus, cfg.tol_rel), check_periodicity(p.minus, cfg.tol_rel)));
            } else {
                record(check_periodicity(other_data(), cfg.tol_rel));
            }
        } else if (c == "dilog") {
            auto& p = numeric_data();
            record(dilog_sums(p.plus, p.minus, cfg.tol_dilog).report);
        } else if (c == "coxeter") {
            record(coxeter_crosscheck(cfg.family));
        }
    }

    nlohmann::json j = {{"family", to_string(cfg.family.family)},
                        {"m", cfg.family.m},
                        {"n", cfg.family.n},
                        {"semifield", semifield},
                        {"rng_seed", cfg.rng_seed},
                        {"pass", all_pass},
                        {"reports", reports},
                        {"skipped", skipped}};
    emit(cfg, j, out);
    return all_pass ? 0 : 1;
}

int cmd_mutclass(const RunConfig& cfg, std::ostream& out) {
    FamilyDescriptor d = cfg.family;
    std::optional<ReductionScript> script;
    if (!cfg.script.empty()) {
        std::ifstream f(cfg.script);
        if (!f) throw DomainError("cannot read script " + cfg.script);
        script = script_from_json(nlohmann::json::parse(f));
        // without explicit family options the script names its own source
        if (!cfg.family_given) d = script->source;
    }
    nlohmann::json j = {{"family", to_string(d.family)}, {"m", d.m}, {"n", d.n}};
    bool pass;
    if (script) {
        const ReductionScript& s = *script;
        if (!(s.source == d)) throw DomainError("script belongs to " + to_string(s.source));
        auto r = verify_script(s);
        pass = r.pass;
        j["report"] = r.to_json();
    } else {
        const LabeledQuiver q = build_quiver(d);
        ClassSearchResult res = cfg.guided ? guided_reduction(q, cfg.node_bound) : find_dynkin(q, cfg.node_bound);
        const DynkinType want = expected_dynkin(d);
        bool replay_ok = false;
        if (res.found()) {
            auto t = dynkin_type(replay(q, res.path));
            replay_ok = t && *t == *res.type;
        }
        pass = res.found() && *res.type == want && replay_ok;
        j["search"] = res.to_json();
        j["mode"] = cfg.guided ? "guided" : "bfs";
        j["node_bound"] = cfg.node_bound;
        j["expected"] = to_string(want);
        j["replay_ok"] = replay_ok;
        if (res.found()) j["script"] = to_json(make_script(d, res.path, *res.type));
    }
    j["pass"] = pass;
    emit(cfg, j, out);
    return pass ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cluster-algebra engine for sine-Gordon Y/T-systems"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string family = "sg";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", family, "sg or rsg")->check(CLI::IsMember({"sg", "rsg"}));
        sub->add_option("--m", cfg.family.m, "first continued-fraction parameter (>= 1)");
        sub->add_option("--n", cfg.family.n, "second continued-fraction parameter (>= 4)");
        sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
    };
    auto semifield_opts = [&](CLI::App* sub) {
        sub->add_option("--semifield", cfg.semifield, "tropical, numeric or symbolic")
            ->check(CLI::IsMember({"tropical", "numeric", "symbolic"}));
        sub->add_flag("--principal", cfg.principal, "symbolic runs with principal coefficients");
        sub->add_option("--periods", cfg.periods, "number of Y-system periods")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.rng_seed, "RNG seed for numeric initial values");
    };

    auto* build = app.add_subcommand("build", "emit the quiver as JSON");
    common(build);
    auto* runc = app.add_subcommand("run", "emit a trajectory as JSON");
    common(runc);
    semifield_opts(runc);
    auto* verify = app.add_subcommand("verify", "run verification checks");
    common(verify);
    semifield_opts(verify);
    verify->add_option("--check", cfg.check, "check selector")->check(CLI::IsMember(kChecks));
    verify->add_option("--tol-rel", cfg.tol_rel, "relative tolerance for numeric relations");
    auto* mut = app.add_subcommand("mutclass", "search for a Dynkin representative");
    common(mut);
    mut->add_option("--node-bound", cfg.node_bound, "cap on canonical forms explored")->check(CLI::PositiveNumber);
    mut->add_option("--script", cfg.script, "replay a reduction script instead of searching");
    mut->add_flag("--guided", cfg.guided, "best-first search by edge count");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        cfg.family.family = parse_family(family);
        cfg.family.validate();
        for (auto* sub : {build, runc, verify, mut})
            if (sub->parsed() && (sub->count("--family") || sub->count("--m") || sub->count("--n"))) cfg.family_given = true;
        for (auto* sub : {runc, verify})
            if (sub->parsed() && sub->count("--semifield")) cfg.semifield_given = true;
        if (const char* env = std::getenv("YCLUSTER_SEED")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0') throw DomainError("YCLUSTER_SEED must be an unsigned integer");
            cfg.rng_seed = v;
        }
        if (build->parsed()) return cmd_build(cfg, out);
        if (runc->parsed()) return cmd_run(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        return cmd_mutclass(cfg, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // engine assertion (adjacency, division, ...) means the checks failed
        err << "verification error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ycluster::cli
