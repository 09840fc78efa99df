#include "dmcv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmcv/bench.hpp"
#include "dmcv/candidates.hpp"
#include "dmcv/cuts.hpp"
#include "dmcv/errors.hpp"
#include "dmcv/filters.hpp"
#include "dmcv/network_io.hpp"
#include "dmcv/reliability.hpp"

namespace dmcv {
namespace {

using json = nlohmann::json;

enum class Format { kText, kJson };

struct Invocation {
    std::string input;
    int d = -1;
    std::string alg = "dmcv";
    std::string method = "ie";
    std::string format = "text";
    // bench
    std::vector<int> nodes{8, 10, 12};
    int reps = 10;
    std::uint64_t seed = 7;
    double timeout_secs = 10.0;
    std::string out_path;
    std::vector<std::string> algs{"dmcv", "unsat", "c2c"};
};

// Thrown for anything that should end in exit status 2.
struct Disagreement {
    std::string message;
};

std::string arcs_str(const std::vector<ArcId>& arcs) {
    std::string s = "{";
    for (std::size_t i = 0; i < arcs.size(); ++i) s += (i ? ",a_" : "a_") + std::to_string(arcs[i]);
    return s + "}";
}

json vec_json(const StateVector& x) { return json(std::vector<int>(x.values().begin(), x.values().end())); }

json counters_json(const FilterCounters& c) {
    return {{"seen", c.seen},           {"below_demand", c.below_demand},
            {"theorem1", c.theorem1},   {"lemma3", c.lemma3},
            {"unsat_failed", c.unsat_failed}, {"duplicate", c.duplicate},
            {"dominated", c.dominated}, {"accepted", c.accepted},
            {"accepted_lemma2", c.accepted_lemma2}, {"accepted_scan", c.accepted_scan}};
}

std::string counters_text(const FilterCounters& c) {
    std::ostringstream s;
    s << "seen " << c.seen << ", accepted " << c.accepted << ", below_demand " << c.below_demand;
    if (c.theorem1) s << ", theorem1 " << c.theorem1;
    if (c.lemma3) s << ", lemma3 " << c.lemma3;
    if (c.unsat_failed) s << ", unsat_failed " << c.unsat_failed;
    if (c.duplicate) s << ", duplicate " << c.duplicate;
    if (c.dominated) s << ", dominated " << c.dominated;
    if (c.accepted_lemma2 || c.accepted_scan)
        s << " (lemma2 " << c.accepted_lemma2 << ", scan " << c.accepted_scan << ")";
    return s.str();
}

// Distinct vectors, descending lexicographic, so every algorithm prints the
// same listing.
std::vector<StateVector> listing(const FilterOutcome& outcome) {
    auto v = outcome.vectors();
    std::reverse(v.begin(), v.end());
    return v;
}

void emit(std::ostream& out, Format fmt, const json& doc, const std::string& text) {
    if (fmt == Format::kJson)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

json envelope(const std::string& command, const std::string& input, json result) {
    return {{"command", command}, {"input", input}, {"result", std::move(result)}};
}

void cmd_mcs(const Invocation& inv, Format fmt, std::ostream& out) {
    const auto doc = load_network(inv.input);
    const auto mcs = enumerate_mcs(doc.network);
    json result = json::array();
    std::ostringstream text;
    for (const MinCut& mc : mcs) {
        result.push_back({{"index", mc.index}, {"arcs", mc.arcs}, {"mcv", mc.mcv.members()}});
        text << "C_" << mc.index << " = " << arcs_str(mc.arcs) << "  V(C_" << mc.index
             << ") = " << mc.mcv.str() << "\n";
    }
    emit(out, fmt, envelope("mcs", inv.input, std::move(result)), text.str());
}

void cmd_candidates(const Invocation& inv, Format fmt, std::ostream& out) {
    const auto doc = load_network(inv.input);
    const auto mcs = enumerate_mcs(doc.network);
    const CandidateSet set = build_candidate_set(doc.network, mcs, inv.d);
    json result = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < mcs.size(); ++i) {
        json list = json::array();
        text << "C_" << mcs[i].index << " = " << arcs_str(mcs[i].arcs) << ": "
             << set.per_mc[i].size() << " candidates\n";
        for (const Candidate& c : set.per_mc[i]) {
            list.push_back(vec_json(c.vector));
            text << "  X_{" << c.mc_index << "," << c.ordinal << "} = " << c.vector.str() << "\n";
        }
        result.push_back({{"mc", mcs[i].index}, {"arcs", mcs[i].arcs}, {"candidates", std::move(list)}});
    }
    text << "total " << set.total() << "\n";
    json doc_json = envelope("candidates", inv.input, std::move(result));
    doc_json["d"] = inv.d;
    doc_json["total"] = set.total();
    emit(out, fmt, doc_json, text.str());
}

void cmd_dmcs(const Invocation& inv, Format fmt, std::ostream& out) {
    const auto alg = parse_algorithm(inv.alg);
    if (!alg) throw std::invalid_argument("unknown algorithm '" + inv.alg + "'");
    const auto doc = load_network(inv.input);
    check_demand(doc.network, inv.d);
    const auto mcs = enumerate_mcs(doc.network);
    const FilterOutcome outcome = run_filter(*alg, doc.network, mcs, inv.d);
    json result = json::array();
    std::ostringstream text;
    for (const StateVector& v : listing(outcome)) {
        result.push_back(vec_json(v));
        text << v.str() << "\n";
    }
    text << "# algorithm " << algorithm_name(*alg) << ": " << counters_text(outcome.counters) << "\n";
    json doc_json = envelope("dmcs", inv.input, std::move(result));
    doc_json["d"] = inv.d;
    doc_json["algorithm"] = algorithm_name(*alg);
    doc_json["counters"] = counters_json(outcome.counters);
    emit(out, fmt, doc_json, text.str());
}

void cmd_check(const Invocation& inv, Format fmt, std::ostream& out) {
    const auto doc = load_network(inv.input);
    const CrossCheckReport report = cross_check(doc.network, inv.d);
    json result = json::array();
    std::ostringstream text;
    for (const auto& run : report.runs) {
        const auto name = algorithm_name(run.outcome.algorithm);
        const auto count = run.outcome.vectors().size();
        result.push_back({{"alg", name},
                          {"dmc_count", count},
                          {"runtime_ns", run.runtime_ns},
                          {"counters", counters_json(run.outcome.counters)}});
        text << name << ": " << count << " d-MCs, " << run.runtime_ns << " ns; "
             << counters_text(run.outcome.counters) << "\n";
    }
    text << (report.agree ? "agree" : "DISAGREE") << "\n";
    for (const auto& line : report.differences) text << "  " << line << "\n";
    json doc_json = envelope("check", inv.input, std::move(result));
    doc_json["d"] = inv.d;
    doc_json["agree"] = report.agree;
    doc_json["differences"] = report.differences;
    emit(out, fmt, doc_json, text.str());
    if (!report.agree) throw Disagreement{"filters disagree on the d-MC set"};
}

void cmd_reliability(const Invocation& inv, Format fmt, std::ostream& out) {
    ReliabilityMethod method;
    if (inv.method == "ie")
        method = ReliabilityMethod::kInclusionExclusion;
    else if (inv.method == "brute")
        method = ReliabilityMethod::kBruteForce;
    else
        throw std::invalid_argument("unknown method '" + inv.method + "'");

    const auto doc = load_network(inv.input);
    if (!doc.distribution) throw Error(inv.input + ": no 'prob' lines; reliability needs a distribution");
    check_demand(doc.network, inv.d);
    ReliabilityResult res;
    if (method == ReliabilityMethod::kInclusionExclusion) {
        const auto mcs = enumerate_mcs(doc.network);
        const auto dmcs = verify_dmcv(doc.network, mcs, inv.d).vectors();
        res = reliability_from_dmcs(*doc.distribution, dmcs, inv.d);
    } else {
        res = brute_force_reliability(doc.network, *doc.distribution, inv.d);
    }
    char line[128];
    std::snprintf(line, sizeof line, "R_%d = %.9f\n", inv.d + 1, res.r);
    std::string text = line;
    std::snprintf(line, sizeof line, "# union = %.12f, terms = %zu, method = %s\n", res.union_prob,
                  res.term_count, std::string(method_name(method)).c_str());
    text += line;
    json result = json::array();
    result.push_back({{"d", res.d},
                      {"level", res.d + 1},
                      {"r", res.r},
                      {"union_prob", res.union_prob},
                      {"terms", res.term_count},
                      {"method", method_name(method)}});
    emit(out, fmt, envelope("reliability", inv.input, std::move(result)), text);
}

void cmd_bench(const Invocation& inv, std::ostream& out, std::ostream& err) {
    BenchConfig cfg;
    cfg.sizes = inv.nodes;
    cfg.reps = inv.reps;
    cfg.seed = inv.seed;
    cfg.timeout_secs = inv.timeout_secs;
    cfg.algorithms.clear();
    for (const auto& name : inv.algs) {
        const auto alg = parse_algorithm(name);
        if (!alg) throw std::invalid_argument("unknown algorithm '" + name + "'");
        cfg.algorithms.push_back(*alg);
    }
    cfg.validate();
    const auto rows = run_bench(cfg);

    if (inv.out_path.empty()) {
        write_bench_csv(out, cfg, rows);
    } else {
        std::ofstream file(inv.out_path);
        if (!file) throw Error("cannot write '" + inv.out_path + "'");
        write_bench_csv(file, cfg, rows);
        if (!file) throw Error("cannot write '" + inv.out_path + "'");
    }
    std::ostream& summary = inv.out_path.empty() ? err : out;
    for (const auto& [key, mean] : mean_runtimes(rows))
        summary << "n=" << key.first << " " << algorithm_name(key.second) << " mean_ns=" << mean << "\n";

    // Every ok run of one instance must report the same d-MC count.
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        std::optional<std::size_t> count;
        bool mismatch = false;
        while (j < rows.size() && rows[j].seed == rows[i].seed && rows[j].n == rows[i].n) {
            if (rows[j].dmc_count) {
                if (count && *count != *rows[j].dmc_count) mismatch = true;
                count = rows[j].dmc_count;
            }
            ++j;
        }
        if (mismatch)
            throw Disagreement{"algorithms disagree on n=" + std::to_string(rows[i].n) +
                               " seed=" + std::to_string(rows[i].seed)};
        i = j;
    }
}

void add_format(CLI::App* sub, Invocation& inv) {
    sub->add_option("--format", inv.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_demand(CLI::App* sub, Invocation& inv) {
    sub->add_option("-d,--d", inv.d, "Demand level d (R_{d+1} is evaluated)")
        ->required()
        ->check(CLI::NonNegativeNumber);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    CLI::App app{"d-minimal cut enumeration and multistate flow network reliability", "dmcv"};
    app.require_subcommand(1, 1);

    auto* mcs = app.add_subcommand("mcs", "List minimal cuts with their MCVs");
    mcs->add_option("file", inv.input, "Network file")->required();
    add_format(mcs, inv);

    auto* cands = app.add_subcommand("candidates", "List d-MC candidates grouped by MC");
    cands->add_option("file", inv.input, "Network file")->required();
    add_demand(cands, inv);
    add_format(cands, inv);

    auto* dmcs = app.add_subcommand("dmcs", "List the d-MCs found by one filter");
    dmcs->add_option("file", inv.input, "Network file")->required();
    add_demand(dmcs, inv);
    dmcs->add_option("--alg", inv.alg, "Filter algorithm")
        ->check(CLI::IsMember({"dmcv", "unsat", "c2c"}))
        ->capture_default_str();
    add_format(dmcs, inv);

    auto* check = app.add_subcommand("check", "Run all three filters and compare their d-MC sets");
    check->add_option("file", inv.input, "Network file")->required();
    add_demand(check, inv);
    add_format(check, inv);

    auto* rel = app.add_subcommand("reliability", "Compute R_{d+1}");
    rel->add_option("file", inv.input, "Network file")->required();
    add_demand(rel, inv);
    rel->add_option("--method", inv.method, "ie (inclusion-exclusion over d-MCs) or brute (state space)")
        ->check(CLI::IsMember({"ie", "brute"}))
        ->capture_default_str();
    add_format(rel, inv);

    auto* bench = app.add_subcommand("bench", "Time the three filters on seeded random networks");
    bench->add_option("--nodes", inv.nodes, "Node counts")->delimiter(',')->capture_default_str();
    bench->add_option("--reps", inv.reps, "Repetitions per size")->capture_default_str();
    bench->add_option("--seed", inv.seed, "Master seed")->capture_default_str();
    bench->add_option("--timeout-secs", inv.timeout_secs, "Per-run timeout")->capture_default_str();
    bench->add_option("--out", inv.out_path, "CSV output path (default stdout)");
    bench->add_option("--algs", inv.algs, "Algorithms to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"dmcv", "unsat", "c2c"}))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInvalid;
    }

    const Format fmt = inv.format == "json" ? Format::kJson : Format::kText;
    try {
        if (mcs->parsed()) cmd_mcs(inv, fmt, out);
        else if (cands->parsed()) cmd_candidates(inv, fmt, out);
        else if (dmcs->parsed()) cmd_dmcs(inv, fmt, out);
        else if (check->parsed()) cmd_check(inv, fmt, out);
        else if (rel->parsed()) cmd_reliability(inv, fmt, out);
        else if (bench->parsed()) cmd_bench(inv, out, err);
    } catch (const Disagreement& e) {
        err << "error: " << e.message << "\n";
        return kExitDisagreement;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

} // namespace dmcv
