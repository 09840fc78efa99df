#include "dmcv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "dmcv/candidates.hpp"
#include "dmcv/cuts.hpp"
#include "dmcv/errors.hpp"
#include "dmcv/flow.hpp"

namespace dmcv {

void BenchConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("no node sizes given");
    for (int n : sizes)
        if (n < 2) throw std::invalid_argument("node sizes must be at least 2");
    if (reps < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (!(timeout_secs > 0)) throw std::invalid_argument("timeout must be positive");
    if (min_arcs_per_node < 1 || max_arcs_per_node < min_arcs_per_node)
        throw std::invalid_argument("invalid arcs-per-node range");
    if (max_retries < 1) throw std::invalid_argument("retry budget must be at least 1");
    if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
}

std::uint64_t instance_seed(std::uint64_t master, int n, int rep) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(rep)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

GeneratedNetwork gen_network(int n, std::uint64_t seed, const BenchConfig& cfg) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> node(1, n);
    std::uniform_int_distribution<int> arc_total(cfg.min_arcs_per_node * n, cfg.max_arcs_per_node * n);

    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        std::vector<NodeId> order(static_cast<std::size_t>(n - 2));
        std::iota(order.begin(), order.end(), 2);
        std::shuffle(order.begin(), order.end(), rng);
        order.insert(order.begin(), 1);
        order.push_back(n);

        std::vector<std::pair<NodeId, NodeId>> ends;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) ends.emplace_back(order[i], order[i + 1]);
        const int target = arc_total(rng);
        while (static_cast<int>(ends.size()) < target) {
            const NodeId tail = node(rng);
            const NodeId head = node(rng);
            if (tail != head) ends.emplace_back(tail, head);
        }

        int out_source = 0;
        int in_sink = 0;
        for (auto [t, h] : ends) {
            out_source += t == 1;
            in_sink += h == n;
        }
        const int d = std::min(out_source, in_sink);

        std::vector<Arc> arcs;
        arcs.reserve(ends.size());
        for (std::size_t i = 0; i < ends.size(); ++i)
            arcs.push_back({static_cast<ArcId>(i + 1), ends[i].first, ends[i].second, d});
        Network net(n, std::move(arcs));
        FlowSolver solver(net);
        const StateVector w = net.capacities();
        if (solver.solve(w) > d) return {std::move(net), d};
    }
    throw Error("no network with maximum flow above d after " + std::to_string(cfg.max_retries) +
                " draws (n = " + std::to_string(n) + ")");
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    cfg.validate();
    using Clock = std::chrono::steady_clock;
    const auto timeout = std::chrono::duration_cast<Clock::duration>(
        std::chrono::duration<double>(cfg.timeout_secs));

    std::vector<BenchRow> rows;
    for (int n : cfg.sizes) {
        for (int rep = 0; rep < cfg.reps; ++rep) {
            const std::uint64_t seed = instance_seed(cfg.seed, n, rep);
            const GeneratedNetwork inst = gen_network(n, seed, cfg);
            const auto mcs = enumerate_mcs(inst.network);
            const CandidateSet candidates = build_candidate_set(inst.network, mcs, inst.d);

            for (Algorithm alg : cfg.algorithms) {
                BenchRow row;
                row.n = n;
                row.m = inst.network.arc_count();
                row.d = inst.d;
                row.seed = seed;
                row.algorithm = alg;
                row.mc_count = mcs.size();
                row.candidate_count = candidates.total();

                StoredCandidates stream(candidates);
                FilterOptions opts;
                const auto start = Clock::now();
                opts.deadline = start + timeout;
                try {
                    const FilterOutcome outcome = run_filter(alg, inst.network, mcs, stream, inst.d, opts);
                    row.runtime_ns =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
                    row.dmc_count = outcome.vectors().size();
                } catch (const TimeoutError&) {
                    row.runtime_ns =
                        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
                    row.status = RunStatus::kTimeout;
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const BenchConfig& cfg, const std::vector<BenchRow>& rows) {
    out << "# dmcv bench\n";
    out << "# generator: " << kGeneratorScheme << "\n";
    out << "# sizes:";
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) out << (i ? "," : " ") << cfg.sizes[i];
    out << "\n# reps: " << cfg.reps << "\n";
    out << "# seed: " << cfg.seed << "\n";
    out << "# timeout_secs: " << cfg.timeout_secs << "\n";
    out << "# arcs_per_node: " << cfg.min_arcs_per_node << ".." << cfg.max_arcs_per_node << "\n";
    out << "# algorithms:";
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i)
        out << (i ? "," : " ") << algorithm_name(cfg.algorithms[i]);
    out << "\n" << kBenchCsvHeader << "\n";
    for (const BenchRow& r : rows) {
        out << r.n << ',' << r.m << ',' << r.d << ',' << r.seed << ',' << algorithm_name(r.algorithm)
            << ',' << r.mc_count << ',' << r.candidate_count << ',';
        if (r.dmc_count) out << *r.dmc_count;
        out << ',' << r.runtime_ns << ',' << (r.status == RunStatus::kOk ? "ok" : "timeout") << "\n";
    }
}

std::map<std::pair<int, Algorithm>, double> mean_runtimes(const std::vector<BenchRow>& rows) {
    std::map<std::pair<int, Algorithm>, std::pair<double, int>> acc;
    for (const BenchRow& r : rows) {
        auto& [sum, count] = acc[{r.n, r.algorithm}];
        sum += static_cast<double>(r.runtime_ns);
        ++count;
    }
    std::map<std::pair<int, Algorithm>, double> out;
    for (const auto& [key, v] : acc) out[key] = v.first / v.second;
    return out;
}

} // namespace dmcv
