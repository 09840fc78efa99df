#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmcv/filters.hpp"
#include "dmcv/network.hpp"

namespace dmcv {

inline constexpr const char* kGeneratorScheme = "spanning-path+uniform-arcs v1";

struct BenchConfig {
    std::vector<int> sizes{8, 10, 12};
    int reps = 10;
    std::uint64_t seed = 7;
    double timeout_secs = 10.0;
    // Arc count is drawn uniformly from [min_arcs_per_node * n, max_arcs_per_node * n].
    int min_arcs_per_node = 1;
    int max_arcs_per_node = 3;
    int max_retries = 1000;
    std::vector<Algorithm> algorithms{Algorithm::kDmcv, Algorithm::kUnsat, Algorithm::kC2c};

    // Throws std::invalid_argument on sizes < 2, reps < 1, timeout <= 0 or
    // an empty/inverted arc range.
    void validate() const;
};

enum class RunStatus { kOk, kTimeout };

struct BenchRow {
    int n = 0;
    int m = 0;
    int d = 0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::kDmcv;
    std::size_t mc_count = 0;
    std::size_t candidate_count = 0;
    std::optional<std::size_t> dmc_count; // empty on timeout
    std::int64_t runtime_ns = 0;
    RunStatus status = RunStatus::kOk;
};

struct GeneratedNetwork {
    Network network;
    int d;
};

// Random 1 -> n spanning path through every node plus uniform extra arcs
// (ordered pairs, no self-loops, repeats allowed) up to a random arc count;
// then d = min(outdeg(1), indeg(n)) and W(a) = d on every arc. Draws again
// until F(W) > d. Deterministic in (n, seed, cfg).
GeneratedNetwork gen_network(int n, std::uint64_t seed, const BenchConfig& cfg);

// Seed of repetition `rep` of size `n`, derived from the master seed.
std::uint64_t instance_seed(std::uint64_t master, int n, int rep);

// One row per size x repetition x algorithm. Only the filter call is timed;
// MC enumeration and candidate generation happen once per instance, before.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

inline constexpr const char* kBenchCsvHeader =
    "n,m,d,seed,alg,mc_count,candidate_count,dmc_count,runtime_ns,status";

// `#` header block describing cfg, then the CSV header and rows.
void write_bench_csv(std::ostream& out, const BenchConfig& cfg, const std::vector<BenchRow>& rows);

// Mean runtime in nanoseconds per (n, algorithm); timeout rows count with
// their elapsed time.
std::map<std::pair<int, Algorithm>, double> mean_runtimes(const std::vector<BenchRow>& rows);

} // namespace dmcv
