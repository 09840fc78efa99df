#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmcv/candidates.hpp"
#include "dmcv/cuts.hpp"
#include "dmcv/flow.hpp"
#include "dmcv/network.hpp"

namespace dmcv {

// The three ways of turning d-MC candidates into the duplicate-free d-MC set.
enum class Algorithm {
    kDmcv,  // residual-network d-MCV test
    kUnsat, // unsaturated-arc test plus d-MC-to-MC duplicate check
    kC2c,   // pairwise candidate-to-candidate comparison
};

std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kDmcv, Algorithm::kUnsat, Algorithm::kC2c};

// Rule that accepted a d-MC.
enum class Verdict {
    kLemma2,              // |S(X) u T(X)| = n
    kLemma3Scan,          // boundary scan found no blocking unsaturated arc
    kUnsaturatedTest,     // every unsaturated bump raises the flow
    kCandidateComparison, // not dominated by any other candidate
};

std::string_view verdict_name(Verdict v);

struct DmcRecord {
    StateVector vector;
    int generator_mc = 0;
    Verdict verdict = Verdict::kLemma2;
};

// Every candidate seen lands in exactly one of the rejection buckets or in
// `accepted`. Buckets an algorithm does not use stay at zero.
struct FilterCounters {
    std::size_t seen = 0;
    std::size_t below_demand = 0;    // F(X) < d
    std::size_t theorem1 = 0;        // S(X) != V(C_i)
    std::size_t lemma3 = 0;          // blocking unsaturated arc
    std::size_t unsat_failed = 0;    // some unsaturated bump keeps F(X) = d
    std::size_t duplicate = 0;       // already produced from an earlier MC / equal earlier candidate
    std::size_t dominated = 0;       // strictly below another candidate
    std::size_t accepted = 0;
    std::size_t accepted_lemma2 = 0; // breakdown of `accepted` for kDmcv
    std::size_t accepted_scan = 0;

    std::size_t rejected() const {
        return below_demand + theorem1 + lemma3 + unsat_failed + duplicate + dominated;
    }
    bool partitions() const { return rejected() + accepted == seen; }
};

struct FilterOutcome {
    Algorithm algorithm = Algorithm::kDmcv;
    std::vector<DmcRecord> dmcs;
    FilterCounters counters;

    // Distinct accepted vectors, sorted.
    std::vector<StateVector> vectors() const;
};

struct FilterOptions {
    // Runs past this point throw dmcv::TimeoutError.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Keep X only when S(X) = V(C); drops duplicates and some non-d-MCs.
bool theorem1_keep(const FlowAnalysis& analysis, const MinCut& mc);

// Accept outright when |S(X) u T(X)| = n.
bool lemma2_accept(const FlowAnalysis& analysis, int node_count);

// True (reject) iff some unsaturated arc e_{i,j} has i in S and j
// outside S u T, or i outside S u T and j in T.
bool lemma3_reject(const Network& net, const StateVector& x, const FlowAnalysis& analysis);

// Throws std::invalid_argument unless 0 <= d < F(W).
void check_demand(const Network& net, int d);

// Residual-network d-MCV filter. `mcs` must be the complete MC list of `net`
// (any order); candidates are generated lazily in list order.
FilterOutcome verify_dmcv(const Network& net, std::span<const MinCut> mcs, int d,
                          const FilterOptions& opts = {});
// Unsaturated-arc test; a d-MC from C_i is dropped if an MC earlier in `mcs`
// also generates it.
FilterOutcome verify_unsat(const Network& net, std::span<const MinCut> mcs, int d,
                           const FilterOptions& opts = {});
// Candidate-to-candidate comparison; keeps the first of equal vectors.
FilterOutcome verify_c2c(const Network& net, std::span<const MinCut> mcs, int d,
                         const FilterOptions& opts = {});

// Same filters over an explicit candidate stream, which must yield the
// candidates of `mcs` grouped by MC in list order.
FilterOutcome run_filter(Algorithm alg, const Network& net, std::span<const MinCut> mcs,
                         CandidateStream& candidates, int d, const FilterOptions& opts = {});
FilterOutcome run_filter(Algorithm alg, const Network& net, std::span<const MinCut> mcs, int d,
                         const FilterOptions& opts = {});

struct CrossCheckReport {
    struct Run {
        FilterOutcome outcome;
        std::int64_t runtime_ns = 0;
    };

    int d = 0;
    std::size_t mc_count = 0;
    std::size_t candidate_count = 0;
    std::vector<Run> runs; // dmcv, unsat, c2c
    bool agree = true;
    // One line per vector that not every algorithm produced.
    std::vector<std::string> differences;
};

// Runs all three filters on the enumerated MCs of `net` and compares their
// distinct vector sets.
CrossCheckReport cross_check(const Network& net, int d);

} // namespace dmcv
