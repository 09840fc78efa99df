#include "dmcv/filters.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "dmcv/errors.hpp"

namespace dmcv {
namespace {

using Clock = std::chrono::steady_clock;

class DeadlineGuard {
public:
    explicit DeadlineGuard(const FilterOptions& opts) : deadline_(opts.deadline) {}

    void tick() {
        if (!deadline_ || (++calls_ & 63u) != 0) return;
        if (Clock::now() >= *deadline_) throw TimeoutError("filter deadline exceeded");
    }

private:
    std::optional<Clock::time_point> deadline_;
    std::uint32_t calls_ = 0;
};

// Position of each MC (by its index) within the caller's list.
std::vector<std::size_t> positions_by_index(std::span<const MinCut> mcs) {
    int top = 0;
    for (const MinCut& mc : mcs) top = std::max(top, mc.index);
    std::vector<std::size_t> pos(static_cast<std::size_t>(top) + 1, mcs.size());
    for (std::size_t i = 0; i < mcs.size(); ++i) pos[static_cast<std::size_t>(mcs[i].index)] = i;
    return pos;
}

int solve_candidate(FlowSolver& solver, const Candidate& c, int d) {
    const int f = solver.solve(c.vector);
    // A candidate's own cut carries exactly d, so its flow can never exceed d.
    if (f > d) throw std::logic_error("candidate " + c.vector.str() + " has flow above d");
    return f;
}

FilterOutcome dmcv_filter(const Network& net, std::span<const MinCut> mcs, CandidateStream& stream,
                          int d, const FilterOptions& opts) {
    FilterOutcome out;
    out.algorithm = Algorithm::kDmcv;
    auto& cnt = out.counters;
    const auto pos = positions_by_index(mcs);
    const int n = net.node_count();
    FlowSolver solver(net);
    DeadlineGuard guard(opts);

    while (const Candidate* c = stream.next()) {
        guard.tick();
        ++cnt.seen;
        const StateVector& x = c->vector;

        // flow below d
        if (solve_candidate(solver, *c, d) < d) {
            ++cnt.below_demand;
            continue;
        }

        // S(X) = V(C_i)
        const MinCut& mc = mcs[pos[static_cast<std::size_t>(c->mc_index)]];
        bool same = solver.source_side_size() == mc.mcv.size();
        for (NodeId v = 1; same && v <= n; ++v) same = solver.in_source_side(v) == mc.mcv.contains(v);
        if (!same) {
            ++cnt.theorem1;
            continue;
        }

        // S and T are disjoint under a maximum flow, so the union
        // covers V exactly when the sizes add up to n.
        solver.compute_sink_side();
        Verdict verdict = Verdict::kLemma2;
        if (solver.source_side_size() + solver.sink_side_size() == n) {
            ++cnt.accepted_lemma2;
        } else {
            // U(X) lies inside C_i = E(S(X)), so only the cut's arcs
            // need scanning.
            assert(std::all_of(net.arcs().begin(), net.arcs().end(), [&](const Arc& a) {
                return x[a.id] == a.capacity || mc.contains(a.id);
            }));
            bool blocked = false;
            for (ArcId k : mc.arcs) {
                const Arc& a = net.arc(k);
                if (x[k] >= a.capacity) continue;
                const bool tail_s = solver.in_source_side(a.tail);
                const bool tail_t = solver.in_sink_side(a.tail);
                const bool head_s = solver.in_source_side(a.head);
                const bool head_t = solver.in_sink_side(a.head);
                if ((tail_s && !head_s && !head_t) || (!tail_s && !tail_t && head_t)) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) {
                ++cnt.lemma3;
                continue;
            }
            ++cnt.accepted_scan;
            verdict = Verdict::kLemma3Scan;
        }
        ++cnt.accepted;
        out.dmcs.push_back({x, c->mc_index, verdict});
    }
    return out;
}

FilterOutcome unsat_filter(const Network& net, std::span<const MinCut> mcs, CandidateStream& stream,
                           int d, const FilterOptions& opts) {
    FilterOutcome out;
    out.algorithm = Algorithm::kUnsat;
    auto& cnt = out.counters;
    const auto pos = positions_by_index(mcs);
    FlowSolver solver(net);
    DeadlineGuard guard(opts);
    std::vector<ArcId> unsat;

    while (const Candidate* c = stream.next()) {
        guard.tick();
        ++cnt.seen;
        const StateVector& x = c->vector;
        if (solve_candidate(solver, *c, d) < d) {
            ++cnt.below_demand;
            continue;
        }

        unsat.clear();
        for (const Arc& a : net.arcs())
            if (x[a.id] < a.capacity) unsat.push_back(a.id);
        bool real = true;
        for (ArcId j : unsat) {
            if (!solver.path_with_extra_unit(j)) {
                real = false;
                break;
            }
        }
        if (!real) {
            ++cnt.unsat_failed;
            continue;
        }

        // d-MC-to-MC comparison: an earlier MC C_k generates X too iff
        // U(X) is inside C_k and the states on C_k sum to d.
        const std::size_t here = pos[static_cast<std::size_t>(c->mc_index)];
        bool duplicate = false;
        for (std::size_t k = 0; k < here && !duplicate; ++k) {
            const MinCut& other = mcs[k];
            if (!std::all_of(unsat.begin(), unsat.end(), [&](ArcId j) { return other.contains(j); }))
                continue;
            long long sum = 0;
            for (ArcId a : other.arcs) sum += x[a];
            duplicate = sum == d;
        }
        if (duplicate) {
            ++cnt.duplicate;
            continue;
        }
        ++cnt.accepted;
        out.dmcs.push_back({x, c->mc_index, Verdict::kUnsaturatedTest});
    }
    return out;
}

FilterOutcome c2c_filter(const Network& net, CandidateStream& stream, int d,
                         const FilterOptions& opts) {
    FilterOutcome out;
    out.algorithm = Algorithm::kC2c;
    auto& cnt = out.counters;
    FlowSolver solver(net);
    DeadlineGuard guard(opts);

    std::vector<Candidate> pool;
    while (const Candidate* c = stream.next()) {
        guard.tick();
        ++cnt.seen;
        if (solve_candidate(solver, *c, d) < d) {
            ++cnt.below_demand;
            continue;
        }
        pool.push_back(*c);
    }

    const std::size_t m = static_cast<std::size_t>(net.arc_count());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto xi = pool[i].vector.values();
        bool duplicate = false;
        bool dominated = false;
        for (std::size_t j = 0; j < pool.size() && !duplicate && !dominated; ++j) {
            if (j == i) continue;
            guard.tick();
            const auto xj = pool[j].vector.values();
            bool below = true;
            bool equal = true;
            for (std::size_t k = 0; k < m && below; ++k) {
                below = xi[k] <= xj[k];
                equal = equal && xi[k] == xj[k];
            }
            if (!below) continue;
            if (equal)
                duplicate = j < i;
            else
                dominated = true;
        }
        if (duplicate) {
            ++cnt.duplicate;
        } else if (dominated) {
            ++cnt.dominated;
        } else {
            ++cnt.accepted;
            out.dmcs.push_back({pool[i].vector, pool[i].mc_index, Verdict::kCandidateComparison});
        }
    }
    return out;
}

} // namespace

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
    case Algorithm::kDmcv: return "dmcv";
    case Algorithm::kUnsat: return "unsat";
    case Algorithm::kC2c: return "c2c";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : kAllAlgorithms)
        if (algorithm_name(a) == name) return a;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::kLemma2: return "lemma2";
    case Verdict::kLemma3Scan: return "lemma3-scan";
    case Verdict::kUnsaturatedTest: return "unsaturated-test";
    case Verdict::kCandidateComparison: return "candidate-comparison";
    }
    return "?";
}

std::vector<StateVector> FilterOutcome::vectors() const {
    std::vector<StateVector> out;
    out.reserve(dmcs.size());
    for (const auto& r : dmcs) out.push_back(r.vector);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool theorem1_keep(const FlowAnalysis& analysis, const MinCut& mc) {
    return analysis.source_side == mc.mcv;
}

bool lemma2_accept(const FlowAnalysis& analysis, int node_count) {
    return set_union(analysis.source_side, analysis.sink_side).size() == node_count;
}

bool lemma3_reject(const Network& net, const StateVector& x, const FlowAnalysis& analysis) {
    const NodeSet& s = analysis.source_side;
    const NodeSet& t = analysis.sink_side;
    for (ArcId k : unsaturated(net, x)) {
        const Arc& a = net.arc(k);
        const bool tail_mid = !s.contains(a.tail) && !t.contains(a.tail);
        const bool head_mid = !s.contains(a.head) && !t.contains(a.head);
        if ((s.contains(a.tail) && head_mid) || (tail_mid && t.contains(a.head))) return true;
    }
    return false;
}

void check_demand(const Network& net, int d) {
    if (d < 0) throw std::invalid_argument("demand d must be non-negative");
    FlowSolver solver(net);
    const StateVector w = net.capacities();
    const int top = solver.solve(w);
    if (d >= top)
        throw std::invalid_argument("demand d = " + std::to_string(d) +
                                    " must be below the maximum flow " + std::to_string(top));
}

FilterOutcome run_filter(Algorithm alg, const Network& net, std::span<const MinCut> mcs,
                         CandidateStream& candidates, int d, const FilterOptions& opts) {
    check_demand(net, d);
    switch (alg) {
    case Algorithm::kDmcv: return dmcv_filter(net, mcs, candidates, d, opts);
    case Algorithm::kUnsat: return unsat_filter(net, mcs, candidates, d, opts);
    case Algorithm::kC2c: return c2c_filter(net, candidates, d, opts);
    }
    throw std::invalid_argument("unknown algorithm");
}

FilterOutcome run_filter(Algorithm alg, const Network& net, std::span<const MinCut> mcs, int d,
                         const FilterOptions& opts) {
    GeneratedCandidates stream(net, mcs, d);
    return run_filter(alg, net, mcs, stream, d, opts);
}

FilterOutcome verify_dmcv(const Network& net, std::span<const MinCut> mcs, int d,
                          const FilterOptions& opts) {
    return run_filter(Algorithm::kDmcv, net, mcs, d, opts);
}

FilterOutcome verify_unsat(const Network& net, std::span<const MinCut> mcs, int d,
                           const FilterOptions& opts) {
    return run_filter(Algorithm::kUnsat, net, mcs, d, opts);
}

FilterOutcome verify_c2c(const Network& net, std::span<const MinCut> mcs, int d,
                         const FilterOptions& opts) {
    return run_filter(Algorithm::kC2c, net, mcs, d, opts);
}

CrossCheckReport cross_check(const Network& net, int d) {
    check_demand(net, d);
    CrossCheckReport report;
    report.d = d;
    const auto mcs = enumerate_mcs(net);
    report.mc_count = mcs.size();
    const CandidateSet candidates = build_candidate_set(net, mcs, d);
    report.candidate_count = candidates.total();

    std::map<StateVector, unsigned> seen_by;
    for (std::size_t i = 0; i < std::size(kAllAlgorithms); ++i) {
        StoredCandidates stream(candidates);
        const auto start = Clock::now();
        FilterOutcome outcome = run_filter(kAllAlgorithms[i], net, mcs, stream, d);
        const auto stop = Clock::now();
        for (const StateVector& v : outcome.vectors()) seen_by[v] |= 1u << i;
        report.runs.push_back(
            {std::move(outcome),
             std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()});
    }
    const unsigned all = (1u << std::size(kAllAlgorithms)) - 1;
    for (const auto& [v, mask] : seen_by) {
        if (mask == all) continue;
        std::string line = v.str() + " only from";
        for (std::size_t i = 0; i < std::size(kAllAlgorithms); ++i)
            if (mask & (1u << i)) line += " " + std::string(algorithm_name(kAllAlgorithms[i]));
        report.differences.push_back(std::move(line));
    }
    report.agree = report.differences.empty();
    return report;
}

} // namespace dmcv
