#pragma once

#include <cstdint>
#include <vector>

#include "dmcv/network.hpp"
#include "dmcv/node_set.hpp"

namespace dmcv {

// How the max-flow search picks the next augmenting path. Both rules yield a
// maximum flow; the reach sets of the final residual network do not depend on
// which maximum flow was found.
enum class AugmentRule {
    kBreadthFirst, // shortest path, ties by smallest arc id
    kDepthFirst,   // depth-first, largest arc id first
};

// F(X), one maximum flow F_d(X), and the reach sets S(X), T(X) of the
// residual network R(V, E, X).
struct FlowAnalysis {
    int value = 0;
    StateVector flow;
    NodeSet source_side;
    NodeSet sink_side;
};

// Residual capacities of arc a = e_{i,j} under a flow: (i -> j) carries
// X(a) - flow(a), (j -> i) carries flow(a).
class ResidualView {
public:
    ResidualView(const Network& net, const StateVector& x, const StateVector& flow);

    int forward(ArcId k) const { return x_[k] - flow_[k]; }
    int backward(ArcId k) const { return flow_[k]; }

private:
    const StateVector& x_;
    const StateVector& flow_;
};

// Reusable max-flow workspace for one network. Keeps its buffers between
// calls, so the filters create one per run instead of one per candidate.
// Not thread-safe; use one solver per thread.
class FlowSolver {
public:
    explicit FlowSolver(const Network& net, AugmentRule rule = AugmentRule::kBreadthFirst);

    // Computes a maximum flow for X and marks S(X). X must be bound to the
    // network. Returns F(X).
    int solve(const StateVector& x);

    int value() const noexcept { return value_; }
    const std::vector<int>& flow() const noexcept { return flow_; }

    bool in_source_side(NodeId v) const { return mark_[idx(v)] == source_stamp_; }

    // Marks T(X) for the last solved X; cheap to call more than once.
    void compute_sink_side();
    bool in_sink_side(NodeId v) const { return sink_[idx(v)] == sink_stamp_; }

    int source_side_size() const noexcept { return source_count_; }
    int sink_side_size() const noexcept { return sink_count_; }

    NodeSet source_side() const;
    NodeSet sink_side() const;

    // Whether a source-to-sink path appears in the residual network of the
    // last solve once arc j gets one extra unit of forward residual.
    bool path_with_extra_unit(ArcId j);

private:
    static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }
    std::uint64_t next_stamp() { return ++stamp_; }
    int residual(const Incidence& inc, ArcId extra) const;
    // Both searches return the number of nodes visited and set `reached`
    // when the sink was hit (parent_ then holds the path).
    int search_bfs(ArcId extra, std::vector<std::uint64_t>& marks, bool& reached);
    int search_dfs(bool& reached);
    void augment();

    const Network& net_;
    AugmentRule rule_;
    const int* x_ = nullptr;
    int value_ = 0;
    std::vector<int> flow_;
    // parent_[v] = +k if v was reached over arc k forward, -k if backward.
    std::vector<int> parent_;
    std::vector<std::uint64_t> mark_;
    std::vector<std::uint64_t> sink_;
    std::vector<std::uint64_t> probe_;
    std::vector<NodeId> queue_;
    std::vector<std::size_t> cursor_;
    std::uint64_t stamp_ = 0;
    std::uint64_t source_stamp_ = 0;
    std::uint64_t sink_stamp_ = 0;
    bool sink_valid_ = false;
    int source_count_ = 0;
    int sink_count_ = 0;
};

FlowAnalysis analyze(const Network& net, const StateVector& x,
                     AugmentRule rule = AugmentRule::kBreadthFirst);

// True iff a 1 -> n path exists in the residual network of `analysis` after
// one extra unit of forward residual on arc j; equivalent to F(X + o_j) > F(X).
// Throws std::invalid_argument when arc j is saturated.
bool augmented_path_exists(const Network& net, const StateVector& x, const FlowAnalysis& analysis,
                           ArcId j);

} // namespace dmcv
