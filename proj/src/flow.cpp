#include "dmcv/flow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dmcv {

ResidualView::ResidualView(const Network& net, const StateVector& x, const StateVector& flow)
    : x_(x), flow_(flow) {
    net.check_bound(x);
    if (flow.size() != x.size()) throw std::invalid_argument("flow vector length mismatch");
}

FlowSolver::FlowSolver(const Network& net, AugmentRule rule)
    : net_(net), rule_(rule) {
    const auto slots = static_cast<std::size_t>(net.node_count()) + 1;
    flow_.assign(static_cast<std::size_t>(net.arc_count()), 0);
    parent_.assign(slots, 0);
    mark_.assign(slots, 0);
    sink_.assign(slots, 0);
    probe_.assign(slots, 0);
    queue_.reserve(slots);
    cursor_.assign(slots, 0);
}

int FlowSolver::residual(const Incidence& inc, ArcId extra) const {
    const auto k = static_cast<std::size_t>(inc.arc - 1);
    if (inc.outgoing) return x_[k] - flow_[k] + (inc.arc == extra ? 1 : 0);
    return flow_[k];
}

int FlowSolver::search_bfs(ArcId extra, std::vector<std::uint64_t>& marks, bool& reached) {
    const std::uint64_t s = next_stamp();
    const NodeId src = net_.source();
    const NodeId dst = net_.sink();
    queue_.clear();
    queue_.push_back(src);
    marks[idx(src)] = s;
    reached = false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const NodeId v = queue_[head];
        for (const Incidence& inc : net_.incident(v)) {
            if (marks[idx(inc.other)] == s || residual(inc, extra) <= 0) continue;
            marks[idx(inc.other)] = s;
            parent_[idx(inc.other)] = inc.outgoing ? inc.arc : -inc.arc;
            if (inc.other == dst) {
                reached = true;
                return static_cast<int>(queue_.size());
            }
            queue_.push_back(inc.other);
        }
    }
    return static_cast<int>(queue_.size());
}

int FlowSolver::search_dfs(bool& reached) {
    const std::uint64_t s = next_stamp();
    const NodeId src = net_.source();
    const NodeId dst = net_.sink();
    // queue_ doubles as the DFS stack; cursor_ counts incidences already
    // tried, walking each list from the largest arc id down.
    queue_.clear();
    queue_.push_back(src);
    mark_[idx(src)] = s;
    cursor_[idx(src)] = 0;
    int visited = 1;
    reached = false;
    while (!queue_.empty()) {
        const NodeId v = queue_.back();
        auto inc_list = net_.incident(v);
        std::size_t& c = cursor_[idx(v)];
        bool advanced = false;
        while (c < inc_list.size()) {
            const Incidence& inc = inc_list[inc_list.size() - 1 - c];
            ++c;
            if (mark_[idx(inc.other)] == s || residual(inc, 0) <= 0) continue;
            mark_[idx(inc.other)] = s;
            parent_[idx(inc.other)] = inc.outgoing ? inc.arc : -inc.arc;
            ++visited;
            if (inc.other == dst) {
                reached = true;
                return visited;
            }
            cursor_[idx(inc.other)] = 0;
            queue_.push_back(inc.other);
            advanced = true;
            break;
        }
        if (!advanced) queue_.pop_back();
    }
    return visited;
}

void FlowSolver::augment() {
    int bottleneck = std::numeric_limits<int>::max();
    for (NodeId v = net_.sink(); v != net_.source();) {
        const int p = parent_[idx(v)];
        const Arc& a = net_.arc(p > 0 ? p : -p);
        const auto k = static_cast<std::size_t>(a.id - 1);
        bottleneck = std::min(bottleneck, p > 0 ? x_[k] - flow_[k] : flow_[k]);
        v = p > 0 ? a.tail : a.head;
    }
    for (NodeId v = net_.sink(); v != net_.source();) {
        const int p = parent_[idx(v)];
        const Arc& a = net_.arc(p > 0 ? p : -p);
        const auto k = static_cast<std::size_t>(a.id - 1);
        flow_[k] += p > 0 ? bottleneck : -bottleneck;
        v = p > 0 ? a.tail : a.head;
    }
    value_ += bottleneck;
}

int FlowSolver::solve(const StateVector& x) {
    if (x.size() != flow_.size()) throw std::invalid_argument("state vector length mismatch");
    x_ = x.values().data();
    std::fill(flow_.begin(), flow_.end(), 0);
    value_ = 0;
    sink_valid_ = false;
    for (;;) {
        bool reached = false;
        const int visited = rule_ == AugmentRule::kBreadthFirst ? search_bfs(0, mark_, reached)
                                                                : search_dfs(reached);
        if (!reached) {
            source_stamp_ = stamp_;
            source_count_ = visited;
            break;
        }
        augment();
    }
    return value_;
}

void FlowSolver::compute_sink_side() {
    if (sink_valid_) return;
    const std::uint64_t s = next_stamp();
    queue_.clear();
    queue_.push_back(net_.sink());
    sink_[idx(net_.sink())] = s;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const NodeId v = queue_[head];
        for (const Incidence& inc : net_.incident(v)) {
            const NodeId u = inc.other;
            if (sink_[idx(u)] == s) continue;
            const auto k = static_cast<std::size_t>(inc.arc - 1);
            // Residual edge u -> v: backward on arc v -> u, forward on arc u -> v.
            const int r = inc.outgoing ? flow_[k] : x_[k] - flow_[k];
            if (r <= 0) continue;
            sink_[idx(u)] = s;
            queue_.push_back(u);
        }
    }
    sink_stamp_ = s;
    sink_count_ = static_cast<int>(queue_.size());
    sink_valid_ = true;
}

NodeSet FlowSolver::source_side() const {
    NodeSet out(net_.node_count());
    for (NodeId v = 1; v <= net_.node_count(); ++v)
        if (in_source_side(v)) out.insert(v);
    return out;
}

NodeSet FlowSolver::sink_side() const {
    if (!sink_valid_) throw std::logic_error("compute_sink_side() not called");
    NodeSet out(net_.node_count());
    for (NodeId v = 1; v <= net_.node_count(); ++v)
        if (in_sink_side(v)) out.insert(v);
    return out;
}

bool FlowSolver::path_with_extra_unit(ArcId j) {
    bool reached = false;
    search_bfs(j, probe_, reached);
    return reached;
}

FlowAnalysis analyze(const Network& net, const StateVector& x, AugmentRule rule) {
    net.check_bound(x);
    FlowSolver solver(net, rule);
    FlowAnalysis out;
    out.value = solver.solve(x);
    out.flow = StateVector(solver.flow());
    out.source_side = solver.source_side();
    solver.compute_sink_side();
    out.sink_side = solver.sink_side();
    return out;
}

bool augmented_path_exists(const Network& net, const StateVector& x, const FlowAnalysis& analysis,
                           ArcId j) {
    net.check_bound(x);
    const Arc& a = net.arc(j);
    if (x[j] >= a.capacity)
        throw std::invalid_argument("arc " + std::to_string(j) + " is saturated");
    if (analysis.flow.size() != x.size()) throw std::invalid_argument("analysis does not match X");

    // Plain BFS over R(V, E, X) with the extra unit on arc j.
    const ResidualView residual(net, x, analysis.flow);
    const auto slots = static_cast<std::size_t>(net.node_count()) + 1;
    std::vector<char> seen(slots, 0);
    std::vector<NodeId> queue{net.source()};
    seen[static_cast<std::size_t>(net.source())] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (const Incidence& inc : net.incident(v)) {
            if (seen[static_cast<std::size_t>(inc.other)]) continue;
            const int r = inc.outgoing ? residual.forward(inc.arc) + (inc.arc == j ? 1 : 0)
                                       : residual.backward(inc.arc);
            if (r <= 0) continue;
            if (inc.other == net.sink()) return true;
            seen[static_cast<std::size_t>(inc.other)] = 1;
            queue.push_back(inc.other);
        }
    }
    return false;
}

} // namespace dmcv
