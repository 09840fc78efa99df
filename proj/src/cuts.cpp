#include "dmcv/cuts.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "dmcv/errors.hpp"

namespace dmcv {
namespace {

using Mask = std::uint64_t;

Mask bit(NodeId v) { return Mask{1} << (v - 1); }

void check_universe(const Network& net, const NodeSet& nodes) {
    if (nodes.universe() != net.node_count())
        throw std::invalid_argument("node set does not belong to this network");
}

// Nodes reachable from `from` moving only through nodes accepted by `inside`
// and over arcs accepted by `usable`.
template <class Inside, class Usable>
std::vector<char> reach(const Network& net, NodeId from, Inside inside, Usable usable) {
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()) + 1, 0);
    std::vector<NodeId> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : net.incident(v)) {
            if (!inc.outgoing || seen[static_cast<std::size_t>(inc.other)]) continue;
            if (!inside(inc.other) || !usable(inc.arc)) continue;
            seen[static_cast<std::size_t>(inc.other)] = 1;
            stack.push_back(inc.other);
        }
    }
    return seen;
}

// Nodes that reach `to` moving only through nodes accepted by `inside`.
template <class Inside>
std::vector<char> coreach(const Network& net, NodeId to, Inside inside) {
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()) + 1, 0);
    std::vector<NodeId> stack{to};
    seen[static_cast<std::size_t>(to)] = 1;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : net.incident(v)) {
            if (inc.outgoing || seen[static_cast<std::size_t>(inc.other)] || !inside(inc.other)) continue;
            seen[static_cast<std::size_t>(inc.other)] = 1;
            stack.push_back(inc.other);
        }
    }
    return seen;
}

bool is_mcv_mask(const Network& net, Mask set) {
    auto in = [set](NodeId v) { return (set & bit(v)) != 0; };
    auto out = [set](NodeId v) { return (set & bit(v)) == 0; };
    const auto from_source = reach(net, net.source(), in, [](ArcId) { return true; });
    for (NodeId v = 1; v <= net.node_count(); ++v)
        if (in(v) && !from_source[static_cast<std::size_t>(v)]) return false;
    const auto to_sink = coreach(net, net.sink(), out);
    for (const Arc& a : net.arcs())
        if (in(a.tail) && out(a.head) && !to_sink[static_cast<std::size_t>(a.head)]) return false;
    return true;
}

} // namespace

bool MinCut::contains(ArcId k) const { return std::binary_search(arcs.begin(), arcs.end(), k); }

std::vector<ArcId> boundary(const Network& net, const NodeSet& nodes) {
    check_universe(net, nodes);
    std::vector<ArcId> out;
    for (const Arc& a : net.arcs())
        if (nodes.contains(a.tail) && !nodes.contains(a.head)) out.push_back(a.id);
    return out;
}

bool is_mcv(const Network& net, const NodeSet& nodes) {
    check_universe(net, nodes);
    if (!nodes.contains(net.source()) || nodes.contains(net.sink()))
        throw std::invalid_argument("MCV must contain the source and exclude the sink");
    auto in = [&](NodeId v) { return nodes.contains(v); };
    auto out = [&](NodeId v) { return !nodes.contains(v); };
    const auto from_source = reach(net, net.source(), in, [](ArcId) { return true; });
    for (NodeId v : nodes.members())
        if (!from_source[static_cast<std::size_t>(v)]) return false;
    const auto to_sink = coreach(net, net.sink(), out);
    for (ArcId k : boundary(net, nodes))
        if (!to_sink[static_cast<std::size_t>(net.arc(k).head)]) return false;
    return true;
}

NodeSet mcv_of(const Network& net, const std::vector<ArcId>& cut) {
    std::vector<char> removed(static_cast<std::size_t>(net.arc_count()) + 1, 0);
    for (ArcId k : cut) {
        if (!net.valid_arc(k)) throw std::invalid_argument("unknown arc id " + std::to_string(k));
        removed[static_cast<std::size_t>(k)] = 1;
    }
    const auto seen = reach(net, net.source(), [](NodeId) { return true; },
                            [&](ArcId k) { return !removed[static_cast<std::size_t>(k)]; });
    if (seen[static_cast<std::size_t>(net.sink())])
        throw std::invalid_argument("arc set is not a cut: the sink stays reachable");
    NodeSet out(net.node_count());
    for (NodeId v = 1; v <= net.node_count(); ++v)
        if (seen[static_cast<std::size_t>(v)]) out.insert(v);
    return out;
}

std::vector<MinCut> enumerate_mcs(const Network& net) {
    const int n = net.node_count();
    if (n > 64) throw LimitError("minimal cut enumeration supports at most 64 nodes");
    const auto reachable = reach(net, net.source(), [](NodeId) { return true; }, [](ArcId) { return true; });
    if (!reachable[static_cast<std::size_t>(net.sink())])
        throw Error("the source cannot reach the sink");

    // Depth-first growth over source-rooted node sets that exclude the sink:
    // every such set is reachable from {1} by repeatedly adding a node hit by
    // an arc leaving the current set.
    const Mask sink_bit = bit(net.sink());
    std::unordered_set<Mask> seen{bit(net.source())};
    std::vector<Mask> stack{bit(net.source())};
    std::vector<MinCut> out;
    while (!stack.empty()) {
        const Mask set = stack.back();
        stack.pop_back();
        if (is_mcv_mask(net, set)) {
            MinCut mc;
            mc.mcv = NodeSet(n);
            for (NodeId v = 1; v <= n; ++v)
                if (set & bit(v)) mc.mcv.insert(v);
            mc.arcs = boundary(net, mc.mcv);
            out.push_back(std::move(mc));
        }
        for (const Arc& a : net.arcs()) {
            if (!(set & bit(a.tail)) || (set & bit(a.head))) continue;
            const Mask next = set | bit(a.head);
            if (next & sink_bit) continue;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }

    std::sort(out.begin(), out.end(), [](const MinCut& a, const MinCut& b) {
        if (a.arcs.size() != b.arcs.size()) return a.arcs.size() < b.arcs.size();
        return a.mcv < b.mcv;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i) + 1;
    return out;
}

} // namespace dmcv
