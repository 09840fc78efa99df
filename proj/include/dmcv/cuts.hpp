#pragma once

#include <vector>

#include "dmcv/network.hpp"
#include "dmcv/node_set.hpp"

namespace dmcv {

// A minimal cut C_i together with its MCV V(C_i), the node set reachable
// from the source once C_i is removed. E(V(C)) == C.
struct MinCut {
    int index = 0;             // 1-based position in canonical order
    std::vector<ArcId> arcs;   // ascending
    NodeSet mcv;

    bool contains(ArcId k) const;
};

// E(V*): arcs with tail in V* and head outside, ascending by id.
std::vector<ArcId> boundary(const Network& net, const NodeSet& nodes);

// Whether V* is the MCV of a minimal cut: every node of V* is reachable from
// the source inside V*, and the head of every arc of E(V*) reaches the sink
// inside V \ V*. Requires 1 in V* and n not in V*.
bool is_mcv(const Network& net, const NodeSet& nodes);

// V(C): nodes reachable from the source with the arcs of C deleted. Throws
// std::invalid_argument when the sink is still reachable.
NodeSet mcv_of(const Network& net, const std::vector<ArcId>& cut);

// Every minimal 1 -> n cut, in canonical order: ascending |C|, then
// lexicographic MCV. Grows source-rooted node sets, so the cost is
// exponential in n; limited to n <= 64. Throws dmcv::Error when the source
// cannot reach the sink.
std::vector<MinCut> enumerate_mcs(const Network& net);

} // namespace dmcv
