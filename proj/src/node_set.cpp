#include "dmcv/node_set.hpp"

#include <stdexcept>

namespace dmcv {

NodeSet::NodeSet(int node_count, std::initializer_list<NodeId> members) : NodeSet(node_count) {
    for (NodeId v : members) insert(v);
}

NodeSet::NodeSet(int node_count, const std::vector<NodeId>& members) : NodeSet(node_count) {
    for (NodeId v : members) insert(v);
}

void NodeSet::insert(NodeId v) {
    if (v < 1 || v > universe()) throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
    auto bit = bits_[static_cast<std::size_t>(v)];
    if (!bit) {
        bit = true;
        ++count_;
    }
}

void NodeSet::erase(NodeId v) {
    if (v < 1 || v > universe()) throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
    auto bit = bits_[static_cast<std::size_t>(v)];
    if (bit) {
        bit = false;
        --count_;
    }
}

std::vector<NodeId> NodeSet::members() const {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::size_t v = 1; v < bits_.size(); ++v)
        if (bits_[v]) out.push_back(static_cast<NodeId>(v));
    return out;
}

std::string NodeSet::str() const {
    std::string out = "{";
    bool first = true;
    for (NodeId v : members()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    if (a.universe() != b.universe()) throw std::invalid_argument("node sets of different networks");
    NodeSet out = a;
    for (NodeId v : b.members()) out.insert(v);
    return out;
}

} // namespace dmcv
