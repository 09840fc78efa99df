#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "dmcv/network.hpp"

namespace dmcv {

// Subset of the node ids 1..n of one network.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int node_count) : bits_(static_cast<std::size_t>(node_count) + 1, false) {}
    NodeSet(int node_count, std::initializer_list<NodeId> members);
    NodeSet(int node_count, const std::vector<NodeId>& members);

    int universe() const noexcept { return bits_.empty() ? 0 : static_cast<int>(bits_.size()) - 1; }
    int size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(NodeId v) const {
        return v >= 1 && static_cast<std::size_t>(v) < bits_.size() && bits_[static_cast<std::size_t>(v)];
    }
    void insert(NodeId v);
    void erase(NodeId v);

    // Ascending member list.
    std::vector<NodeId> members() const;

    // "{1,2,3}"
    std::string str() const;

    friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.bits_ == b.bits_; }

    // Lexicographic on the ascending member lists.
    friend std::strong_ordering operator<=>(const NodeSet& a, const NodeSet& b) {
        return a.members() <=> b.members();
    }

private:
    std::vector<bool> bits_;
    int count_ = 0;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);

} // namespace dmcv
