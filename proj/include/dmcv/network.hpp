#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dmcv {

// Nodes and arcs are numbered from 1, as in the usual notation for flow
// networks: node 1 is the source, node n the sink, arcs a_1..a_m.
using NodeId = int;
using ArcId = int;

struct Arc {
    ArcId id = 0;
    NodeId tail = 0;
    NodeId head = 0;
    int capacity = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// One entry of a node's incidence list. `outgoing` is true when the node is
// the arc's tail; `other` is the opposite endpoint.
struct Incidence {
    ArcId arc;
    NodeId other;
    bool outgoing;
};

// Per-arc integer state X = (X(a_1), ..., X(a_m)). Indexing is by arc id.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<int> states) : states_(std::move(states)) {}
    StateVector(std::initializer_list<int> states) : states_(states) {}

    std::size_t size() const noexcept { return states_.size(); }

    int operator[](ArcId k) const { return states_[static_cast<std::size_t>(k - 1)]; }
    int& operator[](ArcId k) { return states_[static_cast<std::size_t>(k - 1)]; }

    std::span<const int> values() const noexcept { return states_; }

    // "(3,2,2,2,0,3)"
    std::string str() const;

    friend auto operator<=>(const StateVector&, const StateVector&) = default;

private:
    std::vector<int> states_;
};

// Directed multistate flow network G(V, E, W). Immutable once built; the
// constructor validates every structural invariant.
class Network {
public:
    Network(int node_count, std::vector<Arc> arcs);

    int node_count() const noexcept { return node_count_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
    NodeId source() const noexcept { return 1; }
    NodeId sink() const noexcept { return node_count_; }

    const Arc& arc(ArcId k) const;
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    // Incident arcs of `v` (both directions), sorted by arc id.
    std::span<const Incidence> incident(NodeId v) const {
        return incidence_[static_cast<std::size_t>(v)];
    }

    // W as a state vector.
    StateVector capacities() const;

    bool valid_arc(ArcId k) const noexcept { return k >= 1 && k <= arc_count(); }
    bool valid_node(NodeId v) const noexcept { return v >= 1 && v <= node_count_; }

    // Throws std::invalid_argument unless X has length m and 0 <= X(a) <= W(a).
    void check_bound(const StateVector& x) const;

    friend bool operator==(const Network& a, const Network& b) {
        return a.node_count_ == b.node_count_ && a.arcs_ == b.arcs_;
    }

private:
    int node_count_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Incidence>> incidence_;
};

// Ψ(G): an independent probability mass function per arc over 0..W(a).
class StateDistribution {
public:
    // pmf[k-1][s] = Pr(X(a_k) = s); each row must have W(a_k)+1 entries
    // summing to 1 within kSumTolerance.
    StateDistribution(const Network& net, std::vector<std::vector<double>> pmf);

    static constexpr double kSumTolerance = 1e-9;

    int arc_count() const noexcept { return static_cast<int>(pmf_.size()); }

    double mass(ArcId k, int s) const;

    // Pr(X(a_k) <= s). 0 for s < 0, exactly 1 for s >= W(a_k).
    double cdf(ArcId k, int s) const;

    // Point masses of arc k, index = state.
    std::span<const double> pmf(ArcId k) const;

    friend bool operator==(const StateDistribution&, const StateDistribution&) = default;

private:
    void check_arc(ArcId k) const;

    std::vector<std::vector<double>> pmf_;
    std::vector<std::vector<double>> cumulative_;
};

double cdf(const StateDistribution& dist, ArcId k, int s);

// X + o_j.
StateVector bump(const StateVector& x, ArcId j);

// Componentwise X <= Y.
bool leq(const StateVector& x, const StateVector& y);

// U(X): arcs with X(a) < W(a), ascending by id.
std::vector<ArcId> unsaturated(const Network& net, const StateVector& x);

} // namespace dmcv
