#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dmcv/network.hpp"
#include "dmcv/network_io.hpp"

namespace testsupport {

using dmcv::Network;
using dmcv::StateDistribution;
using dmcv::StateVector;

std::string data_path(const std::string& name);
dmcv::NetworkDocument fig1();

// The nine 3-MCs of the four-node example, in the order they are usually listed.
std::vector<StateVector> fig1_three_mcs();

struct RandomNetSpec {
    int min_nodes = 2;
    int max_nodes = 6;
    int max_arcs = 10;
    int max_capacity = 3;
    // Caps are redrawn until prod(W(a)+1) is at most this.
    double max_states = 5e4;
};

// One row of the worked example's candidate table for d = 3.
struct TableRow {
    int i;
    int j;
    StateVector x;
    int flow;
    std::vector<int> source_side; // empty when F < 3
    std::vector<int> sink_side;   // empty where the table leaves it blank
    bool dmc;
};
const std::vector<TableRow>& example_table();

// Random arcs over a planted 1 -> n path; source always reaches sink.
Network random_net(std::mt19937_64& rng, const RandomNetSpec& spec);
StateDistribution random_dist(const Network& net, std::mt19937_64& rng);
StateVector random_state(const Network& net, std::mt19937_64& rng);

double state_count(const Network& net);

// Max flow as the minimum over all node sets S with 1 in S, n not in S of the
// X-capacity of the arcs leaving S. Shares no code with the library solver.
class CutOracle {
public:
    explicit CutOracle(const Network& net);
    int flow(const StateVector& x) const;

private:
    std::vector<std::vector<int>> cut_arcs_; // 0-based arc indices per S
};

// Every minimal cut as an ascending arc-id list, found by testing arc subsets.
std::vector<std::vector<int>> brute_mcs(const Network& net);

// Whether 1 still reaches n once `removed` arcs are gone.
bool connected_without(const Network& net, const std::vector<int>& removed);

// Whole state space, F for each state. Index is mixed-radix in arc order.
struct StateTable {
    std::vector<int> radix;
    std::vector<int> flow;
    StateVector decode(std::size_t index) const;
};
StateTable tabulate(const Network& net);

// All d-MCs straight from the definition: F(X) = d and F(X + o_j) > d for
// every unsaturated j. Sorted.
std::vector<StateVector> brute_dmcs(const Network& net, const StateTable& table, int d);

// Pr(F(X) > d) summed over the state space.
double brute_reliability(const StateTable& table, const StateDistribution& dist, int d);

// Candidate of cut C under d: states on C sum to d, others at W.
bool generated_by(const Network& net, const std::vector<int>& cut, const StateVector& x, int d);

} // namespace testsupport
