#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace testsupport {

std::string data_path(const std::string& name) { return std::string(DMCV_TEST_DATA) + "/" + name; }

dmcv::NetworkDocument fig1() { return dmcv::load_network(data_path("fig1.net")); }

std::vector<StateVector> fig1_three_mcs() {
    return {
        {3, 2, 2, 2, 0, 3}, {2, 2, 2, 2, 1, 3}, {1, 2, 2, 2, 2, 3},
        {3, 2, 2, 2, 2, 1}, {3, 1, 2, 2, 2, 2}, {3, 0, 2, 2, 2, 3},
        {3, 2, 0, 2, 1, 3}, {3, 1, 1, 2, 1, 3}, {3, 1, 0, 2, 2, 3},
    };
}

const std::vector<TableRow>& example_table() {
    static const std::vector<TableRow> rows{
        {1, 1, {3, 2, 2, 2, 0, 3}, 3, {1}, {2, 3, 4}, true},
        {1, 2, {2, 2, 2, 2, 1, 3}, 3, {1}, {2, 3, 4}, true},
        {1, 3, {1, 2, 2, 2, 2, 3}, 3, {1}, {2, 3, 4}, true},
        {2, 1, {3, 2, 2, 2, 2, 1}, 3, {1, 2, 3}, {4}, true},
        {2, 2, {3, 1, 2, 2, 2, 2}, 3, {1, 2, 3}, {4}, true},
        {2, 3, {3, 0, 2, 2, 2, 3}, 3, {1, 2, 3}, {4}, true},
        {3, 1, {3, 2, 1, 2, 0, 3}, 3, {1}, {}, false},
        {3, 2, {3, 2, 0, 2, 1, 3}, 3, {1, 2}, {3, 4}, true},
        {3, 3, {3, 1, 2, 2, 0, 3}, 3, {1}, {}, false},
        {3, 4, {3, 1, 1, 2, 1, 3}, 3, {1, 2}, {3, 4}, true},
        {3, 5, {3, 1, 0, 2, 2, 3}, 3, {1, 2}, {3, 4}, true},
        {3, 6, {3, 0, 2, 2, 1, 3}, 3, {1, 2}, {4}, false},
        {3, 7, {3, 0, 1, 2, 2, 3}, 3, {1, 2}, {4}, false},
        {4, 1, {3, 2, 2, 0, 2, 0}, 2, {}, {}, false},
        {4, 2, {2, 2, 2, 1, 2, 0}, 2, {}, {}, false},
        {4, 3, {2, 2, 2, 0, 2, 1}, 3, {1, 3}, {4}, false},
        {4, 4, {1, 2, 2, 2, 2, 0}, 2, {}, {}, false},
        {4, 5, {1, 2, 2, 1, 2, 1}, 3, {1}, {}, false},
        {4, 6, {1, 2, 2, 0, 2, 2}, 3, {1}, {}, false},
        {4, 7, {0, 2, 2, 2, 2, 1}, 2, {}, {}, false},
        {4, 8, {0, 2, 2, 1, 2, 2}, 2, {}, {}, false},
        {4, 9, {0, 2, 2, 0, 2, 3}, 2, {}, {}, false},
    };
    return rows;
}

Network random_net(std::mt19937_64& rng, const RandomNetSpec& spec) {
    std::uniform_int_distribution<int> nodes_dist(spec.min_nodes, spec.max_nodes);
    const int n = nodes_dist(rng);
    for (;;) {
        std::vector<std::pair<int, int>> pairs;
        // planted path 1 -> ... -> n through a random subset of the middle
        std::vector<int> middle(static_cast<std::size_t>(n - 2));
        std::iota(middle.begin(), middle.end(), 2);
        std::shuffle(middle.begin(), middle.end(), rng);
        const auto keep = std::uniform_int_distribution<std::size_t>(0, middle.size())(rng);
        int prev = 1;
        for (std::size_t i = 0; i < keep; ++i) {
            pairs.emplace_back(prev, middle[i]);
            prev = middle[i];
        }
        pairs.emplace_back(prev, n);
        const int lo = static_cast<int>(pairs.size());
        const int hi = std::max(lo, spec.max_arcs);
        const int m = std::uniform_int_distribution<int>(lo, hi)(rng);
        std::uniform_int_distribution<int> node(1, n);
        while (static_cast<int>(pairs.size()) < m) {
            const int u = node(rng), v = node(rng);
            if (u != v) pairs.emplace_back(u, v);
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        std::uniform_int_distribution<int> cap(1, spec.max_capacity);
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<dmcv::Arc> arcs;
            double states = 1;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const int w = cap(rng);
                states *= w + 1;
                arcs.push_back({static_cast<int>(i) + 1, pairs[i].first, pairs[i].second, w});
            }
            if (states <= spec.max_states) return Network(n, std::move(arcs));
        }
    }
}

StateDistribution random_dist(const Network& net, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<std::vector<double>> pmf;
    for (const auto& a : net.arcs()) {
        std::vector<double> row(static_cast<std::size_t>(a.capacity) + 1);
        double total = 0;
        for (double& p : row) total += (p = u(rng));
        for (double& p : row) p /= total;
        // push the rounding residue into the last state so the row sums to 1
        row.back() = 1.0 - std::accumulate(row.begin(), row.end() - 1, 0.0);
        pmf.push_back(std::move(row));
    }
    return StateDistribution(net, std::move(pmf));
}

StateVector random_state(const Network& net, std::mt19937_64& rng) {
    std::vector<int> x;
    for (const auto& a : net.arcs()) x.push_back(std::uniform_int_distribution<int>(0, a.capacity)(rng));
    return StateVector(std::move(x));
}

double state_count(const Network& net) {
    double s = 1;
    for (const auto& a : net.arcs()) s *= a.capacity + 1;
    return s;
}

CutOracle::CutOracle(const Network& net) {
    const int n = net.node_count();
    if (n > 20) throw std::invalid_argument("cut oracle limited to 20 nodes");
    const int inner = n - 2; // nodes 2..n-1 are optional members of S
    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
        auto in_s = [&](int v) { return v == 1 || (v != n && ((mask >> (v - 2)) & 1u)); };
        std::vector<int> arcs;
        for (const auto& a : net.arcs())
            if (in_s(a.tail) && !in_s(a.head)) arcs.push_back(a.id - 1);
        cut_arcs_.push_back(std::move(arcs));
    }
}

int CutOracle::flow(const StateVector& x) const {
    const auto v = x.values();
    int best = -1;
    for (const auto& arcs : cut_arcs_) {
        int s = 0;
        for (int k : arcs) s += v[static_cast<std::size_t>(k)];
        if (best < 0 || s < best) best = s;
    }
    return best;
}

bool connected_without(const Network& net, const std::vector<int>& removed) {
    const int n = net.node_count();
    std::vector<char> gone(static_cast<std::size_t>(net.arc_count()) + 1, 0);
    for (int k : removed) gone[static_cast<std::size_t>(k)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == n) return true;
        for (const auto& a : net.arcs()) {
            if (gone[static_cast<std::size_t>(a.id)] || a.tail != v || seen[static_cast<std::size_t>(a.head)])
                continue;
            seen[static_cast<std::size_t>(a.head)] = 1;
            stack.push_back(a.head);
        }
    }
    return false;
}

std::vector<std::vector<int>> brute_mcs(const Network& net) {
    const int m = net.arc_count();
    if (m > 20) throw std::invalid_argument("arc-subset oracle limited to 20 arcs");
    auto members = [](std::uint32_t mask, int m_) {
        std::vector<int> out;
        for (int k = 0; k < m_; ++k)
            if ((mask >> k) & 1u) out.push_back(k + 1);
        return out;
    };
    std::vector<char> is_cut(std::size_t{1} << m, 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        is_cut[mask] = !connected_without(net, members(mask, m));
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (!is_cut[mask]) continue;
        bool minimal = true;
        for (int k = 0; k < m && minimal; ++k)
            if (((mask >> k) & 1u) && is_cut[mask & ~(1u << k)]) minimal = false;
        if (minimal) out.push_back(members(mask, m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

StateVector StateTable::decode(std::size_t index) const {
    std::vector<int> x(radix.size());
    for (std::size_t k = 0; k < radix.size(); ++k) {
        x[k] = static_cast<int>(index % static_cast<std::size_t>(radix[k]));
        index /= static_cast<std::size_t>(radix[k]);
    }
    return StateVector(std::move(x));
}

StateTable tabulate(const Network& net) {
    if (state_count(net) > 5e6) throw std::invalid_argument("state space too large for the oracle");
    StateTable t;
    for (const auto& a : net.arcs()) t.radix.push_back(a.capacity + 1);
    const auto total = static_cast<std::size_t>(state_count(net));
    const CutOracle oracle(net);
    t.flow.resize(total);
    for (std::size_t i = 0; i < total; ++i) t.flow[i] = oracle.flow(t.decode(i));
    return t;
}

std::vector<StateVector> brute_dmcs(const Network& net, const StateTable& table, int d) {
    std::vector<StateVector> out;
    std::vector<std::size_t> stride(table.radix.size());
    std::size_t s = 1;
    for (std::size_t k = 0; k < table.radix.size(); ++k) {
        stride[k] = s;
        s *= static_cast<std::size_t>(table.radix[k]);
    }
    for (std::size_t i = 0; i < table.flow.size(); ++i) {
        if (table.flow[i] != d) continue;
        const StateVector x = table.decode(i);
        bool minimal = true;
        for (const auto& a : net.arcs()) {
            if (x[a.id] == a.capacity) continue;
            if (table.flow[i + stride[static_cast<std::size_t>(a.id - 1)]] <= d) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double brute_reliability(const StateTable& table, const StateDistribution& dist, int d) {
    double r = 0;
    for (std::size_t i = 0; i < table.flow.size(); ++i) {
        if (table.flow[i] <= d) continue;
        const StateVector x = table.decode(i);
        double p = 1;
        for (int k = 1; k <= static_cast<int>(x.size()); ++k) p *= dist.mass(k, x[k]);
        r += p;
    }
    return r;
}

bool generated_by(const Network& net, const std::vector<int>& cut, const StateVector& x, int d) {
    int sum = 0;
    for (const auto& a : net.arcs()) {
        const bool on_cut = std::find(cut.begin(), cut.end(), a.id) != cut.end();
        if (x[a.id] < 0 || x[a.id] > a.capacity) return false;
        if (on_cut)
            sum += x[a.id];
        else if (x[a.id] != a.capacity)
            return false;
    }
    return sum == d;
}

} // namespace testsupport
