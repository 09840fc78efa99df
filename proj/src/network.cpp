#include "dmcv/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmcv {

std::string StateVector::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < states_.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(states_[k]);
    }
    out += ')';
    return out;
}

Network::Network(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
    if (node_count_ < 2)
        throw std::invalid_argument("network needs at least 2 nodes (source and sink)");
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
        const Arc& a = arcs_[k];
        if (a.id != static_cast<ArcId>(k + 1)) {
            if (k > 0 && a.id == arcs_[k - 1].id)
                throw std::invalid_argument("duplicate arc id " + std::to_string(a.id));
            throw std::invalid_argument("arc ids must be 1..m without gaps (missing " +
                                        std::to_string(k + 1) + ")");
        }
        if (!valid_node(a.tail) || !valid_node(a.head))
            throw std::invalid_argument("arc " + std::to_string(a.id) + " endpoint out of range");
        if (a.tail == a.head)
            throw std::invalid_argument("arc " + std::to_string(a.id) + " is a self-loop");
        if (a.capacity < 0)
            throw std::invalid_argument("arc " + std::to_string(a.id) + " has negative capacity");
    }

    incidence_.resize(static_cast<std::size_t>(node_count_) + 1);
    for (const Arc& a : arcs_) {
        incidence_[static_cast<std::size_t>(a.tail)].push_back({a.id, a.head, true});
        incidence_[static_cast<std::size_t>(a.head)].push_back({a.id, a.tail, false});
    }
}

const Arc& Network::arc(ArcId k) const {
    if (!valid_arc(k)) throw std::invalid_argument("unknown arc id " + std::to_string(k));
    return arcs_[static_cast<std::size_t>(k - 1)];
}

StateVector Network::capacities() const {
    std::vector<int> w;
    w.reserve(arcs_.size());
    for (const Arc& a : arcs_) w.push_back(a.capacity);
    return StateVector(std::move(w));
}

void Network::check_bound(const StateVector& x) const {
    if (x.size() != arcs_.size())
        throw std::invalid_argument("state vector length " + std::to_string(x.size()) +
                                    " does not match arc count " + std::to_string(arcs_.size()));
    for (const Arc& a : arcs_) {
        if (x[a.id] < 0 || x[a.id] > a.capacity)
            throw std::invalid_argument("state of arc " + std::to_string(a.id) +
                                        " outside 0.." + std::to_string(a.capacity));
    }
}

StateDistribution::StateDistribution(const Network& net, std::vector<std::vector<double>> pmf)
    : pmf_(std::move(pmf)) {
    if (static_cast<int>(pmf_.size()) != net.arc_count())
        throw std::invalid_argument("distribution covers " + std::to_string(pmf_.size()) +
                                    " arcs, network has " + std::to_string(net.arc_count()));
    cumulative_.reserve(pmf_.size());
    for (const Arc& a : net.arcs()) {
        auto& row = pmf_[static_cast<std::size_t>(a.id - 1)];
        if (row.size() > static_cast<std::size_t>(a.capacity) + 1)
            throw std::invalid_argument("arc " + std::to_string(a.id) +
                                        " has probability mass above its capacity");
        row.resize(static_cast<std::size_t>(a.capacity) + 1, 0.0);
        double sum = 0.0;
        std::vector<double> cum;
        cum.reserve(row.size());
        for (double p : row) {
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("arc " + std::to_string(a.id) +
                                            " has a probability outside [0,1]");
            sum += p;
            cum.push_back(sum);
        }
        if (std::abs(sum - 1.0) > kSumTolerance)
            throw std::invalid_argument("probabilities of arc " + std::to_string(a.id) +
                                        " sum to " + std::to_string(sum) + ", expected 1");
        cumulative_.push_back(std::move(cum));
    }
}

void StateDistribution::check_arc(ArcId k) const {
    if (k < 1 || k > arc_count()) throw std::invalid_argument("unknown arc id " + std::to_string(k));
}

double StateDistribution::mass(ArcId k, int s) const {
    check_arc(k);
    const auto& row = pmf_[static_cast<std::size_t>(k - 1)];
    if (s < 0 || static_cast<std::size_t>(s) >= row.size()) return 0.0;
    return row[static_cast<std::size_t>(s)];
}

double StateDistribution::cdf(ArcId k, int s) const {
    check_arc(k);
    const auto& cum = cumulative_[static_cast<std::size_t>(k - 1)];
    if (s < 0) return 0.0;
    if (static_cast<std::size_t>(s) + 1 >= cum.size()) return 1.0;
    return cum[static_cast<std::size_t>(s)];
}

std::span<const double> StateDistribution::pmf(ArcId k) const {
    check_arc(k);
    return pmf_[static_cast<std::size_t>(k - 1)];
}

double cdf(const StateDistribution& dist, ArcId k, int s) { return dist.cdf(k, s); }

StateVector bump(const StateVector& x, ArcId j) {
    if (j < 1 || static_cast<std::size_t>(j) > x.size())
        throw std::invalid_argument("unknown arc id " + std::to_string(j));
    StateVector y = x;
    ++y[j];
    return y;
}

bool leq(const StateVector& x, const StateVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("state vectors differ in length");
    auto a = x.values();
    auto b = y.values();
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

std::vector<ArcId> unsaturated(const Network& net, const StateVector& x) {
    std::vector<ArcId> out;
    for (const Arc& a : net.arcs())
        if (x[a.id] < a.capacity) out.push_back(a.id);
    return out;
}

} // namespace dmcv
