#include "dmcv/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmcv {

CandidateGenerator::CandidateGenerator(const Network& net, const MinCut& mc, int d)
    : arcs_(mc.arcs), current_(net.capacities()), demand_(d), mc_index_(mc.index) {
    if (d < 0) throw std::invalid_argument("demand d must be non-negative");
    for (ArcId k : arcs_) caps_.push_back(net.arc(k).capacity);
    parts_.assign(arcs_.size(), 0);
    suffix_cap_.assign(arcs_.size() + 1, 0);
    for (std::size_t i = arcs_.size(); i-- > 0;) suffix_cap_[i] = suffix_cap_[i + 1] + caps_[i];
}

bool CandidateGenerator::first() {
    if (suffix_cap_[0] < demand_) return false;
    int rest = demand_;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        parts_[i] = std::min(caps_[i], rest);
        rest -= parts_[i];
    }
    return true;
}

bool CandidateGenerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (!first()) {
            done_ = true;
            return false;
        }
    } else {
        // Rightmost position that can give up one unit to the positions after
        // it; then refill that suffix greedily from the left.
        const std::size_t len = parts_.size();
        long long suffix_sum = 0;
        std::size_t i = len;
        bool found = false;
        while (i-- > 0) {
            if (parts_[i] > 0 && suffix_cap_[i + 1] >= suffix_sum + 1) {
                found = true;
                break;
            }
            suffix_sum += parts_[i];
        }
        if (!found) {
            done_ = true;
            return false;
        }
        --parts_[i];
        long long rest = suffix_sum + 1;
        for (std::size_t k = i + 1; k < len; ++k) {
            parts_[k] = static_cast<int>(std::min<long long>(caps_[k], rest));
            rest -= parts_[k];
        }
    }
    for (std::size_t i = 0; i < arcs_.size(); ++i) current_[arcs_[i]] = parts_[i];
    ++ordinal_;
    return true;
}

std::vector<Candidate> enumerate_candidates(const Network& net, const MinCut& mc, int d) {
    CandidateGenerator gen(net, mc, d);
    std::vector<Candidate> out;
    while (gen.next()) out.push_back({gen.current(), gen.mc_index(), gen.ordinal()});
    return out;
}

std::size_t CandidateSet::total() const {
    std::size_t n = 0;
    for (const auto& list : per_mc) n += list.size();
    return n;
}

CandidateSet build_candidate_set(const Network& net, std::span<const MinCut> mcs, int d) {
    CandidateSet set;
    set.per_mc.reserve(mcs.size());
    for (const MinCut& mc : mcs) set.per_mc.push_back(enumerate_candidates(net, mc, d));
    return set;
}

long long count_compositions(std::span<const int> caps, int d) {
    if (d < 0) return 0;
    // ways[s] = compositions of s over the parts seen so far.
    std::vector<long long> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (int cap : caps) {
        std::vector<long long> next(ways.size(), 0);
        for (int s = 0; s <= d; ++s) {
            if (ways[static_cast<std::size_t>(s)] == 0) continue;
            for (int x = 0; x <= cap && s + x <= d; ++x)
                next[static_cast<std::size_t>(s + x)] += ways[static_cast<std::size_t>(s)];
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(d)];
}

GeneratedCandidates::GeneratedCandidates(const Network& net, std::span<const MinCut> mcs, int d)
    : net_(net), mcs_(mcs), d_(d) {
    if (d < 0) throw std::invalid_argument("demand d must be non-negative");
}

const Candidate* GeneratedCandidates::next() {
    while (mc_ < mcs_.size()) {
        if (!gen_) gen_.emplace(net_, mcs_[mc_], d_);
        CandidateGenerator& g = *gen_;
        if (g.next()) {
            slot_.vector = g.current();
            slot_.mc_index = g.mc_index();
            slot_.ordinal = g.ordinal();
            return &slot_;
        }
        gen_.reset();
        ++mc_;
    }
    return nullptr;
}

const Candidate* StoredCandidates::next() {
    while (mc_ < set_.per_mc.size()) {
        const auto& list = set_.per_mc[mc_];
        if (j_ < list.size()) return &list[j_++];
        ++mc_;
        j_ = 0;
    }
    return nullptr;
}

} // namespace dmcv
