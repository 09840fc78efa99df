#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dmcv/cuts.hpp"
#include "dmcv/network.hpp"

namespace dmcv {

// X_{i,j}: the j-th d-MC candidate of MC C_i. The states on C_i sum to d and
// stay within W; every other arc sits at W.
struct Candidate {
    StateVector vector;
    int mc_index = 0;
    int ordinal = 0;
};

// Streams the candidates of one MC in descending lexicographic order of the
// states on the cut's arcs (arcs by id), without materializing the list.
class CandidateGenerator {
public:
    CandidateGenerator(const Network& net, const MinCut& mc, int d);

    // Advances to the next candidate; false once exhausted.
    bool next();

    const StateVector& current() const noexcept { return current_; }
    int ordinal() const noexcept { return ordinal_; }
    int mc_index() const noexcept { return mc_index_; }

private:
    bool first();

    std::vector<ArcId> arcs_;
    std::vector<int> caps_;
    std::vector<int> parts_;
    // suffix_cap_[i] = sum of caps_[i..]
    std::vector<long long> suffix_cap_;
    StateVector current_;
    int demand_;
    int mc_index_;
    int ordinal_ = 0;
    bool started_ = false;
    bool done_ = false;
};

// Candidates of one MC, in the generator's order. Throws
// std::invalid_argument for negative d.
std::vector<Candidate> enumerate_candidates(const Network& net, const MinCut& mc, int d);

// d#(C): the candidate lists of every MC, in MC order.
struct CandidateSet {
    std::vector<std::vector<Candidate>> per_mc;

    std::size_t total() const;
};

CandidateSet build_candidate_set(const Network& net, std::span<const MinCut> mcs, int d);

// Number of bounded compositions of d into parts part_k <= caps[k].
long long count_compositions(std::span<const int> caps, int d);

// Candidate source consumed by the filters: one candidate at a time, in MC
// order then ordinal order.
class CandidateStream {
public:
    virtual ~CandidateStream() = default;
    // Returns nullptr when exhausted. The pointer is valid until the next call.
    virtual const Candidate* next() = 0;
};

// Lazily generates candidates of `mcs`.
class GeneratedCandidates final : public CandidateStream {
public:
    GeneratedCandidates(const Network& net, std::span<const MinCut> mcs, int d);
    const Candidate* next() override;

private:
    const Network& net_;
    std::span<const MinCut> mcs_;
    int d_;
    std::size_t mc_ = 0;
    std::optional<CandidateGenerator> gen_;
    Candidate slot_;
};

// Walks a materialized CandidateSet.
class StoredCandidates final : public CandidateStream {
public:
    explicit StoredCandidates(const CandidateSet& set) : set_(set) {}
    const Candidate* next() override;

private:
    const CandidateSet& set_;
    std::size_t mc_ = 0;
    std::size_t j_ = 0;
};

} // namespace dmcv
