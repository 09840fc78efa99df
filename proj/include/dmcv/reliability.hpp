#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dmcv/network.hpp"

namespace dmcv {

enum class ReliabilityMethod {
    kInclusionExclusion, // union of d-MC lower sets
    kBruteForce,         // sum over every state vector with F(X) <= d
};

std::string_view method_name(ReliabilityMethod m);

// R_{d+1} = Pr(F(X) >= d+1) = 1 - union_prob.
struct ReliabilityResult {
    int d = 0;
    double r = 1.0;
    double union_prob = 0.0;
    // Inclusion-exclusion: subsets evaluated. Brute force: states visited.
    std::size_t term_count = 0;
    ReliabilityMethod method = ReliabilityMethod::kInclusionExclusion;
};

inline constexpr std::size_t kMaxInclusionExclusionVectors = 25;
inline constexpr double kMaxBruteForceStates = 1e7;

// Pr({Y | Y <= X}) = product over arcs of cdf(a, X(a)).
double lower_set_prob(const StateDistribution& dist, const StateVector& x);

// Pr(union of the lower sets of `vectors`) by plain inclusion-exclusion over
// all 2^K - 1 non-empty subsets; the intersection of lower sets is the lower
// set of the componentwise minimum. Throws dmcv::LimitError for K > 25.
double union_prob_ie(const StateDistribution& dist, std::span<const StateVector> vectors,
                     std::size_t* term_count = nullptr);

// R_{d+1} from the complete d-MC set.
ReliabilityResult reliability_from_dmcs(const StateDistribution& dist,
                                        std::span<const StateVector> dmcs, int d);

// R_{d+1} by enumerating all prod(W(a)+1) state vectors. Throws
// dmcv::LimitError above 10^7 states.
ReliabilityResult brute_force_reliability(const Network& net, const StateDistribution& dist, int d);

} // namespace dmcv
