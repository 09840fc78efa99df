#include "dmcv/reliability.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dmcv/errors.hpp"
#include "dmcv/flow.hpp"

namespace dmcv {
namespace {

// Depth-first walk over subsets: each level either skips vector i or folds it
// into the running componentwise minimum, flipping the sign.
class InclusionExclusion {
public:
    InclusionExclusion(const StateDistribution& dist, std::span<const StateVector> vectors)
        : dist_(dist), vectors_(vectors) {}

    double run() {
        if (vectors_.empty()) return 0.0;
        const std::size_t m = vectors_.front().size();
        for (const auto& v : vectors_)
            if (v.size() != m) throw std::invalid_argument("state vectors differ in length");
        std::vector<int> floor(m, 0);
        double total = 0.0;
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            auto v = vectors_[i].values();
            std::copy(v.begin(), v.end(), floor.begin());
            total += descend(i + 1, floor, 1.0);
        }
        return total;
    }

    std::size_t terms() const noexcept { return terms_; }

private:
    // Contribution of all subsets whose smallest member is already folded
    // into `floor`, adding members from index `next` on.
    double descend(std::size_t next, std::vector<int>& floor, double sign) {
        ++terms_;
        double acc = sign * product(floor);
        std::vector<int> saved;
        for (std::size_t i = next; i < vectors_.size(); ++i) {
            saved = floor;
            auto v = vectors_[i].values();
            for (std::size_t k = 0; k < floor.size(); ++k) floor[k] = std::min(floor[k], v[k]);
            acc += descend(i + 1, floor, -sign);
            floor = saved;
        }
        return acc;
    }

    double product(const std::vector<int>& x) const {
        double p = 1.0;
        for (std::size_t k = 0; k < x.size() && p != 0.0; ++k)
            p *= dist_.cdf(static_cast<ArcId>(k + 1), x[k]);
        return p;
    }

    const StateDistribution& dist_;
    std::span<const StateVector> vectors_;
    std::size_t terms_ = 0;
};

} // namespace

std::string_view method_name(ReliabilityMethod m) {
    return m == ReliabilityMethod::kInclusionExclusion ? "ie" : "brute";
}

double lower_set_prob(const StateDistribution& dist, const StateVector& x) {
    if (static_cast<int>(x.size()) != dist.arc_count())
        throw std::invalid_argument("state vector length does not match the distribution");
    double p = 1.0;
    for (int k = 1; k <= dist.arc_count(); ++k) p *= dist.cdf(k, x[k]);
    return p;
}

double union_prob_ie(const StateDistribution& dist, std::span<const StateVector> vectors,
                     std::size_t* term_count) {
    if (vectors.size() > kMaxInclusionExclusionVectors)
        throw LimitError(std::to_string(vectors.size()) +
                         " vectors exceed the inclusion-exclusion limit of " +
                         std::to_string(kMaxInclusionExclusionVectors) +
                         "; use the brute-force method");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dist.arc_count())
            throw std::invalid_argument("state vector length does not match the distribution");
    InclusionExclusion ie(dist, vectors);
    const double u = ie.run();
    if (term_count) *term_count = ie.terms();
    return u;
}

ReliabilityResult reliability_from_dmcs(const StateDistribution& dist,
                                        std::span<const StateVector> dmcs, int d) {
    ReliabilityResult out;
    out.d = d;
    out.method = ReliabilityMethod::kInclusionExclusion;
    out.union_prob = union_prob_ie(dist, dmcs, &out.term_count);
    out.r = 1.0 - out.union_prob;
    return out;
}

ReliabilityResult brute_force_reliability(const Network& net, const StateDistribution& dist, int d) {
    if (dist.arc_count() != net.arc_count())
        throw std::invalid_argument("distribution does not match the network");
    double states = 1.0;
    for (const Arc& a : net.arcs()) states *= a.capacity + 1.0;
    if (states > kMaxBruteForceStates)
        throw LimitError("state space of " + std::to_string(static_cast<long long>(states)) +
                         " vectors exceeds the brute-force limit");

    ReliabilityResult out;
    out.d = d;
    out.method = ReliabilityMethod::kBruteForce;
    FlowSolver solver(net);
    const int m = net.arc_count();
    StateVector x(std::vector<int>(static_cast<std::size_t>(m), 0));
    double low = 0.0;
    for (;;) {
        ++out.term_count;
        if (solver.solve(x) <= d) {
            double p = 1.0;
            for (int k = 1; k <= m && p != 0.0; ++k) p *= dist.mass(k, x[k]);
            low += p;
        }
        // Odometer over 0..W(a), arc 1 fastest.
        int k = 1;
        for (; k <= m; ++k) {
            if (x[k] < net.arc(k).capacity) {
                ++x[k];
                break;
            }
            x[k] = 0;
        }
        if (k > m) break;
    }
    out.union_prob = low;
    out.r = 1.0 - low;
    return out;
}

} // namespace dmcv
