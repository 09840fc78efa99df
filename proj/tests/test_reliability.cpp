#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dmcv/cuts.hpp"
#include "dmcv/errors.hpp"
#include "dmcv/filters.hpp"
#include "dmcv/reliability.hpp"
#include "support.hpp"

using namespace dmcv;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

TEST_CASE("lower set probabilities from the example distribution") {
    const auto doc = testsupport::fig1();
    const auto& dist = *doc.distribution;
    CHECK(close(lower_set_prob(dist, StateVector{3, 2, 2, 2, 0, 3}), 0.05, 1e-15));
    CHECK(close(lower_set_prob(dist, StateVector{3, 0, 2, 2, 2, 3}), 0.15, 1e-15));
    CHECK(lower_set_prob(dist, doc.network.capacities()) == 1.0);
    CHECK(close(lower_set_prob(dist, StateVector{0, 0, 0, 0, 0, 0}),
                0.10 * 0.15 * 0.25 * 0.20 * 0.05 * 0.05, 1e-18));
}

TEST_CASE("example, d = 3: both routes give the exact value") {
    const auto doc = testsupport::fig1();
    const auto& dist = *doc.distribution;
    const auto dmcs = testsupport::fig1_three_mcs();
    std::size_t terms = 0;
    const double u = union_prob_ie(dist, dmcs, &terms);
    CHECK(terms == 511);
    // 4391/8000 in exact arithmetic
    CHECK(close(u, 0.548875, 1e-12));
    const auto ie = reliability_from_dmcs(dist, dmcs, 3);
    CHECK(close(ie.r, 0.451125, 1e-12));
    CHECK(ie.r == 1.0 - ie.union_prob);
    CHECK(ie.method == ReliabilityMethod::kInclusionExclusion);
    const auto brute = brute_force_reliability(doc.network, dist, 3);
    CHECK(brute.term_count == 1296);
    CHECK(brute.method == ReliabilityMethod::kBruteForce);
    CHECK(close(brute.r, ie.r, 1e-12));
    CHECK(close(brute.union_prob, ie.union_prob, 1e-12));
}

TEST_CASE("singleton and empty lists") {
    const auto doc = testsupport::fig1();
    const auto& dist = *doc.distribution;
    const std::vector<StateVector> one{{2, 2, 2, 2, 1, 3}};
    CHECK(union_prob_ie(dist, one) == lower_set_prob(dist, one[0]));
    CHECK(union_prob_ie(dist, {}) == 0.0);
}

TEST_CASE("permutations and duplicates leave the union unchanged") {
    const auto doc = testsupport::fig1();
    const auto& dist = *doc.distribution;
    auto v = testsupport::fig1_three_mcs();
    const double base = union_prob_ie(dist, v);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(close(union_prob_ie(dist, v), base, 1e-12));
    }
    auto dup = v;
    dup.push_back(v[0]);
    dup.push_back(v[4]);
    CHECK(close(union_prob_ie(dist, dup), base, 1e-12));
}

TEST_CASE("size guards") {
    const auto doc = testsupport::fig1();
    std::vector<StateVector> many(26, StateVector{0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(union_prob_ie(*doc.distribution, many), LimitError);
    std::vector<Arc> arcs;
    for (int k = 1; k <= 8; ++k) arcs.push_back({k, 1, 2, 9});
    const Network big(2, arcs);
    const StateDistribution flat(big, std::vector<std::vector<double>>(8, std::vector<double>(10, 0.1)));
    CHECK_THROWS_AS(brute_force_reliability(big, flat, 3), LimitError);
}

TEST_CASE("every d on the example: routes agree and R is non-increasing") {
    const auto doc = testsupport::fig1();
    const auto mcs = enumerate_mcs(doc.network);
    const auto table = testsupport::tabulate(doc.network);
    double prev = 1.0;
    for (int d = 0; d < 5; ++d) {
        const auto ie = reliability_from_dmcs(*doc.distribution, verify_dmcv(doc.network, mcs, d).vectors(), d);
        const auto brute = brute_force_reliability(doc.network, *doc.distribution, d);
        CHECK(close(ie.r, brute.r, 1e-12));
        CHECK(close(ie.r, testsupport::brute_reliability(table, *doc.distribution, d), 1e-12));
        CHECK(ie.r <= prev + 1e-12);
        prev = ie.r;
    }
}

TEST_CASE("random networks: inclusion-exclusion matches state-space summation") {
    std::mt19937_64 rng(606);
    testsupport::RandomNetSpec spec;
    spec.max_nodes = 6;
    spec.max_arcs = 9;
    spec.max_states = 1e5;
    int compared = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Network net = testsupport::random_net(rng, spec);
        const auto dist = testsupport::random_dist(net, rng);
        const auto mcs = enumerate_mcs(net);
        const auto table = testsupport::tabulate(net);
        const int top = analyze(net, net.capacities()).value;
        double prev = 1.0;
        for (int d = 0; d < top; ++d) {
            const auto dmcs = verify_dmcv(net, mcs, d).vectors();
            if (dmcs.size() > kMaxInclusionExclusionVectors) continue;
            const auto ie = reliability_from_dmcs(dist, dmcs, d);
            const auto brute = brute_force_reliability(net, dist, d);
            CHECK(close(ie.r, brute.r, 1e-9));
            CHECK(close(brute.r, testsupport::brute_reliability(table, dist, d), 1e-9));
            CHECK(ie.r >= -1e-12);
            CHECK(ie.r <= 1 + 1e-12);
            CHECK(ie.r <= prev + 1e-12);
            prev = ie.r;
            ++compared;
        }
    }
    CHECK(compared > 50);
}

TEST_CASE("method names") {
    CHECK(method_name(ReliabilityMethod::kInclusionExclusion) == "ie");
    CHECK(method_name(ReliabilityMethod::kBruteForce) == "brute");
}
