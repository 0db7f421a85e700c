#include <algorithm>
#include <set>

#include "chaindex/decomposition.hpp"
#include "chaindex/generators.hpp"
#include "chaindex/stopwatch.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace chaindex;

TEST_CASE("node_order_paths on a path graph gives one path") {
    ChainDecomposition dec = node_order_paths(testutil::path_dag(3));
    REQUIRE(dec.k_c() == 1);
    CHECK(dec.chains[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("node_order_paths on isolated vertices gives singletons") {
    ChainDecomposition dec = node_order_paths(testutil::make_dag(2, {}));
    CHECK(dec.k_c() == 2);
}

TEST_CASE("node_order_paths on the diamond") {
    Dag d = testutil::make_dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    ChainDecomposition dec = node_order_paths(d);
    CHECK(dec.k_c() == 2);
    CHECK(dec.chains[0] == std::vector<int>{0, 1, 3});
    CHECK(dec.chains[1] == std::vector<int>{2});
    CHECK(testutil::valid_decomposition(d, dec, /*require_edges=*/true));
}

TEST_CASE("node_order_paths always yields edge-joined paths") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
        Dag d = testutil::sample_dag(4 + static_cast<int>(seed % 13), seed);
        CHECK(testutil::valid_decomposition(d, node_order_paths(d), /*require_edges=*/true));
    }
}

TEST_CASE("reversed_dfs_lookup with no predecessors blocks only the start") {
    Dag d = testutil::make_dag(2, {{0, 1}});
    std::vector<char> blocked(2, 0);
    LookupResult r = reversed_dfs_lookup(d, 0, [](int) { return false; }, blocked);
    CHECK(r.path.empty());
    CHECK(r.blocked == std::vector<int>{0});
    CHECK(blocked[0] == 1);
    CHECK(blocked[1] == 0);
}

TEST_CASE("reversed_dfs_lookup finds an immediate tail") {
    Dag d = testutil::make_dag(3, {{1, 2}});
    std::vector<char> blocked(3, 0);
    LookupResult r = reversed_dfs_lookup(d, 2, [](int v) { return v == 1; }, blocked);
    CHECK(r.path == std::vector<int>{1, 2});
    CHECK(r.blocked.empty());
    CHECK(blocked[1] == 0);
    CHECK(blocked[2] == 0);  // on the path, stays available
}

TEST_CASE("reversed_dfs_lookup exhausts the ancestor cone on failure") {
    Dag d = testutil::make_dag(3, {{0, 1}, {1, 2}, {0, 2}});
    std::vector<char> blocked(3, 0);
    LookupResult r = reversed_dfs_lookup(d, 2, [](int) { return false; }, blocked);
    CHECK(r.path.empty());
    CHECK(std::set<int>(r.blocked.begin(), r.blocked.end()) == std::set<int>{0, 1, 2});
}

TEST_CASE("reversed_dfs_lookup still tests blocked vertices against the predicate") {
    // 0 -> 2, 0 -> 3: first lookup from 2 blocks 0; a later lookup from 3 must
    // still stop at 0 once 0 became a tail.
    Dag d = testutil::make_dag(4, {{0, 2}, {0, 3}});
    std::vector<char> blocked(4, 0);
    LookupResult first = reversed_dfs_lookup(d, 2, [](int) { return false; }, blocked);
    CHECK(std::set<int>(first.blocked.begin(), first.blocked.end()) == std::set<int>{0, 2});
    LookupResult second = reversed_dfs_lookup(d, 3, [](int v) { return v == 0; }, blocked);
    CHECK(second.path == std::vector<int>{0, 3});
}

TEST_CASE("concatenate merges two paths joined by an edge") {
    Dag d = testutil::make_dag(4, {{0, 1}, {1, 2}, {2, 3}});
    ChainDecomposition paths = decomposition_from_chains(d, {{0, 1}, {2, 3}});
    auto [dec, stats] = concatenate(d, paths);
    REQUIRE(dec.k_c() == 1);
    CHECK(dec.chains[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(stats.k_p == 2);
    CHECK(stats.k_c == 1);
    CHECK(stats.concatenations == 1);
}

TEST_CASE("concatenate leaves a concatenation-free decomposition unchanged") {
    Dag d = testutil::make_dag(4, {{0, 1}, {2, 3}});
    ChainDecomposition paths = decomposition_from_chains(d, {{0, 1}, {2, 3}});
    auto [dec, stats] = concatenate(d, paths);
    CHECK(dec.chains == paths.chains);
    CHECK(stats.concatenations == 0);
}

TEST_CASE("concatenate output is valid, concatenation-free, and counts c = k_p - k_c") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Dag d = testutil::sample_dag(3 + static_cast<int>(seed % 13), seed);
        ChainDecomposition paths = node_order_paths(d);
        auto [dec, stats] = concatenate(d, paths);
        CHECK(stats.k_p == paths.k_c());
        CHECK(stats.concatenations == stats.k_p - stats.k_c);
        CHECK(dec.k_c() == stats.k_c);
        CHECK(testutil::valid_decomposition(d, dec));
        CHECK(testutil::concatenation_free(d, dec));
    }
}

TEST_CASE("greedy_chains on a path graph gives one chain") {
    auto [dec, stats] = greedy_chains(testutil::path_dag(5));
    CHECK(dec.k_c() == 1);
    CHECK(dec.chains[0] == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("greedy_chains is valid and bounded below by the width") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Dag d = testutil::sample_dag(2 + static_cast<int>(seed % 14), seed);
        auto [dec, stats] = greedy_chains(d);
        CHECK(testutil::valid_decomposition(d, dec));
        CHECK(dec.k_c() >= testutil::brute_width(d));
        CHECK(stats.k_p - stats.k_c == stats.concatenations);
    }
}

TEST_CASE("greedy_chains is concatenation-free on small random DAGs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Dag d = testutil::sample_dag(2 + static_cast<int>(seed % 14), seed);
        auto [dec, stats] = greedy_chains(d);
        CHECK(testutil::concatenation_free(d, dec));
    }
}

TEST_CASE("greedy_chains is deterministic") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Dag d = testutil::sample_dag(25, seed);
        auto [a, sa] = greedy_chains(d);
        auto [b, sb] = greedy_chains(d);
        CHECK(a.chains == b.chains);
        CHECK(sa.concatenations == sb.concatenations);
    }
}

TEST_CASE("concatenate handles a 10k-vertex ER graph quickly") {
    Dag d = sort_adjacency_lists(gen_er(10000, er_p_for_degree(10000, 10), 1));
    ChainDecomposition paths = node_order_paths(d);
    Stopwatch sw;
    auto [dec, stats] = concatenate(d, paths);
    double elapsed_ms = sw.elapsed_us() / 1000.0;
    CHECK(elapsed_ms < 2000);  // measured low tens of ms; generous bound
    CHECK(stats.k_p == paths.k_c());
    CHECK(stats.k_p - stats.k_c == stats.concatenations);
    CHECK(dec.k_c() < paths.k_c());

    // structural validity without the quadratic closure oracle
    std::vector<char> covered(d.n, 0);
    for (const auto& chain : dec.chains)
        for (std::size_t i = 0; i < chain.size(); ++i) {
            CHECK(!covered[chain[i]]);
            covered[chain[i]] = 1;
            if (i > 0) CHECK(d.topo_rank[chain[i - 1]] < d.topo_rank[chain[i]]);
        }
    CHECK(std::count(covered.begin(), covered.end(), 1) == d.n);
    // spot-check reachability along a few concatenated chain joints
    for (int c = 0; c < dec.k_c(); c += dec.k_c() / 10 + 1) {
        const auto& chain = dec.chains[c];
        for (std::size_t i = 1; i < chain.size(); i += std::max<std::size_t>(chain.size() / 4, 1)) {
            auto reach = dfs_reachable(d, chain[i - 1]);
            CHECK(std::binary_search(reach.begin(), reach.end(), chain[i]));
        }
    }
}

TEST_CASE("greedy_chains lands near the optimum on ER 5000/10") {
    Dag d = sort_adjacency_lists(gen_er(5000, er_p_for_degree(5000, 10), 1));
    auto [dec, stats] = greedy_chains(d);
    CHECK(dec.k_c() >= 403);  // cannot beat the optimum
    CHECK(dec.k_c() <= 650);
}

TEST_CASE("decomposition_from_chains validates its input") {
    Dag d = testutil::path_dag(3);
    CHECK_THROWS_AS(decomposition_from_chains(d, {{0, 1}}), InputError);          // not covering
    CHECK_THROWS_AS(decomposition_from_chains(d, {{0, 1}, {1, 2}}), InputError);  // overlap
    CHECK_THROWS_AS(decomposition_from_chains(d, {{1, 0}, {2}}), InputError);     // rank order
}
