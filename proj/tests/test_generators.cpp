#include "chaindex/generators.hpp"

#include <algorithm>
#include <cmath>

#include "chaindex/width.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace chaindex;

namespace {

std::vector<std::pair<int, int>> edges_of(const Dag& d) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < d.n; ++u)
        for (int v : d.out_adj[u]) e.emplace_back(u, v);
    std::sort(e.begin(), e.end());
    return e;
}

int max_total_degree(const Dag& d) {
    int best = 0;
    for (int v = 0; v < d.n; ++v)
        best = std::max(best, static_cast<int>(d.out_adj[v].size() + d.in_adj[v].size()));
    return best;
}

}  // namespace

TEST_CASE("gen_er extremes") {
    CHECK(gen_er(100, 0.0, 1).edge_count() == 0);
    CHECK(gen_er(4, 1.0, 1).edge_count() == 6);
}

TEST_CASE("gen_er edge count within 3 sigma of the binomial mean") {
    // p chosen for average total degree 10: expected edges n*(n-1)/2 * p = 4995
    const int n = 1000;
    const double p = 10.0 / (n - 1);
    const double pairs = n * (n - 1) / 2.0;
    const double mean = pairs * p;
    const double sigma = std::sqrt(pairs * p * (1 - p));
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto m = static_cast<double>(gen_er(n, p, seed).edge_count());
        CHECK(std::abs(m - mean) <= 3 * sigma);
    }
}

TEST_CASE("gen_er orients everything low to high") {
    Dag d = gen_er(200, 0.05, 7);
    for (int u = 0; u < d.n; ++u)
        for (int v : d.out_adj[u]) CHECK(u < v);
}

TEST_CASE("er_p_for_degree targets |E| = degree * n") {
    const int n = 2000;
    double p = er_p_for_degree(n, 10);
    double expected_edges = p * n * (n - 1) / 2.0;
    CHECK(expected_edges == doctest::Approx(10.0 * n).epsilon(0.01));
}

TEST_CASE("gen_ba with n = m + 1 links the last node to all seeds") {
    Dag d = gen_ba(6, 5, 3);
    CHECK(d.edge_count() == 5);
    CHECK(d.in_adj[5].size() == 5);
}

TEST_CASE("gen_ba edge count follows the attachment rule") {
    for (std::uint64_t seed : {1ull, 9ull}) {
        Dag d = gen_ba(500, 3, seed);
        CHECK(d.edge_count() == (500 - 3) * 3);
        for (int u = 0; u < d.n; ++u)
            for (int v : d.out_adj[u]) CHECK(u < v);
    }
}

TEST_CASE("gen_ba degree distribution is heavier-tailed than ER") {
    // compare max degree at matched density across seeds
    const int n = 2000, m = 10;
    double ratio_sum = 0;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Dag ba = gen_ba(n, m, seed);
        double p = er_p_for_degree(n, static_cast<double>(ba.edge_count()) / n);
        Dag er = gen_er(n, p, seed);
        ratio_sum += static_cast<double>(max_total_degree(ba)) / max_total_degree(er);
    }
    CHECK(ratio_sum / 3 > 2.0);
}

TEST_CASE("gen_ws with b=0 keeps exactly n*k/2 edges") {
    CHECK(gen_ws(100, 4, 0.0, 5).edge_count() == 200);
    CHECK(gen_ws(51, 6, 0.0, 5).edge_count() == 153);
}

TEST_CASE("gen_ws k=2 b=0 orients to a path plus one long edge, width 1") {
    Dag d = gen_ws(40, 2, 0.0, 11);
    CHECK(d.edge_count() == 40);
    WidthResult w = fulkerson_width(d);
    CHECK(w.width == 1);
}

TEST_CASE("gen_ws rewiring keeps the graph simple and acyclic") {
    Dag d = gen_ws(300, 10, 0.3, 13);
    CHECK(d.edge_count() == 1500);
    for (int u = 0; u < d.n; ++u) {
        for (int v : d.out_adj[u]) CHECK(u < v);
        auto sorted = d.out_adj[u];
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
}

TEST_CASE("gen_ws b=0.3 keeps the width tiny") {
    Dag d = gen_ws(2000, 20, 0.3, 21);
    WidthResult w = fulkerson_width(d);
    CHECK(w.width <= 12);
}

TEST_CASE("gen_pb all-singleton and single-path extremes") {
    Dag singletons = gen_pb(50, 50, 0.0, 2);
    CHECK(singletons.edge_count() == 0);

    Dag ham = gen_pb(50, 1, 0.0, 2);
    CHECK(ham.edge_count() == 49);
    CHECK(fulkerson_width(ham).width == 1);
}

TEST_CASE("gen_pb sparse width stays near the path count") {
    Dag d = gen_pb(2000, 100, 1.05, 4);
    WidthResult w = fulkerson_width(d);
    CHECK(w.width <= 100);
    CHECK(w.width >= 80);
}

TEST_CASE("gen_pb hits the target edge count when feasible") {
    Dag d = gen_pb(1000, 10, 4.0, 6);
    CHECK(d.edge_count() == 4000);
}

TEST_CASE("generators are deterministic in the config") {
    GeneratorConfig cfg;
    cfg.n = 300;
    cfg.avg_degree = 4;
    cfg.seed = 42;
    for (Model m : {Model::ER, Model::BA, Model::WS, Model::PB}) {
        cfg.model = m;
        Dag a = generate(cfg);
        Dag b = generate(cfg);
        CHECK(edges_of(a) == edges_of(b));
    }
    cfg.model = Model::ER;
    cfg.seed = 43;
    CHECK(edges_of(generate(cfg)) != edges_of(gen_er(300, er_p_for_degree(300, 4), 42)));
}

TEST_CASE("ER width follows the nodes-over-degree law at n=2000") {
    const int n = 2000;
    for (double degree : {5.0, 10.0, 20.0, 40.0}) {
        Dag d = gen_er(n, er_p_for_degree(n, degree), 77);
        WidthResult w = fulkerson_width(d);
        double ratio = w.width * degree / n;
        CHECK(ratio >= 0.6);
        CHECK(ratio <= 1.1);
    }
}
