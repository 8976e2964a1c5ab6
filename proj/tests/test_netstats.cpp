#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "io.hpp"
#include "netstats.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace clsnet;

namespace {

Graph complete(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::undirected(n, std::move(edges));
}

Graph random_graph(Rng& rng, uint32_t n, double p) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return Graph::undirected(n, std::move(edges));
}

} // namespace

TEST_CASE("transitivity on named graphs and against the brute-force oracle") {
    CHECK(transitivity(complete(3)) == doctest::Approx(1.0));
    CHECK(transitivity(Graph::undirected(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 0.0); // star
    CHECK(transitivity(Graph::undirected(3, {})) == 0.0);

    // K4 minus one edge: 2 triangles, 8 connected triples -> 3*2/8
    const Graph k4_minus = Graph::undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const auto counts = oracle::count_triangles(k4_minus);
    CHECK(counts.triangles == 2);
    CHECK(counts.triples == 8);
    CHECK(transitivity(k4_minus) == doctest::Approx(0.75));

    Rng rng(88);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng, 12, 0.4);
        const auto brute = oracle::count_triangles(g);
        const double expected =
            brute.triples == 0 ? 0.0
                               : 3.0 * static_cast<double>(brute.triangles) / brute.triples;
        REQUIRE(transitivity(g) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("average path length") {
    CHECK(*average_path_length(complete(7)) == doctest::Approx(1.0));
    // brute-force all-pairs oracle on the path graph
    CHECK(*average_path_length(Graph::undirected(3, {{0, 1}, {1, 2}})) ==
          doctest::Approx(4.0 / 3.0));
    // unreachable pairs are excluded
    CHECK(*average_path_length(Graph::undirected(4, {{0, 1}, {2, 3}})) == doctest::Approx(1.0));
    CHECK_FALSE(average_path_length(Graph::undirected(3, {})).has_value());
    CHECK_FALSE(average_path_length(Graph::undirected(1, {})).has_value());
}

TEST_CASE("betweenness matches brute-force path enumeration") {
    const Graph path4 = Graph::undirected(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto bc = centrality(path4, CentralityKind::Betweenness);
    CHECK(bc[0] == doctest::Approx(0.0));
    CHECK(bc[1] == doctest::Approx(2.0));
    CHECK(bc[2] == doctest::Approx(2.0));
    CHECK(bc[3] == doctest::Approx(0.0));

    Rng rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const uint32_t n = 3 + static_cast<uint32_t>(rng.below(5)); // n <= 7
        const Graph g = random_graph(rng, n, rng.uniform(0.2, 0.9));
        const auto fast = centrality(g, CentralityKind::Betweenness);
        const auto brute = oracle::brute_betweenness(g);
        for (uint32_t v = 0; v < n; ++v)
            REQUIRE(fast[v] == doctest::Approx(brute[v]).epsilon(1e-9));
    }
}

TEST_CASE("closeness and degree centralities") {
    // star center: reachable 4, distance sum 4
    const Graph star = Graph::undirected(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto cc = centrality(star, CentralityKind::Closeness);
    CHECK(cc[0] == doctest::Approx(1.0));
    CHECK(cc[1] == doctest::Approx(4.0 / 7.0)); // leaf: 4 reachable, distances 1+2+2+2

    const auto k5_degrees = centrality(complete(5), CentralityKind::Degree);
    for (const double d : k5_degrees) CHECK(d == doctest::Approx(4.0));

    // isolated nodes score zero
    const auto iso = centrality(Graph::undirected(3, {{0, 1}}), CentralityKind::Closeness);
    CHECK(iso[2] == 0.0);
}

TEST_CASE("Freeman centralization") {
    const Graph star = Graph::undirected(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(centralization(star, CentralityKind::Degree) == doctest::Approx(1.0));
    CHECK(centralization(star, CentralityKind::Betweenness) == doctest::Approx(1.0));
    CHECK(centralization(star, CentralityKind::Closeness) == doctest::Approx(1.0));

    for (const auto kind :
         {CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Closeness})
        CHECK(centralization(complete(6), kind) == doctest::Approx(0.0));

    // regular graphs have zero degree centralization
    const Graph c5 = Graph::undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(centralization(c5, CentralityKind::Degree) == doctest::Approx(0.0));

    CHECK_THROWS_AS(centralization(Graph::undirected(2, {{0, 1}}), CentralityKind::Degree), Error);
}

TEST_CASE("modularity: direct formula and edge cases") {
    // one community covering everything scores zero
    const Graph k5 = complete(5);
    const std::vector<uint32_t> one(5, 0);
    CHECK(*modularity(k5, one) == doctest::Approx(0.0));

    CHECK_FALSE(modularity(Graph::undirected(4, {}), std::vector<uint32_t>(4, 0)).has_value());

    // brute-force double sum on n = 4 with a nontrivial partition
    const Graph g = Graph::undirected(4, {{0, 1}, {1, 2}, {2, 3}});
    const std::vector<uint32_t> parts{0, 0, 1, 1};
    CHECK(*modularity(g, parts) == doctest::Approx(oracle::brute_modularity(g, parts)).epsilon(1e-12));

    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph rg = random_graph(rng, 8, 0.5);
        if (rg.edges.empty()) continue;
        std::vector<uint32_t> membership(8);
        for (auto& c : membership) c = static_cast<uint32_t>(rng.below(3));
        const double q = *modularity(rg, membership);
        REQUIRE(q == doctest::Approx(oracle::brute_modularity(rg, membership)).epsilon(1e-12));
        REQUIRE(q >= -0.5 - 1e-12);
        REQUIRE(q <= 1.0 + 1e-12);
    }
}

TEST_CASE("girvan-newman separates two triangles joined by a bridge") {
    // nodes 0-2 and 3-5 are triangles, (2,3) is the bridge
    const Graph g =
        Graph::undirected(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});

    // the bridge carries the most shortest paths
    const auto eb = edge_betweenness(g);
    size_t bridge_idx = 0;
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e] == Edge{2, 3}) bridge_idx = e;
    for (size_t e = 0; e < eb.size(); ++e)
        if (e != bridge_idx) REQUIRE(eb[bridge_idx] > eb[e]);

    const auto result = girvan_newman(g);
    CHECK(result.community_count == 2);
    CHECK(result.membership[0] == result.membership[1]);
    CHECK(result.membership[0] == result.membership[2]);
    CHECK(result.membership[3] == result.membership[4]);
    CHECK(result.membership[3] == result.membership[5]);
    CHECK(result.membership[0] != result.membership[3]);
    CHECK(*result.q == doctest::Approx(10.0 / 28.0).epsilon(1e-12));
    CHECK(*result.q == doctest::Approx(oracle::brute_modularity(g, result.membership)).epsilon(1e-12));
}

TEST_CASE("girvan-newman edge cases") {
    const auto edgeless = girvan_newman(Graph::undirected(4, {}));
    CHECK(edgeless.community_count == 4);
    CHECK_FALSE(edgeless.q.has_value());

    const auto single = girvan_newman(Graph::undirected(2, {{0, 1}}));
    CHECK(single.q.has_value());
}

TEST_CASE("statistics are invariant under node relabeling") {
    Rng rng(456);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t n = 12;
        const Graph g = random_graph(rng, n, 0.35);

        std::vector<uint32_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0u);
        for (uint32_t i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.below(i + 1)]);
        std::vector<Edge> relabeled;
        for (const auto& [u, v] : g.edges) {
            uint32_t a = sigma[u], b = sigma[v];
            if (a > b) std::swap(a, b);
            relabeled.emplace_back(a, b);
        }
        const Graph h = Graph::undirected(n, std::move(relabeled));

        REQUIRE(transitivity(g) == doctest::Approx(transitivity(h)).epsilon(1e-12));
        REQUIRE(average_path_length(g).value_or(-1.0) ==
                doctest::Approx(average_path_length(h).value_or(-1.0)).epsilon(1e-12));
        for (const auto kind :
             {CentralityKind::Degree, CentralityKind::Betweenness, CentralityKind::Closeness})
            REQUIRE(centralization(g, kind) == doctest::Approx(centralization(h, kind)).epsilon(1e-9));
        // the modularity formula is label-invariant on corresponding partitions
        // (the Girvan-Newman max-Q itself is tie-break sensitive: relabeling
        // permutes equal-betweenness edges and can pick a different dendrogram)
        const auto gn = girvan_newman(g);
        if (gn.q) {
            std::vector<uint32_t> relabeled_parts(n);
            for (uint32_t v = 0; v < n; ++v) relabeled_parts[sigma[v]] = gn.membership[v];
            REQUIRE(*modularity(h, relabeled_parts) == doctest::Approx(*gn.q).epsilon(1e-12));
        }
    }
}

TEST_CASE("sweep: endpoints, nesting, determinism") {
    SweepConfig config;
    config.geometries = {{GeometrySpace::euclidean(), kPi / 2},
                         {GeometrySpace::hyperbolic(), 7.5}};
    config.n_values = {20};
    config.reps = 5;
    config.seed = 31;

    const auto rows = run_sweep(config);
    const size_t gammas = 6;
    CHECK(rows.size() == 2 * 1 * gammas * sweep_statistics().size());

    for (const auto& row : rows) {
        REQUIRE(std::isfinite(row.mean));
        REQUIRE(std::isfinite(row.min));
        REQUIRE(std::isfinite(row.max));
        REQUIRE(row.min <= row.mean + 1e-12);
        REQUIRE(row.mean <= row.max + 1e-12);
        if (row.gamma == 1.0) {
            if (row.stat == "density" || row.stat == "transitivity" || row.stat == "apl")
                REQUIRE(row.mean == doctest::Approx(1.0));
        }
        if (row.stat == "density" && row.gamma == 0.0) REQUIRE(row.max == 0.0);
    }

    // density is nondecreasing in gamma (per-rep nesting implies it for min/mean/max)
    for (const auto& cell : {std::string("euclidean"), std::string("hyperbolic")}) {
        double previous = -1.0;
        for (const auto& row : rows) {
            if (row.geometry != cell || row.stat != "density") continue;
            REQUIRE(row.mean >= previous - 1e-12);
            previous = row.mean;
        }
    }

    // byte-identical output for identical config
    const auto again = run_sweep(config);
    std::ostringstream a, b;
    write_sweep_csv(rows, a);
    write_sweep_csv(again, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("statistics reject directed graphs") {
    const Graph d = Graph::make_directed(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(transitivity(d), Error);
    CHECK_THROWS_AS(average_path_length(d), Error);
    CHECK_THROWS_AS(centrality(d, CentralityKind::Betweenness), Error);
    CHECK_THROWS_AS(girvan_newman(d), Error);
}

TEST_CASE("sweep rejects ultrametric and bad grids") {
    SweepConfig config;
    config.geometries = {{GeometrySpace::ultrametric(2, 3), 1.0}};
    config.n_values = {10};
    CHECK_THROWS_AS(run_sweep(config), Error);

    SweepConfig bad_grid;
    bad_grid.geometries = {{GeometrySpace::euclidean(), 1.0}};
    bad_grid.n_values = {10};
    bad_grid.gamma_step = -0.1;
    CHECK_THROWS_AS(run_sweep(bad_grid), Error);
}
