#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "spectral.hpp"

using namespace clsnet;

namespace {

Graph complete(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::undirected(n, std::move(edges));
}

Graph path(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
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

TEST_CASE("laplacian entries") {
    const auto single = laplacian_matrix(Graph::undirected(2, {{0, 1}}));
    CHECK(single == std::vector<double>{1.0, -1.0, -1.0, 1.0});

    const auto k3 = laplacian_matrix(complete(3));
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j)
            CHECK(k3[i * 3 + j] == (i == j ? 2.0 : -1.0));

    // rows sum to zero
    const auto p5 = laplacian_matrix(path(5));
    for (uint32_t i = 0; i < 5; ++i) {
        double row = 0.0;
        for (uint32_t j = 0; j < 5; ++j) row += p5[i * 5 + j];
        CHECK(row == doctest::Approx(0.0));
    }

    CHECK_THROWS_AS(laplacian_matrix(Graph::make_directed(2, {{0, 1}})), Error);
}

TEST_CASE("laplacian acts as a difference of differences on the path interior") {
    const uint32_t n = 12;
    const auto lap = laplacian_matrix(path(n));
    Rng rng(64);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> phi(n);
        for (auto& v : phi) v = rng.normal();
        for (uint32_t i = 1; i + 1 < n; ++i) {
            double applied = 0.0;
            for (uint32_t j = 0; j < n; ++j) applied += lap[i * n + j] * phi[j];
            const double expected = (phi[i] - phi[i - 1]) - (phi[i + 1] - phi[i]);
            REQUIRE(applied == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("complete-graph and path-graph spectra match closed forms") {
    for (const uint32_t n : {2u, 3u, 10u, 25u, 50u}) {
        const auto curve = eigenvalues(complete(n));
        // K_n: eigenvalue n with multiplicity n-1, then 0
        for (uint32_t r = 0; r + 1 < n; ++r)
            REQUIRE(std::fabs(curve.values[r] - n) <= 1e-8);
        REQUIRE(std::fabs(curve.values[n - 1]) <= 1e-8);
    }
    for (const uint32_t n : {2u, 3u, 7u, 20u, 50u}) {
        const auto curve = eigenvalues(path(n));
        // P_n: 4 sin^2(k pi / 2n), k = n-1 .. 0
        for (uint32_t r = 0; r < n; ++r) {
            const double k = static_cast<double>(n - 1 - r);
            const double expected = 4.0 * std::pow(std::sin(k * kPi / (2.0 * n)), 2.0);
            REQUIRE(std::fabs(curve.values[r] - expected) <= 1e-8);
        }
    }
    // P_3 explicitly: 3, 1, 0
    const auto p3 = eigenvalues(path(3));
    CHECK(p3.values[0] == doctest::Approx(3.0));
    CHECK(p3.values[1] == doctest::Approx(1.0));
    CHECK(p3.values[2] == doctest::Approx(0.0));
}

TEST_CASE("spectrum agrees with the Jacobi oracle on small random graphs") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(9));
        const Graph g = random_graph(rng, n, 0.5);
        const auto fast = eigenvalues(g);
        const auto slow = oracle::jacobi_eigenvalues(laplacian_matrix(g), n);
        for (uint32_t r = 0; r < n; ++r)
            REQUIRE(std::fabs(fast.values[r] - slow[r]) <= 1e-8);
    }
}

TEST_CASE("spectral identities on random graphs") {
    Rng rng(2077);
    for (int trial = 0; trial < 300; ++trial) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.below(59));
        const Graph g = random_graph(rng, n, rng.uniform(0.02, 0.5));
        const auto curve = eigenvalues(g);

        REQUIRE(zero_multiplicity(curve) == connected_components(g).count);

        const double sum = std::accumulate(curve.values.begin(), curve.values.end(), 0.0);
        REQUIRE(std::fabs(sum - 2.0 * g.edge_count()) <= 1e-6 * std::max<double>(1.0, g.edge_count()));

        REQUIRE(curve.values.back() >= -1e-9);

        // algebraic connectivity: second-smallest eigenvalue is 0 iff disconnected
        if (n >= 2) {
            const bool disconnected = connected_components(g).count > 1;
            const double lambda2 = curve.values[n - 2];
            REQUIRE((lambda2 < 1e-9) == disconnected);
        }
    }
}

TEST_CASE("two disjoint edges give a double zero eigenvalue") {
    const auto curve = eigenvalues(Graph::undirected(4, {{0, 1}, {2, 3}}));
    CHECK(zero_multiplicity(curve) == 2);
}

TEST_CASE("spectrum is invariant under relabeling") {
    Rng rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const uint32_t n = 15;
        const Graph g = random_graph(rng, n, 0.3);
        std::vector<uint32_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0u);
        for (uint32_t i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.below(i + 1)]);
        std::vector<Edge> relabeled;
        for (const auto& [u, v] : g.edges) {
            uint32_t a = sigma[u], b = sigma[v];
            if (a > b) std::swap(a, b);
            relabeled.emplace_back(a, b);
        }
        const auto c1 = eigenvalues(g);
        const auto c2 = eigenvalues(Graph::undirected(n, std::move(relabeled)));
        for (uint32_t r = 0; r < n; ++r)
            REQUIRE(std::fabs(c1.values[r] - c2.values[r]) <= 1e-8);
    }
}

TEST_CASE("eigensolver cap produces a resource error") {
    CHECK_THROWS_AS(eigenvalues(complete(20), 10), Error);
    CHECK_NOTHROW(eigenvalues(complete(20), 20));
}

TEST_CASE("ensembles: shape, zero eigenvalue, determinism") {
    const auto ens = build_ensemble(GeometrySpace::spherical(), 34, 100, kPi, 5);
    CHECK(ens.n == 34);
    CHECK(ens.mean.size() == 34);
    CHECK(ens.mean.back() == doctest::Approx(0.0).epsilon(1e-6)); // every graph has a zero eigenvalue
    for (uint32_t r = 0; r < ens.n; ++r) {
        REQUIRE(ens.lo[r] <= ens.mean[r] + 1e-12);
        REQUIRE(ens.mean[r] <= ens.hi[r] + 1e-12);
    }

    const auto again = build_ensemble(GeometrySpace::spherical(), 34, 100, kPi, 5);
    CHECK(ens.mean == again.mean);
    CHECK(ens.lo == again.lo);
    CHECK(ens.hi == again.hi);

    CHECK_THROWS_AS(build_ensemble(GeometrySpace::euclidean(), 34, 1, kPi, 5), Error);
}

TEST_CASE("geometry scores: exact mean scores zero, mismatches rejected") {
    const auto e1 = build_ensemble(GeometrySpace::euclidean(), 20, 10, kPi, 7);
    const auto e2 = build_ensemble(GeometrySpace::hyperbolic(), 20, 10, kPi, 7);
    std::vector<GeometryEnsemble> ensembles{e1, e2};

    EigenCurve curve;
    curve.values = e1.mean;
    const auto score = geometry_score(curve, ensembles);
    CHECK(score.scores[0] == doctest::Approx(0.0));
    CHECK(score.best == std::vector<uint32_t>{0});

    EigenCurve wrong;
    wrong.values.assign(19, 0.0);
    CHECK_THROWS_AS(geometry_score(wrong, ensembles), Error);
}
