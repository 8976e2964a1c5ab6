#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "errors.hpp"
#include "latent.hpp"
#include "oracles.hpp"

using namespace clsnet;

namespace {

LatentConfiguration vectors2(std::vector<std::vector<double>> rows) {
    std::vector<double> flat;
    const uint32_t dim = static_cast<uint32_t>(rows.front().size());
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    return LatentConfiguration::from_vectors(std::move(flat),
                                             static_cast<uint32_t>(rows.size()), dim);
}

} // namespace

TEST_CASE("kernel forms") {
    auto c = vectors2({{1.0, 0.0}, {0.0, 1.0}, {2.0, 0.0}});

    CHECK(evaluate_kernel(SimilarityKernel::dot(), c, 0, 1) == 0.0); // orthogonal
    CHECK(evaluate_kernel(SimilarityKernel::dot(), c, 0, 2) == doctest::Approx(2.0));

    // projection: v_i'v_j / |v_j|
    auto cp = vectors2({{2.0, 0.0}, {1.0, 0.0}});
    CHECK(evaluate_kernel(SimilarityKernel::projection(), cp, 0, 1) == doctest::Approx(2.0));
    CHECK(evaluate_kernel(SimilarityKernel::projection(), cp, 1, 0) == doctest::Approx(1.0));
    auto czero = vectors2({{1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(evaluate_kernel(SimilarityKernel::projection(), czero, 0, 1), Error);

    // bilinear: a_i + b_j + z_i'z_j
    auto cb = vectors2({{1.0, 1.0}, {1.0, 2.0}});
    cb.sender = {0.5, -0.5};
    cb.receiver = {0.25, 0.75};
    CHECK(evaluate_kernel(SimilarityKernel::bilinear(), cb, 0, 1) ==
          doctest::Approx(0.5 + 0.75 + 3.0));

    // SBM: matrix lookup on one-hot classes
    auto cs = vectors2({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
    const auto sbm = SimilarityKernel::sbm({0.9, 0.1, 0.3, 0.1, 0.8, 0.2, 0.3, 0.2, 0.7}, 3);
    CHECK(evaluate_kernel(sbm, cs, 1, 2) == doctest::Approx(0.2));
    CHECK_THROWS_AS(SimilarityKernel::sbm({1.5, 0.0, 0.0, 1.0}, 2), Error); // entries in [0,1]

    // MMSBM z'Az: hand oracle with A = I and z = (1/2, 1/2)
    auto cm = vectors2({{0.5, 0.5}, {0.5, 0.5}});
    const auto mm = SimilarityKernel::mmsbm({1.0, 0.0, 0.0, 1.0}, 2);
    CHECK(evaluate_kernel(mm, cm, 0, 1) == doctest::Approx(0.5));

    // ARD: a_i + a_j + zeta z_i'z_j
    auto ca = vectors2({{1.0, 2.0}, {3.0, 4.0}});
    ca.sender = {0.1, 0.2};
    CHECK(evaluate_kernel(SimilarityKernel::ard(2.0), ca, 0, 1) ==
          doctest::Approx(0.1 + 0.2 + 2.0 * 11.0));

    // dimension mismatch
    CHECK_THROWS_AS(evaluate_kernel(SimilarityKernel::quadratic({1.0}, 1), c, 0, 1), Error);
    CHECK_THROWS_AS(evaluate_kernel(SimilarityKernel::dot(), c, 0, 0), Error);
}

TEST_CASE("quadratic kernel with identity matrix equals the dot kernel") {
    Rng rng(5);
    const auto quad = SimilarityKernel::quadratic({1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> flat(6);
        for (auto& v : flat) v = rng.normal();
        const auto c = LatentConfiguration::from_vectors(flat, 2, 3);
        CHECK(evaluate_kernel(quad, c, 0, 1) ==
              doctest::Approx(evaluate_kernel(SimilarityKernel::dot(), c, 0, 1)).epsilon(1e-12));
    }
}

TEST_CASE("tie probabilities per link") {
    const CLSModel logit{SimilarityKernel::dot(), Link::logit(0.0)};
    CHECK(tie_probability(logit, 0.0) == doctest::Approx(0.5));

    const auto space = GeometrySpace::euclidean();
    const CLSModel heaviside{SimilarityKernel::negative_distance(space), Link::heaviside(0.6)};
    CHECK(tie_probability(heaviside, -0.6) == 1.0);   // Theta(0) = 1
    CHECK(tie_probability(heaviside, -0.60001) == 0.0);
    CHECK(tie_probability(heaviside, -0.1) == 1.0);

    const CLSModel fd{SimilarityKernel::negative_distance(space), Link::fermi_dirac(0.37, 2.0)};
    CHECK(tie_probability(fd, -2.0) == doctest::Approx(0.5)); // d = R
    CHECK(tie_probability(fd, -0.1) > 0.5);
    CHECK(tie_probability(fd, -5.0) < 0.5);

    // Heaviside/Fermi-Dirac demand a distance kernel
    const CLSModel bad{SimilarityKernel::dot(), Link::heaviside(0.5)};
    CHECK_THROWS_AS(tie_probability(bad, 0.5), Error);

    // SBM bypasses the link entirely
    const CLSModel sbm_model{SimilarityKernel::sbm({0.3, 0.3, 0.3, 0.3}, 2), Link::logit(5.0)};
    CHECK(tie_probability(sbm_model, 0.3) == doctest::Approx(0.3));
}

TEST_CASE("heaviside generation: nested edge sets and saturation") {
    const auto space = GeometrySpace::hyperbolic();
    const auto positions = sample_disk(DiskDomain::make(space, 7.5), 60, 21);
    const auto config = LatentConfiguration::from_polar(positions);

    double dmax = 0.0;
    for (uint32_t i = 0; i < 60; ++i)
        for (uint32_t j = i + 1; j < 60; ++j)
            dmax = std::max(dmax, distance(space, positions[i], positions[j]));

    // gamma at the maximum distance connects everything
    const CLSModel full{SimilarityKernel::negative_distance(space), Link::heaviside(dmax)};
    const Graph complete = generate_cls(full, config, 3);
    CHECK(complete.edge_count() == 60ull * 59 / 2);

    Graph previous = Graph::undirected(60, {});
    for (const double gamma : {0.2 * dmax, 0.4 * dmax, 0.6 * dmax, 0.8 * dmax, dmax}) {
        const CLSModel model{SimilarityKernel::negative_distance(space), Link::heaviside(gamma)};
        const Graph g = generate_cls(model, config, 3);
        // every previous edge survives
        for (const auto& e : previous.edges) REQUIRE(g.has_edge(e.first, e.second));
        previous = g;
    }
}

TEST_CASE("logit saturation: alpha = -30 empty, alpha = +30 complete") {
    const auto space = GeometrySpace::euclidean();
    const auto positions = sample_disk(DiskDomain::make(space, 1.0), 40, 8);
    const auto config = LatentConfiguration::from_polar(positions);
    const CLSModel empty_model{SimilarityKernel::negative_distance(space), Link::logit(-30.0)};
    CHECK(generate_cls(empty_model, config, 1).edge_count() == 0);
    const CLSModel full_model{SimilarityKernel::negative_distance(space), Link::logit(30.0)};
    CHECK(generate_cls(full_model, config, 1).edge_count() == 40ull * 39 / 2);
}

TEST_CASE("SBM generation matches specified Bernoulli rates") {
    // 2 classes of 50, strong diagonal
    std::vector<double> coords;
    for (int i = 0; i < 100; ++i) {
        coords.push_back(i < 50 ? 1.0 : 0.0);
        coords.push_back(i < 50 ? 0.0 : 1.0);
    }
    const auto config = LatentConfiguration::from_vectors(coords, 100, 2);
    const CLSModel model{SimilarityKernel::sbm({0.9, 0.05, 0.05, 0.9}, 2), Link::logit(0.0)};

    double within = 0.0, across = 0.0;
    const double within_pairs = 2.0 * (50.0 * 49.0 / 2.0);
    const double across_pairs = 50.0 * 50.0;
    for (uint64_t rep = 0; rep < 20; ++rep) {
        const Graph g = generate_cls(model, config, 1000 + rep);
        for (const auto& [u, v] : g.edges) {
            const bool same = (u < 50) == (v < 50);
            (same ? within : across) += 1.0;
        }
    }
    CHECK(std::fabs(within / (20.0 * within_pairs) - 0.9) < 0.05);
    CHECK(std::fabs(across / (20.0 * across_pairs) - 0.05) < 0.01);
}

TEST_CASE("brute-force equivalence: SBM over all graphs on n = 4") {
    // exact product-Bernoulli probabilities vs empirical graph frequencies
    std::vector<double> coords{1, 0, 1, 0, 0, 1, 0, 1}; // classes 0,0,1,1
    const auto config = LatentConfiguration::from_vectors(coords, 4, 2);
    const CLSModel model{SimilarityKernel::sbm({0.6, 0.4, 0.4, 0.6}, 2), Link::logit(0.0)};

    auto pair_prob = [&](uint32_t i, uint32_t j) {
        const bool same = (i < 2) == (j < 2);
        return same ? 0.6 : 0.4;
    };

    const int trials = 100000;
    std::map<uint32_t, int> counts;
    for (int s = 0; s < trials; ++s) {
        const Graph g = generate_cls(model, config, 555000 + s);
        uint32_t mask = 0;
        for (const auto& [u, v] : g.edges) mask |= 1u << pair_rank(u, v, 4);
        counts[mask]++;
    }

    double chi2 = 0.0;
    for (uint32_t mask = 0; mask < 64; ++mask) {
        double prob = 1.0;
        uint32_t rank = 0;
        for (uint32_t i = 0; i < 4; ++i) {
            for (uint32_t j = i + 1; j < 4; ++j, ++rank) {
                const double p = pair_prob(i, j);
                prob *= (mask >> rank) & 1u ? p : 1.0 - p;
            }
        }
        const double expected = prob * trials;
        const double observed = counts.count(mask) ? counts[mask] : 0;
        chi2 += (observed - expected) * (observed - expected) / expected;
    }
    CHECK(chi2 < 120.0); // 63 dof
}

TEST_CASE("generation commutes with node relabeling given the same pair draws") {
    const auto space = GeometrySpace::euclidean();
    const auto positions = sample_disk(DiskDomain::make(space, 2.0), 30, 77);
    const auto config = LatentConfiguration::from_polar(positions);
    const CLSModel model{SimilarityKernel::negative_distance(space), Link::logit(1.0)};

    const uint32_t n = 30;
    const uint64_t seed = 4242;
    const Graph g1 = generate_cls(model, config, seed);

    // permutation sigma, positions permuted, pair source composed with sigma^-1
    Rng rng(7);
    std::vector<uint32_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0u);
    for (uint32_t i = n - 1; i > 0; --i)
        std::swap(sigma[i], sigma[rng.below(i + 1)]);
    std::vector<uint32_t> inverse(n);
    for (uint32_t i = 0; i < n; ++i) inverse[sigma[i]] = i;

    std::vector<PolarPoint> permuted(n);
    for (uint32_t i = 0; i < n; ++i) permuted[sigma[i]] = positions[i];
    const auto permuted_config = LatentConfiguration::from_polar(permuted);

    const Graph g2 = generate_cls_with_pair_source(
        model, permuted_config,
        [&](uint32_t i, uint32_t j) {
            uint32_t a = inverse[i], b = inverse[j];
            if (a > b) std::swap(a, b);
            return pair_uniform(seed, pair_rank(a, b, n));
        });

    std::vector<Edge> relabeled;
    for (const auto& [u, v] : g1.edges) {
        uint32_t a = sigma[u], b = sigma[v];
        if (a > b) std::swap(a, b);
        relabeled.emplace_back(a, b);
    }
    CHECK(Graph::undirected(n, relabeled) == g2);
}

TEST_CASE("directed generation uses ordered pairs and asymmetric kernels") {
    auto c = vectors2({{2.0, 0.0}, {1.0, 0.0}, {0.5, 0.5}});
    const CLSModel model{SimilarityKernel::projection(), Link::logit(0.0)};
    const Graph g = generate_cls(model, c, 3, true);
    CHECK(g.directed);
    for (const auto& [u, v] : g.edges) CHECK(u != v);

    const CLSModel sym{SimilarityKernel::dot(), Link::logit(0.0)};
    CHECK_THROWS_AS(generate_cls(sym, c, 3, true), Error);
}

TEST_CASE("krioukov alpha mapping and radius solving") {
    CHECK(krioukov_alpha(3.0, 0.5) == doctest::Approx(1.0));
    CHECK(krioukov_alpha(3.0, 1.0) == doctest::Approx(1.0));
    CHECK(krioukov_alpha(3.0, 2.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(krioukov_alpha(1.0, 0.5), Error);

    const double R = solve_krioukov_radius(500, 8.0, 3.0, 0.1);
    CHECK(R > 1.0);
    CHECK(R < 25.0);
    // self-consistency: the solved radius reproduces the target through the quadrature
    const double kbar = krioukov_mean_degree(500, R, 1.0, 0.1);
    CHECK(std::fabs(kbar - 8.0) < 1e-3 * 8.0);

    // doubling the target degree shrinks the disk
    const double R2 = solve_krioukov_radius(500, 16.0, 3.0, 0.1);
    CHECK(R2 < R);

    CHECK_THROWS_AS(solve_krioukov_radius(10, 100.0, 3.0, 0.1), Error); // unreachable target
}

TEST_CASE("krioukov generation: degree targeting, heaviside limit, tiny n") {
    // T -> 0 behaves like a hard threshold at distance R on shared positions
    const uint32_t n = 300;
    const auto kri = generate_krioukov(n, 8.0, 3.0, 0.01, 99);
    const auto space = GeometrySpace::hyperbolic();
    uint64_t disagreements = 0;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            const double d = distance(space, kri.positions[i], kri.positions[j]);
            const bool theta_edge = kri.R - d >= 0.0;
            if (theta_edge != kri.graph.has_edge(i, j)) ++disagreements;
        }
    }
    CHECK(static_cast<double>(disagreements) / (n * (n - 1) / 2) < 0.01);

    // right-skewed degrees at gamma_pl = 3: mean exceeds median across reps
    int mean_exceeds_median = 0;
    for (uint64_t rep = 0; rep < 50; ++rep) {
        const auto result = generate_krioukov(200, 6.0, 3.0, 0.1, 1234, rep);
        auto deg = degrees(result.graph);
        std::sort(deg.begin(), deg.end());
        const double mean = std::accumulate(deg.begin(), deg.end(), 0.0) / deg.size();
        const double median = deg[deg.size() / 2];
        if (mean > median) ++mean_exceeds_median;
    }
    CHECK(mean_exceeds_median >= 45);

    const auto tiny = generate_krioukov(2, 0.5, 3.0, 0.5, 5);
    CHECK(tiny.graph.n == 2);
    CHECK(tiny.graph.edge_count() <= 1);
}

TEST_CASE("graphon sampling") {
    // constant graphon is Erdos-Renyi
    const double p = 0.3;
    const Graph er = sample_graphon([p](double, double) { return p; }, 400, 11);
    const double pairs = 400.0 * 399.0 / 2.0;
    const double sd = std::sqrt(p * (1 - p) / pairs);
    CHECK(std::fabs(er.edge_count() / pairs - p) < 3 * sd + 0.005);

    // W(u,v) = uv has expected density 1/4 (analytic: int int uv du dv = 1/4)
    double total = 0.0;
    for (uint64_t rep = 0; rep < 5; ++rep) {
        const Graph g =
            sample_graphon([](double u, double v) { return u * v; }, 1000, 600 + rep);
        total += g.density();
    }
    CHECK(total / 5.0 == doctest::Approx(0.25).epsilon(0.05));

    // asymmetric probe rejected
    CHECK_THROWS_AS(sample_graphon([](double u, double v) { return u > v ? 0.2 : 0.4; }, 10, 1),
                    Error);
    // out-of-range values rejected
    CHECK_THROWS_AS(sample_graphon([](double, double) { return 1.5; }, 10, 1), Error);
}

TEST_CASE("latent distribution sampling") {
    // one-hot class frequencies follow psi
    const auto onehot = sample_latent_distribution(
        DistributionSpec::one_hot({0.5, 0.5}), 10000, 0, 31);
    double class1 = 0.0;
    for (uint32_t i = 0; i < onehot.n; ++i) class1 += onehot.vec(i)[0];
    CHECK(class1 / onehot.n == doctest::Approx(0.5).epsilon(0.04));

    // Dirichlet(1,1,1): uniform on the simplex, component mean 1/3
    const auto dirichlet = sample_latent_distribution(
        DistributionSpec::dirichlet({1.0, 1.0, 1.0}), 10000, 0, 32);
    double mean0 = 0.0;
    for (uint32_t i = 0; i < dirichlet.n; ++i) {
        const auto z = dirichlet.vec(i);
        double sum = 0.0;
        for (const double v : z) {
            REQUIRE(v >= 0.0);
            sum += v;
        }
        REQUIRE(std::fabs(sum - 1.0) <= 1e-12);
        mean0 += z[0];
    }
    CHECK(mean0 / dirichlet.n == doctest::Approx(1.0 / 3.0).epsilon(0.03));

    // degenerate mixture reduces to the standard normal (KS per coordinate)
    const auto mixture = sample_latent_distribution(
        DistributionSpec::normal_mixture({{1.0, {0.0, 0.0}, 1.0}}), 100000, 0, 33);
    for (uint32_t coord = 0; coord < 2; ++coord) {
        std::vector<double> xs;
        xs.reserve(mixture.n);
        for (uint32_t i = 0; i < mixture.n; ++i) xs.push_back(mixture.vec(i)[coord]);
        CHECK(oracle::ks_statistic(xs, oracle::normal_cdf) < 0.02);
    }

    CHECK_THROWS_AS(DistributionSpec::one_hot({0.5, 0.6}), Error);
    CHECK_THROWS_AS(DistributionSpec::dirichlet({1.0, -1.0}), Error);
    CHECK_THROWS_AS(DistributionSpec::normal_mixture({{0.5, {0.0}, 1.0}}), Error);
}
