#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "errors.hpp"
#include "latent.hpp"
#include "util.hpp"

namespace clsnet {

std::vector<double> laplacian_matrix(const Graph& g) {
    if (g.directed) throw_input("laplacian is defined for undirected graphs");
    std::vector<double> lap(static_cast<size_t>(g.n) * g.n, 0.0);
    for (const auto& [u, v] : g.edges) {
        lap[static_cast<size_t>(u) * g.n + v] = -1.0;
        lap[static_cast<size_t>(v) * g.n + u] = -1.0;
        lap[static_cast<size_t>(u) * g.n + u] += 1.0;
        lap[static_cast<size_t>(v) * g.n + v] += 1.0;
    }
    return lap;
}

EigenCurve eigenvalues(const Graph& g, uint32_t dense_cap) {
    if (g.directed) throw_input("eigenvalues are computed for undirected graphs");
    if (g.n > dense_cap)
        throw_resource("graph has n = " + std::to_string(g.n) + " > dense cap " +
                       std::to_string(dense_cap) + "; subsample the network or raise the cap");
    if (g.n == 0) return {};

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(g.n, g.n);
    for (const auto& [u, v] : g.edges) {
        lap(u, v) = -1.0;
        lap(v, u) = -1.0;
        lap(u, u) += 1.0;
        lap(v, v) += 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw_numeric("symmetric eigensolver failed to converge");

    EigenCurve curve;
    curve.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n);
    std::sort(curve.values.begin(), curve.values.end(), std::greater<>());
    return curve;
}

uint32_t zero_multiplicity(const EigenCurve& curve) {
    if (curve.values.empty()) return 0;
    const double lambda_max = curve.values.front();
    const double cutoff = 1e-6 * std::max(1.0, lambda_max);
    uint32_t count = 0;
    for (const double v : curve.values)
        if (std::fabs(v) < cutoff) ++count;
    return count;
}

GeometryEnsemble build_ensemble(const GeometrySpace& space, uint32_t n, uint32_t reps,
                                double radius, uint64_t seed) {
    if (reps < 2) throw_input("ensemble requires reps >= 2");
    if (n < 2) throw_input("ensemble requires n >= 2");
    const DiskDomain domain = DiskDomain::make(space, radius);

    GeometryEnsemble ens;
    ens.space = space;
    ens.radius = radius;
    ens.n = n;
    ens.reps = reps;
    ens.mean.assign(n, 0.0);
    ens.lo.assign(n, std::numeric_limits<double>::infinity());
    ens.hi.assign(n, -std::numeric_limits<double>::infinity());

    const CLSModel model{SimilarityKernel::negative_distance(space), Link::logit(0.0)};
    std::vector<EigenCurve> curves(reps);
    parallel_for(reps, [&](size_t rep) {
        const auto positions = sample_disk(domain, n, seed, rep);
        const Graph g = generate_cls(model, LatentConfiguration::from_polar(positions),
                                     substream_seed(seed, reps + rep));
        curves[rep] = eigenvalues(g);
    });
    for (const auto& curve : curves) {
        for (uint32_t r = 0; r < n; ++r) {
            const double v = curve.values[r];
            ens.mean[r] += v;
            ens.lo[r] = std::min(ens.lo[r], v);
            ens.hi[r] = std::max(ens.hi[r], v);
        }
    }
    for (auto& v : ens.mean) v /= reps;
    return ens;
}

GeometryScore geometry_score(const EigenCurve& curve, std::span<const GeometryEnsemble> ensembles) {
    if (ensembles.empty()) throw_input("geometry_score requires at least one ensemble");
    GeometryScore out;
    out.scores.reserve(ensembles.size());
    for (const auto& ens : ensembles) {
        if (ens.n != curve.size())
            throw_input("curve length " + std::to_string(curve.size()) +
                        " does not match ensemble n = " + std::to_string(ens.n));
        double ss = 0.0;
        for (uint32_t r = 0; r < ens.n; ++r) {
            const double d = curve.values[r] - ens.mean[r];
            ss += d * d;
        }
        out.scores.push_back(std::sqrt(ss / ens.n));
    }
    const double best = *std::min_element(out.scores.begin(), out.scores.end());
    for (uint32_t i = 0; i < out.scores.size(); ++i)
        if (out.scores[i] == best) out.best.push_back(i);
    return out;
}

} // namespace clsnet
