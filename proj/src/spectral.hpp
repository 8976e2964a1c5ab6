#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"

namespace clsnet {

// Largest n accepted by the dense eigensolver; comfortably covers the largest
// supported use case, a 4941-node power grid.
inline constexpr uint32_t kDefaultEigenCap = 5000;

// Unnormalized graph Laplacian D - A, dense row-major n x n.
std::vector<double> laplacian_matrix(const Graph& g);

// Laplacian eigenvalues sorted in decreasing order.
struct EigenCurve {
    std::vector<double> values;

    uint32_t size() const { return static_cast<uint32_t>(values.size()); }
};

// Full spectrum of the symmetric Laplacian. Rejects directed graphs; graphs
// over the cap get a resource error advising subsampling.
EigenCurve eigenvalues(const Graph& g, uint32_t dense_cap = kDefaultEigenCap);

// Count of eigenvalues clustered at zero (below 1e-6 * max(1, lambda_max));
// equals the number of connected components.
uint32_t zero_multiplicity(const EigenCurve& curve);

// Per-rank envelope of eigenvalue curves simulated from the alpha=0 logit
// distance model with positions uniform on a disk of radius R.
struct GeometryEnsemble {
    GeometrySpace space;
    double radius = 0.0;
    uint32_t n = 0;
    uint32_t reps = 0;
    std::vector<double> mean;
    std::vector<double> lo;
    std::vector<double> hi;
};

GeometryEnsemble build_ensemble(const GeometrySpace& space, uint32_t n, uint32_t reps,
                                double radius, uint64_t seed);

struct GeometryScore {
    std::vector<double> scores;    // RMS deviation from each ensemble's mean curve
    std::vector<uint32_t> best;    // indices attaining the minimum (ties reported)
};

GeometryScore geometry_score(const EigenCurve& curve, std::span<const GeometryEnsemble> ensembles);

} // namespace clsnet
