#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"

namespace clsnet {

enum class KernelKind {
    NegativeDistance,
    Dot,
    Projection,
    Bilinear,
    Quadratic,
    Sbm,
    Mmsbm,
    Ard,
    DistanceWithEffects,
};

std::string kernel_name(KernelKind kind);
KernelKind kernel_from_name(const std::string& name);

struct SimilarityKernel {
    KernelKind kind = KernelKind::Dot;
    std::vector<double> matrix; // t x t row-major (Quadratic / Sbm / Mmsbm)
    uint32_t matrix_dim = 0;
    double zeta = 1.0;                        // Ard scale
    std::optional<GeometrySpace> geometry;    // distance kernels

    bool is_distance_kernel() const {
        return kind == KernelKind::NegativeDistance || kind == KernelKind::DistanceWithEffects;
    }
    // Symmetric in (i, j) for equal sender/receiver effects.
    bool is_symmetric() const {
        return kind != KernelKind::Projection && kind != KernelKind::Bilinear &&
               kind != KernelKind::DistanceWithEffects;
    }

    static SimilarityKernel negative_distance(const GeometrySpace& space);
    static SimilarityKernel distance_with_effects(const GeometrySpace& space);
    static SimilarityKernel dot();
    static SimilarityKernel projection();
    static SimilarityKernel bilinear();
    static SimilarityKernel quadratic(std::vector<double> matrix, uint32_t dim);
    static SimilarityKernel sbm(std::vector<double> class_probs, uint32_t classes); // entries in [0,1]
    static SimilarityKernel mmsbm(std::vector<double> matrix, uint32_t classes);
    static SimilarityKernel ard(double zeta);
};

enum class PositionKind { Vector, Polar, Leaf };

// n latent positions plus optional per-node effect vectors. Exactly one of the
// position stores is populated, per `kind`.
struct LatentConfiguration {
    PositionKind kind = PositionKind::Vector;
    uint32_t n = 0;
    uint32_t dim = 0;               // Vector kinds
    std::vector<double> coords;     // n*dim row-major
    std::vector<PolarPoint> polar;  // n
    std::vector<uint64_t> leaves;   // n
    std::vector<double> sender;     // empty or size n (a_i / sociality)
    std::vector<double> receiver;   // empty or size n (b_j)

    std::span<const double> vec(uint32_t i) const {
        return {coords.data() + static_cast<size_t>(i) * dim, dim};
    }

    static LatentConfiguration from_vectors(std::vector<double> coords, uint32_t n, uint32_t dim);
    static LatentConfiguration from_polar(std::vector<PolarPoint> points);
    static LatentConfiguration from_leaves(std::vector<uint64_t> leaves);
};

struct Link {
    enum class Kind { Logit, Heaviside, FermiDirac };
    Kind kind = Kind::Logit;
    double alpha = 0.0;       // Logit intercept
    double gamma = 0.0;       // Heaviside cutoff
    double temperature = 1.0; // FermiDirac T > 0
    double radius = 0.0;      // FermiDirac R

    static Link logit(double alpha) { return {Kind::Logit, alpha, 0.0, 1.0, 0.0}; }
    static Link heaviside(double gamma);
    static Link fermi_dirac(double temperature, double radius);
};

struct CLSModel {
    SimilarityKernel kernel;
    Link link;
};

// s(z_i, z_j) for i != j per the kernel's functional form.
double evaluate_kernel(const SimilarityKernel& kernel, const LatentConfiguration& config,
                       uint32_t i, uint32_t j);

// Connection probability from the kernel output. The SBM kernel already emits a
// probability and bypasses the link; Heaviside / Fermi-Dirac require a distance
// kernel (similarity = -d).
double tie_probability(const CLSModel& model, double similarity);

Graph generate_cls(const CLSModel& model, const LatentConfiguration& config, uint64_t seed,
                   bool directed = false);

// Injection point for the per-pair uniform source; the public generate keys it
// by (seed, unordered-pair rank).
Graph generate_cls_with_pair_source(const CLSModel& model, const LatentConfiguration& config,
                                    const std::function<double(uint32_t, uint32_t)>& pair_u,
                                    bool directed = false);

// --- Krioukov model -------------------------------------------------------

// alpha(gamma_pl, T): (gamma_pl - 1)/2 for T <= 1, (gamma_pl - 1)/(2T) for T > 1.
double krioukov_alpha(double gamma_pl, double temperature);

// Expected mean degree of the Krioukov model at disk radius R: the triple
// integral (N/pi) * int p(r1) p(r2) p_fd(d) dphi dr1 dr2 by composite Simpson
// quadrature, 129 nodes per axis.
double krioukov_mean_degree(uint32_t n, double R, double alpha, double temperature);

// Solves kbar(R) = kbar by bisection to |dR| < 1e-6 over the monotone map.
double solve_krioukov_radius(uint32_t n, double kbar, double gamma_pl, double temperature);

struct KrioukovGraph {
    Graph graph;
    std::vector<PolarPoint> positions;
    double R = 0.0;
    double alpha = 0.0;
};

KrioukovGraph generate_krioukov(uint32_t n, double kbar, double gamma_pl, double temperature,
                                uint64_t seed, uint64_t stream = 0);

// --- Graphon ---------------------------------------------------------------

using Graphon = std::function<double(double, double)>;

// z_i ~ Uniform(0,1) i.i.d., edges Bernoulli(W(z_i, z_j)). W must be symmetric
// (checked on random probes) and map into [0, 1].
Graph sample_graphon(const Graphon& w, uint32_t n, uint64_t seed);

// --- Latent position distributions -----------------------------------------

struct MixtureComponent {
    double weight = 1.0;
    std::vector<double> mean;
    double sigma = 1.0;
};

struct DistributionSpec {
    enum class Kind { StdNormal, NormalMixture, Dirichlet, OneHot, UniformDisk, QuasiUniform };
    Kind kind = Kind::StdNormal;
    std::vector<MixtureComponent> components; // NormalMixture
    std::vector<double> concentration;        // Dirichlet psi
    std::vector<double> class_probs;          // OneHot psi
    GeometrySpace space;                      // UniformDisk
    double radius = 1.0;                      // UniformDisk / QuasiUniform
    double alpha = 1.0;                       // QuasiUniform

    static DistributionSpec std_normal();
    static DistributionSpec normal_mixture(std::vector<MixtureComponent> components);
    static DistributionSpec dirichlet(std::vector<double> psi);
    static DistributionSpec one_hot(std::vector<double> psi);
    static DistributionSpec uniform_disk(const GeometrySpace& space, double radius);
    static DistributionSpec quasi_uniform(double radius, double alpha);
};

LatentConfiguration sample_latent_distribution(const DistributionSpec& spec, uint32_t n,
                                               uint32_t t, uint64_t seed, uint64_t stream = 0);

} // namespace clsnet
