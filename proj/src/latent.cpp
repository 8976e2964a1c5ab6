#include "latent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace clsnet {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double quad_form(std::span<const double> a, const std::vector<double>& m, uint32_t dim,
                 std::span<const double> b) {
    double s = 0.0;
    for (uint32_t r = 0; r < dim; ++r) {
        double row = 0.0;
        for (uint32_t c = 0; c < dim; ++c) row += m[static_cast<size_t>(r) * dim + c] * b[c];
        s += a[r] * row;
    }
    return s;
}

uint32_t one_hot_class(std::span<const double> z) {
    uint32_t cls = 0;
    uint32_t ones = 0;
    for (uint32_t k = 0; k < z.size(); ++k) {
        if (z[k] == 1.0) {
            cls = k;
            ++ones;
        } else if (z[k] != 0.0) {
            throw_input("SBM positions must be one-hot vectors");
        }
    }
    if (ones != 1) throw_input("SBM positions must be one-hot vectors");
    return cls;
}

void require_vector_positions(const LatentConfiguration& c, const char* kernel) {
    if (c.kind != PositionKind::Vector)
        throw_input(std::string(kernel) + " kernel requires vector-valued latent positions");
}

void require_effects(const std::vector<double>& effects, uint32_t n, const char* which) {
    if (effects.size() != n)
        throw_input(std::string("kernel requires per-node ") + which + " effects");
}

double kernel_matrix_entry_check(const std::vector<double>& m, uint32_t dim, bool probabilities) {
    if (m.size() != static_cast<size_t>(dim) * dim || dim == 0)
        throw_input("kernel matrix must be t x t with t >= 1");
    for (double v : m) {
        if (!std::isfinite(v)) throw_input("kernel matrix entries must be finite");
        if (probabilities && (v < 0.0 || v > 1.0))
            throw_input("SBM matrix entries must lie in [0, 1]");
    }
    return 0.0;
}

} // namespace

std::string kernel_name(KernelKind kind) {
    switch (kind) {
        case KernelKind::NegativeDistance: return "distance";
        case KernelKind::Dot: return "dot";
        case KernelKind::Projection: return "projection";
        case KernelKind::Bilinear: return "bilinear";
        case KernelKind::Quadratic: return "quadratic";
        case KernelKind::Sbm: return "sbm";
        case KernelKind::Mmsbm: return "mmsbm";
        case KernelKind::Ard: return "ard";
        case KernelKind::DistanceWithEffects: return "distance-effects";
    }
    return "unknown";
}

KernelKind kernel_from_name(const std::string& name) {
    if (name == "distance") return KernelKind::NegativeDistance;
    if (name == "dot") return KernelKind::Dot;
    if (name == "projection") return KernelKind::Projection;
    if (name == "bilinear") return KernelKind::Bilinear;
    if (name == "quadratic") return KernelKind::Quadratic;
    if (name == "sbm") return KernelKind::Sbm;
    if (name == "mmsbm") return KernelKind::Mmsbm;
    if (name == "ard") return KernelKind::Ard;
    if (name == "distance-effects") return KernelKind::DistanceWithEffects;
    throw_input("unknown kernel: " + name);
}

SimilarityKernel SimilarityKernel::negative_distance(const GeometrySpace& space) {
    SimilarityKernel k;
    k.kind = KernelKind::NegativeDistance;
    k.geometry = space;
    return k;
}

SimilarityKernel SimilarityKernel::distance_with_effects(const GeometrySpace& space) {
    SimilarityKernel k;
    k.kind = KernelKind::DistanceWithEffects;
    k.geometry = space;
    return k;
}

SimilarityKernel SimilarityKernel::dot() { return {KernelKind::Dot, {}, 0, 1.0, {}}; }
SimilarityKernel SimilarityKernel::projection() { return {KernelKind::Projection, {}, 0, 1.0, {}}; }
SimilarityKernel SimilarityKernel::bilinear() { return {KernelKind::Bilinear, {}, 0, 1.0, {}}; }

SimilarityKernel SimilarityKernel::quadratic(std::vector<double> matrix, uint32_t dim) {
    kernel_matrix_entry_check(matrix, dim, false);
    return {KernelKind::Quadratic, std::move(matrix), dim, 1.0, {}};
}

SimilarityKernel SimilarityKernel::sbm(std::vector<double> class_probs, uint32_t classes) {
    kernel_matrix_entry_check(class_probs, classes, true);
    return {KernelKind::Sbm, std::move(class_probs), classes, 1.0, {}};
}

SimilarityKernel SimilarityKernel::mmsbm(std::vector<double> matrix, uint32_t classes) {
    kernel_matrix_entry_check(matrix, classes, false);
    return {KernelKind::Mmsbm, std::move(matrix), classes, 1.0, {}};
}

SimilarityKernel SimilarityKernel::ard(double zeta) {
    if (!std::isfinite(zeta)) throw_input("ARD zeta must be finite");
    return {KernelKind::Ard, {}, 0, zeta, {}};
}

LatentConfiguration LatentConfiguration::from_vectors(std::vector<double> coords, uint32_t n,
                                                      uint32_t dim) {
    if (dim == 0 || coords.size() != static_cast<size_t>(n) * dim)
        throw_input("vector configuration requires n*dim coordinates");
    LatentConfiguration c;
    c.kind = PositionKind::Vector;
    c.n = n;
    c.dim = dim;
    c.coords = std::move(coords);
    return c;
}

LatentConfiguration LatentConfiguration::from_polar(std::vector<PolarPoint> points) {
    LatentConfiguration c;
    c.kind = PositionKind::Polar;
    c.n = static_cast<uint32_t>(points.size());
    c.polar = std::move(points);
    return c;
}

LatentConfiguration LatentConfiguration::from_leaves(std::vector<uint64_t> leaves) {
    LatentConfiguration c;
    c.kind = PositionKind::Leaf;
    c.n = static_cast<uint32_t>(leaves.size());
    c.leaves = std::move(leaves);
    return c;
}

Link Link::heaviside(double gamma) {
    if (!std::isfinite(gamma) || gamma < 0.0) throw_input("Heaviside gamma must be >= 0");
    Link l;
    l.kind = Kind::Heaviside;
    l.gamma = gamma;
    return l;
}

Link Link::fermi_dirac(double temperature, double radius) {
    if (!(temperature > 0.0)) throw_input("Fermi-Dirac temperature must be positive");
    if (!(radius > 0.0)) throw_input("Fermi-Dirac radius must be positive");
    Link l;
    l.kind = Kind::FermiDirac;
    l.temperature = temperature;
    l.radius = radius;
    return l;
}

double evaluate_kernel(const SimilarityKernel& kernel, const LatentConfiguration& config,
                       uint32_t i, uint32_t j) {
    if (i >= config.n || j >= config.n) throw_input("node index out of range");
    if (i == j) throw_input("kernel is defined for i != j");
    switch (kernel.kind) {
        case KernelKind::NegativeDistance:
        case KernelKind::DistanceWithEffects: {
            if (!kernel.geometry) throw_input("distance kernel requires a geometry");
            double d;
            if (config.kind == PositionKind::Polar)
                d = distance(*kernel.geometry, config.polar[i], config.polar[j]);
            else if (config.kind == PositionKind::Leaf)
                d = static_cast<double>(leaf_distance(*kernel.geometry, config.leaves[i],
                                                      config.leaves[j]));
            else
                throw_input("distance kernel requires polar or leaf positions");
            if (kernel.kind == KernelKind::NegativeDistance) return -d;
            require_effects(config.sender, config.n, "sender");
            require_effects(config.receiver, config.n, "receiver");
            return config.sender[i] + config.receiver[j] - d;
        }
        case KernelKind::Dot:
            require_vector_positions(config, "dot");
            return dot(config.vec(i), config.vec(j));
        case KernelKind::Projection: {
            require_vector_positions(config, "projection");
            const double nj = norm(config.vec(j));
            if (nj == 0.0) throw_singular("projection kernel: |v_j| = 0");
            return dot(config.vec(i), config.vec(j)) / nj;
        }
        case KernelKind::Bilinear:
            require_vector_positions(config, "bilinear");
            require_effects(config.sender, config.n, "sender");
            require_effects(config.receiver, config.n, "receiver");
            return config.sender[i] + config.receiver[j] + dot(config.vec(i), config.vec(j));
        case KernelKind::Quadratic:
        case KernelKind::Mmsbm:
            require_vector_positions(config, "quadratic");
            if (config.dim != kernel.matrix_dim)
                throw_input("kernel matrix dimension does not match latent dimension");
            return quad_form(config.vec(i), kernel.matrix, kernel.matrix_dim, config.vec(j));
        case KernelKind::Sbm: {
            require_vector_positions(config, "sbm");
            if (config.dim != kernel.matrix_dim)
                throw_input("kernel matrix dimension does not match latent dimension");
            const uint32_t ci = one_hot_class(config.vec(i));
            const uint32_t cj = one_hot_class(config.vec(j));
            return kernel.matrix[static_cast<size_t>(ci) * kernel.matrix_dim + cj];
        }
        case KernelKind::Ard:
            require_vector_positions(config, "ard");
            require_effects(config.sender, config.n, "sociality");
            return config.sender[i] + config.sender[j] +
                   kernel.zeta * dot(config.vec(i), config.vec(j));
    }
    throw_input("unknown kernel kind");
}

double tie_probability(const CLSModel& model, double similarity) {
    if (model.kernel.kind == KernelKind::Sbm) return similarity; // already a probability
    switch (model.link.kind) {
        case Link::Kind::Logit:
            return 1.0 / (1.0 + std::exp(-(model.link.alpha + similarity)));
        case Link::Kind::Heaviside: {
            if (!model.kernel.is_distance_kernel())
                throw_input("Heaviside link requires a distance kernel");
            const double d = -similarity;
            return model.link.gamma - d >= 0.0 ? 1.0 : 0.0;
        }
        case Link::Kind::FermiDirac: {
            if (!model.kernel.is_distance_kernel())
                throw_input("Fermi-Dirac link requires a distance kernel");
            const double d = -similarity;
            return 1.0 / (1.0 + std::exp((d - model.link.radius) / (2.0 * model.link.temperature)));
        }
    }
    throw_input("unknown link kind");
}

Graph generate_cls_with_pair_source(const CLSModel& model, const LatentConfiguration& config,
                                    const std::function<double(uint32_t, uint32_t)>& pair_u,
                                    bool directed) {
    if (config.n < 2) throw_input("generation requires n >= 2");
    std::vector<Edge> edges;
    if (directed) {
        if (model.kernel.is_symmetric())
            throw_input("directed output requires an asymmetric kernel");
        for (uint32_t i = 0; i < config.n; ++i) {
            for (uint32_t j = 0; j < config.n; ++j) {
                if (i == j) continue;
                const double p = tie_probability(model, evaluate_kernel(model.kernel, config, i, j));
                if (pair_u(i, j) < p) edges.emplace_back(i, j);
            }
        }
        return Graph::make_directed(config.n, std::move(edges));
    }
    for (uint32_t i = 0; i < config.n; ++i) {
        for (uint32_t j = i + 1; j < config.n; ++j) {
            const double p = tie_probability(model, evaluate_kernel(model.kernel, config, i, j));
            if (pair_u(i, j) < p) edges.emplace_back(i, j);
        }
    }
    return Graph::undirected(config.n, std::move(edges));
}

Graph generate_cls(const CLSModel& model, const LatentConfiguration& config, uint64_t seed,
                   bool directed) {
    const uint32_t n = config.n;
    if (directed) {
        return generate_cls_with_pair_source(
            model, config,
            [seed, n](uint32_t i, uint32_t j) {
                return pair_uniform(seed, ordered_pair_rank(i, j, n));
            },
            true);
    }
    return generate_cls_with_pair_source(
        model, config,
        [seed, n](uint32_t i, uint32_t j) { return pair_uniform(seed, pair_rank(i, j, n)); },
        false);
}

// --- Krioukov model ---------------------------------------------------------

double krioukov_alpha(double gamma_pl, double temperature) {
    if (!(gamma_pl > 1.0)) throw_input("power-law exponent gamma_pl must exceed 1");
    if (!(temperature > 0.0)) throw_input("temperature must be positive");
    return temperature <= 1.0 ? 0.5 * (gamma_pl - 1.0) : 0.5 * (gamma_pl - 1.0) / temperature;
}

namespace {

constexpr int kQuadratureNodes = 129; // per axis; even interval count for Simpson

std::vector<double> simpson_weights(int nodes, double h) {
    std::vector<double> w(nodes, 0.0);
    for (int i = 0; i < nodes; ++i) w[i] = (i == 0 || i == nodes - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    for (auto& v : w) v *= h / 3.0;
    return w;
}

} // namespace

double krioukov_mean_degree(uint32_t n, double R, double alpha, double temperature) {
    if (!(R > 0.0)) throw_input("R must be positive");
    const int m = kQuadratureNodes;
    const double hr = R / (m - 1);
    const double hphi = kPi / (m - 1);
    const auto wr = simpson_weights(m, hr);
    const auto wphi = simpson_weights(m, hphi);

    std::vector<double> dens(m), ch(m), sh(m), cphi(m);
    const double denom = std::cosh(alpha * R) - 1.0;
    for (int i = 0; i < m; ++i) {
        const double r = i * hr;
        dens[i] = alpha * std::sinh(alpha * r) / denom;
        ch[i] = std::cosh(r);
        sh[i] = std::sinh(r);
        cphi[i] = std::cos(i * hphi);
    }

    const double inv2t = 1.0 / (2.0 * temperature);
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        const double wi = wr[i] * dens[i];
        if (wi == 0.0) continue;
        for (int j = i; j < m; ++j) {
            const double wj = wr[j] * dens[j];
            const double pair_factor = (i == j ? 1.0 : 2.0) * wi * wj;
            if (pair_factor == 0.0) continue;
            double inner = 0.0;
            const double chij = ch[i] * ch[j];
            const double shij = sh[i] * sh[j];
            for (int k = 0; k < m; ++k) {
                const double arg = chij - shij * cphi[k];
                const double d = std::acosh(std::max(arg, 1.0));
                inner += wphi[k] / (1.0 + std::exp((d - R) * inv2t));
            }
            total += pair_factor * inner;
        }
    }
    return static_cast<double>(n) / kPi * total;
}

double solve_krioukov_radius(uint32_t n, double kbar, double gamma_pl, double temperature) {
    if (n < 2) throw_input("solve_krioukov_radius: n must be >= 2");
    if (!(kbar > 0.0)) throw_input("solve_krioukov_radius: kbar must be positive");
    const double alpha = krioukov_alpha(gamma_pl, temperature);

    double lo = 1e-6;
    const double k_lo = krioukov_mean_degree(n, lo, alpha, temperature);
    if (k_lo < kbar)
        throw_numeric("solve_krioukov_radius: target mean degree " + std::to_string(kbar) +
                      " is unreachable (max ~" + std::to_string(k_lo) + " at R -> 0)");
    double hi = 1.0;
    int doublings = 0;
    while (krioukov_mean_degree(n, hi, alpha, temperature) > kbar) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 16)
            throw_numeric("solve_krioukov_radius: failed to bracket R (kbar too small?)");
    }
    int iterations = 0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (krioukov_mean_degree(n, mid, alpha, temperature) > kbar)
            lo = mid;
        else
            hi = mid;
        if (++iterations > 200)
            throw_numeric("solve_krioukov_radius: bisection failed to converge");
    }
    return 0.5 * (lo + hi);
}

KrioukovGraph generate_krioukov(uint32_t n, double kbar, double gamma_pl, double temperature,
                                uint64_t seed, uint64_t stream) {
    if (n < 2) throw_input("generate_krioukov: n must be >= 2");
    const double alpha = krioukov_alpha(gamma_pl, temperature);
    const double R = solve_krioukov_radius(n, kbar, gamma_pl, temperature);

    KrioukovGraph out;
    out.R = R;
    out.alpha = alpha;
    out.positions = sample_quasi_uniform(R, alpha, n, seed, stream);

    CLSModel model{SimilarityKernel::negative_distance(GeometrySpace::hyperbolic()),
                   Link::fermi_dirac(temperature, R)};
    out.graph = generate_cls(model, LatentConfiguration::from_polar(out.positions),
                             substream_seed(seed, stream ^ 0xf00dull));
    return out;
}

// --- Graphon -----------------------------------------------------------------

Graph sample_graphon(const Graphon& w, uint32_t n, uint64_t seed) {
    if (!w) throw_input("sample_graphon: W must be callable");
    if (n < 2) throw_input("sample_graphon: n must be >= 2");

    auto checked = [&](double u, double v) {
        const double value = w(u, v);
        if (!std::isfinite(value) || value < 0.0 || value > 1.0)
            throw_input("graphon W must map into [0, 1]");
        return value;
    };

    Rng probe_rng(seed, 0x57a6'11ceull);
    for (int probe = 0; probe < 64; ++probe) {
        const double u = probe_rng.uniform();
        const double v = probe_rng.uniform();
        if (std::fabs(checked(u, v) - checked(v, u)) > 1e-9)
            throw_input("graphon W must be symmetric");
    }

    Rng rng(seed, 0);
    std::vector<double> z(n);
    for (auto& zi : z) zi = rng.uniform();

    std::vector<Edge> edges;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            const double p = checked(z[i], z[j]);
            if (pair_uniform(seed, pair_rank(i, j, n)) < p) edges.emplace_back(i, j);
        }
    }
    return Graph::undirected(n, std::move(edges));
}

// --- Latent distributions ------------------------------------------------------

DistributionSpec DistributionSpec::std_normal() {
    DistributionSpec s;
    s.kind = Kind::StdNormal;
    return s;
}

DistributionSpec DistributionSpec::normal_mixture(std::vector<MixtureComponent> components) {
    if (components.empty()) throw_input("normal mixture needs at least one component");
    double total = 0.0;
    const size_t dim = components.front().mean.size();
    for (const auto& c : components) {
        if (!(c.weight >= 0.0)) throw_input("mixture weights must be nonnegative");
        if (!(c.sigma > 0.0)) throw_input("mixture sigma must be positive");
        if (c.mean.size() != dim) throw_input("mixture component means must share a dimension");
        total += c.weight;
    }
    if (std::fabs(total - 1.0) > 1e-9) throw_input("mixture weights must sum to 1");
    DistributionSpec s;
    s.kind = Kind::NormalMixture;
    s.components = std::move(components);
    return s;
}

DistributionSpec DistributionSpec::dirichlet(std::vector<double> psi) {
    if (psi.size() < 2) throw_input("Dirichlet needs at least two concentrations");
    for (double v : psi)
        if (!(v > 0.0)) throw_input("Dirichlet concentrations must be positive");
    DistributionSpec s;
    s.kind = Kind::Dirichlet;
    s.concentration = std::move(psi);
    return s;
}

DistributionSpec DistributionSpec::one_hot(std::vector<double> psi) {
    if (psi.size() < 2) throw_input("one-hot distribution needs at least two classes");
    double total = 0.0;
    for (double v : psi) {
        if (!(v >= 0.0)) throw_input("class probabilities must be nonnegative");
        total += v;
    }
    if (std::fabs(total - 1.0) > 1e-9) throw_input("class probabilities must sum to 1");
    DistributionSpec s;
    s.kind = Kind::OneHot;
    s.class_probs = std::move(psi);
    return s;
}

DistributionSpec DistributionSpec::uniform_disk(const GeometrySpace& space, double radius) {
    DiskDomain::make(space, radius); // validate
    DistributionSpec s;
    s.kind = Kind::UniformDisk;
    s.space = space;
    s.radius = radius;
    return s;
}

DistributionSpec DistributionSpec::quasi_uniform(double radius, double alpha) {
    if (!(alpha > 0.0)) throw_input("quasi-uniform alpha must be positive");
    if (!(radius > 0.0)) throw_input("quasi-uniform radius must be positive");
    DistributionSpec s;
    s.kind = Kind::QuasiUniform;
    s.radius = radius;
    s.alpha = alpha;
    return s;
}

LatentConfiguration sample_latent_distribution(const DistributionSpec& spec, uint32_t n,
                                               uint32_t t, uint64_t seed, uint64_t stream) {
    if (n < 1) throw_input("sample_latent_distribution: n must be >= 1");
    Rng rng(seed, stream);
    switch (spec.kind) {
        case DistributionSpec::Kind::StdNormal: {
            if (t < 1) throw_input("StdNormal requires t >= 1");
            std::vector<double> coords(static_cast<size_t>(n) * t);
            for (auto& c : coords) c = rng.normal();
            return LatentConfiguration::from_vectors(std::move(coords), n, t);
        }
        case DistributionSpec::Kind::NormalMixture: {
            const uint32_t dim = static_cast<uint32_t>(spec.components.front().mean.size());
            if (t != 0 && t != dim)
                throw_input("NormalMixture t does not match component dimension");
            std::vector<double> coords(static_cast<size_t>(n) * dim);
            for (uint32_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                double acc = 0.0;
                const MixtureComponent* chosen = &spec.components.back();
                for (const auto& c : spec.components) {
                    acc += c.weight;
                    if (u < acc) {
                        chosen = &c;
                        break;
                    }
                }
                for (uint32_t k = 0; k < dim; ++k)
                    coords[static_cast<size_t>(i) * dim + k] =
                        chosen->mean[k] + chosen->sigma * rng.normal();
            }
            return LatentConfiguration::from_vectors(std::move(coords), n, dim);
        }
        case DistributionSpec::Kind::Dirichlet: {
            const uint32_t dim = static_cast<uint32_t>(spec.concentration.size());
            if (t != 0 && t != dim) throw_input("Dirichlet t does not match psi dimension");
            std::vector<double> coords(static_cast<size_t>(n) * dim);
            for (uint32_t i = 0; i < n; ++i) {
                const auto z = rng.dirichlet(spec.concentration);
                std::copy(z.begin(), z.end(), coords.begin() + static_cast<size_t>(i) * dim);
            }
            return LatentConfiguration::from_vectors(std::move(coords), n, dim);
        }
        case DistributionSpec::Kind::OneHot: {
            const uint32_t dim = static_cast<uint32_t>(spec.class_probs.size());
            if (t != 0 && t != dim) throw_input("OneHot t does not match psi dimension");
            std::vector<double> coords(static_cast<size_t>(n) * dim, 0.0);
            for (uint32_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                double acc = 0.0;
                uint32_t cls = dim - 1;
                for (uint32_t k = 0; k < dim; ++k) {
                    acc += spec.class_probs[k];
                    if (u < acc) {
                        cls = k;
                        break;
                    }
                }
                coords[static_cast<size_t>(i) * dim + cls] = 1.0;
            }
            return LatentConfiguration::from_vectors(std::move(coords), n, dim);
        }
        case DistributionSpec::Kind::UniformDisk:
            return LatentConfiguration::from_polar(
                sample_disk(DiskDomain::make(spec.space, spec.radius), n, seed, stream));
        case DistributionSpec::Kind::QuasiUniform:
            return LatentConfiguration::from_polar(
                sample_quasi_uniform(spec.radius, spec.alpha, n, seed, stream));
    }
    throw_input("unknown latent distribution");
}

} // namespace clsnet
