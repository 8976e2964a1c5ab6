#include "clsnet.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "latent.hpp"
#include "netstats.hpp"
#include "spectral.hpp"
#include "util.hpp"

#ifndef CLSNET_VERSION
#define CLSNET_VERSION "0.0.0"
#endif

using namespace clsnet;

struct clsnet_graph {
    Graph graph;
    std::vector<std::string> labels;
    uint32_t duplicate_count = 0;
    uint32_t self_loop_count = 0;
};

struct clsnet_positions {
    bool leaf_based = false;
    std::vector<PolarPoint> polar;
    std::vector<uint64_t> leaves;
};

struct clsnet_ensemble {
    GeometryEnsemble ensemble;
};

namespace {

thread_local std::string g_last_error;

clsnet_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return CLSNET_ERR_INVALID_ARGUMENT;
        case ErrorCode::Singular: return CLSNET_ERR_SINGULAR;
        case ErrorCode::Numeric: return CLSNET_ERR_NUMERIC;
        case ErrorCode::Parse: return CLSNET_ERR_PARSE;
        case ErrorCode::Io: return CLSNET_ERR_IO;
        case ErrorCode::Resource: return CLSNET_ERR_RESOURCE;
        case ErrorCode::Unsupported: return CLSNET_ERR_UNSUPPORTED;
    }
    return CLSNET_ERR_INTERNAL;
}

template <typename Fn>
clsnet_status wrap(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CLSNET_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CLSNET_ERR_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CLSNET_ERR_INTERNAL;
    }
}

GeometrySpace space_of(clsnet_geometry geometry) {
    switch (geometry) {
        case CLSNET_GEOM_EUCLIDEAN: return GeometrySpace::euclidean();
        case CLSNET_GEOM_SPHERICAL: return GeometrySpace::spherical();
        case CLSNET_GEOM_HYPERBOLIC: return GeometrySpace::hyperbolic();
        case CLSNET_GEOM_ULTRAMETRIC: break;
    }
    throw_input("this entry point expects a curved geometry");
}

void require(bool ok, const char* message) {
    if (!ok) throw_input(message);
}

void write_text_file(const std::string& path, const std::string& text) {
    write_file(path, text);
}

} // namespace

extern "C" {

const char* clsnet_version(void) { return CLSNET_VERSION; }

const char* clsnet_last_error(void) { return g_last_error.c_str(); }

/* --- geometry --------------------------------------------------------------- */

clsnet_status clsnet_distance(clsnet_geometry geometry, double r1, double phi1, double r2,
                              double phi2, double* out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = distance(space_of(geometry), PolarPoint{r1, phi1}, PolarPoint{r2, phi2});
    });
}

clsnet_status clsnet_ultrametric_distance(uint32_t branching, uint32_t depth, uint64_t leaf_a,
                                          uint64_t leaf_b, uint32_t* out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = leaf_distance(GeometrySpace::ultrametric(branching, depth), leaf_a, leaf_b);
    });
}

clsnet_status clsnet_circumference(double curvature, double r, double* out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = circumference(curvature, r);
    });
}

clsnet_status clsnet_to_hyperboloid(double r, double phi, double* x, double* y, double* z) {
    return wrap([&] {
        require(x && y && z, "out pointers must not be null");
        const auto h = to_hyperboloid(PolarPoint{r, phi});
        *x = h.x;
        *y = h.y;
        *z = h.z;
    });
}

clsnet_status clsnet_to_poincare(double x, double y, double z, double* u, double* v) {
    return wrap([&] {
        require(u && v, "out pointers must not be null");
        const auto p = to_poincare(HyperboloidPoint{x, y, z});
        *u = p.u;
        *v = p.v;
    });
}

/* --- position sampling -------------------------------------------------------- */

clsnet_status clsnet_sample_disk(clsnet_geometry geometry, uint32_t n, double radius,
                                 uint64_t seed, clsnet_positions** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto handle = std::make_unique<clsnet_positions>();
        handle->polar = sample_disk(DiskDomain::make(space_of(geometry), radius), n, seed);
        *out = handle.release();
    });
}

clsnet_status clsnet_sample_quasi_uniform(uint32_t n, double radius, double alpha, uint64_t seed,
                                          clsnet_positions** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto handle = std::make_unique<clsnet_positions>();
        handle->polar = sample_quasi_uniform(radius, alpha, n, seed);
        *out = handle.release();
    });
}

clsnet_status clsnet_sample_ultrametric(uint32_t n, uint32_t branching, uint32_t depth,
                                        uint64_t seed, clsnet_positions** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto handle = std::make_unique<clsnet_positions>();
        handle->leaf_based = true;
        handle->leaves = sample_leaves(GeometrySpace::ultrametric(branching, depth), n, seed);
        *out = handle.release();
    });
}

uint32_t clsnet_positions_count(const clsnet_positions* positions) {
    if (!positions) return 0;
    return static_cast<uint32_t>(positions->leaf_based ? positions->leaves.size()
                                                       : positions->polar.size());
}

clsnet_status clsnet_positions_get(const clsnet_positions* positions, uint32_t index, double* r,
                                   double* phi) {
    return wrap([&] {
        require(positions != nullptr, "positions must not be null");
        require(!positions->leaf_based, "leaf positions have no polar coordinates");
        require(index < positions->polar.size(), "index out of range");
        require(r && phi, "out pointers must not be null");
        *r = positions->polar[index].r;
        *phi = positions->polar[index].phi;
    });
}

clsnet_status clsnet_positions_write_csv(const clsnet_positions* positions, const char* path) {
    return wrap([&] {
        require(positions && path, "positions and path must not be null");
        std::ofstream out(path);
        if (!out) throw_io(std::string("cannot open for writing: ") + path);
        if (positions->leaf_based)
            write_leaves_csv(positions->leaves, out);
        else
            write_positions_csv(positions->polar, out);
    });
}

void clsnet_positions_destroy(clsnet_positions* positions) { delete positions; }

/* --- graphs ------------------------------------------------------------------- */

clsnet_status clsnet_graph_create(uint32_t n, const uint32_t* edges, uint64_t edge_count,
                                  clsnet_graph** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        require(edge_count == 0 || edges != nullptr, "edges must not be null");
        std::vector<Edge> list;
        list.reserve(edge_count);
        for (uint64_t e = 0; e < edge_count; ++e)
            list.emplace_back(edges[2 * e], edges[2 * e + 1]);
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = Graph::undirected(n, std::move(list));
        *out = handle.release();
    });
}

clsnet_status clsnet_graph_read_edge_list(const char* path, int strict, clsnet_graph** out) {
    return wrap([&] {
        require(path && out, "path and out must not be null");
        ParseOptions options;
        options.strict = strict != 0;
        auto parsed = parse_edge_list_file(path, options);
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = std::move(parsed.graph);
        handle->labels = std::move(parsed.labels);
        handle->duplicate_count = parsed.duplicate_count;
        handle->self_loop_count = parsed.self_loop_count;
        *out = handle.release();
    });
}

clsnet_status clsnet_graph_parse_stats(const clsnet_graph* g, uint32_t* duplicates,
                                       uint32_t* self_loops) {
    return wrap([&] {
        require(g != nullptr, "graph must not be null");
        if (duplicates) *duplicates = g->duplicate_count;
        if (self_loops) *self_loops = g->self_loop_count;
    });
}

uint32_t clsnet_graph_node_count(const clsnet_graph* g) { return g ? g->graph.n : 0; }

uint64_t clsnet_graph_edge_count(const clsnet_graph* g) { return g ? g->graph.edge_count() : 0; }

clsnet_status clsnet_graph_get_edges(const clsnet_graph* g, uint32_t* out, uint64_t capacity) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        require(capacity >= 2 * g->graph.edge_count(), "out capacity too small");
        uint64_t cursor = 0;
        for (const auto& [u, v] : g->graph.edges) {
            out[cursor++] = u;
            out[cursor++] = v;
        }
    });
}

clsnet_status clsnet_graph_write_edge_list(const clsnet_graph* g, const char* path) {
    return wrap([&] {
        require(g && path, "graph and path must not be null");
        write_edge_list_file(g->graph, path);
    });
}

clsnet_status clsnet_graph_write_labels(const clsnet_graph* g, const char* path) {
    return wrap([&] {
        require(g && path, "graph and path must not be null");
        std::ofstream out(path);
        if (!out) throw_io(std::string("cannot open for writing: ") + path);
        std::vector<std::string> labels = g->labels;
        if (labels.empty()) {
            labels.reserve(g->graph.n);
            for (uint32_t v = 0; v < g->graph.n; ++v) labels.push_back(std::to_string(v));
        }
        write_labels_csv(labels, out);
    });
}

void clsnet_graph_destroy(clsnet_graph* g) { delete g; }

/* --- generators ------------------------------------------------------------------ */

clsnet_status clsnet_generate_distance_model(clsnet_geometry geometry, uint32_t n, double radius,
                                             double alpha, uint64_t seed, clsnet_graph** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        const GeometrySpace space = space_of(geometry);
        const auto positions = sample_disk(DiskDomain::make(space, radius), n, seed);
        const CLSModel model{SimilarityKernel::negative_distance(space), Link::logit(alpha)};
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = generate_cls(model, LatentConfiguration::from_polar(positions),
                                     substream_seed(seed, 1));
        *out = handle.release();
    });
}

clsnet_status clsnet_generate_heaviside(clsnet_geometry geometry, uint32_t n, double radius,
                                        double gamma, int rescale, uint64_t seed,
                                        clsnet_graph** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        GenerateRequest req;
        req.model = "heaviside";
        req.space = space_of(geometry);
        req.n = n;
        req.radius = radius;
        req.gamma_cut = gamma;
        req.rescale = rescale != 0;
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = generate_from_request(req, seed).graph;
        *out = handle.release();
    });
}

clsnet_status clsnet_generate_krioukov(uint32_t n, double kbar, double gamma_pl, double T,
                                       uint64_t seed, clsnet_graph** out, double* radius_out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto result = generate_krioukov(n, kbar, gamma_pl, T, seed);
        if (radius_out) *radius_out = result.R;
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = std::move(result.graph);
        *out = handle.release();
    });
}

clsnet_status clsnet_solve_krioukov_radius(uint32_t n, double kbar, double gamma_pl, double T,
                                           double* out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        *out = solve_krioukov_radius(n, kbar, gamma_pl, T);
    });
}

clsnet_status clsnet_generate_graphon(clsnet_graphon_fn W, void* context, uint32_t n,
                                      uint64_t seed, clsnet_graph** out) {
    return wrap([&] {
        require(out != nullptr && W != nullptr, "W and out must not be null");
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph =
            sample_graphon([W, context](double u, double v) { return W(u, v, context); }, n, seed);
        *out = handle.release();
    });
}

clsnet_status clsnet_generate_baseline(const char* kind, uint32_t n, double p, uint32_t m,
                                       uint32_t k, double beta, uint64_t seed,
                                       clsnet_graph** out) {
    return wrap([&] {
        require(kind && out, "kind and out must not be null");
        const std::string name = kind;
        BaselineSpec spec;
        if (name == "er")
            spec = BaselineSpec::er(n, p);
        else if (name == "ba")
            spec = BaselineSpec::ba(n, m);
        else if (name == "ws")
            spec = BaselineSpec::ws(n, k, beta);
        else if (name == "lattice")
            spec = BaselineSpec::lattice(n, k);
        else
            throw_input("unknown baseline kind: " + name + " (expected er|ba|ws|lattice)");
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = generate_baseline(spec, seed);
        *out = handle.release();
    });
}

clsnet_status clsnet_generate_from_config(const char* config_text, uint64_t seed,
                                          clsnet_graph** out) {
    return wrap([&] {
        require(config_text && out, "config and out must not be null");
        std::istringstream in(config_text);
        const auto request = build_generate_request(parse_config(in));
        auto handle = std::make_unique<clsnet_graph>();
        handle->graph = generate_from_request(request, seed).graph;
        *out = handle.release();
    });
}

/* --- statistics ---------------------------------------------------------------------- */

clsnet_status clsnet_graph_degrees(const clsnet_graph* g, uint32_t* out) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        const auto deg = degrees(g->graph);
        std::copy(deg.begin(), deg.end(), out);
    });
}

clsnet_status clsnet_graph_component_count(const clsnet_graph* g, uint32_t* out) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        *out = connected_components(g->graph).count;
    });
}

clsnet_status clsnet_graph_transitivity(const clsnet_graph* g, double* out) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        *out = transitivity(g->graph);
    });
}

clsnet_status clsnet_graph_average_path_length(const clsnet_graph* g, double* out, int* defined) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        const auto apl = average_path_length(g->graph);
        if (defined) *defined = apl.has_value() ? 1 : 0;
        *out = apl.value_or(0.0);
    });
}

clsnet_status clsnet_graph_centralization(const clsnet_graph* g, const char* kind, double* out) {
    return wrap([&] {
        require(g && kind && out, "graph, kind and out must not be null");
        *out = centralization(g->graph, centrality_from_name(kind));
    });
}

clsnet_status clsnet_graph_modularity(const clsnet_graph* g, double* q, uint32_t* communities,
                                      int* defined) {
    return wrap([&] {
        require(g && q, "graph and q must not be null");
        const auto result = girvan_newman(g->graph);
        if (communities) *communities = result.community_count;
        if (defined) *defined = result.q.has_value() ? 1 : 0;
        *q = result.q.value_or(0.0);
    });
}

clsnet_status clsnet_run_sweep(const clsnet_geometry* geometries, const double* radii,
                               uint32_t geometry_count, const uint32_t* n_values,
                               uint32_t n_count, uint32_t reps, double gamma_start,
                               double gamma_stop, double gamma_step, uint64_t seed,
                               const char* out_csv_path) {
    return wrap([&] {
        require(geometries && radii && n_values && out_csv_path,
                "geometries, radii, n_values and out path must not be null");
        SweepConfig config;
        for (uint32_t i = 0; i < geometry_count; ++i)
            config.geometries.push_back({space_of(geometries[i]), radii[i]});
        config.n_values.assign(n_values, n_values + n_count);
        config.reps = reps;
        config.gamma_start = gamma_start;
        config.gamma_stop = gamma_stop;
        config.gamma_step = gamma_step;
        config.seed = seed;
        const auto rows = run_sweep(config);
        std::ofstream out(out_csv_path);
        if (!out) throw_io(std::string("cannot open for writing: ") + out_csv_path);
        write_sweep_csv(rows, out);
    });
}

/* --- spectra ----------------------------------------------------------------------------- */

clsnet_status clsnet_graph_spectrum(const clsnet_graph* g, double* out, uint32_t dense_cap) {
    return wrap([&] {
        require(g && out, "graph and out must not be null");
        const auto curve = eigenvalues(g->graph, dense_cap == 0 ? kDefaultEigenCap : dense_cap);
        std::copy(curve.values.begin(), curve.values.end(), out);
    });
}

clsnet_status clsnet_graph_spectrum_csv(const clsnet_graph* g, const char* path,
                                        uint32_t dense_cap) {
    return wrap([&] {
        require(g && path, "graph and path must not be null");
        const auto curve = eigenvalues(g->graph, dense_cap == 0 ? kDefaultEigenCap : dense_cap);
        std::ofstream out(path);
        if (!out) throw_io(std::string("cannot open for writing: ") + path);
        write_curve_csv(curve, out);
    });
}

clsnet_status clsnet_build_ensemble(clsnet_geometry geometry, uint32_t n, uint32_t reps,
                                    double radius, uint64_t seed, clsnet_ensemble** out) {
    return wrap([&] {
        require(out != nullptr, "out must not be null");
        auto handle = std::make_unique<clsnet_ensemble>();
        handle->ensemble = build_ensemble(space_of(geometry), n, reps, radius, seed);
        *out = handle.release();
    });
}

uint32_t clsnet_ensemble_size(const clsnet_ensemble* ensemble) {
    return ensemble ? ensemble->ensemble.n : 0;
}

clsnet_status clsnet_ensemble_rank_stats(const clsnet_ensemble* ensemble, uint32_t rank,
                                         double* mean, double* min, double* max) {
    return wrap([&] {
        require(ensemble != nullptr, "ensemble must not be null");
        require(rank >= 1 && rank <= ensemble->ensemble.n, "rank out of range (1..n)");
        if (mean) *mean = ensemble->ensemble.mean[rank - 1];
        if (min) *min = ensemble->ensemble.lo[rank - 1];
        if (max) *max = ensemble->ensemble.hi[rank - 1];
    });
}

clsnet_status clsnet_ensemble_write_csv(const clsnet_ensemble* ensemble, const char* path) {
    return wrap([&] {
        require(ensemble && path, "ensemble and path must not be null");
        std::ofstream out(path);
        if (!out) throw_io(std::string("cannot open for writing: ") + path);
        write_ensemble_csv(ensemble->ensemble, out);
    });
}

void clsnet_ensemble_destroy(clsnet_ensemble* ensemble) { delete ensemble; }

clsnet_status clsnet_geometry_score(const double* curve, uint32_t length,
                                    const clsnet_ensemble* const* ensembles, uint32_t count,
                                    double* scores_out, uint32_t* best_out) {
    return wrap([&] {
        require(curve && ensembles && scores_out, "curve, ensembles and scores must not be null");
        require(count >= 1, "at least one ensemble required");
        EigenCurve ec;
        ec.values.assign(curve, curve + length);
        std::vector<GeometryEnsemble> list;
        list.reserve(count);
        for (uint32_t i = 0; i < count; ++i) {
            require(ensembles[i] != nullptr, "ensemble must not be null");
            list.push_back(ensembles[i]->ensemble);
        }
        const auto result = geometry_score(ec, list);
        std::copy(result.scores.begin(), result.scores.end(), scores_out);
        if (best_out) *best_out = result.best.front();
    });
}

clsnet_status clsnet_compare(const clsnet_graph* g, uint32_t reps, double radius, uint64_t seed,
                             const char* scores_json_path) {
    return wrap([&] {
        require(g && scores_json_path, "graph and out path must not be null");
        const auto curve = eigenvalues(g->graph);

        const GeometrySpace spaces[3] = {GeometrySpace::euclidean(), GeometrySpace::spherical(),
                                         GeometrySpace::hyperbolic()};
        std::vector<GeometryEnsemble> ensembles;
        ensembles.reserve(3);
        for (uint32_t i = 0; i < 3; ++i)
            ensembles.push_back(
                build_ensemble(spaces[i], g->graph.n, reps, radius, substream_seed(seed, i)));

        const auto result = geometry_score(curve, ensembles);
        std::string label;
        for (const uint32_t idx : result.best) {
            if (!label.empty()) label += "+";
            label += geometry_name(spaces[idx].kind);
        }
        std::string json = "{\n  \"scores\": {\n";
        for (uint32_t i = 0; i < 3; ++i) {
            json += "    \"" + geometry_name(spaces[i].kind) + "\": " + format_g17(result.scores[i]);
            json += i + 1 < 3 ? ",\n" : "\n";
        }
        json += "  },\n  \"label\": \"" + label + "\"\n}\n";
        write_text_file(scores_json_path, json);
    });
}

/* --- misc ------------------------------------------------------------------------------------ */

clsnet_status clsnet_file_sha256(const char* path, char* out) {
    return wrap([&] {
        require(path && out, "path and out must not be null");
        const std::string hex = sha256_hex_file(path);
        std::memcpy(out, hex.c_str(), hex.size() + 1);
    });
}

} // extern "C"
