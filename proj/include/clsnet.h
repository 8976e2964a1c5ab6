/* clsnet — continuous latent space network models across curved geometries,
 * with a graph-Laplacian pipeline for scoring which geometry fits an observed
 * network.
 *
 * C API over the C++ core: opaque handles, status codes, thread-local error
 * messages. All generative entry points are deterministic given their seed.
 */
#ifndef CLSNET_H
#define CLSNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clsnet_status {
    CLSNET_OK = 0,
    CLSNET_ERR_INVALID_ARGUMENT = 1,
    CLSNET_ERR_SINGULAR = 2,
    CLSNET_ERR_NUMERIC = 3,
    CLSNET_ERR_PARSE = 4,
    CLSNET_ERR_IO = 5,
    CLSNET_ERR_RESOURCE = 6,
    CLSNET_ERR_UNSUPPORTED = 7,
    CLSNET_ERR_INTERNAL = 8
} clsnet_status;

typedef enum clsnet_geometry {
    CLSNET_GEOM_EUCLIDEAN = 0,
    CLSNET_GEOM_SPHERICAL = 1,
    CLSNET_GEOM_HYPERBOLIC = 2,
    CLSNET_GEOM_ULTRAMETRIC = 3
} clsnet_geometry;

typedef struct clsnet_graph clsnet_graph;
typedef struct clsnet_positions clsnet_positions;
typedef struct clsnet_ensemble clsnet_ensemble;

const char* clsnet_version(void);

/* Message describing the most recent failure on this thread. */
const char* clsnet_last_error(void);

/* --- geometry ------------------------------------------------------------- */

/* Geodesic distance between polar points of a curved space. */
clsnet_status clsnet_distance(clsnet_geometry geometry, double r1, double phi1, double r2,
                              double phi2, double* out);

/* Ultrametric tree distance: level of the lowest common ancestor of two leaves. */
clsnet_status clsnet_ultrametric_distance(uint32_t branching, uint32_t depth, uint64_t leaf_a,
                                          uint64_t leaf_b, uint32_t* out);

/* 2*pi*r (K=0), 2*pi*sin(sqrt(|K|) r) (K>0), 2*pi*sinh(sqrt(|K|) r) (K<0). */
clsnet_status clsnet_circumference(double curvature, double r, double* out);

/* Hyperboloid embedding (x, y, z) = (sinh r cos phi, sinh r sin phi, cosh r)
 * and its stereographic projection onto the Poincare disk. */
clsnet_status clsnet_to_hyperboloid(double r, double phi, double* x, double* y, double* z);
clsnet_status clsnet_to_poincare(double x, double y, double z, double* u, double* v);

/* --- position sampling ------------------------------------------------------ */

/* Uniform (area measure) positions on a disk of intrinsic radius R. */
clsnet_status clsnet_sample_disk(clsnet_geometry geometry, uint32_t n, double radius,
                                 uint64_t seed, clsnet_positions** out);

/* Hyperbolic quasi-uniform radial law p(r|R,alpha); alpha = 1 is uniform. */
clsnet_status clsnet_sample_quasi_uniform(uint32_t n, double radius, double alpha, uint64_t seed,
                                          clsnet_positions** out);

/* Uniform leaves of the perfect b-ary tree of the given depth. */
clsnet_status clsnet_sample_ultrametric(uint32_t n, uint32_t branching, uint32_t depth,
                                        uint64_t seed, clsnet_positions** out);

uint32_t clsnet_positions_count(const clsnet_positions* positions);
/* Polar accessor (curved samples); fails with INVALID_ARGUMENT on leaf samples. */
clsnet_status clsnet_positions_get(const clsnet_positions* positions, uint32_t index, double* r,
                                   double* phi);
/* CSV: node,r,phi (curved) or node,leaf (ultrametric), 17 significant digits. */
clsnet_status clsnet_positions_write_csv(const clsnet_positions* positions, const char* path);
void clsnet_positions_destroy(clsnet_positions* positions);

/* --- graphs ----------------------------------------------------------------- */

/* Simple undirected graph from an edge array (u0,v0,u1,v1,...). */
clsnet_status clsnet_graph_create(uint32_t n, const uint32_t* edges, uint64_t edge_count,
                                  clsnet_graph** out);

/* Edge-list text file: '#' comments, "u v" edges, single-token isolated-node
 * lines; tokens map to dense ids in first-appearance order. strict != 0 makes
 * duplicates and self-loops hard errors instead of dedupe/drop. */
clsnet_status clsnet_graph_read_edge_list(const char* path, int strict, clsnet_graph** out);

uint32_t clsnet_graph_node_count(const clsnet_graph* g);
uint64_t clsnet_graph_edge_count(const clsnet_graph* g);
/* Counts of duplicate edges deduplicated and self-loops dropped while parsing
 * (always 0 for generated graphs). */
clsnet_status clsnet_graph_parse_stats(const clsnet_graph* g, uint32_t* duplicates,
                                       uint32_t* self_loops);
/* Copies edges as (u,v) pairs into caller storage of 2*edge_count entries. */
clsnet_status clsnet_graph_get_edges(const clsnet_graph* g, uint32_t* out, uint64_t capacity);
clsnet_status clsnet_graph_write_edge_list(const clsnet_graph* g, const char* path);
/* Sidecar id,label CSV for graphs read from labeled edge lists. */
clsnet_status clsnet_graph_write_labels(const clsnet_graph* g, const char* path);
void clsnet_graph_destroy(clsnet_graph* g);

/* --- generators -------------------------------------------------------------- */

/* Logit-link latent distance model (Bernoulli ties, logit p = alpha - d),
 * positions uniform on the disk. */
clsnet_status clsnet_generate_distance_model(clsnet_geometry geometry, uint32_t n, double radius,
                                             double alpha, uint64_t seed, clsnet_graph** out);

/* Heaviside threshold model: connect pairs with d <= gamma. rescale != 0
 * divides distances by the per-simulation maximum first (gamma in [0,1]). */
clsnet_status clsnet_generate_heaviside(clsnet_geometry geometry, uint32_t n, double radius,
                                        double gamma, int rescale, uint64_t seed,
                                        clsnet_graph** out);

/* Krioukov hyperbolic model targeting mean degree kbar with power-law exponent
 * gamma_pl and temperature T; the disk radius is solved numerically and
 * reported through radius_out (may be NULL). */
clsnet_status clsnet_generate_krioukov(uint32_t n, double kbar, double gamma_pl, double T,
                                       uint64_t seed, clsnet_graph** out, double* radius_out);

/* Solves the mean-degree integral equation for the Krioukov disk radius. */
clsnet_status clsnet_solve_krioukov_radius(uint32_t n, double kbar, double gamma_pl, double T,
                                           double* out);

typedef double (*clsnet_graphon_fn)(double u, double v, void* context);

/* Graphon model: z_i ~ Uniform(0,1), ties Bernoulli(W(z_i, z_j)). W must be
 * symmetric and map into [0,1] (checked on random probes). */
clsnet_status clsnet_generate_graphon(clsnet_graphon_fn W, void* context, uint32_t n,
                                      uint64_t seed, clsnet_graph** out);

/* Baseline generators. kind: "er" (uses p), "ba" (uses m), "ws" (k, beta),
 * "lattice" (k). Unused parameters are ignored. */
clsnet_status clsnet_generate_baseline(const char* kind, uint32_t n, double p, uint32_t m,
                                       uint32_t k, double beta, uint64_t seed, clsnet_graph** out);

/* Declarative model config (key=value text, same schema as the CLI --config
 * file); returns the generated graph. */
clsnet_status clsnet_generate_from_config(const char* config_text, uint64_t seed,
                                          clsnet_graph** out);

/* --- statistics ---------------------------------------------------------------- */

clsnet_status clsnet_graph_degrees(const clsnet_graph* g, uint32_t* out);
clsnet_status clsnet_graph_component_count(const clsnet_graph* g, uint32_t* out);
clsnet_status clsnet_graph_transitivity(const clsnet_graph* g, double* out);
/* defined = 0 when no reachable pair exists (value set to 0). */
clsnet_status clsnet_graph_average_path_length(const clsnet_graph* g, double* out, int* defined);
/* kind: "degree" | "betweenness" | "closeness". */
clsnet_status clsnet_graph_centralization(const clsnet_graph* g, const char* kind, double* out);
/* Girvan-Newman best-modularity partition; defined = 0 for edgeless graphs. */
clsnet_status clsnet_graph_modularity(const clsnet_graph* g, double* q, uint32_t* communities,
                                      int* defined);

/* Heaviside gamma sweep over geometries x sizes; emits the CSV table
 * geometry,n,gamma,stat,mean,min,max. geometries/radii are parallel arrays. */
clsnet_status clsnet_run_sweep(const clsnet_geometry* geometries, const double* radii,
                               uint32_t geometry_count, const uint32_t* n_values,
                               uint32_t n_count, uint32_t reps, double gamma_start,
                               double gamma_stop, double gamma_step, uint64_t seed,
                               const char* out_csv_path);

/* --- spectra --------------------------------------------------------------------- */

/* Laplacian (D - A) eigenvalues sorted in decreasing order; out must hold n
 * doubles. dense_cap bounds the eigensolve (0 means the default, 5000). */
clsnet_status clsnet_graph_spectrum(const clsnet_graph* g, double* out, uint32_t dense_cap);
clsnet_status clsnet_graph_spectrum_csv(const clsnet_graph* g, const char* path,
                                        uint32_t dense_cap);

/* Ensemble of Laplacian eigenvalue curves from the alpha=0 logit distance model
 * with uniform-disk positions; per-rank mean/min/max envelope. */
clsnet_status clsnet_build_ensemble(clsnet_geometry geometry, uint32_t n, uint32_t reps,
                                    double radius, uint64_t seed, clsnet_ensemble** out);
uint32_t clsnet_ensemble_size(const clsnet_ensemble* ensemble);
clsnet_status clsnet_ensemble_rank_stats(const clsnet_ensemble* ensemble, uint32_t rank,
                                         double* mean, double* min, double* max);
clsnet_status clsnet_ensemble_write_csv(const clsnet_ensemble* ensemble, const char* path);
void clsnet_ensemble_destroy(clsnet_ensemble* ensemble);

/* RMS deviation between a curve and each ensemble's mean curve; best_out gets
 * the index of the minimal score (first of the minimizers on a tie). */
clsnet_status clsnet_geometry_score(const double* curve, uint32_t length,
                                    const clsnet_ensemble* const* ensembles, uint32_t count,
                                    double* scores_out, uint32_t* best_out);

/* Full comparison pipeline: builds euclidean/spherical/hyperbolic ensembles
 * matched to the graph's size and writes the scores JSON
 * {"scores": {"euclidean": x, "spherical": y, "hyperbolic": z}, "label": "..."}. */
clsnet_status clsnet_compare(const clsnet_graph* g, uint32_t reps, double radius, uint64_t seed,
                             const char* scores_json_path);

/* --- misc ------------------------------------------------------------------------ */

/* SHA-256 of a file, hex. out must hold at least 65 bytes. */
clsnet_status clsnet_file_sha256(const char* path, char* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CLSNET_H */
