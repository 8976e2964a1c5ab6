#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "graph.hpp"

namespace clsnet {

// Global transitivity: 3 * triangles / connected triples; 0 when no triples exist.
double transitivity(const Graph& g);

// Mean shortest-path length over ordered reachable pairs; unreachable pairs are
// excluded. nullopt when no reachable pair exists (empty / singleton graphs).
std::optional<double> average_path_length(const Graph& g);

enum class CentralityKind { Degree, Betweenness, Closeness };

std::string centrality_name(CentralityKind kind);
CentralityKind centrality_from_name(const std::string& name);

// Per-node scores. Betweenness is exact Brandes with each unordered pair
// counted once; closeness is within-component normalized (reachable count over
// summed distances, 0 for isolated nodes).
std::vector<double> centrality(const Graph& g, CentralityKind kind);

// Freeman centralization: sum of (c_max - c_v) over the star-graph maximum for
// graphs of the same size. Requires n >= 3.
double centralization(const Graph& g, CentralityKind kind);

// Newman-Girvan modularity of a node partition; nullopt for edgeless graphs.
std::optional<double> modularity(const Graph& g, std::span<const uint32_t> membership);

// Exact per-edge betweenness, aligned with g.edges; each unordered pair once.
std::vector<double> edge_betweenness(const Graph& g);

struct GirvanNewmanResult {
    std::vector<uint32_t> membership;
    uint32_t community_count = 0;
    std::optional<double> q; // modularity of the best partition; nullopt if edgeless
};

// Removes the max-betweenness edge repeatedly (recomputing after each removal)
// and returns the intermediate partition maximizing modularity on the original
// graph. Ties in betweenness and in modularity break toward the earliest
// candidate so runs are deterministic.
GirvanNewmanResult girvan_newman(const Graph& g);

// --- gamma sweep -------------------------------------------------------------

struct SweepCell {
    GeometrySpace space;
    double radius = 1.0;
};

struct SweepConfig {
    std::vector<SweepCell> geometries;
    std::vector<uint32_t> n_values;
    uint32_t reps = 200;
    double gamma_start = 0.0;
    double gamma_stop = 1.0;
    double gamma_step = 0.2;
    uint64_t seed = 0;
};

struct SweepRow {
    std::string geometry;
    uint32_t n = 0;
    double gamma = 0.0;
    std::string stat;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// The statistics emitted per sweep cell, in output order.
const std::vector<std::string>& sweep_statistics();

// Per (geometry, n, rep): sample uniform disk positions, rescale pairwise
// distances by the per-simulation maximum, build the Heaviside graph for each
// gamma (edge sets nested across gamma), and aggregate mean/min/max per cell.
// Undefined average path length / modularity (possible at small gamma) enter
// the aggregate as 0.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

} // namespace clsnet
