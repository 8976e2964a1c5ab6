#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "latent.hpp"
#include "netstats.hpp"
#include "spectral.hpp"

namespace clsnet {

// Edge-list text format: `#`-prefixed comment lines; `u v` declares an edge;
// a single-token line declares a node with no edges (needed so isolated nodes
// and empty graphs round-trip). Tokens map to dense ids in first-appearance
// order.
struct ParseOptions {
    bool strict = false; // strict: duplicates and self-loops are errors;
                         // lenient: dedupe / drop with counts reported
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;
    uint32_t duplicate_count = 0;
    uint32_t self_loop_count = 0;
};

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
ParsedGraph parse_edge_list_file(const std::string& path, const ParseOptions& options = {});

// Canonical writer: one declaration line per node (so parse . write == identity),
// then edges in canonical order.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// CSV emitters. Floating values carry 17 significant digits.
void write_positions_csv(std::span<const PolarPoint> points, std::ostream& out); // node,r,phi
void write_leaves_csv(std::span<const uint64_t> leaves, std::ostream& out);      // node,leaf
void write_curve_csv(const EigenCurve& curve, std::ostream& out);                // rank,value
void write_ensemble_csv(const GeometryEnsemble& ensemble, std::ostream& out);    // rank,mean,min,max
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);
void write_labels_csv(std::span<const std::string> labels, std::ostream& out);   // id,label

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// --- declarative model config ------------------------------------------------
//
// Flat key=value lines ('#' comments). Recognized keys are documented in the
// README; vectors are space- or comma-separated, matrix rows ';'-separated.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config(std::istream& in);
ConfigMap parse_config_file(const std::string& path);

std::vector<double> parse_number_list(const std::string& text);
std::vector<std::vector<double>> parse_matrix(const std::string& text);

// A fully resolved generation request built from a config map (plus CLI
// overrides layered into the same map).
struct GenerateRequest {
    std::string model = "distance-logit"; // distance-logit|heaviside|krioukov|graphon|kernel
    uint32_t n = 0;
    bool directed = false;

    // distance-logit / heaviside
    GeometrySpace space = GeometrySpace::euclidean();
    double radius = 1.0;
    double alpha = 0.0;     // logit intercept
    double gamma_cut = 0.0; // heaviside cutoff (rescaled when rescale is set)
    bool rescale = false;

    // krioukov
    double kbar = 8.0;
    double gamma_pl = 3.0;
    double temperature = 0.1;

    // graphon
    std::string graphon = "constant"; // constant | product
    double graphon_p = 0.5;

    // kernel models
    std::string kernel = "dot";
    uint32_t t = 2;
    double zeta = 1.0;
    std::vector<std::vector<double>> matrix; // A
    std::string latent = "";                 // defaulted per kernel when empty
    std::vector<double> psi;                 // dirichlet / onehot
    std::vector<MixtureComponent> mixture;
};

GenerateRequest build_generate_request(const ConfigMap& config);

struct GeneratedGraph {
    Graph graph;
    std::vector<PolarPoint> positions; // when the model samples polar positions
    std::vector<uint64_t> leaves;      // ultrametric positions
    std::optional<double> krioukov_radius;
};

GeneratedGraph generate_from_request(const GenerateRequest& request, uint64_t seed);

} // namespace clsnet
