#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace clsnet {

using Edge = std::pair<uint32_t, uint32_t>;

// Simple unweighted graph over nodes 0..n-1. Edges are kept canonical: sorted
// lexicographically, deduplicated, i < j when undirected. Immutable after
// construction, so values are safe to share across threads.
struct Graph {
    uint32_t n = 0;
    bool directed = false;
    std::vector<Edge> edges;

    static Graph undirected(uint32_t n, std::vector<Edge> edges, bool dedupe = false);
    static Graph make_directed(uint32_t n, std::vector<Edge> edges, bool dedupe = false);

    uint64_t edge_count() const { return edges.size(); }
    uint64_t max_edges() const {
        return directed ? static_cast<uint64_t>(n) * (n - 1)
                        : static_cast<uint64_t>(n) * (n - 1) / 2;
    }
    double density() const {
        return max_edges() == 0 ? 0.0 : static_cast<double>(edge_count()) / max_edges();
    }
    bool has_edge(uint32_t u, uint32_t v) const;

    bool operator==(const Graph&) const = default;
};

// CSR adjacency for undirected graphs; neighbor lists sorted ascending.
struct AdjacencyList {
    std::vector<uint32_t> offsets;   // size n+1
    std::vector<uint32_t> neighbors; // size 2|E|
    std::vector<uint32_t> edge_ids;  // parallel to neighbors: index into Graph::edges

    uint32_t node_count() const { return offsets.empty() ? 0 : static_cast<uint32_t>(offsets.size() - 1); }
    std::span<const uint32_t> operator[](uint32_t v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }
    uint32_t degree(uint32_t v) const { return offsets[v + 1] - offsets[v]; }
};

AdjacencyList build_adjacency(const Graph& g);

std::vector<uint32_t> degrees(const Graph& g);

struct Components {
    std::vector<uint32_t> label; // component id per node, ids dense from 0
    uint32_t count = 0;
};

Components connected_components(const Graph& g);

inline constexpr uint32_t kUnreachable = 0xffffffffu;

// Unweighted shortest-path hop counts from source; kUnreachable marks nodes
// with no path.
std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t source);
std::vector<uint32_t> bfs_distances(const AdjacencyList& adjacency, uint32_t source);

} // namespace clsnet
