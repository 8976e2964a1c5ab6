#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace clsnet {

namespace {

std::vector<Edge> canonicalize(uint32_t n, std::vector<Edge> edges, bool directed, bool dedupe) {
    for (auto& e : edges) {
        if (e.first >= n || e.second >= n)
            throw_input("edge endpoint out of range: node ids must lie in [0, n)");
        if (e.first == e.second)
            throw_input("self-loops are not allowed");
        if (!directed && e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        if (!dedupe) throw_input("duplicate edge: (" + std::to_string(dup->first) + ", " +
                                 std::to_string(dup->second) + ")");
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    return edges;
}

} // namespace

Graph Graph::undirected(uint32_t n, std::vector<Edge> edges, bool dedupe) {
    return Graph{n, false, canonicalize(n, std::move(edges), false, dedupe)};
}

Graph Graph::make_directed(uint32_t n, std::vector<Edge> edges, bool dedupe) {
    return Graph{n, true, canonicalize(n, std::move(edges), true, dedupe)};
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    Edge probe{u, v};
    if (!directed && probe.first > probe.second) std::swap(probe.first, probe.second);
    return std::binary_search(edges.begin(), edges.end(), probe);
}

AdjacencyList build_adjacency(const Graph& g) {
    if (g.directed) throw_input("adjacency lists are built for undirected graphs only");
    AdjacencyList adj;
    adj.offsets.assign(g.n + 1, 0);
    for (const auto& [u, v] : g.edges) {
        ++adj.offsets[u + 1];
        ++adj.offsets[v + 1];
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.neighbors.resize(2 * g.edges.size());
    adj.edge_ids.resize(2 * g.edges.size());
    std::vector<uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (uint32_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        adj.neighbors[cursor[u]] = v;
        adj.edge_ids[cursor[u]++] = e;
        adj.neighbors[cursor[v]] = u;
        adj.edge_ids[cursor[v]++] = e;
    }
    // per-node neighbor order follows the canonical edge order; sort for intersections
    for (uint32_t v = 0; v < g.n; ++v) {
        const uint32_t lo = adj.offsets[v], hi = adj.offsets[v + 1];
        std::vector<std::pair<uint32_t, uint32_t>> tmp;
        tmp.reserve(hi - lo);
        for (uint32_t k = lo; k < hi; ++k) tmp.emplace_back(adj.neighbors[k], adj.edge_ids[k]);
        std::sort(tmp.begin(), tmp.end());
        for (uint32_t k = lo; k < hi; ++k) {
            adj.neighbors[k] = tmp[k - lo].first;
            adj.edge_ids[k] = tmp[k - lo].second;
        }
    }
    return adj;
}

std::vector<uint32_t> degrees(const Graph& g) {
    std::vector<uint32_t> deg(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Components connected_components(const Graph& g) {
    // union-find; the BFS-sweep equivalence is checked independently in tests
    std::vector<uint32_t> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : g.edges) {
        const uint32_t ru = find(u), rv = find(v);
        if (ru != rv) parent[ru] = rv;
    }
    Components comps;
    comps.label.assign(g.n, kUnreachable);
    for (uint32_t v = 0; v < g.n; ++v) {
        const uint32_t root = find(v);
        if (comps.label[root] == kUnreachable) comps.label[root] = comps.count++;
        comps.label[v] = comps.label[root];
    }
    return comps;
}

std::vector<uint32_t> bfs_distances(const AdjacencyList& adjacency, uint32_t source) {
    const uint32_t n = adjacency.node_count();
    if (source >= n) throw_input("bfs_distances: source out of range");
    std::vector<uint32_t> dist(n, kUnreachable);
    std::vector<uint32_t> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        const uint32_t v = queue[head];
        for (const uint32_t w : adjacency[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t source) {
    return bfs_distances(build_adjacency(g), source);
}

} // namespace clsnet
