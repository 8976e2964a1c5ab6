#include "netstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "errors.hpp"
#include "util.hpp"

namespace clsnet {

namespace {

void require_undirected(const Graph& g, const char* what) {
    if (g.directed) throw_input(std::string(what) + " requires an undirected graph");
}

} // namespace

double transitivity(const Graph& g) {
    require_undirected(g, "transitivity");
    const auto adj = build_adjacency(g);
    uint64_t triples = 0;
    for (uint32_t v = 0; v < g.n; ++v) {
        const uint64_t d = adj.degree(v);
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) return 0.0;
    // sum over edges of |N(u) ∩ N(v)| counts each triangle three times
    uint64_t closed = 0;
    for (const auto& [u, v] : g.edges) {
        const auto nu = adj[u];
        const auto nv = adj[v];
        size_t a = 0, b = 0;
        while (a < nu.size() && b < nv.size()) {
            if (nu[a] == nv[b]) {
                ++closed;
                ++a;
                ++b;
            } else if (nu[a] < nv[b]) {
                ++a;
            } else {
                ++b;
            }
        }
    }
    return static_cast<double>(closed) / static_cast<double>(triples);
}

std::optional<double> average_path_length(const Graph& g) {
    require_undirected(g, "average_path_length");
    const auto adj = build_adjacency(g);
    uint64_t total = 0;
    uint64_t pairs = 0;
    for (uint32_t s = 0; s < g.n; ++s) {
        const auto dist = bfs_distances(adj, s);
        for (uint32_t v = 0; v < g.n; ++v) {
            if (v == s || dist[v] == kUnreachable) continue;
            total += dist[v];
            ++pairs;
        }
    }
    if (pairs == 0) return std::nullopt;
    return static_cast<double>(total) / static_cast<double>(pairs);
}

std::string centrality_name(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::Betweenness: return "betweenness";
        case CentralityKind::Closeness: return "closeness";
    }
    return "unknown";
}

CentralityKind centrality_from_name(const std::string& name) {
    if (name == "degree") return CentralityKind::Degree;
    if (name == "betweenness") return CentralityKind::Betweenness;
    if (name == "closeness") return CentralityKind::Closeness;
    throw_input("unknown centrality kind: " + name);
}

namespace {

// Brandes accumulation; fills node scores, and edge scores when requested.
void brandes(const Graph& g, const AdjacencyList& adj, std::vector<double>* node_scores,
             std::vector<double>* edge_scores) {
    const uint32_t n = g.n;
    if (node_scores) node_scores->assign(n, 0.0);
    if (edge_scores) edge_scores->assign(g.edges.size(), 0.0);

    std::vector<uint32_t> order;
    order.reserve(n);
    std::vector<uint32_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);

    for (uint32_t s = 0; s < n; ++s) {
        order.clear();
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (size_t head = 0; head < order.size(); ++head) {
            const uint32_t v = order[head];
            for (const uint32_t w : adj[v]) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }
        for (size_t idx = order.size(); idx-- > 1;) {
            const uint32_t w = order[idx];
            for (size_t k = adj.offsets[w]; k < adj.offsets[w + 1]; ++k) {
                const uint32_t v = adj.neighbors[k];
                if (dist[v] + 1 != dist[w]) continue;
                const double share = sigma[v] / sigma[w] * (1.0 + delta[w]);
                delta[v] += share;
                if (edge_scores) (*edge_scores)[adj.edge_ids[k]] += share;
            }
            if (node_scores && w != s) (*node_scores)[w] += delta[w];
        }
    }
    // each unordered pair was visited from both endpoints
    if (node_scores)
        for (auto& v : *node_scores) v *= 0.5;
    if (edge_scores)
        for (auto& v : *edge_scores) v *= 0.5;
}

} // namespace

std::vector<double> centrality(const Graph& g, CentralityKind kind) {
    require_undirected(g, "centrality");
    switch (kind) {
        case CentralityKind::Degree: {
            const auto deg = degrees(g);
            return {deg.begin(), deg.end()};
        }
        case CentralityKind::Betweenness: {
            const auto adj = build_adjacency(g);
            std::vector<double> scores;
            brandes(g, adj, &scores, nullptr);
            return scores;
        }
        case CentralityKind::Closeness: {
            const auto adj = build_adjacency(g);
            std::vector<double> scores(g.n, 0.0);
            for (uint32_t v = 0; v < g.n; ++v) {
                const auto dist = bfs_distances(adj, v);
                uint64_t reachable = 0;
                uint64_t total = 0;
                for (uint32_t w = 0; w < g.n; ++w) {
                    if (w == v || dist[w] == kUnreachable) continue;
                    ++reachable;
                    total += dist[w];
                }
                scores[v] = total == 0 ? 0.0 : static_cast<double>(reachable) / total;
            }
            return scores;
        }
    }
    throw_input("unknown centrality kind");
}

double centralization(const Graph& g, CentralityKind kind) {
    require_undirected(g, "centralization");
    if (g.n < 3) throw_input("centralization requires n >= 3");
    const auto scores = centrality(g, kind);
    const double cmax = *std::max_element(scores.begin(), scores.end());
    double total = 0.0;
    for (const double c : scores) total += cmax - c;
    const double n = g.n;
    double normalizer = 0.0;
    switch (kind) {
        case CentralityKind::Degree: normalizer = (n - 1.0) * (n - 2.0); break;
        case CentralityKind::Betweenness: normalizer = (n - 1.0) * (n - 1.0) * (n - 2.0) / 2.0; break;
        case CentralityKind::Closeness: normalizer = (n - 2.0) * (n - 1.0) / (2.0 * n - 3.0); break;
    }
    return total / normalizer;
}

std::optional<double> modularity(const Graph& g, std::span<const uint32_t> membership) {
    require_undirected(g, "modularity");
    if (membership.size() != g.n) throw_input("membership size must equal node count");
    if (g.edges.empty()) return std::nullopt;
    const double m = static_cast<double>(g.edges.size());
    uint32_t communities = 0;
    for (const uint32_t c : membership) communities = std::max(communities, c + 1);
    std::vector<double> internal(communities, 0.0);
    std::vector<double> degree_sum(communities, 0.0);
    for (const auto& [u, v] : g.edges) {
        degree_sum[membership[u]] += 1.0;
        degree_sum[membership[v]] += 1.0;
        if (membership[u] == membership[v]) internal[membership[u]] += 1.0;
    }
    double q = 0.0;
    for (uint32_t c = 0; c < communities; ++c) {
        const double frac = degree_sum[c] / (2.0 * m);
        q += internal[c] / m - frac * frac;
    }
    return q;
}

std::vector<double> edge_betweenness(const Graph& g) {
    require_undirected(g, "edge_betweenness");
    const auto adj = build_adjacency(g);
    std::vector<double> scores;
    brandes(g, adj, nullptr, &scores);
    return scores;
}

GirvanNewmanResult girvan_newman(const Graph& g) {
    require_undirected(g, "girvan_newman");

    GirvanNewmanResult best;
    const auto initial = connected_components(g);
    best.membership = initial.label;
    best.community_count = initial.count;
    best.q = modularity(g, best.membership);
    if (g.edges.empty()) return best;

    Graph work = g;
    double best_q = *best.q;
    while (!work.edges.empty()) {
        const auto scores = edge_betweenness(work);
        const size_t cut =
            std::max_element(scores.begin(), scores.end()) - scores.begin();
        work.edges.erase(work.edges.begin() + static_cast<ptrdiff_t>(cut));

        const auto comps = connected_components(work);
        const auto q = modularity(g, comps.label);
        if (q && *q > best_q) {
            best_q = *q;
            best.membership = comps.label;
            best.community_count = comps.count;
            best.q = q;
        }
    }
    return best;
}

// --- gamma sweep ---------------------------------------------------------------

const std::vector<std::string>& sweep_statistics() {
    static const std::vector<std::string> names = {
        "density",
        "transitivity",
        "apl",
        "centralization_degree",
        "centralization_betweenness",
        "centralization_closeness",
        "modularity",
    };
    return names;
}

namespace {

std::vector<double> gamma_grid(const SweepConfig& c) {
    if (!(c.gamma_step > 0.0)) throw_input("sweep gamma step must be positive");
    if (c.gamma_start < 0.0 || c.gamma_stop > 1.0 || c.gamma_start > c.gamma_stop)
        throw_input("sweep gamma grid must lie within [0, 1]");
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((c.gamma_stop - c.gamma_start) / c.gamma_step + 1e-9)) + 1;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) grid.push_back(c.gamma_start + i * c.gamma_step);
    return grid;
}

// all seven statistics of one Heaviside graph
std::vector<double> cell_statistics(const Graph& g) {
    std::vector<double> out;
    out.reserve(sweep_statistics().size());
    out.push_back(g.density());
    out.push_back(transitivity(g));
    out.push_back(average_path_length(g).value_or(0.0));
    out.push_back(centralization(g, CentralityKind::Degree));
    out.push_back(centralization(g, CentralityKind::Betweenness));
    out.push_back(centralization(g, CentralityKind::Closeness));
    const auto gn = girvan_newman(g);
    out.push_back(gn.q.value_or(0.0));
    return out;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    if (config.geometries.empty() || config.n_values.empty())
        throw_input("sweep requires at least one geometry and one n");
    if (config.reps < 1) throw_input("sweep reps must be >= 1");
    for (const auto& cell : config.geometries)
        DiskDomain::make(cell.space, cell.radius); // curved geometries only
    for (const uint32_t n : config.n_values)
        if (n < 3) throw_input("sweep requires n >= 3");

    const auto grid = gamma_grid(config);
    const size_t n_stats = sweep_statistics().size();
    const size_t cells = config.geometries.size() * config.n_values.size();
    const size_t jobs = cells * config.reps;

    // results[job][gamma][stat]
    std::vector<std::vector<std::vector<double>>> results(jobs);

    parallel_for(jobs, [&](size_t job) {
        const size_t cell = job / config.reps;
        const size_t gi = cell / config.n_values.size();
        const size_t ni = cell % config.n_values.size();
        const auto& geom = config.geometries[gi];
        const uint32_t n = config.n_values[ni];

        const auto positions =
            sample_disk(DiskDomain::make(geom.space, geom.radius), n, config.seed, job);

        std::vector<double> dist(static_cast<size_t>(n) * n, 0.0);
        double dmax = 0.0;
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) {
                const double d = distance(geom.space, positions[i], positions[j]);
                dist[static_cast<size_t>(i) * n + j] = d;
                dmax = std::max(dmax, d);
            }
        }
        if (dmax == 0.0) dmax = 1.0; // coincident points: every rescaled distance is 0

        auto& per_gamma = results[job];
        per_gamma.reserve(grid.size());
        for (const double gamma : grid) {
            std::vector<Edge> edges;
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = i + 1; j < n; ++j)
                    if (gamma - dist[static_cast<size_t>(i) * n + j] / dmax >= 0.0)
                        edges.emplace_back(i, j);
            per_gamma.push_back(cell_statistics(Graph::undirected(n, std::move(edges))));
        }
    });

    std::vector<SweepRow> rows;
    rows.reserve(cells * grid.size() * n_stats);
    for (size_t gi = 0; gi < config.geometries.size(); ++gi) {
        for (size_t ni = 0; ni < config.n_values.size(); ++ni) {
            const size_t cell = gi * config.n_values.size() + ni;
            for (size_t t = 0; t < grid.size(); ++t) {
                for (size_t s = 0; s < n_stats; ++s) {
                    SweepRow row;
                    row.geometry = geometry_name(config.geometries[gi].space.kind);
                    row.n = config.n_values[ni];
                    row.gamma = grid[t];
                    row.stat = sweep_statistics()[s];
                    double total = 0.0;
                    double lo = std::numeric_limits<double>::infinity();
                    double hi = -std::numeric_limits<double>::infinity();
                    for (uint32_t rep = 0; rep < config.reps; ++rep) {
                        const double v = results[cell * config.reps + rep][t][s];
                        total += v;
                        lo = std::min(lo, v);
                        hi = std::max(hi, v);
                    }
                    row.mean = total / config.reps;
                    row.min = lo;
                    row.max = hi;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

} // namespace clsnet
