// Test-only oracles, independent of the library implementation paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace oracle {

// Kolmogorov-Smirnov statistic of samples against an analytic CDF.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        worst = std::max(worst, std::fabs(f - (i + 1) / n));
        worst = std::max(worst, std::fabs(f - i / n));
    }
    return worst;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double total = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) total += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return total * h / 3.0;
}

// Cyclic Jacobi eigenvalues of a symmetric matrix (row-major n x n); a slow
// route independent of the library's eigensolver.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
        if (off < 1e-24) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(at(p, q)) < 1e-18) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

// Brute-force triangle and connected-triple counts.
struct TriangleCounts {
    uint64_t triangles = 0;
    uint64_t triples = 0;
};

inline TriangleCounts count_triangles(const clsnet::Graph& g) {
    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
    TriangleCounts out;
    for (uint32_t a = 0; a < g.n; ++a)
        for (uint32_t b = a + 1; b < g.n; ++b)
            for (uint32_t c = b + 1; c < g.n; ++c) {
                const int ties = adj[a][b] + adj[a][c] + adj[b][c];
                if (ties == 3) ++out.triangles;
                if (ties >= 2) out.triples += (ties == 3) ? 3 : 1;
            }
    return out;
}

// Exact betweenness by enumerating all shortest paths (tiny graphs only).
// Counts each unordered pair once; endpoints excluded.
inline std::vector<double> brute_betweenness(const clsnet::Graph& g) {
    using namespace clsnet;
    const auto adj = build_adjacency(g);
    std::vector<double> score(g.n, 0.0);

    std::function<void(uint32_t, uint32_t, const std::vector<uint32_t>&, std::vector<uint32_t>&,
                       std::vector<std::vector<uint32_t>>&)>
        extend = [&](uint32_t v, uint32_t t, const std::vector<uint32_t>& dist,
                     std::vector<uint32_t>& path, std::vector<std::vector<uint32_t>>& paths) {
            if (v == t) {
                paths.push_back(path);
                return;
            }
            for (const uint32_t w : adj[v]) {
                if (dist[w] != dist[v] + 1) continue;
                path.push_back(w);
                extend(w, t, dist, path, paths);
                path.pop_back();
            }
        };

    for (uint32_t s = 0; s < g.n; ++s) {
        const auto dist = bfs_distances(adj, s);
        for (uint32_t t = s + 1; t < g.n; ++t) {
            if (dist[t] == kUnreachable) continue;
            std::vector<std::vector<uint32_t>> paths;
            std::vector<uint32_t> path{s};
            extend(s, t, dist, path, paths);
            for (const auto& p : paths)
                for (size_t k = 1; k + 1 < p.size(); ++k)
                    score[p[k]] += 1.0 / static_cast<double>(paths.size());
        }
    }
    return score;
}

// Direct double-sum modularity: (1/2m) sum_ij (A_ij - k_i k_j / 2m) delta(c_i, c_j).
inline double brute_modularity(const clsnet::Graph& g, const std::vector<uint32_t>& membership) {
    std::vector<std::vector<double>> a(g.n, std::vector<double>(g.n, 0.0));
    for (const auto& [u, v] : g.edges) a[u][v] = a[v][u] = 1.0;
    const auto deg = clsnet::degrees(g);
    const double two_m = 2.0 * static_cast<double>(g.edges.size());
    double q = 0.0;
    for (uint32_t i = 0; i < g.n; ++i)
        for (uint32_t j = 0; j < g.n; ++j)
            if (membership[i] == membership[j])
                q += a[i][j] - static_cast<double>(deg[i]) * deg[j] / two_m;
    return q / two_m;
}

} // namespace oracle
