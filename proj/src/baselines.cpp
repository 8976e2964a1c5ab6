#include "baselines.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "errors.hpp"
#include "rng.hpp"

namespace clsnet {

BaselineSpec BaselineSpec::er(uint32_t n, double p) {
    if (n < 1) throw_input("ER: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw_input("ER: p must lie in [0, 1]");
    BaselineSpec s;
    s.kind = Kind::ErdosRenyi;
    s.n = n;
    s.p = p;
    return s;
}

BaselineSpec BaselineSpec::ba(uint32_t n, uint32_t m) {
    if (m < 1) throw_input("BA: m must be >= 1");
    if (n <= m) throw_input("BA: n must exceed m");
    BaselineSpec s;
    s.kind = Kind::BarabasiAlbert;
    s.n = n;
    s.m = m;
    return s;
}

BaselineSpec BaselineSpec::ws(uint32_t n, uint32_t k, double beta) {
    if (k < 1) throw_input("WS: k must be >= 1");
    if (n <= 2 * k) throw_input("WS: n must exceed 2k");
    if (!(beta >= 0.0 && beta <= 1.0)) throw_input("WS: beta must lie in [0, 1]");
    BaselineSpec s;
    s.kind = Kind::WattsStrogatz;
    s.n = n;
    s.k = k;
    s.beta = beta;
    return s;
}

BaselineSpec BaselineSpec::lattice(uint32_t n, uint32_t k) {
    BaselineSpec s = ws(n, k, 0.0);
    s.kind = Kind::Lattice;
    return s;
}

std::string baseline_name(BaselineSpec::Kind kind) {
    switch (kind) {
        case BaselineSpec::Kind::ErdosRenyi: return "er";
        case BaselineSpec::Kind::BarabasiAlbert: return "ba";
        case BaselineSpec::Kind::WattsStrogatz: return "ws";
        case BaselineSpec::Kind::Lattice: return "lattice";
    }
    return "unknown";
}

namespace {

Graph generate_er(const BaselineSpec& spec, uint64_t pair_seed) {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < spec.n; ++i)
        for (uint32_t j = i + 1; j < spec.n; ++j)
            if (pair_uniform(pair_seed, pair_rank(i, j, spec.n)) < spec.p) edges.emplace_back(i, j);
    return Graph::undirected(spec.n, std::move(edges));
}

Graph generate_ba(const BaselineSpec& spec, Rng& rng) {
    std::vector<Edge> edges;
    std::vector<uint32_t> attachment; // node id repeated once per unit of degree
    const uint32_t seed_nodes = spec.m + 1;
    for (uint32_t i = 0; i < seed_nodes; ++i) {
        for (uint32_t j = i + 1; j < seed_nodes; ++j) edges.emplace_back(i, j);
        for (uint32_t d = 0; d < spec.m; ++d) attachment.push_back(i);
    }
    std::vector<uint32_t> targets;
    for (uint32_t t = seed_nodes; t < spec.n; ++t) {
        targets.clear();
        while (targets.size() < spec.m) {
            const uint32_t candidate = attachment[rng.below(attachment.size())];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (const uint32_t target : targets) {
            edges.emplace_back(target, t);
            attachment.push_back(target);
            attachment.push_back(t);
        }
    }
    return Graph::undirected(spec.n, std::move(edges));
}

Graph generate_ws(const BaselineSpec& spec, Rng& rng) {
    const uint32_t n = spec.n;
    std::vector<std::unordered_set<uint32_t>> adj(n);
    auto connect = [&](uint32_t a, uint32_t b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    auto disconnect = [&](uint32_t a, uint32_t b) {
        adj[a].erase(b);
        adj[b].erase(a);
    };
    for (uint32_t j = 1; j <= spec.k; ++j)
        for (uint32_t i = 0; i < n; ++i) connect(i, (i + j) % n);

    if (spec.beta > 0.0) {
        // visit the lattice edges in canonical (ring offset, node) order
        for (uint32_t j = 1; j <= spec.k; ++j) {
            for (uint32_t i = 0; i < n; ++i) {
                const uint32_t old_target = (i + j) % n;
                if (rng.uniform() >= spec.beta) continue;
                if (adj[i].size() >= n - 1) continue; // saturated, keep the edge
                uint32_t fresh;
                do {
                    fresh = static_cast<uint32_t>(rng.below(n));
                } while (fresh == i || adj[i].count(fresh));
                disconnect(i, old_target);
                connect(i, fresh);
            }
        }
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * spec.k);
    for (uint32_t v = 0; v < n; ++v)
        for (const uint32_t w : adj[v])
            if (v < w) edges.emplace_back(v, w);
    return Graph::undirected(n, std::move(edges));
}

} // namespace

Graph generate_baseline(const BaselineSpec& spec, uint64_t seed, uint64_t stream) {
    Rng rng(seed, stream);
    switch (spec.kind) {
        case BaselineSpec::Kind::ErdosRenyi:
            return generate_er(spec, substream_seed(seed, stream));
        case BaselineSpec::Kind::BarabasiAlbert:
            return generate_ba(spec, rng);
        case BaselineSpec::Kind::WattsStrogatz:
        case BaselineSpec::Kind::Lattice:
            return generate_ws(spec, rng);
    }
    throw_input("unknown baseline kind");
}

} // namespace clsnet
