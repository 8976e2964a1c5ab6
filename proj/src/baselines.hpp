#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"

namespace clsnet {

// Classical generators used for the spectral comparison: Erdos-Renyi,
// Barabasi-Albert preferential attachment, Watts-Strogatz rewiring, ring lattice.
struct BaselineSpec {
    enum class Kind { ErdosRenyi, BarabasiAlbert, WattsStrogatz, Lattice };
    Kind kind = Kind::ErdosRenyi;
    uint32_t n = 0;
    double p = 0.0;    // ER tie probability
    uint32_t m = 1;    // BA edges per arriving node
    uint32_t k = 1;    // WS/Lattice neighbors per side
    double beta = 0.0; // WS rewiring probability

    static BaselineSpec er(uint32_t n, double p);
    static BaselineSpec ba(uint32_t n, uint32_t m);
    static BaselineSpec ws(uint32_t n, uint32_t k, double beta);
    static BaselineSpec lattice(uint32_t n, uint32_t k);
};

std::string baseline_name(BaselineSpec::Kind kind);

Graph generate_baseline(const BaselineSpec& spec, uint64_t seed, uint64_t stream = 0);

} // namespace clsnet
