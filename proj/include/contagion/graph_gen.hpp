#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contagion/degree_distribution.hpp"
#include "contagion/graph.hpp"
#include "contagion/rng.hpp"

namespace contagion {

// Target degrees, one per node. The sum must be even for half-edge pairing;
// sample_degree_sequence repairs odd draws and records the touched node.
struct DegreeSequence {
    std::vector<std::uint32_t> degrees;
    std::optional<NodeId> parity_repair_node;

    std::uint64_t sum() const;
};

// G(n,p): each of the n(n-1)/2 possible edges present independently with
// probability p. Uses geometric edge skipping, O(n + m).
Graph gen_erdos_renyi(std::uint32_t n, double p, RngSeed seed);

// Uniform random simple delta-regular graph: half-edge pairing with
// whole-graph rejection on any self-loop or multi-edge. Throws when
// n*delta is odd, delta >= n, or the attempt budget runs out.
Graph gen_random_regular(std::uint32_t n, std::uint32_t delta, RngSeed seed,
                         int max_attempts = 1000);

// Erased configuration model: one uniform pairing of the half-edges, then
// self-loops dropped and parallel edges collapsed. Resulting degrees can sit
// slightly below the requested ones; the graph reports the actual values.
Graph gen_configuration(const DegreeSequence& degrees, RngSeed seed);

// Configuration model with whole-graph rejection instead of erasure: exact
// uniform law over simple graphs with the given degree sequence. Used for
// regular graphs and for law-agreement tests; impractical for heavy tails.
Graph gen_configuration_reject(const DegreeSequence& degrees, RngSeed seed,
                               int max_attempts = 1000);

// n i.i.d. draws from dist; an odd sum is repaired by incrementing one
// uniformly chosen node's degree.
DegreeSequence sample_degree_sequence(const DegreeDistribution& dist, std::uint32_t n,
                                      RngSeed seed);

} // namespace contagion
