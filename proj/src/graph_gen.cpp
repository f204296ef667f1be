#include "contagion/graph_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace contagion {

std::uint64_t DegreeSequence::sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

Graph gen_erdos_renyi(std::uint32_t n, double p, RngSeed seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_erdos_renyi: p must be in [0,1]");
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (p >= 1.0) {
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    if (p > 0.0 && n > 1) {
        // Batagelj-Brandes skipping over the lower-triangular edge order.
        Rng rng = make_rng(seed);
        const double log_q = std::log1p(-p);
        std::int64_t v = 1, w = -1;
        while (v < static_cast<std::int64_t>(n)) {
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-uniform01(rng)) / log_q));
            while (w >= v && v < static_cast<std::int64_t>(n)) {
                w -= v;
                ++v;
            }
            if (v < static_cast<std::int64_t>(n))
                edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
        }
    }
    return Graph::from_edges(n, edges);
}

namespace {

// One uniform pairing of half-edges; returns the multigraph edge list.
std::vector<std::pair<NodeId, NodeId>> pair_half_edges(const std::vector<std::uint32_t>& degrees,
                                                       Rng& rng) {
    std::vector<NodeId> stubs;
    stubs.reserve(std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}));
    for (NodeId v = 0; v < static_cast<NodeId>(degrees.size()); ++v)
        stubs.insert(stubs.end(), degrees[v], v);
    shuffle(stubs, rng);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2)
        edges.emplace_back(stubs[k], stubs[k + 1]);
    return edges;
}

bool is_simple(std::vector<std::pair<NodeId, NodeId>>& edges) {
    for (auto& e : edges) {
        if (e.first == e.second)
            return false;
        if (e.first > e.second)
            std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

void check_feasible(const DegreeSequence& seq) {
    if (seq.sum() % 2 != 0)
        throw std::invalid_argument("degree sequence: odd degree sum");
    const std::uint32_t n = static_cast<std::uint32_t>(seq.degrees.size());
    for (std::uint32_t d : seq.degrees)
        if (d >= n)
            throw std::invalid_argument("degree sequence: degree " + std::to_string(d) +
                                        " >= n = " + std::to_string(n));
}

} // namespace

Graph gen_random_regular(std::uint32_t n, std::uint32_t delta, RngSeed seed, int max_attempts) {
    if (delta == 0)
        throw std::invalid_argument("gen_random_regular: delta must be positive");
    if (static_cast<std::uint64_t>(n) * delta % 2 != 0)
        throw std::invalid_argument("gen_random_regular: n*delta is odd");
    if (delta >= n)
        throw std::invalid_argument("gen_random_regular: delta must be < n");
    DegreeSequence seq;
    seq.degrees.assign(n, delta);
    return gen_configuration_reject(seq, seed, max_attempts);
}

Graph gen_configuration_reject(const DegreeSequence& seq, RngSeed seed, int max_attempts) {
    check_feasible(seq);
    Rng rng = make_rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto edges = pair_half_edges(seq.degrees, rng);
        if (is_simple(edges))
            return Graph::from_edges(static_cast<NodeId>(seq.degrees.size()), edges);
    }
    throw std::runtime_error("gen_configuration_reject: no simple pairing within " +
                             std::to_string(max_attempts) + " attempts");
}

Graph gen_configuration(const DegreeSequence& seq, RngSeed seed) {
    check_feasible(seq);
    Rng rng = make_rng(seed);
    auto edges = pair_half_edges(seq.degrees, rng);
    // Erased repair: drop self-loops, collapse parallel edges.
    for (auto& e : edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [](const auto& e) { return e.first == e.second; }),
                edges.end());
    return Graph::from_edges(static_cast<NodeId>(seq.degrees.size()), edges);
}

DegreeSequence sample_degree_sequence(const DegreeDistribution& dist, std::uint32_t n,
                                      RngSeed seed) {
    Rng rng = make_rng(seed);
    std::vector<double> cdf(dist.values().begin(), dist.values().end());
    std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
    cdf.back() = 1.0;

    DegreeSequence seq;
    seq.degrees.resize(n);
    std::uint64_t sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const double u = uniform01(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        seq.degrees[i] = static_cast<std::uint32_t>(it - cdf.begin());
        sum += seq.degrees[i];
    }
    if (sum % 2 != 0) {
        const NodeId pick = static_cast<NodeId>(uniform_below(rng, n));
        seq.degrees[pick] += 1;
        seq.parity_repair_node = pick;
    }
    return seq;
}

} // namespace contagion
