#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "contagion/experiment.hpp"

namespace contagion {

// c is the per-seed cost; r and u are the same rebate and subsidy that
// appear in the payoffs — a sweep row feeds one value to both sides.
struct CostParams {
    double c = 0.0;
    double r = 0.0;
    double u = 0.0;
};

struct CostBreakdown {
    double m1 = 0.0; // c * alpha
    double m2 = 0.0; // r * gamma
    double m3 = 0.0; // u * delta
    double total = 0.0;
};

CostBreakdown cost(const CostParams& cp, double alpha, double gamma, double delta);

enum class SweepBackend { theory, simulation };

// Evaluation context shared by every sweep row: the fixed economics
// (q_a, q_b, c), the horizon, and either a graph source (simulation) or a
// regular degree / degree distribution (theory).
struct SweepContext {
    double q_a = 1.0;
    double q_b = 1.0;
    double c = 1.0;
    std::uint32_t horizon = 50;
    std::uint32_t replications = 20;
    RngSeed seed{0};

    std::optional<GraphSpec> graph;              // simulation backend
    std::optional<std::uint32_t> delta;          // theory backend, regular tree
    std::optional<DegreeDistribution> dist;      // theory backend, branching tree
};

struct SweepRow {
    double alpha = 0.0;
    double r = 0.0;
    double u = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0; // NaN under the theory backend: no analytic B-B edge fraction
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, total = 0.0;
};

// Cartesian product of the grids, rows ordered lexicographically by grid
// index. Under the theory backend beta comes from the tree recursion at the
// horizon (regular) or the branching fixed point (distribution); delta and
// every quantity derived from it are NaN. Under the simulation backend all
// quantities are replication means at the horizon.
std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> rs,
                            std::span<const double> us, SweepBackend backend,
                            const SweepContext& ctx);

} // namespace contagion
