#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contagion/graph.hpp"
#include "contagion/payoff.hpp"
#include "contagion/rng.hpp"

namespace contagion {

// Initial forced adopters: chi_i = 1 nodes play B forever.
struct SeedVector {
    std::vector<std::uint8_t> chi;
    double alpha_used = 0.0; // realized seed fraction, sum(chi)/n

    std::uint32_t count() const;
};

SeedVector seed_bernoulli(std::uint32_t n, double alpha, RngSeed seed);
SeedVector seed_from_nodes(std::uint32_t n, const std::vector<NodeId>& nodes);

// Per-node strategy indicators at one time step (1 = B).
struct CascadeState {
    std::vector<std::uint8_t> x;
    std::uint32_t t = 0;
};

// One synchronous best-response update: every node reads the time-t snapshot
// and writes the time-t+1 state. Seeds stay at B; under the payoff rule
// every non-seed is re-evaluated (a B node short of B-neighbors reverts);
// under the general threshold rule activation is permanent.
CascadeState step(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
                  const CascadeState& state);

// Fraction of edges whose endpoints both play B; 0 on edgeless graphs.
double delta_bb(const Graph& g, const CascadeState& state);

struct Trajectory {
    std::vector<double> beta;  // fraction playing B, per step
    std::vector<double> gamma; // beta - alpha_used
    std::vector<double> delta; // B-B edge fraction
    std::optional<std::uint32_t> converged_at;
    bool cycle_detected = false;
    double alpha_used = 0.0;
    CascadeState final_state;

    std::uint32_t steps_recorded() const { return static_cast<std::uint32_t>(beta.size()); }
    // beta at step t; constant after convergence.
    double beta_at(std::uint32_t t) const;
    double gamma_at(std::uint32_t t) const;
    double delta_at(std::uint32_t t) const;
};

// Iterates step() from X(0) = chi until a fixed point, a period-2 cycle, or
// t_max steps. From a seed start the dynamics are monotone, so convergence
// comes within n steps and the cycle detector stays quiet; it exists for the
// arbitrary-start overload below.
Trajectory run(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
               std::uint32_t t_max);
Trajectory run_from(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
                    CascadeState initial, std::uint32_t t_max);

} // namespace contagion
