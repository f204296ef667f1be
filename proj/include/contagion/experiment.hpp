#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contagion/degree_distribution.hpp"
#include "contagion/dynamics_continuous.hpp"
#include "contagion/dynamics_discrete.hpp"
#include "contagion/graph.hpp"
#include "contagion/graph_gen.hpp"
#include "contagion/payoff.hpp"
#include "contagion/theory.hpp"

namespace contagion {

// Where replications get their graphs from. Generator specs produce a fresh
// graph per replication; a file spec reloads the same fixed graph.
struct GraphSpec {
    enum class Kind { file, erdos_renyi, regular, configuration };
    Kind kind = Kind::file;
    std::string path;      // file
    std::uint32_t n = 0;   // generators
    double p = 0.0;        // erdos_renyi
    std::uint32_t delta = 0; // regular
    std::optional<DegreeDistribution> dist; // configuration

    static GraphSpec from_file(std::string path);
    static GraphSpec erdos_renyi(std::uint32_t n, double p);
    static GraphSpec regular(std::uint32_t n, std::uint32_t delta);
    static GraphSpec configuration(std::uint32_t n, DegreeDistribution dist);

    Graph realize(RngSeed seed, std::uint64_t replication) const;
    std::string describe() const;
};

// Per-time means and standard errors over replications.
struct TrajectoryStats {
    std::vector<double> t;
    std::vector<double> beta_mean;
    std::vector<double> beta_stderr;
    std::vector<double> gamma_mean;
    std::vector<double> delta_mean;
    std::uint32_t replications = 0;
    // Last step at which any replication was still changing; rows beyond it
    // just repeat the fixed point (discrete runs only).
    std::uint32_t last_active_step = 0;

    // Drop the constant tail beyond last_active_step.
    TrajectoryStats trimmed() const;
};

// Discrete dynamics averaged over replications; each replication uses its
// own streams for the graph and the Bernoulli seeds. Trajectories that
// converge early hold their final value through the horizon.
TrajectoryStats simulate_discrete_reps(const GraphSpec& spec, const PayoffParams& params,
                                       double alpha, std::uint32_t horizon,
                                       std::uint32_t replications, RngSeed seed);

// Continuous dynamics sampled on a uniform grid of grid_points on [0, t_end].
TrajectoryStats simulate_continuous_reps(const GraphSpec& spec, const PayoffParams& params,
                                         double alpha, double t_end, std::uint32_t grid_points,
                                         std::uint32_t replications, RngSeed seed);

struct ComparisonRow {
    double t = 0.0;
    double theory = 0.0;
    double empirical_mean = 0.0;
    double empirical_stderr = 0.0;
    double z = 0.0;
};

// Mean adoption on fresh random regular graphs against the tree recursion,
// one z-score per time step.
struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    double max_abs_z = 0.0;
    double z_threshold = 3.0;
    bool pass = false;
};

ComparisonReport compare_regular(std::uint32_t delta, std::uint32_t n,
                                 const PayoffParams& params, double alpha, std::uint32_t horizon,
                                 std::uint32_t replications, RngSeed seed,
                                 double z_threshold = 3.0);

} // namespace contagion
