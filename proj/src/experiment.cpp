#include "contagion/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace contagion {

namespace {

// Stream purposes within one replication.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kSeedStream = 1;
constexpr std::uint64_t kDynamicsStream = 2;
constexpr std::uint64_t kStreamsPerRep = 4;

RngSeed rep_seed(RngSeed base, std::uint64_t replication, std::uint64_t purpose) {
    return derive_seed(base, replication * kStreamsPerRep + purpose);
}

struct Accumulator {
    std::vector<double> sum, sum_sq;

    explicit Accumulator(std::size_t size) : sum(size, 0.0), sum_sq(size, 0.0) {}
    void add(std::size_t idx, double v) {
        sum[idx] += v;
        sum_sq[idx] += v * v;
    }
    double mean(std::size_t idx, std::uint32_t reps) const { return sum[idx] / reps; }
    double stderr_of_mean(std::size_t idx, std::uint32_t reps) const {
        if (reps < 2)
            return 0.0;
        const double m = mean(idx, reps);
        const double var = std::max(0.0, (sum_sq[idx] - reps * m * m) / (reps - 1));
        return std::sqrt(var / reps);
    }
};

} // namespace

TrajectoryStats TrajectoryStats::trimmed() const {
    TrajectoryStats out = *this;
    const std::size_t keep = std::min<std::size_t>(t.size(), last_active_step + 1);
    out.t.resize(keep);
    out.beta_mean.resize(keep);
    out.beta_stderr.resize(keep);
    out.gamma_mean.resize(keep);
    out.delta_mean.resize(keep);
    return out;
}

GraphSpec GraphSpec::from_file(std::string path) {
    GraphSpec s;
    s.kind = Kind::file;
    s.path = std::move(path);
    return s;
}

GraphSpec GraphSpec::erdos_renyi(std::uint32_t n, double p) {
    GraphSpec s;
    s.kind = Kind::erdos_renyi;
    s.n = n;
    s.p = p;
    return s;
}

GraphSpec GraphSpec::regular(std::uint32_t n, std::uint32_t delta) {
    GraphSpec s;
    s.kind = Kind::regular;
    s.n = n;
    s.delta = delta;
    return s;
}

GraphSpec GraphSpec::configuration(std::uint32_t n, DegreeDistribution dist) {
    GraphSpec s;
    s.kind = Kind::configuration;
    s.n = n;
    s.dist = std::move(dist);
    return s;
}

Graph GraphSpec::realize(RngSeed seed, std::uint64_t replication) const {
    const RngSeed gseed = rep_seed(seed, replication, kGraphStream);
    switch (kind) {
    case Kind::file:
        return load_graph_file(path);
    case Kind::erdos_renyi:
        return gen_erdos_renyi(n, p, gseed);
    case Kind::regular:
        return gen_random_regular(n, delta, gseed);
    case Kind::configuration: {
        const DegreeSequence seq =
            sample_degree_sequence(*dist, n, derive_seed(gseed, 1));
        return gen_configuration(seq, derive_seed(gseed, 2));
    }
    }
    throw std::logic_error("unreachable graph spec kind");
}

std::string GraphSpec::describe() const {
    switch (kind) {
    case Kind::file:
        return "file:" + path;
    case Kind::erdos_renyi:
        return "erdos-renyi n=" + std::to_string(n) + " p=" + std::to_string(p);
    case Kind::regular:
        return "regular n=" + std::to_string(n) + " delta=" + std::to_string(delta);
    case Kind::configuration:
        return "configuration n=" + std::to_string(n);
    }
    return "?";
}

TrajectoryStats simulate_discrete_reps(const GraphSpec& spec, const PayoffParams& params,
                                       double alpha, std::uint32_t horizon,
                                       std::uint32_t replications, RngSeed seed) {
    if (replications == 0)
        throw std::invalid_argument("simulate_discrete_reps: replications must be positive");
    const std::size_t points = horizon + 1;
    Accumulator beta(points), gamma(points), delta(points);
    const ThresholdRule rule = ThresholdRule::payoff(params);

    std::uint32_t last_active = 0;
    for (std::uint32_t rep = 0; rep < replications; ++rep) {
        const Graph g = spec.realize(seed, rep);
        const SeedVector seeds =
            seed_bernoulli(g.num_nodes(), alpha, rep_seed(seed, rep, kSeedStream));
        const Trajectory traj = run(g, rule, seeds, horizon);
        last_active = std::max(last_active, traj.converged_at.value_or(horizon));
        for (std::uint32_t t = 0; t <= horizon; ++t) {
            beta.add(t, traj.beta_at(t));
            gamma.add(t, traj.gamma_at(t));
            delta.add(t, traj.delta_at(t));
        }
    }

    TrajectoryStats stats;
    stats.replications = replications;
    stats.last_active_step = std::min(last_active, horizon);
    for (std::uint32_t t = 0; t <= horizon; ++t) {
        stats.t.push_back(t);
        stats.beta_mean.push_back(beta.mean(t, replications));
        stats.beta_stderr.push_back(beta.stderr_of_mean(t, replications));
        stats.gamma_mean.push_back(gamma.mean(t, replications));
        stats.delta_mean.push_back(delta.mean(t, replications));
    }
    return stats;
}

TrajectoryStats simulate_continuous_reps(const GraphSpec& spec, const PayoffParams& params,
                                         double alpha, double t_end, std::uint32_t grid_points,
                                         std::uint32_t replications, RngSeed seed) {
    if (replications == 0)
        throw std::invalid_argument("simulate_continuous_reps: replications must be positive");
    if (grid_points < 2)
        throw std::invalid_argument("simulate_continuous_reps: need at least 2 grid points");

    std::vector<double> grid(grid_points);
    for (std::uint32_t k = 0; k < grid_points; ++k)
        grid[k] = t_end * static_cast<double>(k) / (grid_points - 1);

    Accumulator beta(grid_points), gamma(grid_points), delta(grid_points);
    for (std::uint32_t rep = 0; rep < replications; ++rep) {
        const Graph g = spec.realize(seed, rep);
        const SeedVector seeds =
            seed_bernoulli(g.num_nodes(), alpha, rep_seed(seed, rep, kSeedStream));
        const EventTrajectory traj =
            simulate_ctmc(g, params, seeds, t_end, rep_seed(seed, rep, kDynamicsStream));
        for (std::uint32_t k = 0; k < grid_points; ++k) {
            const double b = traj.beta_at(grid[k]);
            beta.add(k, b);
            gamma.add(k, b - seeds.alpha_used);
            delta.add(k, traj.delta_at(grid[k]));
        }
    }

    TrajectoryStats stats;
    stats.replications = replications;
    stats.last_active_step = grid_points - 1;
    stats.t = grid;
    for (std::uint32_t k = 0; k < grid_points; ++k) {
        stats.beta_mean.push_back(beta.mean(k, replications));
        stats.beta_stderr.push_back(beta.stderr_of_mean(k, replications));
        stats.gamma_mean.push_back(gamma.mean(k, replications));
        stats.delta_mean.push_back(delta.mean(k, replications));
    }
    return stats;
}

ComparisonReport compare_regular(std::uint32_t delta, std::uint32_t n,
                                 const PayoffParams& params, double alpha, std::uint32_t horizon,
                                 std::uint32_t replications, RngSeed seed, double z_threshold) {
    if (replications < 2)
        throw std::invalid_argument("compare_regular: need at least 2 replications");

    const TrajectoryStats stats = simulate_discrete_reps(GraphSpec::regular(n, delta), params,
                                                         alpha, horizon, replications, seed);
    const double theta = threshold(params, delta);
    const RecursionTrace trace = recursion_trace(delta, theta, alpha, horizon);

    ComparisonReport report;
    report.z_threshold = z_threshold;
    for (std::uint32_t t = 0; t <= horizon; ++t) {
        ComparisonRow row;
        row.t = t;
        row.theory = trace.h_tilde[t];
        row.empirical_mean = stats.beta_mean[t];
        row.empirical_stderr = stats.beta_stderr[t];
        const double diff = row.empirical_mean - row.theory;
        if (diff == 0.0)
            row.z = 0.0;
        else if (row.empirical_stderr == 0.0)
            row.z = std::numeric_limits<double>::infinity();
        else
            row.z = diff / row.empirical_stderr;
        report.max_abs_z = std::max(report.max_abs_z, std::abs(row.z));
        report.rows.push_back(row);
    }
    report.pass = report.max_abs_z <= z_threshold;
    return report;
}

} // namespace contagion
