#include "contagion/dynamics_discrete.hpp"

#include <numeric>
#include <stdexcept>

namespace contagion {

std::uint32_t SeedVector::count() const {
    return static_cast<std::uint32_t>(
        std::accumulate(chi.begin(), chi.end(), std::uint64_t{0}));
}

SeedVector seed_bernoulli(std::uint32_t n, double alpha, RngSeed seed) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("seed_bernoulli: alpha must be in [0,1]");
    SeedVector s;
    s.chi.resize(n);
    Rng rng = make_rng(seed);
    std::uint32_t count = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        s.chi[i] = bernoulli(rng, alpha) ? 1 : 0;
        count += s.chi[i];
    }
    s.alpha_used = n > 0 ? static_cast<double>(count) / n : 0.0;
    return s;
}

SeedVector seed_from_nodes(std::uint32_t n, const std::vector<NodeId>& nodes) {
    SeedVector s;
    s.chi.assign(n, 0);
    for (NodeId v : nodes) {
        if (v >= n)
            throw std::out_of_range("seed node out of range");
        s.chi[v] = 1;
    }
    s.alpha_used = n > 0 ? static_cast<double>(s.count()) / n : 0.0;
    return s;
}

CascadeState step(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
                  const CascadeState& state) {
    const std::uint32_t n = g.num_nodes();
    if (state.x.size() != n || seeds.chi.size() != n)
        throw std::invalid_argument("step: state/seed dimension mismatch");

    CascadeState next;
    next.x.resize(n);
    next.t = state.t + 1;

    std::vector<NodeId> active; // reused scratch for the general variant
    for (NodeId i = 0; i < n; ++i) {
        if (seeds.chi[i]) {
            next.x[i] = 1;
            continue;
        }
        if (rule.is_payoff()) {
            std::uint32_t num_b = 0;
            for (NodeId j : g.neighbors(i))
                num_b += state.x[j];
            next.x[i] = rule.activation_by_count(g.degree(i), num_b) ? 1 : 0;
        } else {
            if (state.x[i]) { // activation is permanent
                next.x[i] = 1;
                continue;
            }
            active.clear();
            for (NodeId j : g.neighbors(i))
                if (state.x[j])
                    active.push_back(j);
            next.x[i] = rule.activation(g, i, active) ? 1 : 0;
        }
    }
    return next;
}

double delta_bb(const Graph& g, const CascadeState& state) {
    if (state.x.size() != g.num_nodes())
        throw std::invalid_argument("delta_bb: state dimension mismatch");
    if (g.num_edges() == 0)
        return 0.0;
    std::size_t bb = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (!state.x[u])
            continue;
        for (NodeId v : g.neighbors(u))
            if (u < v && state.x[v])
                ++bb;
    }
    return static_cast<double>(bb) / static_cast<double>(g.num_edges());
}

namespace {

double fraction_b(const CascadeState& state) {
    if (state.x.empty())
        return 0.0;
    std::uint64_t count = std::accumulate(state.x.begin(), state.x.end(), std::uint64_t{0});
    return static_cast<double>(count) / static_cast<double>(state.x.size());
}

} // namespace

Trajectory run_from(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
                    CascadeState initial, std::uint32_t t_max) {
    Trajectory traj;
    traj.alpha_used = seeds.alpha_used;

    CascadeState prev;       // X(t-1), valid once cur.t >= 1
    CascadeState cur = std::move(initial);
    cur.t = 0;

    auto record = [&](const CascadeState& s) {
        traj.beta.push_back(fraction_b(s));
        traj.gamma.push_back(traj.beta.back() - seeds.alpha_used);
        traj.delta.push_back(delta_bb(g, s));
    };
    record(cur);

    for (std::uint32_t t = 0; t < t_max; ++t) {
        CascadeState next = step(g, rule, seeds, cur);
        if (next.x == cur.x) {
            traj.converged_at = t;
            break;
        }
        if (t >= 1 && next.x == prev.x) {
            traj.cycle_detected = true;
            break;
        }
        prev = std::move(cur);
        cur = std::move(next);
        record(cur);
    }
    traj.final_state = std::move(cur);
    return traj;
}

Trajectory run(const Graph& g, const ThresholdRule& rule, const SeedVector& seeds,
               std::uint32_t t_max) {
    CascadeState initial;
    initial.x = seeds.chi;
    return run_from(g, rule, seeds, std::move(initial), t_max);
}

double Trajectory::beta_at(std::uint32_t t) const {
    if (beta.empty())
        return 0.0;
    return beta[std::min<std::size_t>(t, beta.size() - 1)];
}

double Trajectory::gamma_at(std::uint32_t t) const {
    if (gamma.empty())
        return 0.0;
    return gamma[std::min<std::size_t>(t, gamma.size() - 1)];
}

double Trajectory::delta_at(std::uint32_t t) const {
    if (delta.empty())
        return 0.0;
    return delta[std::min<std::size_t>(t, delta.size() - 1)];
}

} // namespace contagion
