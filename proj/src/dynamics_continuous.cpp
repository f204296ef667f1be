#include "contagion/dynamics_continuous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace contagion {

double EventTrajectory::beta_at(double t) const {
    if (n == 0)
        return 0.0;
    std::uint64_t adopted = seed_count;
    for (const Event& e : events) {
        if (e.time > t)
            break;
        adopted = e.adopted;
    }
    return static_cast<double>(adopted) / n;
}

double EventTrajectory::delta_at(double t) const {
    if (edge_count == 0)
        return 0.0;
    std::uint64_t bb = seed_bb_edges;
    for (const Event& e : events) {
        if (e.time > t)
            break;
        bb = e.bb_edges;
    }
    return static_cast<double>(bb) / static_cast<double>(edge_count);
}

EventTrajectory simulate_ctmc(const Graph& g, const PayoffParams& params,
                              const SeedVector& seeds, double t_end, RngSeed seed) {
    if (t_end <= 0.0)
        throw std::invalid_argument("simulate_ctmc: t_end must be positive");
    const std::uint32_t n = g.num_nodes();
    if (seeds.chi.size() != n)
        throw std::invalid_argument("simulate_ctmc: seed dimension mismatch");

    Rng rng = make_rng(seed);

    std::vector<std::uint8_t> x(seeds.chi.begin(), seeds.chi.end());
    std::vector<std::uint32_t> num_b(n, 0);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j : g.neighbors(i))
            num_b[i] += x[j];

    EventTrajectory traj;
    traj.n = n;
    traj.seed_count = seeds.count();
    traj.edge_count = g.num_edges();
    std::uint64_t bb = 0;
    for (NodeId u = 0; u < n; ++u)
        if (x[u])
            for (NodeId v : g.neighbors(u))
                if (u < v && x[v])
                    ++bb;
    traj.seed_bb_edges = bb;

    // Eligible set with O(1) insert/remove by position swap.
    std::vector<NodeId> eligible;
    std::vector<std::uint32_t> pos(n, UINT32_MAX);
    auto is_eligible = [&](NodeId i) {
        return !x[i] && best_response_is_B(params, g.degree(i), num_b[i]);
    };
    auto insert_eligible = [&](NodeId i) {
        pos[i] = static_cast<std::uint32_t>(eligible.size());
        eligible.push_back(i);
    };
    auto remove_eligible = [&](NodeId i) {
        const std::uint32_t p = pos[i];
        eligible[p] = eligible.back();
        pos[eligible[p]] = p;
        eligible.pop_back();
        pos[i] = UINT32_MAX;
    };
    for (NodeId i = 0; i < n; ++i)
        if (is_eligible(i))
            insert_eligible(i);

    double t = 0.0;
    std::uint64_t adopted = traj.seed_count;
    while (!eligible.empty()) {
        t += exponential(rng, static_cast<double>(eligible.size()));
        if (t > t_end)
            return traj; // still eligible nodes left; not absorbed
        const NodeId i = eligible[uniform_below(rng, eligible.size())];
        remove_eligible(i);
        x[i] = 1;
        ++adopted;
        bb += num_b[i]; // all B-neighbors of i form fresh B-B edges
        for (NodeId j : g.neighbors(i)) {
            ++num_b[j];
            // Only neighbors of the adopter can change status, and
            // eligibility is monotone: nodes never fall back out.
            if (pos[j] == UINT32_MAX && is_eligible(j))
                insert_eligible(j);
        }
        traj.events.push_back({t, i, adopted, bb});
    }
    traj.absorbed = true;
    traj.final_x = std::move(x);
    return traj;
}

DominatingRun simulate_dominating(const Graph& g, double theta_dmin,
                                  const std::vector<std::uint64_t>& z0,
                                  std::span<const double> sample_times, RngSeed seed,
                                  std::uint64_t max_events) {
    if (theta_dmin <= 0.0)
        throw std::invalid_argument("simulate_dominating: theta_dmin must be positive");
    const std::uint32_t n = g.num_nodes();
    if (z0.size() != n)
        throw std::invalid_argument("simulate_dominating: z0 dimension mismatch");
    for (std::size_t k = 1; k < sample_times.size(); ++k)
        if (sample_times[k] < sample_times[k - 1])
            throw std::invalid_argument("simulate_dominating: sample times must be sorted");

    Rng rng = make_rng(seed);
    std::vector<std::uint64_t> z = z0;
    // rate_i = (sum over neighbors j of z_j) / theta; tracked as the integer
    // neighbor sum, divided once in the total.
    std::vector<std::uint64_t> neighbor_sum(n, 0);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j : g.neighbors(i))
            neighbor_sum[i] += z[j];
    std::uint64_t total = 0;
    for (NodeId i = 0; i < n; ++i)
        total += neighbor_sum[i];

    DominatingRun run;
    double t = 0.0;
    std::size_t next_sample = 0;
    auto emit_samples_up_to = [&](double time) {
        while (next_sample < sample_times.size() && sample_times[next_sample] <= time) {
            run.samples.push_back({z, sample_times[next_sample]});
            ++next_sample;
        }
    };

    while (next_sample < sample_times.size()) {
        if (total == 0) {
            emit_samples_up_to(sample_times.back());
            break;
        }
        if (run.events >= max_events) {
            run.truncated = true;
            break;
        }
        const double rate = static_cast<double>(total) / theta_dmin;
        const double t_next = t + exponential(rng, rate);
        emit_samples_up_to(std::min(t_next, sample_times.back()));
        t = t_next;
        if (next_sample >= sample_times.size())
            break;

        // Pick node i with probability neighbor_sum[i]/total.
        std::uint64_t target = uniform_below(rng, total);
        NodeId i = 0;
        for (; i < n; ++i) {
            if (target < neighbor_sum[i])
                break;
            target -= neighbor_sum[i];
        }
        z[i] += 1;
        for (NodeId j : g.neighbors(i))
            ++neighbor_sum[j];
        total += g.degree(i);
        ++run.events;
    }
    return run;
}

namespace {

// Dense n x n matrices in row-major vectors.
std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b,
                            std::size_t n) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

} // namespace

std::vector<double> mean_dominating(const Graph& g, double theta_dmin,
                                    const std::vector<double>& z0, double t) {
    if (theta_dmin <= 0.0)
        throw std::invalid_argument("mean_dominating: theta_dmin must be positive");
    if (t < 0.0)
        throw std::invalid_argument("mean_dominating: t must be nonnegative");
    const std::size_t n = g.num_nodes();
    if (n > 64)
        throw std::invalid_argument("mean_dominating: dense exponential guarded to n <= 64");
    if (z0.size() != n)
        throw std::invalid_argument("mean_dominating: z0 dimension mismatch");

    // B = (t/theta) A, scaled so the series converges fast, then squared back.
    const double scale_target = 0.5;
    const double coeff = t / theta_dmin;
    double norm = 0.0; // max row sum of |B| = coeff * max degree
    if (g.num_edges() > 0)
        norm = coeff * static_cast<double>(g.max_degree());
    int squarings = 0;
    double factor = 1.0;
    while (norm * factor > scale_target && squarings < 60) {
        factor *= 0.5;
        ++squarings;
    }

    std::vector<double> b(n * n, 0.0);
    for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
        for (NodeId j : g.neighbors(i))
            b[i * n + j] = coeff * factor;

    // exp(B) by truncated Taylor series; terms fall off factorially once
    // ||B|| <= 1/2 so 24 terms leave a remainder far below 1e-16.
    std::vector<double> expb(n * n, 0.0), term(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        expb[i * n + i] = 1.0;
        term[i * n + i] = 1.0;
    }
    for (int k = 1; k <= 24; ++k) {
        term = mat_mul(term, b, n);
        const double inv = 1.0 / k;
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            term[idx] *= inv;
            expb[idx] += term[idx];
        }
    }
    for (int s = 0; s < squarings; ++s)
        expb = mat_mul(expb, expb, n);

    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += expb[i * n + j] * z0[j];
    return out;
}

double bound_beta(double alpha, double lambda1, double theta_dmin, double t) {
    if (theta_dmin <= 0.0)
        throw std::invalid_argument(
            "bound_beta: theta(d_min) <= 0 (nodes adopt unconditionally; no bound applies)");
    return alpha * std::exp(lambda1 * t / theta_dmin);
}

double bound_beta_regular(double alpha, std::uint32_t delta, double theta_delta, double t) {
    if (theta_delta <= 0.0)
        throw std::invalid_argument("bound_beta_regular: theta(delta) must be positive");
    if (delta == 0)
        throw std::invalid_argument("bound_beta_regular: delta must be positive");
    return alpha / delta * std::exp(delta * t / theta_delta);
}

} // namespace contagion
