#include "contagion/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace contagion {

CostBreakdown cost(const CostParams& cp, double alpha, double gamma, double delta) {
    if (cp.c < 0.0 || cp.r < 0.0 || cp.u < 0.0)
        throw std::invalid_argument("cost: parameters must be nonnegative");
    auto check01 = [](double v, const char* name) {
        // NaN marks an absent delta; it propagates rather than failing.
        if (!std::isnan(v) && (v < 0.0 || v > 1.0))
            throw std::invalid_argument(std::string("cost: ") + name + " outside [0,1]");
    };
    check01(alpha, "alpha");
    check01(gamma, "gamma");
    check01(delta, "delta");

    CostBreakdown out;
    out.m1 = cp.c * alpha;
    out.m2 = cp.r * gamma;
    out.m3 = cp.u * delta;
    out.total = out.m1 + out.m2 + out.m3;
    return out;
}

namespace {

PayoffParams row_params(const SweepContext& ctx, double r, double u) {
    PayoffParams p;
    p.q_a = ctx.q_a;
    p.q_b = ctx.q_b;
    p.u = u;
    p.r = r;
    if (!(p.q_a > 0) || p.q_b < 0 || p.u < 0 || p.r < 0)
        throw std::invalid_argument("sweep: require q_a > 0 and q_b, r, u >= 0");
    return p;
}

SweepRow eval_theory(const SweepContext& ctx, double alpha, double r, double u) {
    const PayoffParams params = row_params(ctx, r, u);
    SweepRow row;
    row.alpha = alpha;
    row.r = r;
    row.u = u;
    if (ctx.delta) {
        const double theta = threshold(params, *ctx.delta);
        const RecursionTrace trace = recursion_trace(*ctx.delta, theta, alpha, ctx.horizon);
        row.beta = trace.h_tilde.back();
    } else if (ctx.dist) {
        row.beta = fixed_point_general(*ctx.dist, params, alpha).h_tilde_limit;
    } else {
        throw std::invalid_argument("sweep: theory backend needs delta or a degree distribution");
    }
    // h_tilde >= alpha algebraically; shield the [0,1] check from a stray ulp.
    row.gamma = std::max(0.0, row.beta - alpha);
    // No analytic B-B edge fraction exists, so theory rows carry NaN --
    // except at alpha = 0, where zero adopters means delta = 0 is exact.
    row.delta = alpha == 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    return row;
}

SweepRow eval_simulation(const SweepContext& ctx, double alpha, double r, double u) {
    if (!ctx.graph)
        throw std::invalid_argument("sweep: simulation backend needs a graph spec");
    const PayoffParams params = row_params(ctx, r, u);
    const TrajectoryStats stats = simulate_discrete_reps(*ctx.graph, params, alpha, ctx.horizon,
                                                         ctx.replications, ctx.seed);
    SweepRow row;
    row.r = r;
    row.u = u;
    row.beta = stats.beta_mean.back();
    row.gamma = stats.gamma_mean.back();
    row.delta = stats.delta_mean.back();
    // Realized mean seed fraction, so gamma = beta - alpha holds exactly
    // row-wise; the nominal grid value is echoed in run metadata.
    row.alpha = row.beta - row.gamma;
    return row;
}

} // namespace

std::vector<SweepRow> sweep(std::span<const double> alphas, std::span<const double> rs,
                            std::span<const double> us, SweepBackend backend,
                            const SweepContext& ctx) {
    if (alphas.empty() || rs.empty() || us.empty())
        throw std::invalid_argument("sweep: empty grid");
    std::vector<SweepRow> rows;
    rows.reserve(alphas.size() * rs.size() * us.size());
    for (double alpha : alphas) {
        for (double r : rs) {
            for (double u : us) {
                SweepRow row = backend == SweepBackend::theory
                                   ? eval_theory(ctx, alpha, r, u)
                                   : eval_simulation(ctx, alpha, r, u);
                const CostBreakdown cb = cost(CostParams{ctx.c, r, u}, row.alpha,
                                              row.gamma, row.delta);
                row.m1 = cb.m1;
                row.m2 = cb.m2;
                row.m3 = cb.m3;
                row.total = cb.total;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace contagion
