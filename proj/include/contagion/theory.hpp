#pragma once

#include <cstdint>
#include <vector>

#include "contagion/degree_distribution.hpp"
#include "contagion/payoff.hpp"

namespace contagion {

// P(Bin(k,x) <= s): 0 when s < 0, 1 when s >= k; otherwise the partial sum
// up to floor(s), accumulated ascending with multiplicative term updates.
double binom_cdf(std::uint32_t k, double s, double x);

// Child-subtree recursion on the Delta-regular tree:
//   h(t+1) = 1 - (1-alpha) g_{Delta-1, theta}(h(t)).
double h_step(std::uint32_t delta, double theta, double alpha, double h);

// Root marginal: h~(t+1) = 1 - (1-alpha) g_{Delta, theta}(h(t)).
double h_tilde_step(std::uint32_t delta, double theta, double alpha, double h);

struct RecursionTrace {
    // h[t] for t = 0..T with h[0] = alpha; h_tilde[t] for t = 0..T where
    // h_tilde[0] = alpha (the root is a plain seed draw at time 0).
    std::vector<double> h;
    std::vector<double> h_tilde;
};

RecursionTrace recursion_trace(std::uint32_t delta, double theta, double alpha, std::uint32_t t_max);

enum class FixedPointRegime { unique, triple, other };

struct FixedPointReport {
    double h_star = 0.0;            // smallest solution
    std::vector<double> solutions;  // all roots found in [0,1], ascending
    double h_tilde_limit = 0.0;     // limit adoption fraction at h_star
    FixedPointRegime regime = FixedPointRegime::unique;
};

// Solves h = 1 - (1-alpha) g_{Delta-1, theta}(h). The smallest root comes
// from iterating the monotone map upward from 0; the full root list from a
// sign-change scan of the fixed-point residual on a dense grid (the map is a
// polynomial of degree Delta-1, so grid_points = 10^4 resolves all crossings
// for moderate Delta; configurable for larger ones).
FixedPointReport fixed_point(std::uint32_t delta, double theta, double alpha,
                             double tol = 1e-12, std::uint32_t grid_points = 10000);

struct AlphaCritResult {
    double value = 0.0;
    // The three-solution phase structure is established for
    // 0 <= theta < delta - 2; outside that range the numeric answer is
    // still returned but flagged.
    bool theorem_applies = true;
};

// Smallest seed fraction above which the smallest fixed point is 1, located
// by bisection over alpha; the predicate trace is checked for monotonicity.
AlphaCritResult alpha_crit(std::uint32_t delta, double theta, double tol = 1e-6);

// Configuration-model fixed point driven by the offspring law P* of P:
//   h*  = 1 - (1-alpha) sum_j P*(j) g_{j, theta(j+1)}(h*)
//   h~  = 1 - (1-alpha) sum_j P(j)  g_{j, theta(j)}(h*)
// Degree thresholds come from the payoff parameters (exact floors when the
// parameters carry their decimal form).
FixedPointReport fixed_point_general(const DegreeDistribution& p, const PayoffParams& params,
                                     double alpha, double tol = 1e-12,
                                     std::uint32_t grid_points = 10000);

} // namespace contagion
