#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contagion/graph.hpp"
#include "contagion/rng.hpp"

namespace contagion {

// Economic constants: q_a per A-A edge, q_b per B-B edge, u the per-B-edge
// marketing increment, r the adoption bonus. A node of degree d prefers B
// exactly when its B-neighbor count strictly exceeds
//   theta(d) = (q_a*d - r) / (q_a + q_b + u).
//
// When the values come from decimal strings the scaled-integer form is kept
// alongside, so threshold comparisons at exact integer boundaries (e.g. the
// majority rule with even degree) never depend on float rounding.
struct PayoffParams {
    double q_a = 1.0;
    double q_b = 0.0;
    double u = 0.0;
    double r = 0.0;

    struct Exact {
        std::int64_t q_a, q_b, u, r; // numerators over a common denominator
        std::int64_t den;
    };
    std::optional<Exact> exact;

    static PayoffParams from_decimals(const std::string& q_a, const std::string& q_b,
                                      const std::string& u, const std::string& r);
    static PayoffParams majority(); // q_a = q_b = 1, u = r = 0: theta(d) = d/2
};

double threshold(const PayoffParams& p, std::uint32_t d);

// floor(theta(d)), resolved in integer arithmetic when the exact form is
// available. A B-neighbor count k satisfies k <= theta(d) iff k <= this.
std::int64_t floor_threshold(const PayoffParams& p, std::uint32_t d);

double payoff_A(const PayoffParams& p, std::uint32_t num_a_neighbors);
double payoff_B(const PayoffParams& p, std::uint32_t num_b_neighbors);

// True iff num_b > theta(d); ties keep strategy A. Compares
// num_b*(q_a+q_b+u) against q_a*d - r so no division is involved.
bool best_response_is_B(const PayoffParams& p, std::uint32_t d, std::uint32_t num_b);

// Monotone activation function of the active-neighbor set, in [0,1].
using ActivationFn =
    std::function<double(NodeId node, std::span<const NodeId> active_neighbors)>;

// Either the payoff-threshold rule above or a general threshold rule with a
// monotone activation function per node and node thresholds in [0,1].
class ThresholdRule {
public:
    static ThresholdRule payoff(PayoffParams params);

    // Linear threshold instance f_i(X) = sum_{j in X} W_ij with uniform
    // weights W_ij = 1/d_i (row sums exactly 1 on nodes with neighbors).
    static ThresholdRule linear_threshold_uniform(const Graph& g, std::vector<double> thetas);

    // Linear threshold from symmetric edge weights; each row is divided by
    // max(1, row sum) so that sum_{j in N_i} W_ij <= 1.
    static ThresholdRule linear_threshold(const Graph& g,
                                          const std::vector<std::pair<std::pair<NodeId, NodeId>, double>>& weights,
                                          std::vector<double> thetas);

    static ThresholdRule general(ActivationFn f, std::vector<double> thetas);

    bool is_payoff() const { return is_payoff_; }
    const PayoffParams& params() const;
    double node_threshold(NodeId i) const;

    // Payoff variant: best_response_is_B with num_b = |active|.
    // General variant: f_i(active) > theta_i (strict).
    bool activation(const Graph& g, NodeId i, std::span<const NodeId> active_neighbors) const;

    // Same check given only the B-neighbor count (payoff variant only).
    bool activation_by_count(std::uint32_t degree, std::uint32_t num_b) const;

private:
    ThresholdRule() = default;
    bool is_payoff_ = true;
    PayoffParams params_;
    ActivationFn f_;
    std::vector<double> thetas_;
};

// i.i.d. uniform [0,1] node thresholds, drawn once per simulation.
std::vector<double> random_thresholds(std::uint32_t n, Rng& rng);

// Samples nested set pairs X subset Y of random neighborhoods and checks
// f_i(X) <= f_i(Y). Exhaustive verification is impossible; this is the
// admission test for user-supplied activation functions.
bool spot_check_monotone(const ThresholdRule& rule, const Graph& g, Rng& rng, int samples = 200);

// Admission gate for simulation entry points: throws when the spot check
// catches a non-monotone activation function.
void require_monotone(const ThresholdRule& rule, const Graph& g, Rng& rng, int samples = 200);

} // namespace contagion
