#include "contagion/payoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace contagion {

namespace {

// Parses a nonnegative decimal string into numerator and decimal exponent:
// "1.25" -> (125, 2). Throws on anything else.
std::pair<std::int64_t, int> parse_decimal(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty decimal string");
    std::size_t pos = 0;
    if (s[pos] == '+')
        ++pos;
    std::int64_t digits = 0;
    int frac_digits = -1;
    bool any_digit = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '.') {
            if (frac_digits >= 0)
                throw std::invalid_argument("malformed decimal: " + s);
            frac_digits = 0;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("not a nonnegative decimal: " + s);
        if (digits > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
            throw std::invalid_argument("decimal out of range: " + s);
        digits = digits * 10 + (c - '0');
        any_digit = true;
        if (frac_digits >= 0)
            ++frac_digits;
    }
    if (!any_digit)
        throw std::invalid_argument("malformed decimal: " + s);
    return {digits, std::max(frac_digits, 0)};
}

std::int64_t pow10_checked(int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > std::numeric_limits<std::int64_t>::max() / 10)
            throw std::invalid_argument("decimal precision out of range");
        v *= 10;
    }
    return v;
}

std::int64_t floor_div(__int128 num, __int128 den) {
    __int128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return static_cast<std::int64_t>(q);
}

} // namespace

PayoffParams PayoffParams::from_decimals(const std::string& q_a, const std::string& q_b,
                                         const std::string& u, const std::string& r) {
    auto [qa_d, qa_e] = parse_decimal(q_a);
    auto [qb_d, qb_e] = parse_decimal(q_b);
    auto [u_d, u_e] = parse_decimal(u);
    auto [r_d, r_e] = parse_decimal(r);
    const int e = std::max({qa_e, qb_e, u_e, r_e});
    const std::int64_t den = pow10_checked(e);

    PayoffParams p;
    p.exact = Exact{qa_d * pow10_checked(e - qa_e), qb_d * pow10_checked(e - qb_e),
                    u_d * pow10_checked(e - u_e), r_d * pow10_checked(e - r_e), den};
    p.q_a = static_cast<double>(p.exact->q_a) / static_cast<double>(den);
    p.q_b = static_cast<double>(p.exact->q_b) / static_cast<double>(den);
    p.u = static_cast<double>(p.exact->u) / static_cast<double>(den);
    p.r = static_cast<double>(p.exact->r) / static_cast<double>(den);
    if (p.exact->q_a <= 0)
        throw std::invalid_argument("payoff params: q_a must be positive");
    return p;
}

PayoffParams PayoffParams::majority() {
    return from_decimals("1", "1", "0", "0");
}

double threshold(const PayoffParams& p, std::uint32_t d) {
    return (p.q_a * d - p.r) / (p.q_a + p.q_b + p.u);
}

std::int64_t floor_threshold(const PayoffParams& p, std::uint32_t d) {
    if (p.exact) {
        const auto& e = *p.exact;
        // The common denominator cancels between numerator and denominator.
        const __int128 num = static_cast<__int128>(e.q_a) * d - e.r;
        const __int128 den = static_cast<__int128>(e.q_a) + e.q_b + e.u;
        return floor_div(num, den);
    }
    return static_cast<std::int64_t>(std::floor(threshold(p, d)));
}

double payoff_A(const PayoffParams& p, std::uint32_t num_a_neighbors) {
    return p.q_a * num_a_neighbors;
}

double payoff_B(const PayoffParams& p, std::uint32_t num_b_neighbors) {
    return p.r + (p.q_b + p.u) * num_b_neighbors;
}

bool best_response_is_B(const PayoffParams& p, std::uint32_t d, std::uint32_t num_b) {
    if (num_b > d)
        throw std::invalid_argument("best_response_is_B: num_b exceeds degree");
    if (p.exact) {
        const auto& e = *p.exact;
        const __int128 lhs = static_cast<__int128>(num_b) * (static_cast<__int128>(e.q_a) + e.q_b + e.u);
        const __int128 rhs = static_cast<__int128>(e.q_a) * d - e.r;
        return lhs > rhs;
    }
    return static_cast<double>(num_b) * (p.q_a + p.q_b + p.u) > p.q_a * d - p.r;
}

ThresholdRule ThresholdRule::payoff(PayoffParams params) {
    if (!(params.q_a > 0) || params.q_b < 0 || params.u < 0 || params.r < 0)
        throw std::invalid_argument("payoff params: require q_a > 0 and q_b, u, r >= 0");
    ThresholdRule rule;
    rule.is_payoff_ = true;
    rule.params_ = std::move(params);
    return rule;
}

ThresholdRule ThresholdRule::linear_threshold_uniform(const Graph& g, std::vector<double> thetas) {
    std::vector<double> inv_deg(g.num_nodes(), 0.0);
    for (NodeId i = 0; i < g.num_nodes(); ++i)
        if (g.degree(i) > 0)
            inv_deg[i] = 1.0 / g.degree(i);
    ActivationFn f = [inv_deg = std::move(inv_deg)](NodeId i, std::span<const NodeId> active) {
        return inv_deg[i] * static_cast<double>(active.size());
    };
    return general(std::move(f), std::move(thetas));
}

ThresholdRule ThresholdRule::linear_threshold(
    const Graph& g, const std::vector<std::pair<std::pair<NodeId, NodeId>, double>>& weights,
    std::vector<double> thetas) {
    // Dense per-endpoint weight rows aligned with adjacency position.
    std::vector<std::vector<double>> w(g.num_nodes());
    for (NodeId i = 0; i < g.num_nodes(); ++i)
        w[i].assign(g.degree(i), 0.0);
    auto slot = [&g](NodeId i, NodeId j) {
        auto nb = g.neighbors(i);
        const auto it = std::lower_bound(nb.begin(), nb.end(), j);
        if (it == nb.end() || *it != j)
            throw std::invalid_argument("linear_threshold: weight on a non-edge");
        return static_cast<std::size_t>(it - nb.begin());
    };
    for (const auto& [edge, value] : weights) {
        if (value < 0.0)
            throw std::invalid_argument("linear_threshold: negative weight");
        w[edge.first][slot(edge.first, edge.second)] = value;
        w[edge.second][slot(edge.second, edge.first)] = value;
    }
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
        double row = 0.0;
        for (double v : w[i])
            row += v;
        if (row > 1.0)
            for (double& v : w[i])
                v /= row;
    }
    ActivationFn f = [&g, w = std::move(w)](NodeId i, std::span<const NodeId> active) {
        auto nb = g.neighbors(i);
        double sum = 0.0;
        for (NodeId j : active) {
            const auto it = std::lower_bound(nb.begin(), nb.end(), j);
            sum += w[i][static_cast<std::size_t>(it - nb.begin())];
        }
        return sum;
    };
    return general(std::move(f), std::move(thetas));
}

ThresholdRule ThresholdRule::general(ActivationFn f, std::vector<double> thetas) {
    for (double t : thetas)
        if (t < 0.0 || t > 1.0)
            throw std::invalid_argument("node thresholds must lie in [0,1]");
    ThresholdRule rule;
    rule.is_payoff_ = false;
    rule.f_ = std::move(f);
    rule.thetas_ = std::move(thetas);
    return rule;
}

const PayoffParams& ThresholdRule::params() const {
    if (!is_payoff_)
        throw std::logic_error("params() on a general threshold rule");
    return params_;
}

double ThresholdRule::node_threshold(NodeId i) const {
    if (is_payoff_)
        throw std::logic_error("node_threshold() on a payoff rule");
    return thetas_.at(i);
}

bool ThresholdRule::activation(const Graph& g, NodeId i,
                               std::span<const NodeId> active_neighbors) const {
    auto nb = g.neighbors(i);
    for (NodeId j : active_neighbors)
        if (!std::binary_search(nb.begin(), nb.end(), j))
            throw std::invalid_argument("activation: node " + std::to_string(j) +
                                        " is not a neighbor of " + std::to_string(i));
    if (is_payoff_)
        return best_response_is_B(params_, g.degree(i),
                                  static_cast<std::uint32_t>(active_neighbors.size()));
    return f_(i, active_neighbors) > thetas_.at(i);
}

bool ThresholdRule::activation_by_count(std::uint32_t degree, std::uint32_t num_b) const {
    if (!is_payoff_)
        throw std::logic_error("activation_by_count requires the payoff variant");
    return best_response_is_B(params_, degree, num_b);
}

std::vector<double> random_thresholds(std::uint32_t n, Rng& rng) {
    std::vector<double> thetas(n);
    for (double& t : thetas)
        t = uniform01(rng);
    return thetas;
}

void require_monotone(const ThresholdRule& rule, const Graph& g, Rng& rng, int samples) {
    if (!spot_check_monotone(rule, g, rng, samples))
        throw std::invalid_argument(
            "threshold rule rejected: activation function failed the monotonicity spot check");
}

bool spot_check_monotone(const ThresholdRule& rule, const Graph& g, Rng& rng, int samples) {
    if (rule.is_payoff())
        return true; // counting rule, monotone by construction
    for (int s = 0; s < samples; ++s) {
        const NodeId i = static_cast<NodeId>(uniform_below(rng, g.num_nodes()));
        auto nb = g.neighbors(i);
        if (nb.empty())
            continue;
        std::vector<NodeId> big, small;
        for (NodeId j : nb) {
            if (bernoulli(rng, 0.5))
                big.push_back(j);
        }
        for (NodeId j : big)
            if (bernoulli(rng, 0.5))
                small.push_back(j);
        if (rule.activation(g, i, small) && !rule.activation(g, i, big)) {
            // f(small) > theta but f(big) <= theta contradicts monotonicity.
            return false;
        }
    }
    return true;
}

} // namespace contagion
