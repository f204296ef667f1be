#include "contagion/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace contagion {

double binom_cdf(std::uint32_t k, double s, double x) {
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("binom_cdf: x must be in [0,1]");
    if (s < 0.0)
        return 0.0;
    if (s >= static_cast<double>(k))
        return 1.0;
    const std::uint32_t m = static_cast<std::uint32_t>(std::floor(s));
    if (x == 0.0)
        return 1.0;
    if (x == 1.0)
        return 0.0; // all k successes, and m < k here

    // term_i = C(k,i) x^i (1-x)^(k-i), updated multiplicatively.
    double term = std::pow(1.0 - x, static_cast<double>(k));
    double sum = term;
    for (std::uint32_t i = 0; i < m; ++i) {
        term *= static_cast<double>(k - i) / static_cast<double>(i + 1) * (x / (1.0 - x));
        sum += term;
    }
    return std::min(sum, 1.0);
}

double h_step(std::uint32_t delta, double theta, double alpha, double h) {
    if (delta < 1)
        throw std::invalid_argument("h_step: delta must be >= 1");
    return 1.0 - (1.0 - alpha) * binom_cdf(delta - 1, theta, h);
}

double h_tilde_step(std::uint32_t delta, double theta, double alpha, double h) {
    if (delta < 1)
        throw std::invalid_argument("h_tilde_step: delta must be >= 1");
    return 1.0 - (1.0 - alpha) * binom_cdf(delta, theta, h);
}

RecursionTrace recursion_trace(std::uint32_t delta, double theta, double alpha,
                               std::uint32_t t_max) {
    RecursionTrace trace;
    trace.h.reserve(t_max + 1);
    trace.h_tilde.reserve(t_max + 1);
    trace.h.push_back(alpha);
    trace.h_tilde.push_back(alpha);
    for (std::uint32_t t = 0; t < t_max; ++t) {
        trace.h_tilde.push_back(h_tilde_step(delta, theta, alpha, trace.h.back()));
        trace.h.push_back(h_step(delta, theta, alpha, trace.h.back()));
    }
    return trace;
}

namespace {

using Map = std::function<double(double)>;

// Smallest fixed point of a nondecreasing map on [0,1] with phi(0) >= 0:
// iterate upward from 0. Near a tangency the steps shrink with the gap, so
// the cap is generous; each evaluation is a handful of flops.
double smallest_fixed_point(const Map& phi, double tol) {
    double h = 0.0;
    for (std::uint64_t it = 0; it < 20'000'000; ++it) {
        const double next = phi(h);
        if (std::abs(next - h) < tol)
            return next;
        h = next;
    }
    throw std::runtime_error("smallest_fixed_point: iteration cap reached");
}

std::vector<double> scan_roots(const Map& phi, double tol, std::uint32_t grid_points) {
    auto residual = [&phi](double h) { return phi(h) - h; };
    std::vector<double> roots;
    double prev_h = 0.0;
    double prev_r = residual(0.0);
    if (prev_r == 0.0)
        roots.push_back(0.0);
    for (std::uint32_t k = 1; k <= grid_points; ++k) {
        const double h = static_cast<double>(k) / grid_points;
        const double r = residual(h);
        if (r == 0.0) {
            roots.push_back(h);
        } else if ((prev_r < 0.0) != (r < 0.0) && prev_r != 0.0) {
            double lo = prev_h, hi = h, rlo = prev_r;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double rm = residual(mid);
                if (rm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((rm < 0.0) == (rlo < 0.0)) {
                    lo = mid;
                    rlo = rm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_h = h;
        prev_r = r;
    }
    return roots;
}

FixedPointReport solve_fixed_point(const Map& phi, double tol, std::uint32_t grid_points) {
    if (tol <= 0.0)
        throw std::invalid_argument("fixed_point: tol must be positive");
    FixedPointReport report;
    report.h_star = smallest_fixed_point(phi, tol);

    auto roots = scan_roots(phi, tol, grid_points);
    roots.push_back(report.h_star);
    // The endpoint h = 1 is a fixed point whenever phi(1) = 1; the scan sees
    // no sign change there, so test it directly.
    if (std::abs(phi(1.0) - 1.0) <= tol)
        roots.push_back(1.0);
    std::sort(roots.begin(), roots.end());
    const double merge_width = std::max(tol * 10.0, 1.5 / grid_points);
    for (double r : roots)
        if (report.solutions.empty() || r - report.solutions.back() > merge_width)
            report.solutions.push_back(r);

    report.regime = report.solutions.size() == 1   ? FixedPointRegime::unique
                    : report.solutions.size() == 3 ? FixedPointRegime::triple
                                                   : FixedPointRegime::other;
    return report;
}

} // namespace

FixedPointReport fixed_point(std::uint32_t delta, double theta, double alpha, double tol,
                             std::uint32_t grid_points) {
    if (delta < 1)
        throw std::invalid_argument("fixed_point: delta must be >= 1");
    Map phi = [delta, theta, alpha](double h) { return h_step(delta, theta, alpha, h); };
    FixedPointReport report = solve_fixed_point(phi, tol, grid_points);
    report.h_tilde_limit = h_tilde_step(delta, theta, alpha, report.h_star);
    return report;
}

AlphaCritResult alpha_crit(std::uint32_t delta, double theta, double tol) {
    if (tol <= 0.0)
        throw std::invalid_argument("alpha_crit: tol must be positive");
    AlphaCritResult result;
    result.theorem_applies =
        theta >= 0.0 && theta < static_cast<double>(delta) - 2.0;

    const double fp_tol = 1e-12;
    auto predicate = [&](double alpha) {
        Map phi = [delta, theta, alpha](double h) { return h_step(delta, theta, alpha, h); };
        return smallest_fixed_point(phi, fp_tol) >= 1.0 - tol;
    };

    std::vector<std::pair<double, bool>> trace;
    auto eval = [&](double alpha) {
        const bool p = predicate(alpha);
        trace.emplace_back(alpha, p);
        return p;
    };

    double lo = 0.0, hi = 1.0;
    if (eval(0.0)) {
        result.value = 0.0;
        return result;
    }
    if (!eval(1.0))
        throw std::logic_error("alpha_crit: predicate false at alpha = 1");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (eval(mid))
            hi = mid;
        else
            lo = mid;
    }

    std::sort(trace.begin(), trace.end());
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (trace[i - 1].second && !trace[i].second)
            throw std::logic_error("alpha_crit: non-monotone predicate on bisection trace");

    result.value = 0.5 * (lo + hi);
    return result;
}

FixedPointReport fixed_point_general(const DegreeDistribution& p, const PayoffParams& params,
                                     double alpha, double tol, std::uint32_t grid_points) {
    const DegreeDistribution offspring = size_biased_offspring(p);

    // Thresholds per degree, floored once up front (exact when available).
    const std::uint32_t top = p.max_support();
    std::vector<double> theta_of_degree(top + 2);
    for (std::uint32_t d = 0; d <= top + 1; ++d)
        theta_of_degree[d] = static_cast<double>(floor_threshold(params, d));

    // Weighted binomial-CDF mixtures, normalized by the pmf mass actually
    // summed: the truncated pmf totals 1 only up to an ulp, and dividing it
    // out keeps phi(0) = alpha exact (so alpha = 0 yields h* = 0 exactly).
    auto mixture = [](const DegreeDistribution& dist, auto theta_at, double h) {
        double acc = 0.0, mass = 0.0;
        for (std::uint32_t j = 0; j <= dist.max_support(); ++j) {
            const double pj = dist.pmf(j);
            if (pj > 0.0) {
                acc += pj * binom_cdf(j, theta_at(j), h);
                mass += pj;
            }
        }
        return acc / mass;
    };
    Map phi = [&](double h) {
        return 1.0 - (1.0 - alpha) *
                         mixture(offspring, [&](std::uint32_t j) { return theta_of_degree[j + 1]; }, h);
    };
    FixedPointReport report = solve_fixed_point(phi, tol, grid_points);
    report.h_tilde_limit =
        1.0 - (1.0 - alpha) *
                  mixture(p, [&](std::uint32_t j) { return theta_of_degree[j]; }, report.h_star);
    return report;
}

} // namespace contagion
