#include <doctest.h>

#include <cmath>

#include "contagion/theory.hpp"

using namespace contagion;

namespace {

// Exhaustive-enumeration oracle: walk all 2^k outcomes.
double binom_cdf_enum(std::uint32_t k, double s, double x) {
    double total = 0.0;
    for (std::uint32_t outcome = 0; outcome < (1u << k); ++outcome) {
        const int successes = __builtin_popcount(outcome);
        if (static_cast<double>(successes) <= s)
            total += std::pow(x, successes) * std::pow(1.0 - x, static_cast<int>(k) - successes);
    }
    return total;
}

} // namespace

TEST_CASE("binom_cdf basics") {
    CHECK(binom_cdf(7, 7, 0.3) == 1.0);
    CHECK(binom_cdf(2, 0, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(binom_cdf(3, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(binom_cdf(5, -0.5, 0.2) == 0.0);
    CHECK(binom_cdf(5, 9.7, 0.2) == 1.0);
    CHECK(binom_cdf(4, 2, 0.0) == 1.0);
    CHECK(binom_cdf(4, 2, 1.0) == 0.0);
    CHECK(binom_cdf(4, 2.9, 0.3) == binom_cdf(4, 2, 0.3)); // floor semantics
    CHECK_THROWS(binom_cdf(4, 2, 1.5));
}

TEST_CASE("binom_cdf against exhaustive enumeration") {
    for (std::uint32_t k = 0; k <= 10; ++k)
        for (int s = -1; s <= static_cast<int>(k); ++s)
            for (double x : {0.0, 0.1, 0.35, 0.5, 0.9, 1.0})
                CHECK(binom_cdf(k, s, x) ==
                      doctest::Approx(binom_cdf_enum(k, s, x)).epsilon(1e-12));
}

TEST_CASE("h_step and h_tilde_step") {
    CHECK(h_step(4, 1.0, 1.0, 0.7) == 1.0);
    CHECK(h_step(4, 1.0, 0.0, 0.0) == 0.0);
    CHECK(h_step(3, 0.0, 0.1, 0.1) == doctest::Approx(0.271).epsilon(1e-12));
    CHECK(h_tilde_step(4, 1.0, 1.0, 0.7) == 1.0);
    CHECK(h_tilde_step(4, 1.0, 0.1, 0.0) == doctest::Approx(0.1)); // g(0) = 1
    CHECK(h_tilde_step(3, 0.0, 0.1, 0.1) == doctest::Approx(0.3439).epsilon(1e-12));
    // With theta < delta the root lags the subtree: h~_step >= h_step.
    for (std::uint32_t delta : {2u, 3u, 5u, 8u})
        for (double theta : {0.0, 1.0, 1.5, 2.0})
            for (double alpha : {0.05, 0.3, 0.7})
                for (double h = 0.0; h <= 1.0; h += 0.1)
                    CHECK(h_tilde_step(delta, theta, alpha, h) >=
                          h_step(delta, theta, alpha, h) - 1e-15);
}

TEST_CASE("the recursion map is monotone in h and alpha") {
    for (std::uint32_t delta : {3u, 5u, 7u})
        for (double theta : {0.0, 1.0, 2.0}) {
            for (double alpha : {0.1, 0.5}) {
                double prev = h_step(delta, theta, alpha, 0.0);
                for (double h = 0.05; h <= 1.0; h += 0.05) {
                    const double cur = h_step(delta, theta, alpha, h);
                    CHECK(cur >= prev - 1e-15);
                    prev = cur;
                }
            }
            for (double h : {0.2, 0.6}) {
                double prev = h_step(delta, theta, 0.0, h);
                for (double alpha = 0.1; alpha <= 1.0; alpha += 0.1) {
                    const double cur = h_step(delta, theta, alpha, h);
                    CHECK(cur >= prev - 1e-15);
                    prev = cur;
                }
            }
        }
}

TEST_CASE("recursion_trace") {
    const RecursionTrace zero = recursion_trace(3, 1.5, 0.0, 10);
    for (double v : zero.h)
        CHECK(v == 0.0);
    for (double v : zero.h_tilde)
        CHECK(v == 0.0);

    const RecursionTrace one = recursion_trace(3, 1.5, 1.0, 5);
    for (double v : one.h)
        CHECK(v == 1.0);

    const RecursionTrace t = recursion_trace(3, 0.0, 0.1, 40);
    CHECK(t.h[0] == doctest::Approx(0.1));
    CHECK(t.h[1] == doctest::Approx(0.271).epsilon(1e-12));
    CHECK(t.h.back() == doctest::Approx(1.0).epsilon(1e-9));
    for (std::size_t i = 1; i < t.h.size(); ++i)
        CHECK(t.h[i] >= t.h[i - 1] - 1e-15);
}

TEST_CASE("fixed_point: closed-form cases") {
    CHECK(fixed_point(3, 0.0, 0.0).h_star == doctest::Approx(0.0));
    // With theta = 0 the residual in y = 1-h reads y = (1-a)y^2: only y = 0.
    for (double alpha : {0.01, 0.2, 0.9}) {
        const FixedPointReport r = fixed_point(3, 0.0, alpha);
        CHECK(r.h_star == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.regime == FixedPointRegime::unique);
    }
    // Majority on delta = 3: h* = alpha/(1-alpha) below the critical 1/2.
    for (double alpha : {0.1, 0.3, 0.45}) {
        const FixedPointReport r = fixed_point(3, 1.5, alpha);
        CHECK(r.h_star == doctest::Approx(alpha / (1 - alpha)).epsilon(1e-8));
    }
    CHECK(fixed_point(3, 1.5, 0.6).h_star == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fixed_point: triple regime below alpha_crit") {
    const FixedPointReport r = fixed_point(5, 1.0, 0.01);
    CHECK(r.regime == FixedPointRegime::triple);
    REQUIRE(r.solutions.size() == 3);
    CHECK(r.h_star < 1.0);
    CHECK(r.h_star == doctest::Approx(r.solutions[0]));
    CHECK(r.solutions[2] == doctest::Approx(1.0));
    for (double h : r.solutions)
        CHECK(std::abs(h_step(5, 1.0, 0.01, h) - h) <= 1e-8);
    // h~ limit reported at the smallest fixed point.
    CHECK(r.h_tilde_limit == doctest::Approx(h_tilde_step(5, 1.0, 0.01, r.h_star)));
}

TEST_CASE("recursion limit equals the smallest fixed point") {
    for (std::uint32_t delta : {2u, 4u, 6u, 9u})
        for (double theta : {0.0, 1.0, 2.5})
            for (double alpha : {0.05, 0.35, 0.8}) {
                double h = alpha;
                for (int i = 0; i < 200000; ++i) {
                    const double next = h_step(delta, theta, alpha, h);
                    if (std::abs(next - h) < 1e-14) {
                        h = next;
                        break;
                    }
                    h = next;
                }
                CHECK(std::abs(fixed_point(delta, theta, alpha).h_star - h) <= 1e-10);
            }
}

TEST_CASE("alpha_crit") {
    // theta = 0: every positive alpha drives h* to 1.
    const AlphaCritResult zero = alpha_crit(3, 0.0);
    CHECK(zero.value <= 1e-6);
    CHECK(zero.theorem_applies);

    // delta = 5, theta = 1: tangency of y = (1-a) y^3 (4 - 3y) at y = 8/9
    // puts the critical seed fraction at exactly 13/256.
    const AlphaCritResult r = alpha_crit(5, 1.0, 1e-6);
    CHECK(r.theorem_applies);
    CHECK(std::abs(r.value - 13.0 / 256.0) <= 2e-6);

    // Outside the theorem range: g_{2,2} = 1 makes the map constant alpha.
    const AlphaCritResult flagged = alpha_crit(3, 2.0);
    CHECK_FALSE(flagged.theorem_applies);
    CHECK(fixed_point(3, 2.0, 0.37).h_star == doctest::Approx(0.37));
}

TEST_CASE("size-biased offspring law") {
    const DegreeDistribution point = DegreeDistribution::point_mass(4);
    const DegreeDistribution off = size_biased_offspring(point);
    CHECK(off.pmf(3) == doctest::Approx(1.0));
    CHECK(off.max_support() == 3);

    const DegreeDistribution two =
        DegreeDistribution::from_pairs({{1, 0.5}, {3, 0.5}});
    const DegreeDistribution off2 = size_biased_offspring(two);
    CHECK(off2.pmf(0) == doctest::Approx(0.25));
    CHECK(off2.pmf(2) == doctest::Approx(0.75));

    // Poisson is its own offspring law (within truncation error).
    const DegreeDistribution poisson = DegreeDistribution::poisson(5.0, 50);
    CHECK(total_variation(size_biased_offspring(poisson), poisson) <= 1e-9);

    CHECK_THROWS(size_biased_offspring(DegreeDistribution::point_mass(0)));
}

TEST_CASE("empirical offspring law") {
    const std::vector<std::uint32_t> regular{2, 2, 2};
    CHECK(empirical_offspring(regular).pmf(1) == doctest::Approx(1.0));

    const std::vector<std::uint32_t> two{1, 3};
    const DegreeDistribution d = empirical_offspring(two);
    CHECK(d.pmf(0) == doctest::Approx(0.25));
    CHECK(d.pmf(2) == doctest::Approx(0.75));

    const std::vector<std::uint32_t> zeros{0, 0};
    CHECK_THROWS(empirical_offspring(zeros));
}

TEST_CASE("fixed_point_general") {
    const PayoffParams majority = PayoffParams::majority();

    SUBCASE("point mass reproduces the regular solver bit for bit") {
        for (std::uint32_t delta : {3u, 5u, 8u})
            for (double alpha : {0.0, 0.1, 0.4}) {
                const FixedPointReport general = fixed_point_general(
                    DegreeDistribution::point_mass(delta), majority, alpha);
                const FixedPointReport regular =
                    fixed_point(delta, threshold(majority, delta), alpha);
                CHECK(general.h_star == regular.h_star);
                CHECK(general.h_tilde_limit == regular.h_tilde_limit);
            }
    }
    SUBCASE("alpha = 0 pins everything at 0") {
        const FixedPointReport r =
            fixed_point_general(DegreeDistribution::poisson(5.0), majority, 0.0);
        CHECK(r.h_star == 0.0);
        CHECK(r.h_tilde_limit == 0.0);
    }
    SUBCASE("adoption limit is nondecreasing in alpha") {
        const DegreeDistribution poisson = DegreeDistribution::poisson(5.0);
        double prev = 0.0;
        for (double alpha = 0.0; alpha <= 0.9; alpha += 0.05) {
            const double h = fixed_point_general(poisson, majority, alpha).h_tilde_limit;
            CHECK(h >= prev - 1e-12);
            prev = h;
        }
    }
}
