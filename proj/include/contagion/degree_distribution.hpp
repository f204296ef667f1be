#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace contagion {

// Probability mass function over degrees 0..max_support. Probabilities must
// be nonnegative and sum to 1 within 1e-9.
class DegreeDistribution {
public:
    static DegreeDistribution from_pmf(std::vector<double> pmf);
    static DegreeDistribution from_pairs(const std::vector<std::pair<std::uint32_t, double>>& entries);
    static DegreeDistribution point_mass(std::uint32_t j);

    // Poisson(lambda) truncated to 0..cap and renormalized. cap = 0 selects
    // the default cap of 10*lambda (at least 10).
    static DegreeDistribution poisson(double lambda, std::uint32_t cap = 0);

    double pmf(std::uint32_t j) const {
        return j < pmf_.size() ? pmf_[j] : 0.0;
    }
    std::uint32_t max_support() const { return static_cast<std::uint32_t>(pmf_.size()) - 1; }
    std::span<const double> values() const { return pmf_; }
    double mean() const;

private:
    explicit DegreeDistribution(std::vector<double> pmf) : pmf_(std::move(pmf)) {}
    std::vector<double> pmf_;
};

// Offspring law P* of the size-biased distribution: P*(j-1) = j P(j) / E[D].
// Throws on zero-mean input.
DegreeDistribution size_biased_offspring(const DegreeDistribution& p);

// Empirical offspring law of a finite degree sequence:
// p_j = sum_k 1(D_k = j+1) D_k / L_n with L_n the degree sum.
DegreeDistribution empirical_offspring(std::span<const std::uint32_t> degrees);

// Total variation distance between two pmfs (over the union of supports).
double total_variation(const DegreeDistribution& a, const DegreeDistribution& b);

// File format: lines "j p_j"; probabilities must sum to 1 within 1e-9.
DegreeDistribution load_degree_distribution(std::istream& in, const std::string& source_name = "<stream>");
DegreeDistribution load_degree_distribution_file(const std::string& path);

} // namespace contagion
