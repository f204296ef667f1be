#include "contagion/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace contagion {

namespace {
constexpr double kSumTolerance = 1e-9;
}

DegreeDistribution DegreeDistribution::from_pmf(std::vector<double> pmf) {
    if (pmf.empty())
        throw std::invalid_argument("degree distribution: empty pmf");
    double sum = 0.0;
    for (double p : pmf) {
        if (p < 0.0)
            throw std::invalid_argument("degree distribution: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("degree distribution: probabilities sum to " +
                                    std::to_string(sum) + ", expected 1");
    while (pmf.size() > 1 && pmf.back() == 0.0)
        pmf.pop_back();
    return DegreeDistribution(std::move(pmf));
}

DegreeDistribution DegreeDistribution::from_pairs(
    const std::vector<std::pair<std::uint32_t, double>>& entries) {
    std::uint32_t max_j = 0;
    for (auto [j, p] : entries)
        max_j = std::max(max_j, j);
    std::vector<double> pmf(max_j + 1, 0.0);
    for (auto [j, p] : entries) {
        if (pmf[j] != 0.0)
            throw std::invalid_argument("degree distribution: duplicate entry for degree " +
                                        std::to_string(j));
        pmf[j] = p;
    }
    return from_pmf(std::move(pmf));
}

DegreeDistribution DegreeDistribution::point_mass(std::uint32_t j) {
    std::vector<double> pmf(j + 1, 0.0);
    pmf[j] = 1.0;
    return DegreeDistribution(std::move(pmf));
}

DegreeDistribution DegreeDistribution::poisson(double lambda, std::uint32_t cap) {
    if (lambda <= 0.0)
        throw std::invalid_argument("poisson: lambda must be positive");
    if (cap == 0)
        cap = std::max<std::uint32_t>(10, static_cast<std::uint32_t>(std::ceil(10.0 * lambda)));
    std::vector<double> pmf(cap + 1);
    double sum = 0.0;
    for (std::uint32_t j = 0; j <= cap; ++j) {
        pmf[j] = std::exp(j * std::log(lambda) - lambda - std::lgamma(j + 1.0));
        sum += pmf[j];
    }
    for (double& p : pmf)
        p /= sum;
    return DegreeDistribution(std::move(pmf));
}

double DegreeDistribution::mean() const {
    double m = 0.0;
    for (std::size_t j = 0; j < pmf_.size(); ++j)
        m += static_cast<double>(j) * pmf_[j];
    return m;
}

DegreeDistribution size_biased_offspring(const DegreeDistribution& p) {
    const double mean = p.mean();
    if (mean <= 0.0)
        throw std::invalid_argument("size_biased_offspring: distribution has zero mean");
    const std::uint32_t max_j = p.max_support();
    std::vector<double> pmf(std::max<std::uint32_t>(max_j, 1), 0.0);
    for (std::uint32_t j = 1; j <= max_j; ++j)
        pmf[j - 1] = static_cast<double>(j) * p.pmf(j) / mean;
    return DegreeDistribution::from_pmf(std::move(pmf));
}

DegreeDistribution empirical_offspring(std::span<const std::uint32_t> degrees) {
    double ln = 0.0;
    std::uint32_t max_d = 0;
    for (std::uint32_t d : degrees) {
        ln += d;
        max_d = std::max(max_d, d);
    }
    if (ln <= 0.0)
        throw std::invalid_argument("empirical_offspring: all-zero degree sequence");
    std::vector<double> pmf(max_d, 0.0);
    for (std::uint32_t d : degrees)
        if (d >= 1)
            pmf[d - 1] += static_cast<double>(d) / ln;
    return DegreeDistribution::from_pmf(std::move(pmf));
}

double total_variation(const DegreeDistribution& a, const DegreeDistribution& b) {
    const std::uint32_t top = std::max(a.max_support(), b.max_support());
    double tv = 0.0;
    for (std::uint32_t j = 0; j <= top; ++j)
        tv += std::abs(a.pmf(j) - b.pmf(j));
    return 0.5 * tv;
}

DegreeDistribution load_degree_distribution(std::istream& in, const std::string& source_name) {
    std::vector<std::pair<std::uint32_t, double>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        long long j = -1;
        double p = -1.0;
        if (!(ls >> j >> p) || j < 0)
            throw std::runtime_error(source_name + ":" + std::to_string(lineno) +
                                     ": expected 'j p_j'");
        entries.emplace_back(static_cast<std::uint32_t>(j), p);
    }
    if (entries.empty())
        throw std::runtime_error(source_name + ": empty distribution file");
    return DegreeDistribution::from_pairs(entries);
}

DegreeDistribution load_degree_distribution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open distribution file: " + path);
    return load_degree_distribution(in, path);
}

} // namespace contagion
