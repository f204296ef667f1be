#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "contagion/cost.hpp"
#include "contagion/experiment.hpp"
#include "contagion/theory.hpp"

namespace contagion {

// 17 significant digits: parses back to the identical double.
std::string format_double(double v);

// Header t,beta_mean,beta_stderr,gamma_mean,delta_mean,reps. Discrete runs
// carry integer t, continuous runs real t; both use the same schema.
void write_trajectory_csv(std::ostream& out, const TrajectoryStats& stats, bool integral_t);

// Header t,h,h_tilde.
void write_recursion_csv(std::ostream& out, const RecursionTrace& trace);

// Header alpha,h_star,regime.
struct FixedPointRow {
    double alpha;
    FixedPointReport report;
};
void write_fixed_point_csv(std::ostream& out, const std::vector<FixedPointRow>& rows);

// Header alpha,r,u,beta,gamma,delta,m1,m2,m3,total.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Header t,theory,empirical_mean,empirical_stderr,z.
void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

struct ParsedCsv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
};
ParsedCsv read_csv(std::istream& in);
ParsedCsv read_csv_file(const std::string& path);

} // namespace contagion
