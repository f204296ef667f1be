#include "contagion/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace contagion {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string regime_name(FixedPointRegime regime) {
    switch (regime) {
    case FixedPointRegime::unique:
        return "unique";
    case FixedPointRegime::triple:
        return "triple";
    case FixedPointRegime::other:
        return "other";
    }
    return "?";
}

} // namespace

void write_trajectory_csv(std::ostream& out, const TrajectoryStats& stats, bool integral_t) {
    out << "t,beta_mean,beta_stderr,gamma_mean,delta_mean,reps\n";
    for (std::size_t i = 0; i < stats.t.size(); ++i) {
        if (integral_t)
            out << static_cast<long long>(stats.t[i]);
        else
            out << format_double(stats.t[i]);
        out << ',' << format_double(stats.beta_mean[i]) << ','
            << format_double(stats.beta_stderr[i]) << ',' << format_double(stats.gamma_mean[i])
            << ',' << format_double(stats.delta_mean[i]) << ',' << stats.replications << '\n';
    }
}

void write_recursion_csv(std::ostream& out, const RecursionTrace& trace) {
    out << "t,h,h_tilde\n";
    for (std::size_t t = 0; t < trace.h.size(); ++t)
        out << t << ',' << format_double(trace.h[t]) << ',' << format_double(trace.h_tilde[t])
            << '\n';
}

void write_fixed_point_csv(std::ostream& out, const std::vector<FixedPointRow>& rows) {
    out << "alpha,h_star,regime\n";
    for (const auto& row : rows)
        out << format_double(row.alpha) << ',' << format_double(row.report.h_star) << ','
            << regime_name(row.report.regime) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "alpha,r,u,beta,gamma,delta,m1,m2,m3,total\n";
    for (const auto& row : rows)
        out << format_double(row.alpha) << ',' << format_double(row.r) << ','
            << format_double(row.u) << ',' << format_double(row.beta) << ','
            << format_double(row.gamma) << ',' << format_double(row.delta) << ','
            << format_double(row.m1) << ',' << format_double(row.m2) << ','
            << format_double(row.m3) << ',' << format_double(row.total) << '\n';
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
    out << "t,theory,empirical_mean,empirical_stderr,z\n";
    for (const auto& row : report.rows)
        out << format_double(row.t) << ',' << format_double(row.theory) << ','
            << format_double(row.empirical_mean) << ',' << format_double(row.empirical_stderr)
            << ',' << format_double(row.z) << '\n';
}

std::size_t ParsedCsv::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::runtime_error("csv: missing column '" + name + "'");
}

ParsedCsv read_csv(std::istream& in) {
    ParsedCsv csv;
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("csv: empty input");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ','))
        csv.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream ls(line);
        while (std::getline(ls, cell, ','))
            row.push_back(cell == "nan" ? std::nan("") : std::stod(cell));
        if (row.size() != csv.header.size())
            throw std::runtime_error("csv: ragged row");
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

ParsedCsv read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open csv file: " + path);
    return read_csv(in);
}

} // namespace contagion
