// Command-line surface for graph generation, cascade simulation, the
// analytic recursions, and the marketing cost sweeps. Every command is
// deterministic given its flags and --seed; outputs are CSV plus a JSON
// metadata sidecar next to each written file.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "contagion/cost.hpp"
#include "contagion/csv.hpp"
#include "contagion/dynamics_continuous.hpp"
#include "contagion/experiment.hpp"
#include "contagion/graph_gen.hpp"
#include "contagion/theory.hpp"
#include "contagion/version.hpp"

using nlohmann::json;
using namespace contagion;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;
constexpr int kExitVerdictFailure = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << body;
}

// Config echo, code version, seeds and wall time, next to the output file.
void write_sidecar(const std::string& out_path, const json& config, double wall_seconds) {
    json meta;
    meta["version"] = kVersion;
    meta["config"] = config;
    meta["wall_time_s"] = wall_seconds;
    meta["output"] = out_path;
    write_text_file(out_path + ".meta.json", meta.dump(2) + "\n");
}

void emit(const std::string& out_path, const std::string& body, const json& config,
          const Timer& timer) {
    if (out_path.empty()) {
        std::cout << body;
    } else {
        write_text_file(out_path, body);
        write_sidecar(out_path, config, timer.seconds());
    }
}

// Payoff flags shared by the simulation and theory commands. Decimal
// strings are kept exact so threshold ties resolve in integer arithmetic.
struct PayoffFlags {
    std::string q_a = "1";
    std::string q_b = "1";
    std::string u = "0";
    std::string r = "0";

    void attach(CLI::App* app) {
        app->add_option("--qa", q_a, "Payoff per A-A edge (decimal)")->capture_default_str();
        app->add_option("--qb", q_b, "Payoff per B-B edge (decimal)")->capture_default_str();
        app->add_option("--u", u, "Per-B-edge marketing increment (decimal)")
            ->capture_default_str();
        app->add_option("--r", r, "Adoption bonus (decimal)")->capture_default_str();
    }
    PayoffParams params() const { return PayoffParams::from_decimals(q_a, q_b, u, r); }
    json echo() const { return json{{"qa", q_a}, {"qb", q_b}, {"u", u}, {"r", r}}; }
};

// Graph source shared by sim-discrete, sim-continuous and sweep: either a
// stored graph file or a generator model.
struct GraphFlags {
    std::string graph_file;
    std::string model;
    std::uint32_t n = 0;
    double p = 0.0;
    std::uint32_t delta = 0;
    std::string dist_file;

    void attach(CLI::App* app) {
        app->add_option("--graph", graph_file, "Graph file (format: 'n m' then edges)");
        app->add_option("--model", model, "Generator model: er | regular | config")
            ->check(CLI::IsMember({"er", "regular", "config"}));
        app->add_option("--n", n, "Node count (generator models)");
        app->add_option("--p", p, "Edge probability (er)");
        app->add_option("--delta", delta, "Degree (regular)");
        app->add_option("--dist-file", dist_file, "Degree distribution file (config)");
    }

    GraphSpec spec() const {
        if (!graph_file.empty())
            return GraphSpec::from_file(graph_file);
        if (model == "er") {
            if (n == 0)
                throw CLI::ValidationError("--n", "er model needs a node count");
            return GraphSpec::erdos_renyi(n, p);
        }
        if (model == "regular") {
            if (n == 0 || delta == 0)
                throw CLI::ValidationError("--n/--delta", "regular model needs both");
            return GraphSpec::regular(n, delta);
        }
        if (model == "config") {
            if (n == 0 || dist_file.empty())
                throw CLI::ValidationError("--n/--dist-file", "config model needs both");
            return GraphSpec::configuration(n, load_degree_distribution_file(dist_file));
        }
        throw CLI::ValidationError("--graph", "need --graph or --model");
    }

    json echo() const {
        return json{{"graph", graph_file}, {"model", model},         {"n", n},
                    {"p", p},              {"delta", delta},         {"dist_file", dist_file}};
    }
};

struct CommandContext {
    int exit_code = kExitOk;
    std::function<void()> pending; // command body, runs after parsing
};

void setup_gen(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("gen", "Generate a random graph and store it");
    auto flags = std::make_shared<GraphFlags>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    flags->attach(cmd);
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out, "Output graph file")->required();
    cmd->callback([flags, seed, out, &ctx]() {
        ctx.pending = [flags, seed, out]() {
        Timer timer;
        if (flags->graph_file.empty() && flags->model.empty())
            throw CLI::ValidationError("--model", "gen needs a generator model");
        const Graph g = flags->spec().realize(RngSeed{*seed}, 0);
        std::ostringstream body;
        save_graph(g, body);
        json config{{"command", "gen"}, {"source", flags->echo()}, {"seed", *seed}};
        emit(*out, body.str(), config, timer);
        std::cerr << "gen: n=" << g.num_nodes() << " m=" << g.num_edges() << " -> " << *out
                  << "\n";
        };
    });
}

void setup_sim_discrete(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("sim-discrete", "Synchronous best-response cascade");
    auto graph = std::make_shared<GraphFlags>();
    auto payoff = std::make_shared<PayoffFlags>();
    auto alpha = std::make_shared<double>(0.1);
    auto t_max = std::make_shared<std::uint32_t>(100);
    auto reps = std::make_shared<std::uint32_t>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    graph->attach(cmd);
    payoff->attach(cmd);
    cmd->add_option("--alpha", *alpha, "Bernoulli seed fraction")->required();
    cmd->add_option("--t-max", *t_max, "Step horizon")->capture_default_str();
    cmd->add_option("--reps", *reps, "Replications")->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV (default: stdout)");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        const TrajectoryStats stats = simulate_discrete_reps(graph->spec(), payoff->params(),
                                                             *alpha, *t_max, *reps,
                                                             RngSeed{*seed})
                                          .trimmed();
        std::ostringstream body;
        write_trajectory_csv(body, stats, /*integral_t=*/true);
        json config{{"command", "sim-discrete"}, {"source", graph->echo()},
                    {"payoff", payoff->echo()},  {"alpha", *alpha},
                    {"t_max", *t_max},           {"reps", *reps},
                    {"seed", *seed}};
        emit(*out, body.str(), config, timer);
        };
    });
}

void setup_sim_continuous(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("sim-continuous", "Rate-1 best-response clock dynamics");
    auto graph = std::make_shared<GraphFlags>();
    auto payoff = std::make_shared<PayoffFlags>();
    auto alpha = std::make_shared<double>(0.1);
    auto t_end = std::make_shared<double>(1.0);
    auto grid = std::make_shared<std::uint32_t>(100);
    auto reps = std::make_shared<std::uint32_t>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    graph->attach(cmd);
    payoff->attach(cmd);
    cmd->add_option("--alpha", *alpha, "Bernoulli seed fraction")->required();
    cmd->add_option("--t-end", *t_end, "Time horizon")->capture_default_str();
    cmd->add_option("--grid-points", *grid, "Sampling grid size on [0, t_end]")
        ->capture_default_str();
    cmd->add_option("--reps", *reps, "Replications")->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV (default: stdout)");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        const TrajectoryStats stats = simulate_continuous_reps(
            graph->spec(), payoff->params(), *alpha, *t_end, *grid, *reps, RngSeed{*seed});
        std::ostringstream body;
        write_trajectory_csv(body, stats, /*integral_t=*/false);
        json config{{"command", "sim-continuous"}, {"source", graph->echo()},
                    {"payoff", payoff->echo()},    {"alpha", *alpha},
                    {"t_end", *t_end},             {"grid_points", *grid},
                    {"reps", *reps},               {"seed", *seed}};
        emit(*out, body.str(), config, timer);
        };
    });
}

// Degree threshold for the tree recursions: an explicit --theta wins,
// otherwise theta(delta) from the payoff flags.
double resolve_theta(const PayoffFlags& payoff, double theta_flag, bool theta_set,
                     std::uint32_t delta) {
    if (theta_set)
        return theta_flag;
    return threshold(payoff.params(), delta);
}

void setup_theory(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("theory", "Tree recursion h(t), h~(t)");
    auto payoff = std::make_shared<PayoffFlags>();
    auto delta = std::make_shared<std::uint32_t>(3);
    auto theta = std::make_shared<double>(0.0);
    auto alpha = std::make_shared<double>(0.1);
    auto steps = std::make_shared<std::uint32_t>(20);
    auto out = std::make_shared<std::string>();
    payoff->attach(cmd);
    cmd->add_option("--delta", *delta, "Tree degree")->required();
    auto* theta_opt = cmd->add_option("--theta", *theta, "Threshold (default: theta(delta))");
    cmd->add_option("--alpha", *alpha, "Seed fraction")->required();
    cmd->add_option("--t", *steps, "Recursion steps")->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        const double th = resolve_theta(*payoff, *theta, theta_opt->count() > 0, *delta);
        const RecursionTrace trace = recursion_trace(*delta, th, *alpha, *steps);
        std::cout << "t        h(t)                  h~(t)\n";
        for (std::size_t t = 0; t < trace.h.size(); ++t)
            std::cout << t << (t < 10 ? "        " : "       ") << format_double(trace.h[t])
                      << "   " << format_double(trace.h_tilde[t]) << "\n";
        if (!out->empty()) {
            std::ostringstream body;
            write_recursion_csv(body, trace);
            json config{{"command", "theory"}, {"delta", *delta}, {"theta", th},
                        {"alpha", *alpha},     {"t", *steps}};
            emit(*out, body.str(), config, timer);
        }
        };
    });
}

void setup_fixed_point(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("fixed-point", "Fixed points of the tree recursion");
    auto payoff = std::make_shared<PayoffFlags>();
    auto delta = std::make_shared<std::uint32_t>(0);
    auto theta = std::make_shared<double>(0.0);
    auto alphas = std::make_shared<std::vector<double>>();
    auto tol = std::make_shared<double>(1e-12);
    auto dist_file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    payoff->attach(cmd);
    cmd->add_option("--delta", *delta, "Tree degree (regular recursion)");
    auto* theta_opt = cmd->add_option("--theta", *theta, "Threshold (default: theta(delta))");
    cmd->add_option("--alphas", *alphas, "Comma-separated seed fractions")
        ->required()
        ->delimiter(',');
    cmd->add_option("--tol", *tol, "Fixed-point tolerance")->capture_default_str();
    cmd->add_option("--dist-file", *dist_file,
                    "Degree distribution file (configuration-model fixed point)");
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        std::vector<FixedPointRow> rows;
        for (double a : *alphas) {
            FixedPointReport report;
            if (!dist_file->empty()) {
                report = fixed_point_general(load_degree_distribution_file(*dist_file),
                                             payoff->params(), a, *tol);
            } else {
                if (*delta == 0)
                    throw CLI::ValidationError("--delta", "need --delta or --dist-file");
                const double th = resolve_theta(*payoff, *theta, theta_opt->count() > 0, *delta);
                report = fixed_point(*delta, th, a, *tol);
            }
            rows.push_back({a, report});
        }
        std::cout << "alpha       h*            h~_limit      regime  solutions\n";
        for (const auto& row : rows) {
            std::cout << row.alpha << "    " << format_double(row.report.h_star) << "    "
                      << format_double(row.report.h_tilde_limit) << "    "
                      << (row.report.regime == FixedPointRegime::unique   ? "unique"
                          : row.report.regime == FixedPointRegime::triple ? "triple"
                                                                          : "other")
                      << "  [";
            for (std::size_t i = 0; i < row.report.solutions.size(); ++i)
                std::cout << (i ? ", " : "") << format_double(row.report.solutions[i]);
            std::cout << "]\n";
        }
        if (!out->empty()) {
            std::ostringstream body;
            write_fixed_point_csv(body, rows);
            json config{{"command", "fixed-point"}, {"delta", *delta},
                        {"alphas", *alphas},        {"tol", *tol},
                        {"dist_file", *dist_file}};
            emit(*out, body.str(), config, timer);
        }
        };
    });
}

void setup_alpha_crit(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("alpha-crit", "Critical seed fraction by bisection");
    auto delta = std::make_shared<std::uint32_t>(0);
    auto theta = std::make_shared<double>(0.0);
    auto tol = std::make_shared<double>(1e-6);
    cmd->add_option("--delta", *delta, "Tree degree")->required();
    cmd->add_option("--theta", *theta, "Threshold")->required();
    cmd->add_option("--tol", *tol, "Bisection width")->capture_default_str();
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        const AlphaCritResult result = alpha_crit(*delta, *theta, *tol);
        std::cout << "alpha_crit " << format_double(result.value) << "\n";
        if (!result.theorem_applies)
            std::cout << "note: theta outside [0, delta-2); the three-solution phase "
                         "structure is not established for these parameters\n";
        };
    });
}

void setup_bound(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("bound", "Exponential growth bound alpha*exp(lambda1 t/theta)");
    auto payoff = std::make_shared<PayoffFlags>();
    auto graph_file = std::make_shared<std::string>();
    auto lambda1 = std::make_shared<double>(0.0);
    auto theta_dmin = std::make_shared<double>(0.0);
    auto alpha = std::make_shared<double>(0.1);
    auto t_end = std::make_shared<double>(1.0);
    auto points = std::make_shared<std::uint32_t>(20);
    auto out = std::make_shared<std::string>();
    payoff->attach(cmd);
    cmd->add_option("--graph", *graph_file, "Graph file: compute lambda1 and theta(d_min)");
    auto* l_opt = cmd->add_option("--lambda1", *lambda1, "Spectral radius (direct)");
    auto* th_opt = cmd->add_option("--theta-dmin", *theta_dmin, "theta(d_min) (direct)");
    cmd->add_option("--alpha", *alpha, "Seed fraction")->required();
    cmd->add_option("--t-end", *t_end, "Time horizon")->capture_default_str();
    cmd->add_option("--points", *points, "Grid points")->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        double l1 = *lambda1, th = *theta_dmin;
        if (!graph_file->empty()) {
            const Graph g = load_graph_file(*graph_file);
            const SpectralEstimate est = spectral_radius(g);
            if (!est.connected_input)
                std::cerr << "warning: graph is disconnected; the spectral estimate applies "
                             "to a dominant component\n";
            l1 = est.value;
            th = threshold(payoff->params(), g.min_degree());
        } else if (l_opt->count() == 0 || th_opt->count() == 0) {
            throw CLI::ValidationError("--graph",
                                       "need --graph or both --lambda1 and --theta-dmin");
        }
        std::ostringstream body;
        body << "t,bound\n";
        for (std::uint32_t k = 0; k < *points; ++k) {
            const double t = *t_end * static_cast<double>(k) /
                             (*points > 1 ? *points - 1 : 1);
            body << format_double(t) << ',' << format_double(bound_beta(*alpha, l1, th, t))
                 << '\n';
        }
        json config{{"command", "bound"}, {"lambda1", l1}, {"theta_dmin", th},
                    {"alpha", *alpha},    {"t_end", *t_end}};
        emit(*out, body.str(), config, timer);
        };
    });
}

void setup_cost(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("cost", "Cost breakdown of a stored trajectory CSV");
    auto trajectory = std::make_shared<std::string>();
    auto c = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(0.0);
    auto u = std::make_shared<double>(0.0);
    auto alpha = std::make_shared<double>(-1.0);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--trajectory", *trajectory, "Trajectory CSV from sim-discrete/continuous")
        ->required();
    cmd->add_option("--c", *c, "Per-seed cost")->capture_default_str();
    cmd->add_option("--r", *r, "Rebate per organic adopter")->capture_default_str();
    cmd->add_option("--u", *u, "Per-B-B-edge subsidy")->capture_default_str();
    cmd->add_option("--alpha", *alpha,
                    "Seed fraction (default: beta_mean - gamma_mean of each row)");
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        const ParsedCsv csv = read_csv_file(*trajectory);
        const std::size_t beta_col = csv.column("beta_mean");
        const std::size_t gamma_col = csv.column("gamma_mean");
        const std::size_t delta_col = csv.column("delta_mean");
        std::vector<SweepRow> rows;
        for (const auto& line : csv.rows) {
            SweepRow row;
            row.beta = line[beta_col];
            row.gamma = line[gamma_col];
            row.delta = line[delta_col];
            row.alpha = *alpha >= 0.0 ? *alpha : row.beta - row.gamma;
            row.r = *r;
            row.u = *u;
            const CostBreakdown cb = cost(CostParams{*c, *r, *u}, row.alpha, row.gamma, row.delta);
            row.m1 = cb.m1;
            row.m2 = cb.m2;
            row.m3 = cb.m3;
            row.total = cb.total;
            rows.push_back(row);
        }
        std::ostringstream body;
        write_sweep_csv(body, rows);
        json config{{"command", "cost"}, {"trajectory", *trajectory}, {"c", *c},
                    {"r", *r},           {"u", *u}};
        emit(*out, body.str(), config, timer);
        };
    });
}

void setup_sweep(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("sweep", "Cost over an (alpha, r, u) grid");
    auto graph = std::make_shared<GraphFlags>();
    auto alphas = std::make_shared<std::vector<double>>();
    auto rs = std::make_shared<std::vector<double>>(std::vector<double>{0.0});
    auto us = std::make_shared<std::vector<double>>(std::vector<double>{0.0});
    auto backend = std::make_shared<std::string>("simulation");
    auto q_a = std::make_shared<double>(1.0);
    auto q_b = std::make_shared<double>(1.0);
    auto c = std::make_shared<double>(1.0);
    auto theory_delta = std::make_shared<std::uint32_t>(0);
    auto horizon = std::make_shared<std::uint32_t>(50);
    auto reps = std::make_shared<std::uint32_t>(20);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out = std::make_shared<std::string>();
    graph->attach(cmd);
    cmd->add_option("--alphas", *alphas, "Comma-separated alpha grid")
        ->required()
        ->delimiter(',');
    cmd->add_option("--rs", *rs, "Comma-separated r grid")->delimiter(',');
    cmd->add_option("--us", *us, "Comma-separated u grid")->delimiter(',');
    cmd->add_option("--backend", *backend, "theory | simulation")
        ->check(CLI::IsMember({"theory", "simulation"}))
        ->capture_default_str();
    cmd->add_option("--qa", *q_a, "Payoff per A-A edge")->capture_default_str();
    cmd->add_option("--qb", *q_b, "Payoff per B-B edge")->capture_default_str();
    cmd->add_option("--c", *c, "Per-seed cost")->capture_default_str();
    cmd->add_option("--theory-delta", *theory_delta, "Regular degree for the theory backend");
    cmd->add_option("--horizon", *horizon, "Step horizon")->capture_default_str();
    cmd->add_option("--reps", *reps, "Replications per row (simulation)")->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=]() {
        Timer timer;
        SweepContext sctx;
        sctx.q_a = *q_a;
        sctx.q_b = *q_b;
        sctx.c = *c;
        sctx.horizon = *horizon;
        sctx.replications = *reps;
        sctx.seed = RngSeed{*seed};
        const SweepBackend be =
            *backend == "theory" ? SweepBackend::theory : SweepBackend::simulation;
        if (be == SweepBackend::simulation) {
            sctx.graph = graph->spec();
        } else if (*theory_delta > 0) {
            sctx.delta = *theory_delta;
        } else if (!graph->dist_file.empty()) {
            sctx.dist = load_degree_distribution_file(graph->dist_file);
        } else {
            throw CLI::ValidationError("--theory-delta",
                                       "theory backend needs --theory-delta or --dist-file");
        }
        if (alphas->empty() || rs->empty() || us->empty())
            throw CLI::ValidationError("--alphas/--rs/--us", "grids must be non-empty");
        const auto rows = sweep(*alphas, *rs, *us, be, sctx);
        std::ostringstream body;
        write_sweep_csv(body, rows);
        json config{{"command", "sweep"},   {"source", graph->echo()}, {"alphas", *alphas},
                    {"rs", *rs},            {"us", *us},               {"backend", *backend},
                    {"qa", *q_a},           {"qb", *q_b},              {"c", *c},
                    {"horizon", *horizon},  {"reps", *reps},           {"seed", *seed}};
        emit(*out, body.str(), config, timer);
        };
    });
}

void setup_compare(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand(
        "compare", "Mean adoption on fresh regular graphs vs. the tree recursion");
    auto payoff = std::make_shared<PayoffFlags>();
    auto delta = std::make_shared<std::uint32_t>(3);
    auto n = std::make_shared<std::uint32_t>(10000);
    auto alpha = std::make_shared<double>(0.1);
    auto horizon = std::make_shared<std::uint32_t>(5);
    auto reps = std::make_shared<std::uint32_t>(100);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto z_threshold = std::make_shared<double>(3.0);
    auto out = std::make_shared<std::string>();
    payoff->attach(cmd);
    cmd->add_option("--delta", *delta, "Regular degree")->capture_default_str();
    cmd->add_option("--n", *n, "Nodes per replication graph")->capture_default_str();
    cmd->add_option("--alpha", *alpha, "Seed fraction")->required();
    cmd->add_option("--t", *horizon, "Steps to compare")->capture_default_str();
    cmd->add_option("--reps", *reps, "Replications (fresh graph each)")->capture_default_str();
    cmd->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    cmd->add_option("--z-threshold", *z_threshold, "Verdict threshold on max |z|")
        ->capture_default_str();
    cmd->add_option("--out", *out, "Output CSV");
    cmd->callback([=, &ctx]() {
        ctx.pending = [=, &ctx]() {
        Timer timer;
        if (*reps < 30)
            std::cerr << "warning: fewer than 30 replications; standard errors are noisy\n";
        const ComparisonReport report = compare_regular(*delta, *n, payoff->params(), *alpha,
                                                        *horizon, *reps, RngSeed{*seed},
                                                        *z_threshold);
        std::ostringstream body;
        write_comparison_csv(body, report);
        json config{{"command", "compare"}, {"payoff", payoff->echo()},
                    {"delta", *delta},      {"n", *n},
                    {"alpha", *alpha},      {"t", *horizon},
                    {"reps", *reps},        {"seed", *seed},
                    {"z_threshold", *z_threshold}};
        emit(*out, body.str(), config, timer);
        std::cerr << "compare: max|z| = " << report.max_abs_z << " threshold "
                  << *z_threshold << " -> " << (report.pass ? "pass" : "FAIL") << "\n";
        if (!report.pass)
            ctx.exit_code = kExitVerdictFailure;
        };
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Best-response contagion on random graphs: simulation, theory, and cost"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "Config file (INI, one section per command)");
    bool dump_config = false;
    app.add_flag("--dump-config", dump_config, "Print the resolved configuration and exit");
    app.require_subcommand(0, 1);

    CommandContext ctx;
    setup_gen(app, ctx);
    setup_sim_discrete(app, ctx);
    setup_sim_continuous(app, ctx);
    setup_theory(app, ctx);
    setup_fixed_point(app, ctx);
    setup_alpha_crit(app, ctx);
    setup_bound(app, ctx);
    setup_cost(app, ctx);
    setup_sweep(app, ctx);
    setup_compare(app, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    if (dump_config) {
        std::cout << app.config_to_str(true, true);
        return kExitOk;
    }
    if (!ctx.pending) {
        std::cerr << app.help();
        return kExitConfigError;
    }
    try {
        ctx.pending();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return ctx.exit_code;
}
