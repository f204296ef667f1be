#include "contagion/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace contagion {

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(nodes.begin(), nodes.end(), v);
}

void Graph::check_node(NodeId i) const {
    if (i >= n_)
        throw std::out_of_range("node index " + std::to_string(i) + " out of range (n=" +
                                std::to_string(n_) + ")");
}

Graph Graph::from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();

    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at node " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }

    g.offsets_.assign(n + 1, 0);
    for (NodeId i = 0; i < n; ++i)
        g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adj_.resize(2 * edges.size());

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (NodeId i = 0; i < n; ++i) {
        auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]);
        auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw std::invalid_argument("duplicate edge incident to node " + std::to_string(i));
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

NodeId Graph::min_degree() const {
    if (n_ == 0)
        throw std::invalid_argument("min_degree of empty graph");
    NodeId d = degree(0);
    for (NodeId i = 1; i < n_; ++i)
        d = std::min(d, degree(i));
    return d;
}

NodeId Graph::max_degree() const {
    if (n_ == 0)
        throw std::invalid_argument("max_degree of empty graph");
    NodeId d = degree(0);
    for (NodeId i = 1; i < n_; ++i)
        d = std::max(d, degree(i));
    return d;
}

double Graph::average_degree() const {
    if (n_ == 0)
        throw std::invalid_argument("average_degree of empty graph");
    return 2.0 * static_cast<double>(m_) / static_cast<double>(n_);
}

bool Graph::is_connected() const {
    if (n_ == 0)
        throw std::invalid_argument("is_connected of empty graph");
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (NodeId v : neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n_;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m_);
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : neighbors(u))
            if (u < v)
                edges.emplace_back(u, v);
    return edges;
}

NodeSet neighborhood(const Graph& g, NodeId i, unsigned d) {
    if (i >= g.num_nodes())
        throw std::out_of_range("neighborhood: node index out of range");
    std::vector<char> seen(g.num_nodes(), 0);
    std::vector<NodeId> frontier{i}, next;
    seen[i] = 1;
    NodeSet out;
    out.nodes.push_back(i);
    for (unsigned level = 0; level < d && !frontier.empty(); ++level) {
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    next.push_back(v);
                    out.nodes.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
}

bool is_locally_tree(const Graph& g, NodeId i, unsigned d) {
    NodeSet ball = neighborhood(g, i, d);
    // A forest has exactly (nodes - components) edges.
    std::size_t internal_edges = 0;
    for (NodeId u : ball.nodes)
        for (NodeId v : g.neighbors(u))
            if (u < v && ball.contains(v))
                ++internal_edges;
    // The ball is connected by construction, so one component.
    return internal_edges == ball.size() - 1;
}

SpectralEstimate spectral_radius(const Graph& g, double tol, int max_iter) {
    const NodeId n = g.num_nodes();
    if (n == 0)
        throw std::invalid_argument("spectral_radius of empty graph");
    if (tol <= 0 || max_iter <= 0)
        throw std::invalid_argument("spectral_radius: tol and max_iter must be positive");

    SpectralEstimate est;
    est.connected_input = g.is_connected();
    if (g.num_edges() == 0)
        return est; // zero matrix

    const double shift = static_cast<double>(g.max_degree());
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);

    double rayleigh_prev = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (NodeId i = 0; i < n; ++i) {
            double acc = shift * x[i];
            for (NodeId j : g.neighbors(i))
                acc += x[j];
            y[i] = acc;
        }
        double xy = 0.0, yy = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            xy += x[i] * y[i];
            yy += y[i] * y[i];
        }
        const double rayleigh = xy; // x is unit norm, so x'(A+sI)x = x'y
        const double norm = std::sqrt(yy);
        for (NodeId i = 0; i < n; ++i)
            x[i] = y[i] / norm;

        if (iter > 1 && std::abs(rayleigh - rayleigh_prev) < tol) {
            est.value = rayleigh - shift;
            est.iterations = iter;
            return est;
        }
        rayleigh_prev = rayleigh;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge within " +
                             std::to_string(max_iter) + " iterations (tol=" + std::to_string(tol) +
                             ")");
}

Graph load_graph(std::istream& in, const std::string& source_name) {
    auto fail = [&](std::size_t line, const std::string& msg) {
        throw std::runtime_error(source_name + ":" + std::to_string(line) + ": " + msg);
    };

    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!next_line())
        throw std::runtime_error(source_name + ": empty graph file");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        fail(lineno, "expected header 'n m'");

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        if (!next_line())
            fail(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(k));
        std::istringstream es(line);
        long long u = -1, v = -1;
        if (!(es >> u >> v))
            fail(lineno, "expected edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(lineno, "edge endpoint out of range");
        if (u == v)
            fail(lineno, "self-loop " + std::to_string(u) + "-" + std::to_string(v));
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }

    auto canon = edges;
    for (auto& e : canon)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        throw std::runtime_error(source_name + ": duplicate edge in input");

    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return load_graph(in, path);
}

void save_graph(const Graph& g, std::ostream& out) {
    out << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edge_list())
        out << u << ' ' << v << '\n';
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    save_graph(g, out);
}

} // namespace contagion
