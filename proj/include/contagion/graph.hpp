#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace contagion {

using NodeId = std::uint32_t;

// Set of node indices, kept sorted ascending.
struct NodeSet {
    std::vector<NodeId> nodes;

    bool contains(NodeId v) const;
    std::size_t size() const { return nodes.size(); }
};

// Immutable undirected simple graph in CSR form. Nodes are dense indices
// 0..n-1; adjacency lists are sorted. Construction validates simplicity
// (no self-loops, no duplicate edges) and stores each edge once in m().
class Graph {
public:
    Graph() = default;

    // Takes each undirected edge listed once, in any order.
    static Graph from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::span<const NodeId> neighbors(NodeId i) const {
        check_node(i);
        return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
    }

    NodeId degree(NodeId i) const {
        check_node(i);
        return static_cast<NodeId>(offsets_[i + 1] - offsets_[i]);
    }

    bool has_edge(NodeId u, NodeId v) const;

    NodeId min_degree() const;
    NodeId max_degree() const;
    double average_degree() const;

    bool is_connected() const;

    // Every undirected edge {u,v} with u < v, sorted lexicographically.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

private:
    void check_node(NodeId i) const;

    NodeId n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adj_;
};

// All nodes at shortest-path distance <= d from i (breadth-first).
NodeSet neighborhood(const Graph& g, NodeId i, unsigned d);

// True iff the subgraph induced by neighborhood(g, i, d) is acyclic.
bool is_locally_tree(const Graph& g, NodeId i, unsigned d);

struct SpectralEstimate {
    double value = 0.0;
    int iterations = 0;
    // False when the input was disconnected: the estimate then applies to a
    // dominant component rather than the whole graph.
    bool connected_input = true;
};

// Largest adjacency eigenvalue by power iteration on A + d_max*I (the shift
// keeps the dominant eigenvalue simple-in-modulus on bipartite graphs).
// Starts from the all-ones vector and stops when successive Rayleigh
// quotients differ by less than tol. Throws if max_iter is exhausted first.
SpectralEstimate spectral_radius(const Graph& g, double tol = 1e-9, int max_iter = 10000);

// Text format: first line "n m", then m lines "u v", 0-based endpoints,
// each undirected edge once. Rejects self-loops and duplicates with a
// line-numbered error.
Graph load_graph(std::istream& in, const std::string& source_name = "<stream>");
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph_file(const Graph& g, const std::string& path);

} // namespace contagion
