#pragma once

#include <qdrg/intersection_array.hpp>

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdrg {

/// Simple undirected graph on vertices 0..n-1 stored as sorted adjacency lists.
class Graph {
public:
    explicit Graph(int n = 0);

    int size() const { return static_cast<int>(_adj.size()); }
    /// Ignores duplicates; loops are rejected.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::span<const int> neighbors(int v) const { return _adj[v]; }
    int degree(int v) const { return static_cast<int>(_adj[v].size()); }
    std::int64_t edge_count() const;
    bool is_connected() const;

    /// Optional human-readable vertex descriptors (subsets, tuples).
    std::vector<std::string> labels;

    friend bool operator==(const Graph & x, const Graph & y) { return x._adj == y._adj; }

private:
    std::vector<std::vector<int>> _adj;
};

/// All-pairs shortest-path lengths.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> dist) : _n(n), _dist(std::move(dist)) {}

    int size() const { return _n; }
    int operator()(int x, int y) const { return _dist[static_cast<std::size_t>(x) * _n + y]; }
    int diameter() const;

private:
    int _n;
    std::vector<int> _dist;
};

/// Single-source BFS; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph & g, int root);

/// BFS from every vertex. Throws Error(DisconnectedInput).
DistanceMatrix distances(const Graph & g);

Graph johnson_graph(int v, int k);
Graph hamming_graph(int d, int s);
Graph cycle_graph(int n);
/// 3-subsets of a 7-set adjacent iff disjoint (the Odd graph O_4).
Graph kneser_graph_73();
/// 2-subsets of a 5-set adjacent iff disjoint.
Graph petersen_graph();
/// Point-line incidence graph of the Fano plane.
Graph heawood_graph();
/// K_{m,m} minus a perfect matching.
Graph crown_graph(int m);
/// Even-weight binary d-tuples adjacent iff at Hamming distance 2.
Graph halved_cube(int d);

struct DistancePower {
    Graph graph;
    bool disconnected = false;
};

/// Vertices adjacent iff at distance exactly i in g.
DistancePower distance_power(const Graph & g, int i);

/// Brute-force check of the c_i, a_i, b_i pair counts over all ordered pairs.
/// Returns the intersection array, or nothing if g is not distance-regular.
std::optional<IntersectionArray> verify_drg(const Graph & g);

Eigen::MatrixXd adjacency_matrix(const Graph & g);

/// Eigenvalues of a dense symmetric matrix, descending. Throws Error(NumericalFailure).
std::vector<double> dense_eigenvalues(const Eigen::MatrixXd & m);

/// One line per vertex: `v: u1 u2 ...`. Lines starting with '#' are comments.
std::string to_adjacency_list(const Graph & g);
Graph parse_adjacency_list(std::string_view text);

struct AtlasEntry {
    std::string name;
    std::function<Graph()> build;
};

/// The bundled desk-scale graphs used for oracle checks.
const std::vector<AtlasEntry> & atlas();

/// Builds an atlas graph by name, e.g. `J(6,3)`, `H(3,2)`, `C(8)`, `crown(5)`,
/// `halved(6)`, `halved2(6)`, `O4`, `petersen`, `heawood`.
/// Throws Error(OutOfRange) for unknown names or parameters.
Graph graph_by_name(std::string_view name);

} // namespace qdrg
