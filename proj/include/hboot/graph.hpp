#pragma once

#include "hboot/error.hpp"
#include "hboot/vertex_set.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hboot {

/// Undirected vertex pair, always stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dense simple undirected graph on vertices [0, n).
///
/// Row v of the adjacency matrix is the neighbourhood bitset of v. The matrix
/// is kept symmetric and loop free by every mutator, and bits at positions
/// >= n are never set.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph complete(int n);

    int order() const { return n_; }
    int size() const; ///< number of edges

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexSet& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }
    VertexSet vertices() const { return VertexSet::prefix(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void add_edge(const Edge& e) { add_edge(e.u, e.v); }
    void remove_edge(const Edge& e) { remove_edge(e.u, e.v); }

    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;
    /// Non-adjacent pairs in lexicographic order.
    std::vector<Edge> non_edges() const;

    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;

    bool is_complete() const { return 2 * size() == n_ * (n_ - 1); }
    /// Every edge of this graph is an edge of other (same order).
    bool is_subgraph_of(const Graph& other) const;

    /// Graph whose vertex perm[v] carries the neighbourhood of v.
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

/// Subgraph induced on the given vertices. Members are taken in ascending
/// order: position i of the result is the i-th smallest member of vertices.
Graph induced(const Graph& g, std::span<const int> vertices);
Graph induced(const Graph& g, const VertexSet& vertices);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// side[v] in {0, 1}.
struct Bipartition {
    std::vector<int> side;
};

/// A proper 2-colouring, or nullopt when g has an odd cycle. Each component
/// colours its smallest vertex 0.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from source; -1 for unreachable vertices.
std::vector<int> distances(const Graph& g, int source);

/// Largest eccentricity over all vertices; -1 if g is disconnected.
int diameter(const Graph& g);

/// Size of a minimum vertex cut (n - 1 for complete graphs), via unit
/// capacity max-flow between every non-adjacent pair.
int vertex_connectivity(const Graph& g);

/// connected with n - 1 edges
bool is_tree(const Graph& g);

std::string to_string(const Edge& e);

} // namespace hboot
