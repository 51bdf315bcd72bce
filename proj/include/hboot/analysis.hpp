#pragma once

#include "hboot/graph.hpp"
#include "hboot/pattern.hpp"
#include "hboot/process.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace hboot {

/// Largest order the built-in enumerator accepts.
inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr std::size_t kMaxWitnesses = 10;

/// One canonical representative per isomorphism class of graphs on n
/// vertices, sorted by canonical form. Built by extending each class on n-1
/// vertices with a new vertex in every possible way, then deduplicating.
std::vector<Graph> enumerate_graphs(int n);

/// One canonical representative per isomorphism class of trees on t
/// vertices, sorted by canonical form.
std::vector<Graph> enumerate_trees(int t);

struct SearchReport {
    int n = 0;
    int max_tau = 0;
    std::int64_t class_count = 0;  ///< graphs examined
    std::vector<Graph> witnesses;  ///< canonical graphs attaining max_tau, least forms first
};

/// max tau_h(G) over all graphs on n vertices. Refuses n > 7.
SearchReport exhaustive_max_running_time(const Graph& h, int n, int jobs = 1);

/// max tau_h(G) over the supplied graphs, which must all have order n.
SearchReport exhaustive_max_running_time(const Graph& h, int n, std::span<const Graph> graphs, int jobs = 1);

/// Each pair, in lexicographic order, is an edge when a 53-bit uniform
/// drawn from rng falls below p. Fixed seeds give the same graph everywhere.
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Vertex of minimum eccentricity, smallest index on ties.
int tree_centre(const Graph& t);

/// Minimum vertex cover U of the tree t, minimising sum of dist(u, z) among
/// minimum covers. Throws for non-trees and leaf roots.
std::vector<int> rooted_cover(const Graph& t, int z);

struct TreeParams {
    int root = 0;
    std::vector<int> cover;
    int mu = 0;
    int delta = 0;
    int height = 0;
    int i_star = 0;
    int bound = 0;
};

/// Cover, mu, delta, height and i* for the tree t rooted at z. mu needs the
/// exhaustive search on |U| vertices and is refused beyond its limit.
TreeParams tree_params(const Graph& t, int z);

/// floor((t^2 + 6t + 60) / 8). Throws for t < 2.
int tree_bound(int t);

struct SimulationViolation {
    int round = 0; ///< 0 for the induced-start condition
    Edge edge;     ///< in outer coordinates
};

struct SimulationCertificate {
    bool ok = false;
    std::optional<SimulationViolation> first_violation;
    int tau_inner = 0;
    int tau_outer = 0;
};

/// Checks that subset[i] carries inner vertex i, that the outer start
/// induces the inner start there, and that every round adds the same edges.
/// Throws for truncated trajectories or a malformed subset.
SimulationCertificate verify_simulation(const Trajectory& outer, const Trajectory& inner, std::span<const int> subset);

struct CopySequence {
    std::vector<std::vector<int>> vertex_sets; ///< V(H_1), ..., V(H_tau), each sorted
    std::vector<Edge> completing_edges;        ///< the round-i edge completing H_i
};

/// Copies H_1, ..., H_tau with consecutive copies sharing an edge. H_tau is
/// completed by the first edge of the last round; H_i is completed by the
/// least edge of H_{i+1} added in round i.
CopySequence extract_copy_sequence(const Trajectory& traj, const Pattern& p);

/// First edge e (lexicographic) with kappa(h - e) <= 2, provided h is
/// self-percolating.
std::optional<Edge> girth_theorem_applicable(const Graph& h);

/// First round index i with G_i not bipartite, or nullopt.
std::optional<int> first_non_bipartite_round(const Trajectory& traj);

struct SwapAudit {
    std::int64_t checks = 0;
    std::optional<std::pair<Edge, Edge>> failure; ///< (removed, added)
};

/// For every edge e1 and non-edge e2 of h, h - e1 + e2 is not isomorphic to
/// h. Equivalent to h being h-stable.
SwapAudit swap_isomorphism_audit(const Graph& h);

} // namespace hboot
