#pragma once

#include "hboot/graph.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace hboot {

namespace detail {
struct HostIndex;
struct QueryCache;
}

/// Order in which the embedding search assigns pattern vertices.
///
/// Built greedily: seeds first, then repeatedly the unplaced vertex with the
/// most placed neighbours, ties to higher degree, then lower index.
struct SearchPlan {
    std::vector<int> order;              ///< pattern vertex at each position
    std::vector<std::vector<int>> back;  ///< earlier positions adjacent to position i
    std::vector<std::vector<int>> ahead; ///< later positions adjacent to position i
    std::vector<int> degree;             ///< pattern degree at each position
};

SearchPlan make_plan(const Graph& f, std::span<const int> seeds);

/// H - e for one representative edge e = (a, b) of an orbit of Aut(H).
struct AnchoredTemplate {
    Edge removed;
    bool reversible = false; ///< an automorphism of H swaps a and b
    Graph graph;             ///< H - e
    SearchPlan plan;         ///< starts with a, b
    std::vector<int> blocks; ///< indices into Pattern::blocks() of the blocks of H - e
};

/// A 2-connected block, with at least three vertices, of some H - e.
struct PatternBlock {
    std::vector<int> vertices; ///< sorted; position i of graph is vertices[i]
    Graph graph;               ///< the block's edges, on positions
    SearchPlan plan;
    std::vector<int> orbit_rep; ///< least position in the same Aut(graph) orbit
    std::vector<Edge> edge_reps;    ///< one edge per Aut(graph) orbit
    std::vector<bool> edge_reversible;
};

/// Per block of a pattern, the host vertices each block position can reach
/// in some embedding of the block. Empty entries were never needed.
using BlockDomains = std::vector<std::vector<VertexSet>>;

/// Witness that the pair {u, v} completes a copy of H: map sends H vertices
/// into the host, anchor_edge's endpoints land on {u, v} and every other edge
/// of H lands on a host edge.
struct AnchoredEmbedding {
    std::vector<int> map;
    Edge anchor_edge;

    /// Host edges covered by the copy, including the completing pair.
    std::vector<Edge> image_edges(const Graph& h) const;
    std::vector<int> image_vertices() const;
};

/// A target graph H compiled for repeated "does {u, v} complete a copy?"
/// queries.
class Pattern {
public:
    /// Throws ArgumentError for edgeless h. With reduce_orbits = false every
    /// edge becomes its own (non-reversible) template.
    static Pattern compile(const Graph& h, bool reduce_orbits = true);

    const Graph& graph() const { return h_; }
    const std::vector<AnchoredTemplate>& templates() const { return templates_; }
    const std::vector<PatternBlock>& blocks() const { return blocks_; }
    const std::vector<int>& degree_sequence() const { return degree_seq_; }
    int min_degree() const { return min_deg_; }
    int max_degree() const { return max_deg_; }

    /// Any embedding of a template sits within this distance of the anchors
    /// (minimum over the two). nullopt when some template has a component
    /// containing neither anchor, so no locality bound exists.
    std::optional<int> anchor_radius() const { return anchor_radius_; }

private:
    Graph h_;
    std::vector<AnchoredTemplate> templates_;
    std::vector<PatternBlock> blocks_;
    std::vector<int> degree_seq_;
    int min_deg_ = 0;
    int max_deg_ = 0;
    std::optional<int> anchor_radius_;
};

/// Completion queries against one fixed host graph. Caches host degrees and,
/// for every template block, the host vertices each block vertex can map to.
/// Answers are shared between pairs that differ by swapping twin host
/// vertices. Build one per round and share it between threads.
class CompletionOracle {
public:
    CompletionOracle(const Graph& host, const Pattern& pattern);

    /// As above, reusing domains computed on host minus the added edges.
    /// Domains only grow with the host, and a block with no embedding through
    /// an added edge keeps its old ones.
    CompletionOracle(const Graph& host, const Pattern& pattern, const BlockDomains& previous,
                     std::span<const Edge> added);

    const BlockDomains& domains() const { return domains_; }

    /// {u, v} must be a non-edge with u != v (ArgumentError otherwise).
    bool completes(int u, int v) const { return find(u, v).has_value(); }
    std::optional<AnchoredEmbedding> find(int u, int v) const;

private:
    std::optional<AnchoredEmbedding> search(int u, int v) const;

    const Graph& host_;
    const Pattern& pattern_;
    std::shared_ptr<const detail::HostIndex> index_;
    std::shared_ptr<detail::QueryCache> cache_;
    BlockDomains domains_;
    std::vector<std::vector<VertexSet>> allowed_; ///< per template, per pattern vertex; empty when unrestricted
};

/// n_H(G + uv) > n_H(G), decided by anchored embedding search.
bool completes_copy(const Graph& g, const Pattern& p, int u, int v);
std::optional<AnchoredEmbedding> find_completion(const Graph& g, const Pattern& p, int u, int v);

/// Some injective map sends every edge of f onto an edge of g.
bool contains(const Graph& g, const Graph& f);
std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& f);

} // namespace hboot
