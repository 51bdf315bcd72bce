#pragma once

#include "hboot/graph.hpp"
#include "hboot/pattern.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hboot {

using EdgeBatch = std::vector<Edge>;

/// Full record of one H-process G_0 = start, G_1, ..., G_tau.
struct Trajectory {
    Graph start;
    Graph pattern_graph;
    std::vector<EdgeBatch> rounds; ///< rounds[i - 1] = E(G_i) \ E(G_{i-1}), sorted
    int tau = 0;
    Graph final_graph;
    bool truncated = false; ///< tau exceeded max_rounds; final_graph is G_max_rounds

    /// G_i for 0 <= i <= rounds.size().
    Graph graph_at(int i) const;
};

struct RunOptions {
    /// Largest tau accepted before the run is marked truncated; 0 picks
    /// C(n,2) + 1, which no process can exceed.
    std::int64_t max_rounds = 0;
    int jobs = 1;
};

/// All non-edges of g that complete a copy of p, evaluated simultaneously
/// against g. Sorted; identical for every jobs value.
EdgeBatch step(const Graph& g, const Pattern& p, int jobs = 1);

/// Only the listed candidate pairs (non-edges of g) are tested.
EdgeBatch step_candidates(const Graph& g, const Pattern& p, const std::vector<Edge>& candidates, int jobs = 1);

Trajectory run(const Graph& start, const Pattern& p, const RunOptions& options = {});

/// Same trajectory as run(). From round 2 on, only pairs with an endpoint
/// within the pattern's anchor radius of an edge added in the previous round
/// are tested; falls back to full rounds when the pattern has no radius.
Trajectory run_frontier(const Graph& start, const Pattern& p, const RunOptions& options = {});

bool is_stable(const Graph& g, const Pattern& p, int jobs = 1);

/// The h-process on h itself ends at the complete graph.
bool is_self_percolating(const Graph& h);

} // namespace hboot
