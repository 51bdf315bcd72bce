#include "hboot/process.hpp"

#include <algorithm>
#include <thread>

namespace hboot {

namespace {

std::int64_t pair_count(int n)
{
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Tests candidates[i] for i in [begin, end), appending hits in order.
void scan(const CompletionOracle& oracle, const std::vector<Edge>& candidates, std::size_t begin, std::size_t end,
          EdgeBatch& out)
{
    for (std::size_t i = begin; i < end; ++i)
        if (oracle.completes(candidates[i].u, candidates[i].v))
            out.push_back(candidates[i]);
}

EdgeBatch scan_all(const CompletionOracle& oracle, const std::vector<Edge>& candidates, int jobs)
{
    EdgeBatch out;
    const std::size_t total = candidates.size();
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(total, 1));
    if (workers == 1) {
        scan(oracle, candidates, 0, total, out);
        return out;
    }
    // Contiguous chunks keep the concatenation in candidate order.
    std::vector<EdgeBatch> parts(workers);
    {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = total * w / workers;
            const std::size_t end = total * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { scan(oracle, candidates, begin, end, parts[w]); });
        }
    }
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

VertexSet ball(const Graph& g, const VertexSet& sources, int radius)
{
    VertexSet seen = sources;
    VertexSet frontier = sources;
    for (int d = 0; d < radius && !frontier.empty(); ++d) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbours(v); });
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

Trajectory run_impl(const Graph& start, const Pattern& p, const RunOptions& options, bool frontier)
{
    Trajectory t;
    t.start = start;
    t.pattern_graph = p.graph();
    const std::int64_t limit = options.max_rounds > 0 ? options.max_rounds : pair_count(start.order()) + 1;
    const bool use_frontier = frontier && p.anchor_radius().has_value();

    Graph current = start;
    BlockDomains domains;
    while (true) {
        EdgeBatch batch;
        if (!frontier) {
            batch = step(current, p, options.jobs);
        } else if (!use_frontier || t.rounds.empty()) {
            const EdgeBatch none;
            const CompletionOracle oracle(current, p, domains, t.rounds.empty() ? none : t.rounds.back());
            batch = scan_all(oracle, current.non_edges(), options.jobs);
            domains = oracle.domains();
        } else {
            // Any pair that became completable this round needs an edge from
            // the previous batch inside its embedding, hence near an anchor.
            VertexSet sources;
            for (const auto& e : t.rounds.back()) {
                sources.set(e.u);
                sources.set(e.v);
            }
            const VertexSet near = ball(current, sources, *p.anchor_radius());
            std::vector<Edge> candidates;
            for (int u = 0; u < current.order(); ++u)
                for (int v = u + 1; v < current.order(); ++v)
                    if (!current.adjacent(u, v) && (near.test(u) || near.test(v)))
                        candidates.emplace_back(u, v);
            // Hits are re-tested against the full graph by the oracle, so the
            // restriction only drops pairs, never admits one.
            const CompletionOracle oracle(current, p, domains, t.rounds.back());
            batch = scan_all(oracle, candidates, options.jobs);
            domains = oracle.domains();
        }
        if (batch.empty())
            break;
        if (static_cast<std::int64_t>(t.rounds.size()) >= limit) {
            t.truncated = true;
            break;
        }
        for (const auto& e : batch)
            current.add_edge(e);
        t.rounds.push_back(std::move(batch));
    }
    t.tau = static_cast<int>(t.rounds.size());
    t.final_graph = std::move(current);
    return t;
}

} // namespace

Graph Trajectory::graph_at(int i) const
{
    if (i < 0 || i > static_cast<int>(rounds.size()))
        throw ArgumentError("trajectory has no round " + std::to_string(i));
    Graph g = start;
    for (int r = 0; r < i; ++r)
        for (const auto& e : rounds[r])
            g.add_edge(e);
    return g;
}

EdgeBatch step_candidates(const Graph& g, const Pattern& p, const std::vector<Edge>& candidates, int jobs)
{
    return scan_all(CompletionOracle(g, p), candidates, jobs);
}

EdgeBatch step(const Graph& g, const Pattern& p, int jobs)
{
    return step_candidates(g, p, g.non_edges(), jobs);
}

Trajectory run(const Graph& start, const Pattern& p, const RunOptions& options)
{
    return run_impl(start, p, options, false);
}

Trajectory run_frontier(const Graph& start, const Pattern& p, const RunOptions& options)
{
    return run_impl(start, p, options, true);
}

bool is_stable(const Graph& g, const Pattern& p, int jobs)
{
    if (jobs > 1)
        return step(g, p, jobs).empty();
    const CompletionOracle oracle(g, p);
    for (const auto& e : g.non_edges())
        if (oracle.completes(e.u, e.v))
            return false;
    return true;
}

bool is_self_percolating(const Graph& h)
{
    const auto p = Pattern::compile(h);
    return run(h, p).final_graph.is_complete();
}

} // namespace hboot
