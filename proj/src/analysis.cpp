#include "hboot/analysis.hpp"

#include "hboot/canonical.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace hboot {

namespace {

// Canonical representatives keyed by canonical form, in form order.
using ClassMap = std::map<CanonicalForm, Graph>;

std::vector<Graph> values(const ClassMap& classes)
{
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (const auto& [form, g] : classes)
        out.push_back(g);
    return out;
}

void insert_class(ClassMap& classes, const Graph& g)
{
    auto form = canonical_form(g);
    if (classes.contains(form))
        return;
    std::vector<int> perm(form.order.size());
    for (std::size_t k = 0; k < form.order.size(); ++k)
        perm[form.order[k]] = static_cast<int>(k);
    classes.emplace(std::move(form), g.relabeled(perm));
}

Graph with_new_vertex(const Graph& g, unsigned mask)
{
    const int n = g.order();
    Graph out(n + 1);
    for (const auto& e : g.edges())
        out.add_edge(e);
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v))
            out.add_edge(v, n);
    return out;
}

int running_time(const Graph& g, const std::optional<Pattern>& p)
{
    if (!p)
        return 0;
    return run(g, *p).tau;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n)
{
    if (n < 0 || n > kMaxEnumerationOrder)
        throw ArgumentError("built-in enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                            "; supply a graph6 stream for larger n");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        ClassMap classes;
        for (const auto& g : level)
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask)
                insert_class(classes, with_new_vertex(g, mask));
        level = values(classes);
    }
    return level;
}

std::vector<Graph> enumerate_trees(int t)
{
    if (t < 1 || t > 16)
        throw ArgumentError("tree enumeration supports 1 <= t <= 16");
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= t; ++k) {
        ClassMap classes;
        for (const auto& g : level)
            for (int v = 0; v < k - 1; ++v)
                insert_class(classes, with_new_vertex(g, 1u << v));
        level = values(classes);
    }
    return level;
}

SearchReport exhaustive_max_running_time(const Graph& h, int n, int jobs)
{
    if (n > kMaxEnumerationOrder)
        throw ArgumentError("exhaustive search over n = " + std::to_string(n) + " needs a graph6 stream (built-in limit " +
                            std::to_string(kMaxEnumerationOrder) + ")");
    const auto graphs = enumerate_graphs(n);
    return exhaustive_max_running_time(h, n, graphs, jobs);
}

SearchReport exhaustive_max_running_time(const Graph& h, int n, std::span<const Graph> graphs, int jobs)
{
    for (const auto& g : graphs)
        if (g.order() != n)
            throw ArgumentError("search input has a graph of order " + std::to_string(g.order()) + ", expected " +
                                std::to_string(n));
    std::optional<Pattern> pattern;
    if (h.size() > 0)
        pattern = Pattern::compile(h);

    std::vector<int> taus(graphs.size());
    const std::size_t total = graphs.size();
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(total, 1));
    {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = w; i < total; i += workers)
                    taus[i] = running_time(graphs[i], pattern);
            });
        }
    }

    SearchReport report;
    report.n = n;
    report.class_count = static_cast<std::int64_t>(total);
    for (int tau : taus)
        report.max_tau = std::max(report.max_tau, tau);
    ClassMap best;
    for (std::size_t i = 0; i < total; ++i) {
        if (taus[i] != report.max_tau)
            continue;
        insert_class(best, graphs[i]);
        if (best.size() > kMaxWitnesses)
            best.erase(std::prev(best.end()));
    }
    report.witnesses = values(best);
    return report;
}

std::vector<int> rooted_cover(const Graph& t, int z)
{
    if (!is_tree(t))
        throw ArgumentError("rooted_cover: input is not a tree");
    if (z < 0 || z >= t.order())
        throw ArgumentError("rooted_cover: root out of range");
    if (t.degree(z) <= 1)
        throw ArgumentError("rooted_cover: root " + std::to_string(z) + " is a leaf");

    const int n = t.order();
    const auto depth = distances(t, z);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
    for (int v = 0; v < n; ++v)
        t.neighbours(v).for_each([&](int w) {
            if (depth[w] == depth[v] - 1)
                parent[v] = w;
        });

    // Cost (size, total depth), compared lexicographically; in[v] has v in
    // the cover, out[v] does not (so every child is in).
    using Cost = std::pair<int, int>;
    auto add = [](Cost a, Cost b) { return Cost{a.first + b.first, a.second + b.second}; };
    std::vector<Cost> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    for (int v : order) {
        in[v] = {1, depth[v]};
        out[v] = {0, 0};
        t.neighbours(v).for_each([&](int c) {
            if (c == parent[v])
                return;
            in[v] = add(in[v], std::min(in[c], out[c]));
            out[v] = add(out[v], in[c]);
        });
    }

    std::vector<int> cover;
    std::vector<int> stack{z};
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    chosen[z] = in[z] < out[z];
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (chosen[v])
            cover.push_back(v);
        t.neighbours(v).for_each([&](int c) {
            if (c == parent[v])
                return;
            chosen[c] = chosen[v] ? in[c] < out[c] : true;
            stack.push_back(c);
        });
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

int tree_bound(int t)
{
    if (t < 2)
        throw ArgumentError("tree_bound: t must be at least 2");
    return (t * t + 6 * t + 60) / 8;
}

TreeParams tree_params(const Graph& t, int z)
{
    TreeParams p;
    p.root = z;
    p.cover = rooted_cover(t, z);
    const int k = static_cast<int>(p.cover.size());
    if (k > kMaxEnumerationOrder)
        throw ArgumentError("tree_params: cover has " + std::to_string(k) +
                            " vertices; mu needs exhaustive search, limited to " +
                            std::to_string(kMaxEnumerationOrder));
    const Graph forest = induced(t, p.cover);
    p.mu = forest.size() == 0 ? 0 : exhaustive_max_running_time(forest, k).max_tau;

    VertexSet in_cover;
    for (int u : p.cover)
        in_cover.set(u);
    p.delta = t.order();
    for (int u : p.cover)
        p.delta = std::min(p.delta, (t.neighbours(u) - in_cover).count());

    const auto d = distances(t, z);
    p.height = *std::max_element(d.begin(), d.end());
    p.i_star = 1 + 3 * ((p.height + 1) / 2) + p.mu + p.delta;
    p.bound = tree_bound(t.order());
    return p;
}

SimulationCertificate verify_simulation(const Trajectory& outer, const Trajectory& inner, std::span<const int> subset)
{
    if (outer.truncated || inner.truncated)
        throw ArgumentError("verify_simulation: trajectories must be complete (not truncated)");
    const int k = inner.start.order();
    if (static_cast<int>(subset.size()) != k)
        throw ArgumentError("verify_simulation: subset has " + std::to_string(subset.size()) +
                            " vertices but the inner start has " + std::to_string(k));
    VertexSet seen;
    for (int v : subset) {
        if (v < 0 || v >= outer.start.order())
            throw ArgumentError("verify_simulation: subset vertex " + std::to_string(v) + " out of range");
        if (seen.test(v))
            throw ArgumentError("verify_simulation: subset repeats vertex " + std::to_string(v));
        seen.set(v);
    }

    SimulationCertificate cert;
    cert.tau_inner = inner.tau;
    cert.tau_outer = outer.tau;
    for (int i = 0; i < k && !cert.first_violation; ++i)
        for (int j = i + 1; j < k; ++j)
            if (outer.start.adjacent(subset[i], subset[j]) != inner.start.adjacent(i, j)) {
                cert.first_violation = SimulationViolation{0, Edge(subset[i], subset[j])};
                break;
            }

    const int rounds = std::max(outer.tau, inner.tau);
    for (int r = 0; r < rounds && !cert.first_violation; ++r) {
        EdgeBatch mapped;
        if (r < inner.tau)
            for (const auto& e : inner.rounds[r])
                mapped.emplace_back(subset[e.u], subset[e.v]);
        std::sort(mapped.begin(), mapped.end());
        EdgeBatch actual;
        if (r < outer.tau)
            actual = outer.rounds[r];
        std::sort(actual.begin(), actual.end());
        if (actual == mapped)
            continue;
        EdgeBatch diff;
        std::set_symmetric_difference(actual.begin(), actual.end(), mapped.begin(), mapped.end(),
                                      std::back_inserter(diff));
        cert.first_violation = SimulationViolation{r + 1, diff.front()};
    }
    cert.ok = !cert.first_violation;
    return cert;
}

CopySequence extract_copy_sequence(const Trajectory& traj, const Pattern& p)
{
    CopySequence seq;
    const int tau = traj.tau;
    if (tau == 0)
        return seq;
    seq.vertex_sets.resize(static_cast<std::size_t>(tau));
    seq.completing_edges.resize(static_cast<std::size_t>(tau));

    Edge completing = traj.rounds[tau - 1].front();
    for (int i = tau; i >= 1; --i) {
        const Graph before = traj.graph_at(i - 1);
        const auto emb = find_completion(before, p, completing.u, completing.v);
        if (!emb)
            throw ArgumentError("extract_copy_sequence: edge " + to_string(completing) + " of round " +
                                std::to_string(i) + " completes no copy; trajectory is inconsistent");
        seq.vertex_sets[i - 1] = emb->image_vertices();
        seq.completing_edges[i - 1] = completing;
        if (i == 1)
            break;
        const auto& previous = traj.rounds[i - 2];
        std::optional<Edge> next;
        for (const auto& e : emb->image_edges(p.graph())) {
            if (e == completing)
                continue;
            if (std::binary_search(previous.begin(), previous.end(), e)) {
                next = e;
                break;
            }
        }
        if (!next)
            throw ArgumentError("extract_copy_sequence: copy completed in round " + std::to_string(i) +
                                " has no edge from round " + std::to_string(i - 1));
        completing = *next;
    }
    return seq;
}

std::optional<Edge> girth_theorem_applicable(const Graph& h)
{
    if (h.size() == 0)
        throw ArgumentError("girth_theorem_applicable: pattern has no edges");
    if (!is_self_percolating(h))
        return std::nullopt;
    for (const auto& e : h.edges()) {
        Graph minus = h;
        minus.remove_edge(e);
        if (vertex_connectivity(minus) <= 2)
            return e;
    }
    return std::nullopt;
}

std::optional<int> first_non_bipartite_round(const Trajectory& traj)
{
    Graph g = traj.start;
    if (!is_bipartite(g))
        return 0;
    for (std::size_t r = 0; r < traj.rounds.size(); ++r) {
        for (const auto& e : traj.rounds[r])
            g.add_edge(e);
        if (!is_bipartite(g))
            return static_cast<int>(r + 1);
    }
    return std::nullopt;
}

SwapAudit swap_isomorphism_audit(const Graph& h)
{
    SwapAudit audit;
    const auto target = canonical_form(h);
    for (const auto& removed : h.edges()) {
        for (const auto& added : h.non_edges()) {
            Graph g = h;
            g.remove_edge(removed);
            g.add_edge(added);
            ++audit.checks;
            if (!audit.failure && canonical_form(g) == target)
                audit.failure = std::pair{removed, added};
        }
    }
    return audit;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                g.add_edge(u, v);
    return g;
}

int tree_centre(const Graph& t)
{
    if (!is_tree(t))
        throw ArgumentError("tree_centre: graph is not a tree");
    int best = 0;
    int best_ecc = -1;
    for (int v = 0; v < t.order(); ++v) {
        const auto d = distances(t, v);
        const int ecc = *std::max_element(d.begin(), d.end());
        if (best_ecc < 0 || ecc < best_ecc) {
            best = v;
            best_ecc = ecc;
        }
    }
    return best;
}

} // namespace hboot
