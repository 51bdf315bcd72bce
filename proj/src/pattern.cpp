#include "hboot/pattern.hpp"

#include "hboot/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace hboot {

SearchPlan make_plan(const Graph& f, std::span<const int> seeds)
{
    const int k = f.order();
    SearchPlan plan;
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    auto place = [&](int x) {
        pos[x] = static_cast<int>(plan.order.size());
        plan.order.push_back(x);
    };
    for (int s : seeds)
        place(s);
    while (static_cast<int>(plan.order.size()) < k) {
        int best = -1;
        std::tuple<int, int, int> best_key{-1, -1, 0};
        for (int x = 0; x < k; ++x) {
            if (pos[x] != -1)
                continue;
            int placed = 0;
            f.neighbours(x).for_each([&](int y) { placed += pos[y] != -1 ? 1 : 0; });
            std::tuple<int, int, int> key{placed, f.degree(x), -x};
            if (best == -1 || key > best_key) {
                best = x;
                best_key = key;
            }
        }
        place(best);
    }
    plan.back.resize(static_cast<std::size_t>(k));
    plan.ahead.resize(static_cast<std::size_t>(k));
    plan.degree.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int x = plan.order[i];
        plan.degree[i] = f.degree(x);
        f.neighbours(x).for_each([&](int y) {
            if (pos[y] < i)
                plan.back[i].push_back(pos[y]);
            else
                plan.ahead[i].push_back(pos[y]);
        });
        std::sort(plan.back[i].begin(), plan.back[i].end());
        std::sort(plan.ahead[i].begin(), plan.ahead[i].end());
    }
    return plan;
}

namespace detail {

// Per-host data shared by every search against that host.
struct HostIndex {
    explicit HostIndex(const Graph& g) : host(g), degrees(g.degrees())
    {
        const int n = g.order();
        const int max_deg = n == 0 ? 0 : g.max_degree();
        at_least.resize(static_cast<std::size_t>(max_deg + 2));
        for (int d = 0; d <= max_deg + 1; ++d)
            for (int c = 0; c < n; ++c)
                if (degrees[c] >= d)
                    at_least[d].set(c);
        // Twins: equal neighbourhoods apart from each other. Swapping two
        // twins is an automorphism.
        twin.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            twin[v] = v;
            for (int u = 0; u < v; ++u) {
                if (twin[u] != u)
                    continue;
                VertexSet nu = g.neighbours(u);
                VertexSet nv = g.neighbours(v);
                nu.reset(v);
                nv.reset(u);
                if (nu == nv) {
                    twin[v] = u;
                    break;
                }
            }
        }
        // Greedy triangle hubs: each lies on at least half of the triangles
        // left after removing the earlier ones.
        VertexSet left = g.vertices();
        while (static_cast<int>(hubs.size()) < kMaxHubs) {
            long total = 0;
            long best_count = 0;
            int best = -1;
            for (int v = left.first(); v != -1; v = left.next(v)) {
                const VertexSet around = g.neighbours(v) & left;
                long twice = 0;
                around.for_each([&](int w) { twice += (g.neighbours(w) & around).count(); });
                total += twice / 2;
                if (twice / 2 > best_count) {
                    best_count = twice / 2;
                    best = v;
                }
            }
            // total counts every triangle three times
            if (best == -1 || 2 * 3 * best_count < total)
                break;
            hubs.push_back(best);
            left.reset(best);
        }
    }

    const VertexSet& degree_at_least(int d) const
    {
        return at_least[static_cast<std::size_t>(std::min<int>(d, static_cast<int>(at_least.size()) - 1))];
    }

    static constexpr int kMaxHubs = 4;

    const Graph& host;
    std::vector<int> degrees;
    std::vector<VertexSet> at_least;
    std::vector<int> twin; ///< least vertex of the twin class
    std::vector<int> hubs;
};

struct QueryCache {
    struct Entry {
        Edge pair;
        std::optional<AnchoredEmbedding> found;
    };
    std::mutex lock;
    std::map<Edge, Entry> entries; ///< by twin classes of the pair
};

} // namespace detail

namespace {

using detail::HostIndex;

// Forward-checking backtracking with conflict-directed backjumping.
//
// The next pattern vertex is the one with the fewest host candidates among
// those adjacent to placed vertices, ties broken by the static plan. Every
// frontier domain is recomputed at every node. A failed subtree reports the
// placed pattern vertices whose images caused it; levels outside that set
// are skipped on the way back. When a placement splits the unplaced part of
// the pattern into more components, each component is first solved alone.
// Every unplaced component must also fit inside one connected component of
// the free host that touches all of its placed neighbours.
class Embedder {
public:
    Embedder(const HostIndex& index, const Graph& f, const SearchPlan& plan, std::span<const VertexSet> allowed = {},
             long budget = -1)
        : budget_(budget), index_(index), host_(index.host), f_(f), allowed_(allowed), k_(f.order()), map_(static_cast<std::size_t>(f.order()), -1),
          inv_(static_cast<std::size_t>(index.host.order()), -1), rank_(static_cast<std::size_t>(f.order()))
    {
        for (int i = 0; i < k_; ++i)
            rank_[plan.order[i]] = i;
        tri_.resize(static_cast<std::size_t>(k_));
        for (int x = 0; x < k_; ++x)
            f.neighbours(x).for_each([&](int y) {
                if ((f.neighbours(x) & f.neighbours(y)).intersects(f.vertices()))
                    tri_[x].push_back(y);
            });
    }

    // fixed lists (pattern vertex, host vertex) pairs assigned up front. On
    // success map()[x] is the host image of pattern vertex x.
    bool run(std::span<const std::pair<int, int>> fixed)
    {
        VertexSet todo = f_.vertices();
        for (const auto& [x, c] : fixed) {
            if (used_.test(c) || !index_.degree_at_least(f_.degree(x)).test(c) || (!allowed_.empty() && !allowed_[x].test(c)))
                return false;
            bool ok = true;
            f_.neighbours(x).for_each([&](int y) {
                if (map_[y] != -1 && !host_.adjacent(map_[y], c))
                    ok = false;
            });
            if (!ok)
                return false;
            assign(x, c);
            todo.reset(x);
        }
        return extend(todo, 1).success;
    }

    const std::vector<int>& map() const { return map_; }

    /// The node budget ran out before the search finished.
    bool exhausted() const { return exhausted_; }

private:
    struct Outcome {
        bool success = false;
        VertexSet conflict; ///< placed pattern vertices responsible for a failure
    };

    void assign(int x, int c)
    {
        map_[x] = c;
        inv_[c] = x;
        used_.set(c);
        placed_.set(x);
    }

    void unassign(int x)
    {
        used_.reset(map_[x]);
        inv_[map_[x]] = -1;
        map_[x] = -1;
        placed_.reset(x);
    }

    bool piece_has_triangle(const VertexSet& piece) const
    {
        for (int x = piece.first(); x != -1; x = piece.next(x))
            for (int y : tri_[x])
                if (piece.test(y) && (f_.neighbours(x) & f_.neighbours(y)).intersects(piece))
                    return true;
        return false;
    }

    bool has_triangle(const VertexSet& region) const
    {
        for (int c = region.first(); c != -1; c = region.next(c)) {
            const VertexSet around = host_.neighbours(c) & region;
            for (int w = around.first(); w != -1; w = around.next(w))
                if (host_.neighbours(w).intersects(around))
                    return true;
        }
        return false;
    }

    // Some component of the free host holds room for the whole piece and
    // touches the free neighbourhood of every placed vertex next to it.
    bool piece_fits(const VertexSet& piece) const
    {
        VertexSet attached;
        piece.for_each([&](int x) { attached |= f_.neighbours(x); });
        attached &= placed_;
        if (attached.empty())
            return true;
        VertexSet free = host_.vertices();
        free -= used_;
        VertexSet seeds = host_.neighbours(map_[attached.first()]) & free;
        const int need = piece.count();
        int triangle = -1;
        while (!seeds.empty()) {
            VertexSet region;
            VertexSet frontier;
            frontier.set(seeds.first());
            while (!frontier.empty()) {
                region |= frontier;
                VertexSet next;
                frontier.for_each([&](int v) { next |= host_.neighbours(v); });
                next &= free;
                next -= region;
                frontier = next;
            }
            seeds -= region;
            if (region.count() < need)
                continue;
            bool touches = true;
            for (int y = attached.first(); y != -1 && touches; y = attached.next(y))
                touches = host_.neighbours(map_[y]).intersects(region);
            if (!touches)
                continue;
            if (triangle == -1)
                triangle = piece_has_triangle(piece) ? 1 : 0;
            if (triangle == 0 || has_triangle(region))
                return true;
        }
        return false;
    }

    VertexSet adjacency_domain(int x) const
    {
        VertexSet dom = index_.degree_at_least(f_.degree(x));
        if (!allowed_.empty())
            dom &= allowed_[x];
        f_.neighbours(x).for_each([&](int y) {
            if (map_[y] != -1)
                dom &= host_.neighbours(map_[y]);
        });
        return dom;
    }

    // Placed y in a triangle x y w with w unplaced.
    bool open_triangle(int x, int y) const
    {
        if (map_[y] == -1)
            return false;
        bool open = false;
        (f_.neighbours(x) & f_.neighbours(y)).for_each([&](int w) { open = open || map_[w] == -1; });
        return open;
    }

    VertexSet domain(int x) const
    {
        VertexSet dom = adjacency_domain(x);
        dom -= used_;
        // A triangle x y w with only y placed needs a free common neighbour
        // of the images of x and y.
        for (int y : tri_[x]) {
            if (!open_triangle(x, y))
                continue;
            VertexSet room = host_.neighbours(map_[y]);
            room -= used_;
            for (int c = dom.first(); c != -1; c = dom.next(c))
                if (!host_.neighbours(c).intersects(room))
                    dom.reset(c);
        }
        return dom;
    }

    void add_owners(VertexSet& out, const VertexSet& hosts) const
    {
        hosts.for_each([&](int h) {
            if (inv_[h] >= 0)
                out.set(inv_[h]);
        });
    }

    // Branch on which pattern vertex takes host vertex h, if any. Conflicts
    // inside do not record the decision, so they stop here.
    Outcome branch_on_host(int h, const VertexSet& todo, int parts)
    {
        for (int x = todo.first(); x != -1; x = todo.next(x)) {
            if (!domain(x).test(h))
                continue;
            VertexSet rest = todo;
            rest.reset(x);
            assign(x, h);
            auto sub = extend(rest, parts);
            if (sub.success)
                return sub;
            unassign(x);
            if (exhausted_)
                return {false, placed_};
        }
        used_.set(h);
        inv_[h] = kExcluded;
        auto sub = extend(todo, parts);
        used_.reset(h);
        inv_[h] = -1;
        if (sub.success)
            return sub;
        return {false, placed_};
    }

    // Placed pattern vertices that removed candidates from domain(x).
    VertexSet reasons(int x) const
    {
        VertexSet out;
        f_.neighbours(x).for_each([&](int y) {
            if (map_[y] != -1)
                out.set(y);
        });
        VertexSet dom = adjacency_domain(x);
        add_owners(out, dom & used_);
        dom -= used_;
        for (int y : tri_[x]) {
            if (!open_triangle(x, y))
                continue;
            const VertexSet& ny = host_.neighbours(map_[y]);
            VertexSet room = ny;
            room -= used_;
            for (int c = dom.first(); c != -1; c = dom.next(c)) {
                if (host_.neighbours(c).intersects(room))
                    continue;
                out.set(y);
                add_owners(out, host_.neighbours(c) & ny & used_);
                dom.reset(c);
            }
        }
        return out;
    }

    std::vector<VertexSet> split(const VertexSet& todo) const
    {
        std::vector<VertexSet> parts;
        VertexSet left = todo;
        while (!left.empty()) {
            VertexSet part;
            VertexSet frontier;
            frontier.set(left.first());
            while (!frontier.empty()) {
                part |= frontier;
                VertexSet next;
                frontier.for_each([&](int x) { next |= f_.neighbours(x); });
                next &= left;
                next -= part;
                frontier = next;
            }
            left -= part;
            parts.push_back(part);
        }
        return parts;
    }

    Outcome extend(const VertexSet& todo, int parent_parts)
    {
        if (todo.empty())
            return {true, {}};
        if (budget_ >= 0 && ++nodes_ > budget_) {
            exhausted_ = true;
            return {false, placed_};
        }
        int parts = parent_parts;
        if (todo.count() > 1) {
            const auto pieces = split(todo);
            for (const auto& piece : pieces)
                if (!piece_fits(piece))
                    return {false, placed_};
            parts = static_cast<int>(pieces.size());
            if (parts > parent_parts) {
                for (const auto& piece : pieces) {
                    auto alone = extend(piece, 1);
                    if (!alone.success)
                        return alone;
                    piece.for_each([&](int x) { unassign(x); });
                }
            }
        }

        // A free triangle hub is settled before any pattern vertex.
        for (int h : index_.hubs)
            if (!used_.test(h) && todo.count() > 2 && piece_has_triangle(todo))
                return branch_on_host(h, todo, parts);

        int best = -1;
        int best_count = 0;
        int best_links = 0;
        VertexSet best_dom;
        for (int x = todo.first(); x != -1; x = todo.next(x)) {
            int links = 0;
            f_.neighbours(x).for_each([&](int y) { links += map_[y] != -1 ? 1 : 0; });
            if (links == 0)
                continue;
            const VertexSet dom = domain(x);
            const int count = dom.count();
            if (count == 0)
                return {false, reasons(x)};
            if (best == -1 || count < best_count || (count == best_count && links > best_links) ||
                (count == best_count && links == best_links && rank_[x] < rank_[best])) {
                best = x;
                best_count = count;
                best_links = links;
                best_dom = dom;
            }
        }
        if (best == -1) {
            // No unplaced vertex touches a placed one: start a new component.
            for (int x = todo.first(); x != -1; x = todo.next(x))
                if (best == -1 || rank_[x] < rank_[best])
                    best = x;
            best_dom = domain(best);
        }

        VertexSet rest = todo;
        rest.reset(best);
        VertexSet conflict;
        // A twin of a failed free candidate fails the same way.
        VertexSet tried;
        for (int c = best_dom.first(); c != -1; c = best_dom.next(c)) {
            if (tried.test(index_.twin[c]))
                continue;
            tried.set(index_.twin[c]);
            assign(best, c);
            auto sub = extend(rest, parts);
            if (sub.success)
                return sub;
            unassign(best);
            if (!sub.conflict.test(best))
                return sub;
            sub.conflict.reset(best);
            conflict |= sub.conflict;
        }
        conflict |= reasons(best);
        return {false, conflict};
    }

    static constexpr int kExcluded = -2; ///< inv_ mark of a host vertex ruled out

    long budget_;
    long nodes_ = 0;
    bool exhausted_ = false;
    const HostIndex& index_;
    const Graph& host_;
    const Graph& f_;
    std::span<const VertexSet> allowed_;
    int k_;
    std::vector<int> map_;
    std::vector<int> inv_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> tri_; ///< neighbours sharing a triangle with x
    VertexSet used_;   ///< host vertices taken
    VertexSet placed_; ///< pattern vertices assigned
};

// Vertex sets of the biconnected components of g with at least three
// vertices.
std::vector<std::vector<int>> large_blocks(const Graph& g)
{
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    std::vector<std::vector<int>> out;
    int time = 0;
    auto visit = [&](auto&& self, int v, int parent) -> void {
        disc[v] = low[v] = time++;
        g.neighbours(v).for_each([&](int w) {
            if (disc[w] == -1) {
                stack.emplace_back(v, w);
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    VertexSet block;
                    Edge top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        block.set(top.u);
                        block.set(top.v);
                    } while (top != Edge(v, w));
                    if (block.count() >= 3)
                        out.push_back(block.members());
                }
            } else if (w != parent && disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        });
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1)
            visit(visit, v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

PatternBlock make_block(std::vector<int> vertices, Graph graph)
{
    PatternBlock b;
    b.plan = make_plan(graph, {});
    const int m = graph.order();
    b.orbit_rep.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        b.orbit_rep[i] = i;
        for (int j = 0; j < i; ++j) {
            if (b.orbit_rep[j] != j)
                continue;
            std::vector<int> ci(static_cast<std::size_t>(m), 0), cj(static_cast<std::size_t>(m), 0);
            ci[i] = 1;
            cj[j] = 1;
            if (find_isomorphism(graph, ci, graph, cj)) {
                b.orbit_rep[i] = j;
                break;
            }
        }
    }
    const auto orbits = edge_orbits(graph);
    b.edge_reps = orbits.representatives;
    b.edge_reversible = orbits.reversible;
    b.vertices = std::move(vertices);
    b.graph = std::move(graph);
    return b;
}

// Host vertices each block vertex reaches in some embedding of the block,
// starting from seed. Every image of a successful search is harvested, so
// only misses cost a search of their own. A search that runs out of budget
// keeps its candidate, which only weakens the restriction.
constexpr long kBlockBudget = 20000;

std::vector<VertexSet> block_domains(const HostIndex& index, const PatternBlock& block, std::vector<VertexSet> dom)
{
    const int m = block.graph.order();
    dom.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (block.orbit_rep[i] != i)
            continue;
        for (int c = 0; c < index.host.order(); ++c) {
            if (index.twin[c] != c || dom[i].test(c) || index.degrees[c] < block.graph.degree(i))
                continue;
            Embedder search(index, block.graph, block.plan, {}, kBlockBudget);
            const std::pair<int, int> fixed[] = {{i, c}};
            if (search.run(fixed))
                for (int j = 0; j < m; ++j)
                    dom[j].set(search.map()[j]);
            else if (search.exhausted())
                dom[i].set(c);
        }
    }
    const int n = index.host.order();
    for (int i = 0; i < m; ++i) {
        dom[i] = dom[block.orbit_rep[i]];
        for (int c = 0; c < n; ++c)
            if (dom[i].test(c))
                dom[i].set(index.twin[c]);
        for (int c = 0; c < n; ++c)
            if (dom[i].test(index.twin[c]))
                dom[i].set(c);
    }
    return dom;
}

// Some embedding of the block might use one of the added host edges.
bool block_meets(const HostIndex& index, const PatternBlock& block, std::span<const Edge> added)
{
    for (std::size_t r = 0; r < block.edge_reps.size(); ++r) {
        const Edge& f = block.edge_reps[r];
        for (const auto& e : added) {
            for (int o = 0; o < (block.edge_reversible[r] ? 1 : 2); ++o) {
                Embedder search(index, block.graph, block.plan, {}, kBlockBudget);
                const std::pair<int, int> fixed[] = {{f.u, o == 0 ? e.u : e.v}, {f.v, o == 0 ? e.v : e.u}};
                if (search.run(fixed) || search.exhausted())
                    return true;
            }
        }
    }
    return false;
}

std::optional<int> radius_from_anchors(const Graph& hm, const Edge& e)
{
    const auto da = distances(hm, e.u);
    const auto db = distances(hm, e.v);
    int radius = 0;
    for (int w = 0; w < hm.order(); ++w) {
        int best = -1;
        if (da[w] >= 0)
            best = da[w];
        if (db[w] >= 0 && (best < 0 || db[w] < best))
            best = db[w];
        if (best < 0)
            return std::nullopt;
        radius = std::max(radius, best);
    }
    return radius;
}

} // namespace

std::vector<Edge> AnchoredEmbedding::image_edges(const Graph& h) const
{
    std::vector<Edge> out;
    for (const auto& e : h.edges())
        out.emplace_back(map[e.u], map[e.v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> AnchoredEmbedding::image_vertices() const
{
    std::vector<int> out = map;
    std::sort(out.begin(), out.end());
    return out;
}

Pattern Pattern::compile(const Graph& h, bool reduce_orbits)
{
    if (h.size() == 0)
        throw ArgumentError("pattern must have at least one edge");
    Pattern p;
    p.h_ = h;
    p.degree_seq_ = h.degrees();
    std::sort(p.degree_seq_.begin(), p.degree_seq_.end());
    p.min_deg_ = p.degree_seq_.front();
    p.max_deg_ = p.degree_seq_.back();

    std::vector<Edge> reps;
    std::vector<bool> reversible;
    if (reduce_orbits) {
        auto orbits = edge_orbits(h);
        reps = orbits.representatives;
        reversible = orbits.reversible;
    } else {
        reps = h.edges();
        reversible.assign(reps.size(), false);
    }

    p.anchor_radius_ = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        AnchoredTemplate t;
        t.removed = reps[i];
        t.reversible = reversible[i];
        t.graph = h;
        t.graph.remove_edge(reps[i]);
        const int seeds[] = {reps[i].u, reps[i].v};
        t.plan = make_plan(t.graph, seeds);
        for (auto& vertices : large_blocks(t.graph)) {
            Graph bg = induced(t.graph, vertices);
            std::size_t found = 0;
            while (found < p.blocks_.size() &&
                   (p.blocks_[found].vertices != vertices || !(p.blocks_[found].graph == bg)))
                ++found;
            if (found == p.blocks_.size())
                p.blocks_.push_back(make_block(std::move(vertices), std::move(bg)));
            t.blocks.push_back(static_cast<int>(found));
        }
        auto r = radius_from_anchors(t.graph, reps[i]);
        if (!r || !p.anchor_radius_)
            p.anchor_radius_.reset();
        else
            p.anchor_radius_ = std::max(*p.anchor_radius_, *r);
        p.templates_.push_back(std::move(t));
    }
    return p;
}

CompletionOracle::CompletionOracle(const Graph& host, const Pattern& pattern)
    : CompletionOracle(host, pattern, {}, {})
{
}

CompletionOracle::CompletionOracle(const Graph& host, const Pattern& pattern, const BlockDomains& previous,
                                   std::span<const Edge> added)
    : host_(host), pattern_(pattern), index_(std::make_shared<const detail::HostIndex>(host)),
      cache_(std::make_shared<detail::QueryCache>())
{
    const auto& blocks = pattern.blocks();
    const auto& templates = pattern.templates();
    domains_.resize(blocks.size());
    allowed_.resize(templates.size());
    if (pattern.graph().order() > host.order())
        return;
    auto domain_of = [&](std::size_t b) -> const std::vector<VertexSet>& {
        if (domains_[b].empty()) {
            const bool reuse = b < previous.size() && !previous[b].empty();
            if (reuse && !block_meets(*index_, blocks[b], added))
                domains_[b] = previous[b];
            else
                domains_[b] = block_domains(*index_, blocks[b], reuse ? previous[b] : std::vector<VertexSet>{});
        }
        return domains_[b];
    };
    for (std::size_t t = 0; t < templates.size(); ++t) {
        if (templates[t].blocks.empty())
            continue;
        allowed_[t].assign(static_cast<std::size_t>(pattern.graph().order()), host.vertices());
        for (int b : templates[t].blocks) {
            const auto& dom = domain_of(static_cast<std::size_t>(b));
            const auto& vs = blocks[b].vertices;
            for (std::size_t i = 0; i < vs.size(); ++i)
                allowed_[t][vs[i]] &= dom[i];
        }
    }
}

std::optional<AnchoredEmbedding> CompletionOracle::find(int u, int v) const
{
    if (u < 0 || v < 0 || u >= host_.order() || v >= host_.order())
        throw ArgumentError("completion query: vertex out of range");
    if (u == v)
        throw ArgumentError("completion query: u == v");
    if (host_.adjacent(u, v))
        throw ArgumentError("completion query: " + to_string(Edge(u, v)) + " is already an edge");

    const int k = pattern_.graph().order();
    if (k > host_.order())
        return std::nullopt;

    const auto& twin = index_->twin;
    const Edge key(twin[u], twin[v]);
    {
        std::lock_guard<std::mutex> hold(cache_->lock);
        const auto hit = cache_->entries.find(key);
        if (hit != cache_->entries.end()) {
            const auto& entry = hit->second;
            if (!entry.found)
                return std::nullopt;
            // Move the stored pair onto {u, v} by swapping twins.
            int a = entry.pair.u;
            int b = entry.pair.v;
            if (twin[a] != twin[u])
                std::swap(a, b);
            std::vector<int> perm(static_cast<std::size_t>(host_.order()));
            for (int c = 0; c < host_.order(); ++c)
                perm[c] = c;
            auto then_swap = [&](int x, int y) {
                for (int& c : perm)
                    c = c == x ? y : c == y ? x : c;
            };
            then_swap(a, u);
            then_swap(perm[b], v);
            AnchoredEmbedding emb = *entry.found;
            for (int& c : emb.map)
                c = perm[c];
            return emb;
        }
    }
    const auto found = search(u, v);
    std::lock_guard<std::mutex> hold(cache_->lock);
    cache_->entries.emplace(key, detail::QueryCache::Entry{Edge(u, v), found});
    return found;
}

std::optional<AnchoredEmbedding> CompletionOracle::search(int u, int v) const
{
    for (std::size_t ti = 0; ti < pattern_.templates().size(); ++ti) {
        const auto& t = pattern_.templates()[ti];
        const int orientations = t.reversible ? 1 : 2;
        for (int o = 0; o < orientations; ++o) {
            const std::pair<int, int> fixed[] = {{t.removed.u, o == 0 ? u : v}, {t.removed.v, o == 0 ? v : u}};
            Embedder search(*index_, t.graph, t.plan, allowed_[ti]);
            if (search.run(fixed)) {
                AnchoredEmbedding emb;
                emb.map = search.map();
                emb.anchor_edge = t.removed;
                return emb;
            }
        }
    }
    return std::nullopt;
}

bool completes_copy(const Graph& g, const Pattern& p, int u, int v)
{
    return CompletionOracle(g, p).completes(u, v);
}

std::optional<AnchoredEmbedding> find_completion(const Graph& g, const Pattern& p, int u, int v)
{
    return CompletionOracle(g, p).find(u, v);
}

std::optional<std::vector<int>> find_embedding(const Graph& g, const Graph& f)
{
    const int k = f.order();
    if (k > g.order())
        return std::nullopt;
    const auto plan = make_plan(f, {});
    const HostIndex index(g);
    Embedder search(index, f, plan);
    if (!search.run({}))
        return std::nullopt;
    return search.map();
}

bool contains(const Graph& g, const Graph& f)
{
    return find_embedding(g, f).has_value();
}

} // namespace hboot
