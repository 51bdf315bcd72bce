#include "hboot/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hboot {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw ArgumentError("graph order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVertices) + "]");
    rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto& e : edges)
        add_edge(e);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.rows_[v] = VertexSet::prefix(n);
        g.rows_[v].reset(v);
    }
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (const auto& r : rows_)
        twice += r.count();
    return twice / 2;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw ArgumentError("loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!rows_[u].test(v))
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
        d[v] = rows_[v].count();
    return d;
}

int Graph::min_degree() const
{
    auto d = degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

int Graph::max_degree() const
{
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool Graph::is_subgraph_of(const Graph& other) const
{
    if (other.n_ != n_)
        return false;
    for (int v = 0; v < n_; ++v)
        if (!rows_[v].is_subset_of(other.rows_[v]))
            return false;
    return true;
}

Graph Graph::relabeled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw ArgumentError("permutation length does not match graph order");
    Graph g(n_);
    for (const auto& e : edges())
        g.add_edge(perm[e.u], perm[e.v]);
    return g;
}

Graph induced(const Graph& g, std::span<const int> vertices)
{
    std::vector<int> members(vertices.begin(), vertices.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members)
        if (v < 0 || v >= g.order())
            throw ArgumentError("induced: vertex " + std::to_string(v) + " out of range");
    Graph h(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph induced(const Graph& g, const VertexSet& vertices)
{
    auto m = vertices.members();
    return induced(g, std::span<const int>(m));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (const auto& e : a.edges())
        g.add_edge(e);
    for (const auto& e : b.edges())
        g.add_edge(e.u + a.order(), e.v + a.order());
    return g;
}

std::optional<Bipartition> is_bipartite(const Graph& g)
{
    const int n = g.order();
    Bipartition b;
    b.side.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (b.side[s] != -1)
            continue;
        b.side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            bool clash = false;
            g.neighbours(u).for_each([&](int v) {
                if (b.side[v] == -1) {
                    b.side[v] = 1 - b.side[u];
                    queue.push_back(v);
                } else if (b.side[v] == b.side[u]) {
                    clash = true;
                }
            });
            if (clash)
                return std::nullopt;
        }
    }
    return b;
}

std::vector<std::vector<int>> components(const Graph& g)
{
    std::vector<std::vector<int>> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.set(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbours(v); });
            frontier = next - comp;
        }
        unseen -= comp;
        out.push_back(comp.members());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || components(g).size() == 1;
}

std::vector<int> distances(const Graph& g, int source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen;
    VertexSet frontier;
    frontier.set(source);
    for (int d = 0; !frontier.empty(); ++d) {
        frontier.for_each([&](int v) { dist[v] = d; });
        seen |= frontier;
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbours(v); });
        frontier = next - seen;
    }
    return dist;
}

int diameter(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        for (int d : distances(g, v)) {
            if (d < 0)
                return -1;
            best = std::max(best, d);
        }
    return best;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, capped at limit.
// Vertex v is split into in = 2v and out = 2v + 1 with unit capacity between.
int disjoint_paths(const Graph& g, int s, int t, int limit)
{
    const int n = g.order();
    const int nodes = 2 * n;
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
    auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
    for (int v = 0; v < n; ++v)
        at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
    for (const auto& e : g.edges()) {
        at(2 * e.u + 1, 2 * e.v) = kInf;
        at(2 * e.v + 1, 2 * e.u) = kInf;
    }
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    while (flow < limit) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[sink] == -1) {
            int a = q.front();
            q.pop();
            for (int b = 0; b < nodes; ++b)
                if (parent[b] == -1 && at(a, b) > 0) {
                    parent[b] = a;
                    q.push(b);
                }
        }
        if (parent[sink] == -1)
            break;
        for (int b = sink; b != source; b = parent[b]) {
            at(parent[b], b) -= 1;
            at(b, parent[b]) += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

int vertex_connectivity(const Graph& g)
{
    const int n = g.order();
    if (n < 2)
        throw ArgumentError("vertex_connectivity needs at least 2 vertices");
    int best = n - 1;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t)
            if (!g.adjacent(s, t))
                best = std::min(best, disjoint_paths(g, s, t, best));
    return best;
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::string to_string(const Edge& e)
{
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

} // namespace hboot
