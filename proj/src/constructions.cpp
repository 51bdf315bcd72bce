#include "hboot/constructions.hpp"

#include <numeric>

namespace hboot {

namespace {

std::vector<int> range(int begin, int end)
{
    std::vector<int> out(static_cast<std::size_t>(std::max(end - begin, 0)));
    std::iota(out.begin(), out.end(), begin);
    return out;
}

void add_clique(Graph& g, int begin, int end)
{
    for (int u = begin; u < end; ++u)
        for (int v = u + 1; v < end; ++v)
            g.add_edge(u, v);
}

// Copies g into host with every vertex shifted by offset.
void embed_shifted(Graph& host, const Graph& g, int offset)
{
    for (const auto& e : g.edges())
        host.add_edge(e.u + offset, e.v + offset);
}

// Layer edges of the layered construction, with vertex (j, x) at
// first + (j-1) * layer_size + rank(x).
void add_layers(Graph& g, const LayeredParams& p, int first)
{
    const int base = p.delta - 1;
    std::vector<int> digits(static_cast<std::size_t>(p.r));
    for (int j = 1; j < p.ell; ++j) {
        const int coord = (j - 1) % p.r;
        int place = 1;
        for (int c = 0; c < coord; ++c)
            place *= base;
        for (int x = 0; x < p.layer_size; ++x) {
            const int digit = (x / place) % base;
            const int from = first + (j - 1) * p.layer_size + x;
            for (int lambda = 0; lambda < base; ++lambda) {
                const int shifted = x + (((digit + lambda) % base) - digit) * place;
                g.add_edge(from, first + j * p.layer_size + shifted);
            }
        }
    }
}

GadgetLayout layer_layout(const LayeredParams& p, int first)
{
    GadgetLayout layout;
    layout["layers"] = range(first, first + p.ell * p.layer_size);
    for (int j = 1; j <= p.ell; ++j)
        layout["layer_" + std::to_string(j)] =
            range(first + (j - 1) * p.layer_size, first + j * p.layer_size);
    return layout;
}

} // namespace

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw ArgumentError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph complete_minus_edge(int n)
{
    if (n < 2)
        throw ArgumentError("complete_minus_edge needs at least 2 vertices");
    Graph g = Graph::complete(n);
    g.remove_edge(n - 2, n - 1);
    return g;
}

Gadget star_lower(int t, int n)
{
    if (t < 2)
        throw ArgumentError("star_lower: t must be at least 2");
    const int star_vertices = t * (t - 1) / 2 - 1;
    if (n < star_vertices)
        throw ArgumentError("star_lower: n = " + std::to_string(n) + " is below C(t,2) - 1 = " +
                            std::to_string(star_vertices));
    Gadget out{Graph(n), {}};
    int next = 0;
    for (int s = 1; s <= t - 2; ++s) {
        const int centre = next;
        out.layout["centres"].push_back(centre);
        for (int leaf = 1; leaf <= s; ++leaf)
            out.graph.add_edge(centre, centre + leaf);
        next += s + 1;
    }
    out.layout["isolated"] = range(next, n);
    return out;
}

Graph clique_pendant(int k)
{
    if (k < 3)
        throw ArgumentError("clique_pendant: k must be at least 3");
    Graph g(k + 1);
    add_clique(g, 0, k);
    g.add_edge(0, k);
    return g;
}

Gadget glued_cliques(int k)
{
    if (k < 3)
        throw ArgumentError("glued_cliques: k must be at least 3");
    Gadget out{Graph(2 * k - 2), {}};
    add_clique(out.graph, 0, k);
    std::vector<int> second = {0, 1};
    for (int v = k; v < 2 * k - 2; ++v)
        second.push_back(v);
    for (std::size_t i = 0; i < second.size(); ++i)
        for (std::size_t j = i + 1; j < second.size(); ++j)
            out.graph.add_edge(second[i], second[j]);
    out.graph.add_edge(2, k);
    out.layout["e"] = {0, 1};
    out.layout["e_prime"] = {2, k};
    return out;
}

LayeredParams min2max3_params(const Graph& h, int n, bool bipartite)
{
    if (h.order() < 2 || !is_connected(h))
        throw ArgumentError("layered construction: pattern must be connected");
    LayeredParams p;
    p.r = h.order() - 1;
    p.delta = h.min_degree();
    if (p.delta < 2)
        throw ArgumentError("layered construction: pattern minimum degree must be at least 2");
    if (h.max_degree() < 3)
        throw ArgumentError("layered construction: pattern maximum degree must be at least 3");
    if (bipartite && !is_bipartite(h))
        throw ArgumentError("layered construction: pattern must be bipartite for the bipartite variant");
    long long size = 1;
    for (int i = 0; i < p.r; ++i) {
        size *= p.delta - 1;
        if (size > kMaxVertices)
            throw ArgumentError("layered construction: layer size (delta-1)^r exceeds the vertex limit");
    }
    p.layer_size = static_cast<int>(size);
    p.apex = bipartite ? 2 * p.r : p.r;
    if (n < p.apex + p.layer_size)
        throw ArgumentError("layered construction: n = " + std::to_string(n) + " is below " +
                            std::to_string(p.apex + p.layer_size));
    p.ell = (n - p.apex) / p.layer_size;
    return p;
}

Gadget min2max3_start(const Graph& h, int n)
{
    const auto p = min2max3_params(h, n, false);
    Gadget out{Graph(p.apex + p.ell * p.layer_size), layer_layout(p, p.apex)};
    add_clique(out.graph, 0, p.r);
    for (int a = 0; a < p.r; ++a)
        for (int x = 0; x < p.layer_size; ++x)
            out.graph.add_edge(a, p.apex + x);
    add_layers(out.graph, p, p.apex);
    out.layout["apex"] = range(0, p.r);
    return out;
}

Gadget min2max3_bipartite_start(const Graph& h, int n)
{
    const auto p = min2max3_params(h, n, true);
    Gadget out{Graph(p.apex + p.ell * p.layer_size), layer_layout(p, p.apex)};
    for (int a = 0; a < p.r; ++a)
        for (int b = p.r; b < 2 * p.r; ++b)
            out.graph.add_edge(a, b);
    for (int b = p.r; b < 2 * p.r; ++b)
        for (int x = 0; x < p.layer_size; ++x)
            out.graph.add_edge(b, p.apex + x);
    add_layers(out.graph, p, p.apex);
    out.layout["apex_x"] = range(0, p.r);
    out.layout["apex_y"] = range(p.r, 2 * p.r);
    return out;
}

Graph chord_cycle()
{
    Graph g = cycle_graph(6);
    g.add_edge(0, 3);
    return g;
}

Gadget h_prime()
{
    Gadget out{cycle_graph(18), {}};
    for (auto [u, v] : {std::pair{1, 3}, {2, 4}, {5, 7}, {6, 8}, {10, 12}, {11, 13}, {14, 16}, {15, 17}})
        out.graph.add_edge(u, v);
    out.layout["U"] = range(0, 10);
    out.layout["W"] = range(9, 18);
    out.layout["W"].push_back(0);
    out.layout["u0"] = {0};
    out.layout["u9"] = {9};
    return out;
}

Gadget counterexample_h()
{
    const auto hp = h_prime();
    Gadget out{Graph(25), {}};
    embed_shifted(out.graph, hp.graph, 0);
    embed_shifted(out.graph, chord_cycle(), 18);
    out.graph.add_edge(9, 19);
    out.graph.add_edge(0, 24);
    out.layout["h_prime"] = range(0, 18);
    out.layout["h_tilde"] = range(18, 24);
    out.layout["v_tilde"] = {19};
    out.layout["z"] = {24};
    out.layout["u0"] = {0};
    out.layout["u9"] = {9};
    return out;
}

Gadget counterexample_start(const Graph& g_tilde)
{
    if (!is_bipartite(g_tilde))
        throw ArgumentError("counterexample_start: base graph must be bipartite (the simulation "
                            "argument classifies diamonds using a bipartition of the base)");
    const int base = g_tilde.order();
    Gadget out{Graph(18 + base), {}};
    embed_shifted(out.graph, h_prime().graph, 0);
    embed_shifted(out.graph, g_tilde, 18);
    for (int x = 18; x < 18 + base; ++x) {
        out.graph.add_edge(0, x);
        out.graph.add_edge(9, x);
    }
    out.layout["h_prime"] = range(0, 18);
    out.layout["base"] = range(18, 18 + base);
    out.layout["u0"] = {0};
    out.layout["u9"] = {9};
    return out;
}

Gadget ht_gadget(int t)
{
    if (t < 1)
        throw ArgumentError("ht_gadget: t must be at least 1");
    const int s_end = t + 8;
    const int r_end = s_end + 6;
    const int v_star = r_end;
    Gadget out{Graph(t + 15), {}};
    add_clique(out.graph, 0, s_end);
    add_clique(out.graph, s_end, r_end);
    for (int x = 0; x < t; ++x) {
        for (int y = s_end; y < r_end; ++y)
            out.graph.add_edge(x, y);
        out.graph.add_edge(x, v_star);
    }
    out.layout["S"] = range(0, s_end);
    out.layout["T"] = range(0, t);
    out.layout["R"] = range(s_end, r_end);
    out.layout["v_star"] = {v_star};
    return out;
}

Gadget ht_start(int t, const Graph& g_tilde)
{
    if (t < 1)
        throw ArgumentError("ht_start: t must be at least 1");
    const int s_end = t + 8;
    const int base = g_tilde.order();
    Gadget out{Graph(s_end + base), {}};
    add_clique(out.graph, 0, s_end);
    embed_shifted(out.graph, g_tilde, s_end);
    for (int x = 0; x < t; ++x)
        for (int y = s_end; y < s_end + base; ++y)
            out.graph.add_edge(x, y);
    out.layout["S"] = range(0, s_end);
    out.layout["T"] = range(0, t);
    out.layout["base"] = range(s_end, s_end + base);
    return out;
}

} // namespace hboot
