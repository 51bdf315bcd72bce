#pragma once

// Brute-force reference implementations used as test oracles. Each one
// follows the textbook definition directly and is only meant for tiny inputs.

#include "hboot/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using hboot::Edge;
using hboot::Graph;

/// graph6 for n <= 62, written from the format description: one byte n+63,
/// then the bits of x(0,1), x(0,2), x(1,2), x(0,3), ... in groups of six,
/// zero padded, each group plus 63.
inline std::string graph6(const Graph& g)
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + bits[k + static_cast<std::size_t>(b)];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

/// Labeled graph number `code` on n vertices: bit k of code is the k-th pair
/// in lexicographic order.
inline Graph from_code(int n, std::uint64_t code)
{
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((code >> k) & 1U)
                g.add_edge(u, v);
    return g;
}

inline int pair_count(int n)
{
    return n * (n - 1) / 2;
}

/// Adjacency bits of g relabeled by perm, as a number.
inline std::uint64_t relabeled_code(const Graph& g, const std::vector<int>& perm)
{
    const int n = g.order();
    std::uint64_t code = 0;
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (g.adjacent(perm[u], perm[v]))
                code |= std::uint64_t{1} << k;
    return code;
}

/// Least code over all n! relabelings: a canonical form by exhaustion.
inline std::uint64_t min_code(const Graph& g)
{
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do
        best = std::min(best, relabeled_code(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b);
}

/// Calls f(map) for every injective map V(h) -> V(g) sending edges of h to
/// edges of g. f returns false to stop early.
inline void for_each_embedding(const Graph& g, const Graph& h, const std::function<bool(const std::vector<int>&)>& f)
{
    const int k = h.order();
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    bool stop = false;
    std::function<void(int)> go = [&](int i) {
        if (stop)
            return;
        if (i == k) {
            stop = !f(map);
            return;
        }
        for (int c = 0; c < g.order() && !stop; ++c) {
            if (used[c])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.adjacent(i, j) && !g.adjacent(c, map[j]))
                    ok = false;
            if (!ok)
                continue;
            map[i] = c;
            used[c] = true;
            go(i + 1);
            used[c] = false;
            map[i] = -1;
        }
    };
    go(0);
}

/// Number of injective homomorphic images counted as labeled maps. This is
/// n_H(G) times |Aut(H)|, so comparisons of two counts match comparisons of
/// copy counts.
inline long long embedding_count(const Graph& g, const Graph& h)
{
    long long count = 0;
    for_each_embedding(g, h, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

inline bool contains(const Graph& g, const Graph& h)
{
    if (h.order() > g.order())
        return false;
    bool found = false;
    for_each_embedding(g, h, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

/// Literal definition: adding uv raises the number of copies of h.
inline bool completes_by_counting(const Graph& g, const Graph& h, int u, int v)
{
    Graph plus = g;
    plus.add_edge(u, v);
    return embedding_count(plus, h) > embedding_count(g, h);
}

/// One process round from the counting definition.
inline std::vector<Edge> step_by_counting(const Graph& g, const Graph& h)
{
    std::vector<Edge> out;
    for (const auto& e : g.non_edges())
        if (completes_by_counting(g, h, e.u, e.v))
            out.push_back(e);
    return out;
}

/// Running time from the counting definition.
inline int tau_by_counting(Graph g, const Graph& h)
{
    int tau = 0;
    while (true) {
        const auto batch = step_by_counting(g, h);
        if (batch.empty())
            return tau;
        for (const auto& e : batch)
            g.add_edge(e);
        ++tau;
    }
}

/// Smallest number of vertices whose removal disconnects g, by trying every
/// subset; n - 1 for complete graphs.
inline int connectivity(const Graph& g)
{
    const int n = g.order();
    for (int k = 0; k < n - 1; ++k) {
        // subsets of size k via a bitmask sweep
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (__builtin_popcount(mask) != k)
                continue;
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (!((mask >> v) & 1U))
                    keep.push_back(v);
            if (!hboot::is_connected(hboot::induced(g, keep)))
                return k;
        }
    }
    return n - 1;
}

/// Some colouring in {0,1}^n is proper.
inline bool two_colourable(const Graph& g)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1U) == ((mask >> e.v) & 1U))
                ok = false;
        if (ok)
            return true;
    }
    return false;
}

/// All minimum vertex covers of g as vertex lists.
inline std::vector<std::vector<int>> minimum_covers(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> best;
    int best_size = n + 1;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size > best_size)
            continue;
        bool cover = true;
        for (const auto& e : g.edges())
            if (!((mask >> e.u) & 1U) && !((mask >> e.v) & 1U))
                cover = false;
        if (!cover)
            continue;
        if (size < best_size) {
            best.clear();
            best_size = size;
        }
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                members.push_back(v);
        best.push_back(members);
    }
    return best;
}

/// Orbits of edges under automorphisms found by trying every permutation.
inline int edge_orbit_count(const Graph& h)
{
    const int n = h.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> autos;
    do {
        bool ok = true;
        for (const auto& e : h.edges())
            if (!h.adjacent(perm[e.u], perm[e.v]))
                ok = false;
        if (ok)
            autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto edges = h.edges();
    std::vector<int> orbit(edges.size(), -1);
    int count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (orbit[i] != -1)
            continue;
        for (const auto& a : autos) {
            const Edge image(a[edges[i].u], a[edges[i].v]);
            const auto at = std::lower_bound(edges.begin(), edges.end(), image) - edges.begin();
            orbit[static_cast<std::size_t>(at)] = count;
        }
        ++count;
    }
    return count;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace oracle
