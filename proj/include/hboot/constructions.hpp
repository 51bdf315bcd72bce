#pragma once

#include "hboot/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace hboot {

/// Named vertex groups of a generated graph, e.g. "S" -> {0, ..., 8}.
using GadgetLayout = std::map<std::string, std::vector<int>>;

struct Gadget {
    Graph graph;
    GadgetLayout layout;
};

// Basic families. Vertices are 0..n-1 in the obvious order.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b); ///< parts [0,a) and [a,a+b)
Graph star_graph(int leaves);           ///< centre 0
Graph complete_minus_edge(int n);       ///< K_n without {n-2, n-1}

/// Disjoint stars K_{1,1}, ..., K_{1,t-2} (each centre followed by its
/// leaves) and then isolated vertices up to n. Requires n >= C(t,2) - 1.
Gadget star_lower(int t, int n);

/// K_k on [0,k) plus vertex k hanging off vertex 0. Requires k >= 3.
Graph clique_pendant(int k);

/// Two K_k sharing edge {0,1}: cliques {0,1,2,...,k-1} and
/// {0,1,k,...,2k-3}, plus the extra edge {2,k}. Layout groups "e" and
/// "e_prime" hold the endpoints of the shared and extra edge.
Gadget glued_cliques(int k);

/// Parameters of the layered lower-bound construction for a pattern h.
struct LayeredParams {
    int r = 0;          ///< v(h) - 1
    int delta = 0;      ///< min degree of h
    int ell = 0;        ///< number of layers
    int layer_size = 0; ///< (delta - 1)^r
    int apex = 0;       ///< r, or 2r for the bipartite variant
};

/// Layered construction: apex clique K_r on [0,r), then ell layers of
/// Z_{delta-1}^r. Vertex (j, x) for layer j in [1,ell] has index
/// r + (j-1) * (delta-1)^r + sum_k x_k (delta-1)^k. Layer j is joined to
/// layer j+1 by (j,x) ~ (j+1, x + lambda e_{(j-1) mod r}) for every lambda,
/// and the apex is joined completely to layer 1.
///
/// Requires h connected, delta >= 2, Delta >= 3 and n >= r + (delta-1)^r;
/// ell = floor((n - r) / (delta-1)^r).
Gadget min2max3_start(const Graph& h, int n);
LayeredParams min2max3_params(const Graph& h, int n, bool bipartite);

/// As min2max3_start but the apex is K_{r,r}: X = [0,r), Y = [r,2r), with
/// Y joined to layer 1. Additionally requires h bipartite.
Gadget min2max3_bipartite_start(const Graph& h, int n);

/// C_6 on [0,5] plus the chord {0,3}.
Graph chord_cycle();

/// 18-vertex gadget with u_i = i: the cycle u_0...u_17 plus chords
/// u1u3, u2u4, u5u7, u6u8, u10u12, u11u13, u14u16, u15u17.
/// Groups: "U" = u0..u9, "W" = u9..u17,u0, "u0", "u9".
Gadget h_prime();

/// 25 vertices: h_prime on [0,17], chord_cycle shifted to [18,23], z = 24;
/// extra edges u9 ~ 19 (a degree-2 vertex of the chord cycle) and u0 ~ z.
/// Groups: "h_prime", "h_tilde", "v_tilde", "z", "u0", "u9".
Gadget counterexample_h();

/// h_prime copy on [0,17], then g_tilde shifted by 18; u'_0 = 0 and
/// u'_9 = 9 are joined to every base vertex. g_tilde must be bipartite.
/// Groups: "h_prime", "base", "u0", "u9".
Gadget counterexample_start(const Graph& g_tilde);

/// V = S u R u {v*}: S = [0, t+8) with T = [0, t), R = [t+8, t+14),
/// v* = t+14. Edges: S and R cliques, T x R, T x {v*}. Requires t >= 1.
Gadget ht_gadget(int t);

/// S' = [0, t+8) clique with T' = [0, t), then g_tilde shifted by t+8 with
/// T' joined to every base vertex. Groups: "S", "T", "base".
Gadget ht_start(int t, const Graph& g_tilde);

} // namespace hboot
