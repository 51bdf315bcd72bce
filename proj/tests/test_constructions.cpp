#include "oracles.hpp"

#include "hboot/analysis.hpp"
#include "hboot/canonical.hpp"
#include "hboot/constructions.hpp"
#include "hboot/graph6.hpp"
#include "hboot/process.hpp"

#include <doctest.h>

using namespace hboot;

namespace {

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    return out;
}

int min_degree(const Graph& g)
{
    const auto d = degrees(g);
    return *std::min_element(d.begin(), d.end());
}

int max_degree(const Graph& g)
{
    const auto d = degrees(g);
    return *std::max_element(d.begin(), d.end());
}

} // namespace

TEST_CASE("basic families")
{
    CHECK(path_graph(5).size() == 4);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK(complete_minus_edge(5).size() == 9);
    CHECK_FALSE(complete_minus_edge(5).adjacent(3, 4));
}

TEST_CASE("star_lower")
{
    const auto g = star_lower(4, 9);
    CHECK(g.graph.order() == 9);
    CHECK(g.graph.size() == 3);
    CHECK(g.layout.at("isolated").size() == 4);
    CHECK(run(g.graph, Pattern::compile(star_graph(3))).tau == 3);
    const auto small = star_lower(3, 4);
    CHECK(small.graph.size() == 1);
    CHECK(run(small.graph, Pattern::compile(star_graph(2))).tau == 2);
    CHECK(oracle::tau_by_counting(small.graph, star_graph(2)) == 2);
    CHECK_THROWS_AS(star_lower(4, 4), ArgumentError);
}

TEST_CASE("clique_pendant and glued_cliques")
{
    const Graph h3 = clique_pendant(3);
    CHECK(h3.order() == 4);
    CHECK(h3.size() == 4);
    CHECK(min_degree(clique_pendant(4)) == 1);
    CHECK(max_degree(clique_pendant(4)) == 4);
    CHECK_THROWS_AS(clique_pendant(2), ArgumentError);

    CHECK(glued_cliques(3).graph == Graph::complete(4));
    CHECK(glued_cliques(4).graph.order() == 6);
    CHECK(glued_cliques(4).graph.size() == 12);
    for (int k : {3, 4, 5})
        CHECK(is_self_percolating(glued_cliques(k).graph));
    CHECK_THROWS_AS(glued_cliques(2), ArgumentError);
}

TEST_CASE("layered construction: sizes, regularity and the ordering hypothesis")
{
    const Graph k23 = complete_bipartite(2, 3);
    const auto p = min2max3_params(k23, 104, false);
    CHECK(p.r == 4);
    CHECK(p.ell == 100);
    CHECK(p.layer_size == 1);

    const auto k4 = min2max3_start(Graph::complete(4), 3 + 8 * 6);
    const auto kp = min2max3_params(Graph::complete(4), 3 + 8 * 6, false);
    CHECK(kp.layer_size == 8);
    CHECK(k4.graph.order() == 3 + 8 * 6);
    // consecutive layers form a 2-regular bipartite graph
    for (int j = 1; j < kp.ell; ++j) {
        const auto& a = k4.layout.at("layer_" + std::to_string(j));
        const auto& b = k4.layout.at("layer_" + std::to_string(j + 1));
        std::vector<int> both = a;
        both.insert(both.end(), b.begin(), b.end());
        const Graph pair = induced(k4.graph, both);
        for (int v = 0; v < pair.order(); ++v)
            CHECK(pair.degree(v) == 2);
        CHECK(is_bipartite(pair).has_value());
    }

    for (const Graph& h : {k23, Graph::complete(4), chord_cycle()}) {
        const auto params = min2max3_params(h, 200, false);
        const auto g = min2max3_start(h, 200).graph;
        for (int v = params.r; v < g.order(); ++v) {
            int earlier = 0;
            g.neighbours(v).for_each([&](int w) { earlier += w < v ? 1 : 0; });
            CHECK(earlier >= params.delta - 1);
        }
    }
    CHECK_THROWS_AS(min2max3_start(cycle_graph(5), 50), ArgumentError);
    CHECK_THROWS_AS(min2max3_start(star_graph(3), 50), ArgumentError);
    CHECK_THROWS_AS(min2max3_start(Graph::complete(4), 5), ArgumentError);
}

TEST_CASE("growing clique: the prefix clique gains a vertex every round")
{
    for (const Graph& h : {complete_bipartite(2, 3), Graph::complete(4)}) {
        const auto params = min2max3_params(h, 40, false);
        const auto start = min2max3_start(h, 40).graph;
        const auto t = run(start, Pattern::compile(h));
        CHECK(t.final_graph.is_complete());
        for (int i = 0; i <= t.tau; ++i) {
            const int size = std::min(start.order(), params.r + i);
            std::vector<int> prefix(static_cast<std::size_t>(size));
            std::iota(prefix.begin(), prefix.end(), 0);
            REQUIRE(induced(t.graph_at(i), prefix).is_complete());
        }
    }
}

TEST_CASE("bipartite layered construction")
{
    const auto g = min2max3_bipartite_start(chord_cycle(), 105);
    CHECK(g.graph.order() == 105);
    CHECK(is_bipartite(g.graph).has_value());
    CHECK(g.layout.at("apex_x").size() == 5);
    CHECK_THROWS_AS(min2max3_bipartite_start(Graph::complete(4), 60), ArgumentError);
    const auto k23 = min2max3_bipartite_start(complete_bipartite(2, 3), 40);
    const auto t = run(k23.graph, Pattern::compile(complete_bipartite(2, 3)));
    CHECK_FALSE(first_non_bipartite_round(t).has_value());
}

TEST_CASE("chord cycle")
{
    const Graph h = chord_cycle();
    CHECK(h.size() == 7);
    CHECK(degrees(h) == std::vector<int>{3, 2, 2, 3, 2, 2});
    CHECK(is_bipartite(h).has_value());
    CHECK(contains(h, cycle_graph(6)));
}

TEST_CASE("H' gadget")
{
    const auto g = h_prime();
    const Graph& h = g.graph;
    CHECK(h.order() == 18);
    CHECK(h.size() == 26);
    for (int v = 0; v < 18; ++v)
        CHECK(h.degree(v) == (v == 0 || v == 9 ? 2 : 3));
    CHECK(are_isomorphic(induced(h, g.layout.at("U")), induced(h, g.layout.at("W"))));
    CHECK(is_stable(h, Pattern::compile(h)));
}

TEST_CASE("the 25-vertex counterexample pattern")
{
    const auto g = counterexample_h();
    const Graph& h = g.graph;
    CHECK(h.order() == 25);
    CHECK(h.size() == 35);
    CHECK(min_degree(h) == 1);
    CHECK(max_degree(h) == 3);
    CHECK(h.degree(g.layout.at("z")[0]) == 1);
    CHECK(is_connected(h));
    CHECK(are_isomorphic(induced(h, g.layout.at("h_tilde")), chord_cycle()));
    CHECK(are_isomorphic(induced(h, g.layout.at("h_prime")), h_prime().graph));
}

TEST_CASE("counterexample start")
{
    const Graph base = min2max3_bipartite_start(chord_cycle(), 30).graph;
    const auto g = counterexample_start(base);
    CHECK(g.graph.order() == base.order() + 18);
    CHECK(induced(g.graph, g.layout.at("h_prime")) == h_prime().graph);
    CHECK(induced(g.graph, g.layout.at("base")) == base);
    int cross = 0;
    for (int u : g.layout.at("h_prime"))
        for (int v : g.layout.at("base"))
            cross += g.graph.adjacent(u, v) ? 1 : 0;
    CHECK(cross == 2 * base.order());
    CHECK_THROWS_AS(counterexample_start(Graph::complete(3)), ArgumentError);
}

TEST_CASE("H_t gadget and start")
{
    const auto g = ht_gadget(1);
    CHECK(g.graph.order() == 16);
    CHECK(min_degree(g.graph) == 1);
    CHECK(g.graph.degree(g.layout.at("v_star")[0]) == 1);
    CHECK(induced(g.graph, g.layout.at("R")) == Graph::complete(6));
    const auto g3 = ht_gadget(3);
    CHECK(g3.graph.order() == 18);
    CHECK(g3.graph.degree(g3.layout.at("v_star")[0]) == 3);
    CHECK_THROWS_AS(ht_gadget(0), ArgumentError);

    // 15 vertices cannot host the 16-vertex H_1
    const auto tight = ht_start(1, complete_minus_edge(6));
    CHECK(tight.graph.order() == 6 + 9);
    CHECK(run(tight.graph, Pattern::compile(g.graph)).tau == 0);

    const auto start = ht_start(1, disjoint_union(complete_minus_edge(6), Graph(1)));
    const auto t = run(start.graph, Pattern::compile(g.graph));
    CHECK(t.tau == 1);
    REQUIRE(t.rounds.size() == 1);
    const int b = start.layout.at("base")[0];
    CHECK(t.rounds[0] == EdgeBatch{Edge(b + 4, b + 5)});
}

TEST_CASE("generators are byte-for-byte reproducible")
{
    CHECK(graph6_encode(h_prime().graph) == graph6_encode(h_prime().graph));
    CHECK(graph6_encode(min2max3_start(Graph::complete(4), 60).graph) ==
          graph6_encode(min2max3_start(Graph::complete(4), 60).graph));
    CHECK(graph6_encode(counterexample_h().graph) == graph6_encode(counterexample_h().graph));
}
