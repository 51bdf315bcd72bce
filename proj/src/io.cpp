#include "hboot/io.hpp"

#include "hboot/graph6.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

namespace hboot {

namespace {

Json edge_json(const Edge& e)
{
    return Json::array({e.u, e.v});
}

Json edges_json(const std::vector<Edge>& edges)
{
    Json out = Json::array();
    for (const auto& e : edges)
        out.push_back(edge_json(e));
    return out;
}

template <typename T>
T field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing JSON field \"") + key + "\"", 0);
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& ex) {
        throw ParseError(std::string("bad JSON field \"") + key + "\": " + ex.what(), 0);
    }
}

Graph graph_field(const Json& j, const char* key)
{
    return graph6_decode(field<std::string>(j, key));
}

} // namespace

Json to_json(const Trajectory& t)
{
    Json rounds = Json::array();
    for (const auto& batch : t.rounds)
        rounds.push_back(edges_json(batch));
    return {
        {"n", t.start.order()},
        {"pattern", graph6_encode(t.pattern_graph)},
        {"start", graph6_encode(t.start)},
        {"rounds", rounds},
        {"tau", t.tau},
        {"final", graph6_encode(t.final_graph)},
        {"truncated", t.truncated},
    };
}

Trajectory trajectory_from_json(const Json& j)
{
    Trajectory t;
    t.start = graph_field(j, "start");
    t.pattern_graph = graph_field(j, "pattern");
    t.final_graph = graph_field(j, "final");
    t.tau = field<int>(j, "tau");
    t.truncated = field<bool>(j, "truncated");
    const int n = field<int>(j, "n");
    if (n != t.start.order() || n != t.final_graph.order())
        throw ParseError("trajectory: n disagrees with the start or final graph", 0);
    const auto rounds = field<std::vector<std::vector<std::pair<int, int>>>>(j, "rounds");
    Graph g = t.start;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        EdgeBatch batch;
        for (const auto& [u, v] : rounds[i]) {
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("trajectory: round " + std::to_string(i + 1) + " has a bad pair", 0);
            if (g.adjacent(u, v))
                throw ParseError("trajectory: round " + std::to_string(i + 1) + " repeats edge " +
                                     to_string(Edge(u, v)),
                                 0);
            batch.emplace_back(u, v);
        }
        for (const auto& e : batch)
            g.add_edge(e);
        std::sort(batch.begin(), batch.end());
        t.rounds.push_back(std::move(batch));
    }
    if (t.tau != static_cast<int>(t.rounds.size()))
        throw ParseError("trajectory: tau disagrees with the number of rounds", 0);
    if (!(g == t.final_graph))
        throw ParseError("trajectory: final graph is not start plus all rounds", 0);
    return t;
}

Json to_json(const GadgetLayout& layout)
{
    Json out = Json::object();
    for (const auto& [name, vertices] : layout)
        out[name] = vertices;
    return out;
}

GadgetLayout layout_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("layout: expected an object of vertex lists", 0);
    GadgetLayout out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        try {
            out[it.key()] = it.value().get<std::vector<int>>();
        } catch (const Json::exception&) {
            throw ParseError("layout: group \"" + it.key() + "\" is not a list of vertices", 0);
        }
    }
    return out;
}

Json to_json(const SearchReport& r)
{
    Json witnesses = Json::array();
    for (const auto& g : r.witnesses)
        witnesses.push_back(graph6_encode(g));
    return {{"n", r.n}, {"max_tau", r.max_tau}, {"class_count", r.class_count}, {"witnesses", witnesses}};
}

Json to_json(const TreeParams& p)
{
    return {
        {"root", p.root},     {"cover", p.cover},   {"mu", p.mu},       {"delta", p.delta},
        {"height", p.height}, {"i_star", p.i_star}, {"bound", p.bound},
    };
}

Json to_json(const SimulationCertificate& c)
{
    Json violation = nullptr;
    if (c.first_violation)
        violation = {{"round", c.first_violation->round}, {"edge", edge_json(c.first_violation->edge)}};
    return {{"ok", c.ok}, {"first_violation", violation}, {"tau_inner", c.tau_inner}, {"tau_outer", c.tau_outer}};
}

Json to_json(const CopySequence& s)
{
    return {{"vertex_sets", s.vertex_sets}, {"completing_edges", edges_json(s.completing_edges)}};
}

Json to_json(const ExperimentConfig& c)
{
    return {
        {"command", c.command}, {"pattern", c.pattern}, {"start", c.start}, {"max_rounds", c.max_rounds},
        {"out", c.out},         {"jobs", c.jobs},       {"seed", c.seed},
    };
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw ParseError(path + ": " + ex.what(), ex.byte);
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace hboot
