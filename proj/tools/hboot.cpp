// hboot: command-line front end.
//
// Exit codes: 0 pass or stabilised, 2 verification failure, 3 round limit
// hit, 4 usage or input error.

#include "hboot/analysis.hpp"
#include "hboot/constructions.hpp"
#include "hboot/graph6.hpp"
#include "hboot/io.hpp"
#include "hboot/process.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hboot;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 2;
constexpr int kTruncated = 3;
constexpr int kUsage = 4;

struct Options {
    std::string pattern;
    std::string start;
    std::string graph;
    std::string stream;
    std::string outer;
    std::string inner;
    std::string subset;
    std::string group = "base";
    std::string trajectory;
    std::string from;
    std::string engine = "frontier";
    std::string layout;
    std::string out = "-";
    std::string family;
    std::string verb;
    std::vector<std::string> params;
    int n = 0;
    int samples = 100;
    std::int64_t max_rounds = 0;
    int jobs = 1;
    std::uint64_t seed = 1;
};

// What a command produced: a JSON body (or raw text for construct) and an
// exit code.
struct Result {
    Json body;
    std::string text;
    int code = kPass;
    std::string out = "-";
};

Json edge_json(const Edge& e)
{
    return Json::array({e.u, e.v});
}

Json config_json(const Options& o, const std::string& command, const std::vector<std::string>& argv)
{
    ExperimentConfig c;
    c.command = command;
    c.pattern = o.pattern;
    c.start = o.start;
    c.max_rounds = o.max_rounds;
    c.out = o.out;
    c.jobs = o.jobs;
    c.seed = o.seed;
    Json j = to_json(c);
    j["argv"] = argv;
    return j;
}

Result cmd_run(const Options& o)
{
    const Graph h = read_graph6_single(o.pattern);
    const Graph g = read_graph6_single(o.start);
    const auto p = Pattern::compile(h);
    RunOptions ro;
    ro.max_rounds = o.max_rounds;
    ro.jobs = o.jobs;
    const auto t = o.engine == "full" ? run(g, p, ro) : run_frontier(g, p, ro);
    return {to_json(t), {}, t.truncated ? kTruncated : kPass};
}

Result cmd_search(const Options& o)
{
    const Graph h = read_graph6_single(o.pattern);
    SearchReport r;
    if (o.stream.empty()) {
        r = exhaustive_max_running_time(h, o.n, o.jobs);
    } else {
        const auto graphs = read_graph6_file(o.stream);
        const int n = o.n > 0 ? o.n : (graphs.empty() ? 0 : graphs.front().order());
        r = exhaustive_max_running_time(h, n, graphs, o.jobs);
    }
    return {to_json(r), {}, kPass};
}

std::vector<int> read_subset(const std::string& path, const std::string& group)
{
    const Json j = read_json_file(path);
    if (j.is_array())
        return j.get<std::vector<int>>();
    const auto layout = layout_from_json(j);
    const auto it = layout.find(group);
    if (it == layout.end())
        throw ArgumentError(path + " has no group \"" + group + "\"");
    return it->second;
}

Result verify_tree_bound(const Options& o)
{
    const Graph t = read_graph6_single(o.graph);
    const int order = t.order();
    const int z = tree_centre(t);
    const auto params = tree_params(t, z);
    const int proof_bound = 2 + 3 * ((params.height + 1) / 2) + params.mu + params.delta;
    const auto p = Pattern::compile(t);
    std::mt19937_64 rng(o.seed);
    int max_tau = 0;
    Json violations = Json::array();
    for (int s = 0; s < o.samples; ++s) {
        const double density = 0.05 + 0.45 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const Graph g = random_graph(2 * order, density, rng);
        const int tau = run_frontier(g, p).tau;
        max_tau = std::max(max_tau, tau);
        if (tau > params.bound || tau > proof_bound)
            violations.push_back({{"sample", s}, {"start", graph6_encode(g)}, {"tau", tau}});
    }
    Json body = {{"params", to_json(params)}, {"proof_bound", proof_bound}, {"samples", o.samples},
                 {"max_tau", max_tau},        {"violations", violations}, {"ok", violations.empty()}};
    return {body, {}, violations.empty() ? kPass : kFail};
}

Result cmd_verify(const Options& o)
{
    if (o.verb == "stability") {
        const Graph g = read_graph6_single(o.graph);
        const auto batch = step(g, Pattern::compile(read_graph6_single(o.pattern)), o.jobs);
        Json pending = Json::array();
        for (const auto& e : batch)
            pending.push_back(edge_json(e));
        return {{{"ok", batch.empty()}, {"completing_pairs", pending}}, {}, batch.empty() ? kPass : kFail};
    }
    if (o.verb == "self-percolation") {
        const Graph h = read_graph6_single(o.graph);
        const auto t = run(h, Pattern::compile(h));
        const bool ok = t.final_graph.is_complete();
        return {{{"ok", ok}, {"tau", t.tau}}, {}, ok ? kPass : kFail};
    }
    if (o.verb == "simulation") {
        const auto outer = trajectory_from_json(read_json_file(o.outer));
        const auto inner = trajectory_from_json(read_json_file(o.inner));
        const auto subset = read_subset(o.subset, o.group);
        const auto cert = verify_simulation(outer, inner, subset);
        return {to_json(cert), {}, cert.ok ? kPass : kFail};
    }
    if (o.verb == "tree-bound")
        return verify_tree_bound(o);
    if (o.verb == "girth-applicable") {
        const auto witness = girth_theorem_applicable(read_graph6_single(o.graph));
        Json w = witness ? edge_json(*witness) : Json(nullptr);
        return {{{"ok", witness.has_value()}, {"witness", w}}, {}, witness ? kPass : kFail};
    }
    if (o.verb == "bipartite-rounds") {
        const auto t = trajectory_from_json(read_json_file(o.trajectory));
        const auto bad = first_non_bipartite_round(t);
        Json first = bad ? Json(*bad) : Json(nullptr);
        return {{{"ok", !bad}, {"first_non_bipartite_round", first}, {"rounds", t.tau}}, {}, bad ? kFail : kPass};
    }
    throw ArgumentError("unknown verification \"" + o.verb + "\"");
}

int param(const std::map<std::string, int>& values, const std::string& key)
{
    const auto it = values.find(key);
    if (it == values.end())
        throw ArgumentError("missing --params " + key + "=...");
    return it->second;
}

Result cmd_construct(const Options& o)
{
    std::map<std::string, int> v;
    for (const auto& kv : o.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ArgumentError("--params expects key=value, got \"" + kv + "\"");
        try {
            v[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ArgumentError("--params " + kv + ": value is not an integer");
        }
    }
    const std::string& f = o.family;
    Gadget out;
    if (f == "path")
        out.graph = path_graph(param(v, "n"));
    else if (f == "cycle")
        out.graph = cycle_graph(param(v, "n"));
    else if (f == "complete")
        out.graph = Graph::complete(param(v, "n"));
    else if (f == "complete-minus-edge")
        out.graph = complete_minus_edge(param(v, "n"));
    else if (f == "complete-bipartite")
        out.graph = complete_bipartite(param(v, "a"), param(v, "b"));
    else if (f == "star")
        out.graph = star_graph(param(v, "leaves"));
    else if (f == "star-lower")
        out = star_lower(param(v, "t"), param(v, "n"));
    else if (f == "clique-pendant")
        out.graph = clique_pendant(param(v, "k"));
    else if (f == "glued-cliques")
        out = glued_cliques(param(v, "k"));
    else if (f == "chord-cycle")
        out.graph = chord_cycle();
    else if (f == "h-prime")
        out = h_prime();
    else if (f == "counterexample-h")
        out = counterexample_h();
    else if (f == "min2max3")
        out = min2max3_start(read_graph6_single(o.pattern), param(v, "n"));
    else if (f == "min2max3-bipartite")
        out = min2max3_bipartite_start(read_graph6_single(o.pattern), param(v, "n"));
    else if (f == "counterexample-start")
        out = counterexample_start(read_graph6_single(o.start));
    else if (f == "ht-gadget")
        out = ht_gadget(param(v, "t"));
    else if (f == "ht-start")
        out = ht_start(param(v, "t"), read_graph6_single(o.start));
    else
        throw ArgumentError("unknown family \"" + f + "\"");
    if (!o.layout.empty())
        write_json_file(o.layout, to_json(out.layout));
    return {nullptr, graph6_encode(out.graph) + "\n", kPass};
}

std::string render(const Result& r)
{
    return r.body.is_null() ? r.text : r.body.dump(2) + "\n";
}

Result dispatch(const std::vector<std::string>& argv);

Result cmd_replay(const Options& o)
{
    const Json original = read_json_file(o.from);
    if (!original.contains("config") || !original["config"].contains("argv"))
        throw ArgumentError(o.from + " carries no recorded config");
    const auto argv = original["config"]["argv"].get<std::vector<std::string>>();
    const Result again = dispatch(argv);
    std::ifstream in(o.from);
    std::stringstream before;
    before << in.rdbuf();
    const bool same = render(again) == before.str();
    return {{{"ok", same}, {"replayed", o.from}}, {}, same ? kPass : kFail};
}

class UsageError : public std::runtime_error {
public:
    UsageError(std::string message, int code) : std::runtime_error(std::move(message)), code(code) {}
    int code;
};

Result dispatch(const std::vector<std::string>& argv)
{
    Options o;
    CLI::App app{"H-bootstrap percolation toolkit"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Run the process; writes the trajectory");
    run_cmd->add_option("--pattern", o.pattern, "pattern graph (graph6)")->required();
    run_cmd->add_option("--start", o.start, "start graph (graph6)")->required();
    run_cmd->add_option("--max-rounds", o.max_rounds, "round limit, 0 for C(n,2)+1");
    run_cmd->add_option("--engine", o.engine, "full or frontier")->check(CLI::IsMember({"full", "frontier"}));

    auto* search_cmd = app.add_subcommand("search", "Maximum running time over all starts");
    search_cmd->add_option("--pattern", o.pattern, "pattern graph (graph6)")->required();
    search_cmd->add_option("--n", o.n, "order of the starts");
    search_cmd->add_option("--stream", o.stream, "graph6 file of starts instead of the built-in enumerator");

    auto* verify_cmd = app.add_subcommand("verify", "Check a property; exit 2 on failure");
    verify_cmd->add_option("verb", o.verb,
                           "stability | self-percolation | simulation | tree-bound | girth-applicable | "
                           "bipartite-rounds")
        ->required();
    verify_cmd->add_option("--graph", o.graph, "graph (graph6)");
    verify_cmd->add_option("--pattern", o.pattern, "pattern graph for stability");
    verify_cmd->add_option("--outer", o.outer, "outer trajectory JSON");
    verify_cmd->add_option("--inner", o.inner, "inner trajectory JSON");
    verify_cmd->add_option("--subset", o.subset, "layout JSON or vertex list placing the inner graph");
    verify_cmd->add_option("--group", o.group, "layout group naming the inner vertices");
    verify_cmd->add_option("--trajectory", o.trajectory, "trajectory JSON for bipartite-rounds");
    verify_cmd->add_option("--samples", o.samples, "random starts for tree-bound");

    auto* construct_cmd = app.add_subcommand("construct", "Emit a generated graph as graph6");
    construct_cmd->add_option("family", o.family, "graph family")->required();
    construct_cmd->add_option("--params", o.params, "key=value parameters");
    construct_cmd->add_option("--pattern", o.pattern, "pattern for the layered constructions");
    construct_cmd->add_option("--start", o.start, "base graph for the gadget starts");
    construct_cmd->add_option("--layout", o.layout, "also write the named vertex groups as JSON");

    auto* replay_cmd = app.add_subcommand("replay", "Re-run a recorded result and compare byte for byte");
    replay_cmd->add_option("--from", o.from, "JSON result carrying a config")->required();

    for (auto* sub : {run_cmd, search_cmd, verify_cmd, construct_cmd, replay_cmd}) {
        sub->add_option("--out", o.out, "output file, - for stdout");
        if (sub != construct_cmd && sub != replay_cmd)
            sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        if (sub == verify_cmd)
            sub->add_option("--seed", o.seed, "seed for random starts");
    }

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), kPass);
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help(), kUsage);
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Result r;
    if (command == "run")
        r = cmd_run(o);
    else if (command == "search")
        r = cmd_search(o);
    else if (command == "verify")
        r = cmd_verify(o);
    else if (command == "construct")
        r = cmd_construct(o);
    else
        r = cmd_replay(o);
    if (command != "construct" && command != "replay")
        r.body["config"] = config_json(o, command, argv);
    r.out = o.out;
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const Result r = dispatch(args);
        const std::string& path = r.out;
        if (path == "-") {
            std::cout << render(r);
        } else {
            std::ofstream out(path);
            if (!out)
                throw ArgumentError("cannot write " + path);
            out << render(r);
        }
        return r.code;
    } catch (const UsageError& e) {
        (e.code == kPass ? std::cout : std::cerr) << e.what();
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "hboot: " << e.what() << "\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "hboot: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hboot: " << e.what() << "\n";
        return kUsage;
    }
}
