#pragma once

#include "hboot/analysis.hpp"
#include "hboot/constructions.hpp"
#include "hboot/process.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hboot {

using Json = nlohmann::json;

// JSON views of the result types. Graphs are graph6 strings, edges are
// [u, v] pairs, keys come out sorted.

Json to_json(const Trajectory& t);
/// Rebuilds a trajectory and checks that its fields agree: final equals start
/// plus all rounds, tau matches the round count. Throws ParseError.
Trajectory trajectory_from_json(const Json& j);

Json to_json(const GadgetLayout& layout);
GadgetLayout layout_from_json(const Json& j);

Json to_json(const SearchReport& r);
Json to_json(const TreeParams& p);
Json to_json(const SimulationCertificate& c);
Json to_json(const CopySequence& s);

/// Reproducible description of one CLI invocation.
struct ExperimentConfig {
    std::string command;
    std::string pattern;
    std::string start;
    std::int64_t max_rounds = 0;
    std::string out;
    int jobs = 1;
    std::uint64_t seed = 0;
};

Json to_json(const ExperimentConfig& c);

Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline; "-" writes to stdout.
void write_json_file(const std::string& path, const Json& j);

} // namespace hboot
