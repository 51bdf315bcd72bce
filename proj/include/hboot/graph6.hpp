#pragma once

#include "hboot/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hboot {

/// Encode in graph6: order header, then the upper triangle in column order
/// (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups, each
/// offset by 63. No ">>graph6<<" header, no trailing newline.
std::string graph6_encode(const Graph& g);

/// Decode one graph6 line (without its newline). Throws ParseError naming
/// the offset of the first bad byte; non-zero padding bits count as bad.
Graph graph6_decode(std::string_view text);

/// One graph per line. Empty lines are skipped; errors report the line.
std::vector<Graph> read_graph6_stream(std::istream& in, const std::string& source_name = "<stream>");
std::vector<Graph> read_graph6_file(const std::string& path);
/// The first graph of a file.
Graph read_graph6_single(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

} // namespace hboot
