#include "hboot/graph6.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace hboot {

namespace {

constexpr int kBias = 63;

void append_sextets(std::string& out, std::uint64_t value, int sextets)
{
    for (int i = sextets - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kBias));
}

} // namespace

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 byte " + std::to_string(c) + " outside [63,126]", i);
    }
    if (text.empty())
        throw ParseError("graph6: empty input", 0);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i]) - kBias; };
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
        if (text.size() < 8)
            throw ParseError("graph6: truncated 8-byte order header", text.size());
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | value(i);
        pos = 8;
    } else {
        if (text.size() < 4)
            throw ParseError("graph6: truncated 4-byte order header", text.size());
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | value(i);
        pos = 4;
    }
    if (n > static_cast<std::uint64_t>(kMaxVertices))
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxVertices),
                         0);

    const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() < pos + body)
        throw ParseError("graph6: body too short for order " + std::to_string(n), text.size());
    if (text.size() > pos + body)
        throw ParseError("graph6: trailing bytes after body", pos + body);

    Graph g(static_cast<int>(n));
    std::uint64_t k = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = pos + static_cast<std::size_t>(k / 6);
            int shift = 5 - static_cast<int>(k % 6);
            if ((value(byte) >> shift) & 1U)
                g.add_edge(i, j);
        }
    if (pairs % 6 != 0) {
        int pad = 6 - static_cast<int>(pairs % 6);
        std::size_t last = pos + body - 1;
        if (value(last) & ((1U << pad) - 1))
            throw ParseError("graph6: non-zero padding bits", last);
    }
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in, const std::string& source_name)
{
    std::vector<Graph> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const ParseError& e) {
            throw ParseError(source_name + ":" + std::to_string(lineno) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_graph6_stream(in, path);
}

Graph read_graph6_single(const std::string& path)
{
    auto graphs = read_graph6_file(path);
    if (graphs.empty())
        throw ParseError(path + ": no graph found", 0);
    return graphs.front();
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    for (const auto& g : graphs)
        out << graph6_encode(g) << '\n';
}

} // namespace hboot
