#pragma once

#include "hboot/graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hboot {

/// Isomorphism-invariant encoding of a graph.
///
/// bytes holds the order (two bytes, big-endian) followed by the upper
/// triangle of the relabeled adjacency matrix, row-major, packed MSB first.
/// order[k] is the original vertex placed at canonical position k.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    std::vector<int> order;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes <=> b.bytes; }
};

/// Individualisation-refinement search over equitable partitions, keeping the
/// lexicographically largest leaf. Subtrees are pruned by automorphisms found
/// along the way and by twin transpositions.
CanonicalForm canonical_form(const Graph& g);

/// g relabeled into canonical position order.
Graph canonical_graph(const Graph& g);

/// A bijection phi with phi(v) in b for v in a, preserving adjacency and the
/// given vertex colours. Colours are arbitrary integers; an empty span means
/// uniform colouring.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, std::span<const int> colours_a,
                                                 const Graph& b, std::span<const int> colours_b);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Edge classes under Aut(h).
struct EdgeOrbits {
    std::vector<Edge> representatives;   ///< first edge (lexicographic) of each orbit
    std::vector<bool> reversible;        ///< some automorphism swaps the representative's endpoints
    std::vector<int> orbit_of;           ///< orbit index for each edge of h.edges()
};

EdgeOrbits edge_orbits(const Graph& h);

} // namespace hboot
