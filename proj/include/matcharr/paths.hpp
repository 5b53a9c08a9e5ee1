#pragma once

#include "matcharr/graph.hpp"

#include <cstddef>
#include <vector>

namespace matcharr {

enum class SequenceKind { path, even_cycle };

// A walk through the graph given by its edges and the vertices it visits.
// For a path, vertices.size() == edges.size() + 1 and all vertices differ.
// For an even cycle, vertices.front() == vertices.back() and the edge count is
// even and at least 4. Edge i joins vertices[i] and vertices[i + 1].
struct EdgeSequence {
    SequenceKind kind = SequenceKind::path;
    std::vector<std::size_t> edges;
    std::vector<std::size_t> vertices;

    friend bool operator==(const EdgeSequence&, const EdgeSequence&) = default;
};

// Checks the kind invariants of seq against g, using only the vertex sequence
// and the graph's edge endpoints.
bool is_valid_sequence(const Graph& g, const EdgeSequence& seq);

// Canonical representative of the object seq traverses.
//   path: the direction whose first edge index is smaller (single edges: the
//         direction starting at the smaller vertex);
//   even cycle: starts at the smallest edge index and continues toward the
//         smaller of its two neighbouring edge indices.
EdgeSequence canonicalize(const EdgeSequence& seq);

EdgeSequence reversed(const EdgeSequence& seq);

// One canonical representative per simple path with at least one edge, sorted
// by (length, edge indices).
std::vector<EdgeSequence> enumerate_simple_paths(const Graph& g, const Limits& limits = {});

// One canonical representative per simple cycle of even length, sorted by
// (length, edge indices).
std::vector<EdgeSequence> enumerate_even_cycles(const Graph& g, const Limits& limits = {});

} // namespace matcharr
