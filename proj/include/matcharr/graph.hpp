#pragma once

#include "matcharr/limits.hpp"
#include "matcharr/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matcharr {

// Vertices are 0-based in memory; the text format is 1-based.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    std::size_t other(std::size_t w) const { return w == u ? v : u; }
    bool touches(std::size_t w) const { return w == u || w == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind { loop, parallel_edge, vertex_out_of_range, malformed };

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what, std::size_t line = 0);

    GraphErrorKind kind() const noexcept { return kind_; }
    // 1-based line of the offending input, 0 when not parsing
    std::size_t line() const noexcept { return line_; }

private:
    GraphErrorKind kind_;
    std::size_t line_;
};

// Simple undirected graph. The position of an edge in edges() is its default
// number (position + 1) under the identity numbering.
class Graph {
public:
    Graph() = default;
    // Throws GraphError on loops, parallel edges or out-of-range endpoints.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    // Edge indices incident to v, ascending.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
    std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
    std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const;
    bool adjacent(std::size_t a, std::size_t b) const { return edge_between(a, b).has_value(); }
    std::vector<std::size_t> degree_sequence() const; // sorted descending

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

// A bijection from edge positions to numbers 1..n.
class EdgeNumbering {
public:
    EdgeNumbering() = default;
    // numbers[pos] is the number of the edge at position pos. Throws
    // std::invalid_argument unless numbers is a permutation of 1..n.
    explicit EdgeNumbering(std::vector<std::size_t> numbers);

    static EdgeNumbering identity(std::size_t n);
    static EdgeNumbering random(std::size_t n, std::mt19937_64& rng);

    std::size_t size() const noexcept { return numbers_.size(); }
    std::size_t number(std::size_t position) const { return numbers_.at(position); }
    // 0-based coordinate of the edge in R^n
    std::size_t coordinate(std::size_t position) const { return numbers_.at(position) - 1; }
    // position of the edge carrying the given 1-based number
    std::size_t position_of(std::size_t number) const;
    const std::vector<std::size_t>& numbers() const noexcept { return numbers_; }

    friend bool operator==(const EdgeNumbering&, const EdgeNumbering&) = default;

private:
    std::vector<std::size_t> numbers_;
};

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

struct Component {
    Graph graph;                            // local ids 0..k-1
    std::vector<std::size_t> vertices;      // local id -> original vertex
    std::vector<std::size_t> edge_indices;  // local edge -> original edge position
};

// Components ordered by smallest original vertex. Isolated vertices become
// edgeless one-vertex components.
std::vector<Component> connected_components(const Graph& g);

Graph line_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});

IntPolynomial chromatic_polynomial(const Graph& g, const Limits& limits = {});
std::uint64_t count_acyclic_orientations(const Graph& g, const Limits& limits = {});

// Constructions used by tests and the theorem harness.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t edges);
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
// Vertices of b are shifted by a.vertex_count(); edges of a come first.
Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union with vertex `at_b` of b identified with vertex `at_a` of a.
// Edges of a come first.
Graph glue(const Graph& a, std::size_t at_a, const Graph& b, std::size_t at_b);

} // namespace matcharr
