#pragma once

#include "matcharr/graph.hpp"
#include "matcharr/paths.hpp"

#include <cstddef>
#include <vector>

namespace matcharr {

// Normal of a central hyperplane, entries in {-1, 0, +1}.
using Normal = std::vector<int>;

// Flips all signs when the first nonzero entry is negative.
Normal normalize_sign(Normal n);

struct Hyperplane {
    Normal normal;                      // nonzero, first nonzero entry +1
    std::vector<EdgeSequence> sources;  // every generating sequence, for diagnostics
};

// Central arrangement in R^dimension. Hyperplanes are distinct and ordered by
// normal, lexicographically descending (so x1 precedes x1 - x2 precedes x2).
class Arrangement {
public:
    explicit Arrangement(std::size_t dimension = 0) : dimension_(dimension) {}
    // Normalizes signs, merges duplicates (concatenating sources) and sorts.
    // Throws std::invalid_argument for zero normals or wrong lengths.
    Arrangement(std::size_t dimension, std::vector<Hyperplane> hyperplanes);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    bool empty() const noexcept { return hyperplanes_.empty(); }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }
    const Normal& normal(std::size_t i) const { return hyperplanes_.at(i).normal; }
    std::vector<Normal> normals() const;
    // Index of the hyperplane with this (normalized) normal, or size().
    std::size_t find(const Normal& n) const;

private:
    std::size_t dimension_;
    std::vector<Hyperplane> hyperplanes_;
};

// Coordinate N(r_i) gets (-1)^(i+1) along the traversal, then sign-normalized.
Hyperplane normal_vector(const EdgeSequence& seq, const EdgeNumbering& numbering);

Arrangement build_matching_arrangement(const Graph& g, const EdgeNumbering& numbering,
                                       const Limits& limits = {});
Arrangement build_matching_arrangement(const Graph& g, const Limits& limits = {});

// One hyperplane x_u - x_v = 0 per edge, in R^|V|.
Arrangement build_graphical_arrangement(const Graph& g);

bool arrangements_identical(const Arrangement& a, const Arrangement& b);

// Vertices i, j adjacent iff the arrangement contains x_i - x_j = 0.
Graph reconstruct_line_graph(const Arrangement& a);

} // namespace matcharr
