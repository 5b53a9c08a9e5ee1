#pragma once

#include "matcharr/arrangement.hpp"
#include "matcharr/linalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace matcharr {

// Edge positions, ascending; no two share a vertex.
struct Matching {
    std::vector<std::size_t> edges;

    bool empty() const noexcept { return edges.empty(); }
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

// Weight of the edge with number k sits in coordinate k - 1.
using WeightPoint = RatVector;

enum class Sign : int { negative = -1, positive = 1 };
using SignVector = std::vector<Sign>;

class OnHyperplane : public std::runtime_error {
public:
    explicit OnHyperplane(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Components of a symmetric difference of two matchings; the walk alternates
// between the two matchings.
using SymDiffComponent = EdgeSequence;

bool is_matching(const Graph& g, const Matching& m);

// All matchings including the empty one, ordered by (size, edges).
std::vector<Matching> enumerate_matchings(const Graph& g, const Limits& limits = {});

Rational matching_weight(const Matching& m, const WeightPoint& w, const EdgeNumbering& numbering);

// Every matching of maximum weight, ordered. Throws std::invalid_argument if
// the weight vector length differs from |E|.
std::vector<Matching> max_weight_matchings(const Graph& g, const WeightPoint& w,
                                           const EdgeNumbering& numbering,
                                           const Limits& limits = {});
std::vector<Matching> max_weight_matchings(const Graph& g, const WeightPoint& w,
                                           const Limits& limits = {});

// Sign of <normal, p> per hyperplane in arrangement order. Throws OnHyperplane.
SignVector sign_vector(const Arrangement& a, const WeightPoint& p);

// Integer point in [-10^6, 10^6]^n off every hyperplane, redrawn until generic
// (at most 10^4 draws, then std::runtime_error). Deterministic in seed.
WeightPoint sample_generic_point(const Arrangement& a, std::uint64_t seed);

std::vector<SymDiffComponent> symdiff_decompose(const Matching& m1, const Matching& m2,
                                                const Graph& g);

struct RegionReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t sign_vectors_seen = 0;
    std::size_t constancy_violations = 0;
    std::size_t uniqueness_violations = 0;
    std::size_t distinct_argmax_seen = 0;
};

// Seed used for sample `index` of a probe run with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

// Samples generic weight points, groups them by sign vector and checks that
// every group has one argmax set and that each argmax set is a single matching.
RegionReport probe_theorem2(const Graph& g, const EdgeNumbering& numbering, std::size_t samples,
                            std::uint64_t seed, const Limits& limits = {});

} // namespace matcharr
