#pragma once

#include "matcharr/arrangement.hpp"
#include "matcharr/flat_lattice.hpp"
#include "matcharr/graph.hpp"
#include "matcharr/matching.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace matcharr {

enum class TheoremId {
    T1_reconstruction,
    T1_exception,
    T2_regions,
    T3_invariance,
    T4_product,
    T5_tree,
    T6_tails,
    chromatic_graphical,
    remark_unions,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct TheoremReport {
    TheoremId id = TheoremId::T1_reconstruction;
    std::string instance;
    bool pass = false;
    nlohmann::json details = nlohmann::json::object();
};

// One tree per isomorphism class on v vertices.
std::vector<Graph> all_trees(std::size_t v, const Limits& limits = {});

// One graph per isomorphism class on exactly v vertices (v <= 6).
std::vector<Graph> all_graphs(std::size_t v, const Limits& limits = {});

// Uniform simple graph with exactly e edges; throws std::invalid_argument when
// e > C(v, 2).
Graph random_graph(std::size_t v, std::size_t e, std::uint64_t seed);

// Points of GF(q)^n on no hyperplane. q must be a prime above 16.
BigInt finite_field_count(const Arrangement& a, std::uint64_t q, const Limits& limits = {});

// Number of strict sign vectors realized by some point (exact, via
// Fourier-Motzkin on each prefix).
BigInt enumerate_regions_exact(const Arrangement& a, const Limits& limits = {});

// Theorem checks. Each report carries the compared polynomials or counts.
TheoremReport verify_reconstruction(const Graph& g, const EdgeNumbering& numbering,
                                    const Limits& limits = {});
TheoremReport verify_k3_star_exception(const Limits& limits = {});
TheoremReport verify_regions(const Graph& g, const EdgeNumbering& numbering, std::size_t samples,
                             std::uint64_t seed, const Limits& limits = {});
TheoremReport verify_numbering_invariance(const Graph& g, std::size_t numberings,
                                          std::uint64_t seed, const Limits& limits = {});
TheoremReport verify_product(const Graph& g1, const Graph& g2, const Limits& limits = {});
TheoremReport verify_component_product(const Graph& g, const Limits& limits = {});
TheoremReport verify_tree_formula(const Graph& tree, const Limits& limits = {});
// Glues tail1 (at root1) and tail2 (at root2) onto the same vertex u of head.
TheoremReport verify_tails(const Graph& head, std::size_t u, const Graph& tail1, std::size_t root1,
                           const Graph& tail2, std::size_t root2, const Limits& limits = {});
TheoremReport verify_remark_unions(const Limits& limits = {});
TheoremReport verify_chromatic_graphical(const Graph& g, const Limits& limits = {});

struct GraphCheckOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 7;
    std::size_t numberings = 20;
};

// Runs a theorem check that takes a single graph. Throws std::invalid_argument
// for ids that need other inputs, and for T5_tree on a non-tree.
TheoremReport verify_theorem(TheoremId id, const Graph& g, const GraphCheckOptions& options = {},
                             const Limits& limits = {});

// Fast fixed instance set covering every theorem id.
std::vector<TheoremReport> default_suite(const Limits& limits = {});

bool is_tree(const Graph& g);

} // namespace matcharr
