#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcharr/paths.hpp"
#include "matcharr/verify.hpp"
#include "oracles.hpp"

#include <set>

using namespace matcharr;

using Edges = std::vector<std::size_t>;

namespace {

std::vector<Edges> edge_lists(const std::vector<EdgeSequence>& seqs)
{
    std::vector<Edges> out;
    for (const auto& s : seqs)
        out.push_back(s.edges);
    return out;
}

} // namespace

TEST_CASE("simple paths of small graphs")
{
    CHECK(edge_lists(enumerate_simple_paths(path_graph(2))) == std::vector<Edges>{{0}, {1}, {0, 1}});
    CHECK(edge_lists(enumerate_simple_paths(path_graph(1))) == std::vector<Edges>{{0}});

    const auto k3 = enumerate_simple_paths(complete_graph(3));
    REQUIRE(k3.size() == 6);
    CHECK(std::count_if(k3.begin(), k3.end(), [](const auto& s) { return s.edges.size() == 1; }) == 3);
    CHECK(std::count_if(k3.begin(), k3.end(), [](const auto& s) { return s.edges.size() == 2; }) == 3);
    CHECK(enumerate_simple_paths(edgeless_graph(3)).empty());
}

TEST_CASE("even cycles of small graphs")
{
    CHECK(enumerate_even_cycles(complete_graph(3)).empty());
    const auto c4 = enumerate_even_cycles(cycle_graph(4));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].kind == SequenceKind::even_cycle);
    CHECK(c4[0].edges == Edges{0, 1, 2, 3});
    CHECK(c4[0].vertices.front() == c4[0].vertices.back());
    CHECK(enumerate_even_cycles(complete_graph(4)).size() == 3);
    CHECK(enumerate_even_cycles(cycle_graph(5)).empty());
    CHECK(enumerate_even_cycles(cycle_graph(6)).size() == 1);
}

TEST_CASE("canonical cycle starts at its smallest edge and turns toward the smaller neighbour")
{
    // C4 with edges listed out of cyclic order: 0:(0,1) 1:(2,3) 2:(1,2) 3:(3,0)
    const Graph g(4, {{0, 1}, {2, 3}, {1, 2}, {3, 0}});
    const auto cycles = enumerate_even_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].edges == Edges{0, 2, 1, 3});
    CHECK(is_valid_sequence(g, cycles[0]));
}

TEST_CASE("invalid sequences are rejected")
{
    const Graph g = path_graph(3);
    CHECK_FALSE(is_valid_sequence(g, {SequenceKind::path, {0, 2}, {0, 1, 2}}));
    CHECK_FALSE(is_valid_sequence(g, {SequenceKind::path, {0, 0}, {0, 1, 0}}));
    CHECK_FALSE(is_valid_sequence(g, {SequenceKind::path, {}, {0}}));
    CHECK(is_valid_sequence(g, {SequenceKind::path, {1, 2}, {1, 2, 3}}));
    CHECK_FALSE(is_valid_sequence(complete_graph(3),
                                  {SequenceKind::even_cycle, {0, 1, 2}, {0, 1, 2, 0}}));
}

TEST_CASE("trees have C(n+1,2) paths and no even cycles")
{
    for (std::size_t v = 2; v <= 8; ++v)
        for (const Graph& t : all_trees(v)) {
            const std::size_t n = t.edge_count();
            CHECK(enumerate_simple_paths(t).size() == oracle::binomial(n + 1, 2));
            CHECK(enumerate_even_cycles(t).empty());
        }
}

TEST_CASE("path and cycle counts agree with subset oracles")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t v = 3 + seed % 5;
        const std::size_t e = std::min<std::size_t>(seed % 10, v * (v - 1) / 2);
        const Graph g = random_graph(v, e, seed);
        const auto paths = enumerate_simple_paths(g);
        const auto cycles = enumerate_even_cycles(g);
        CHECK(paths.size() == oracle::count_paths(g));
        CHECK(cycles.size() == oracle::count_even_cycles(g));

        std::set<Edges> seen;
        for (const auto& p : paths) {
            CHECK(is_valid_sequence(g, p));
            CHECK(canonicalize(reversed(p)) == p);
            CHECK(canonicalize(p) == p);
            Edges sorted = p.edges;
            std::sort(sorted.begin(), sorted.end());
            CHECK(seen.insert(sorted).second);
        }
        for (const auto& c : cycles) {
            CHECK(is_valid_sequence(g, c));
            CHECK(c.edges.size() % 2 == 0);
            CHECK(c.edges.size() >= 4);
            CHECK(canonicalize(reversed(c)) == c);
            CHECK(c.edges.front() == *std::min_element(c.edges.begin(), c.edges.end()));
        }
    }
}

TEST_CASE("path enumeration respects the edge guard")
{
    CHECK_THROWS_AS(enumerate_simple_paths(path_graph(13)), GuardError);
    CHECK_THROWS_AS(enumerate_even_cycles(path_graph(13)), GuardError);
    CHECK_NOTHROW(enumerate_simple_paths(path_graph(12)));
}
