#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcharr/matching.hpp"
#include "matcharr/verify.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace matcharr;

using Edges = std::vector<std::size_t>;

namespace {

WeightPoint wp(std::initializer_list<long> xs)
{
    WeightPoint w;
    for (long x : xs)
        w.emplace_back(x);
    return w;
}

// Brute-force argmax over all edge subsets, independent of enumerate_matchings.
std::set<Edges> subset_argmax(const Graph& g, const WeightPoint& w, const EdgeNumbering& num)
{
    std::set<Edges> best;
    Rational best_weight;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        std::vector<int> used(g.vertex_count(), 0);
        Edges edges;
        Rational total = 0;
        bool ok = true;
        for (std::size_t i = 0; i < g.edge_count() && ok; ++i) {
            if (!((mask >> i) & 1))
                continue;
            ok = !used[g.edge(i).u]++ && !used[g.edge(i).v]++;
            edges.push_back(i);
            total += w[num.coordinate(i)];
        }
        if (!ok)
            continue;
        if (best.empty() || total > best_weight) {
            best = {edges};
            best_weight = total;
        } else if (total == best_weight) {
            best.insert(edges);
        }
    }
    return best;
}

std::set<Edges> as_set(const std::vector<Matching>& ms)
{
    std::set<Edges> out;
    for (const auto& m : ms)
        out.insert(m.edges);
    return out;
}

} // namespace

TEST_CASE("enumerate_matchings examples")
{
    const auto k3 = enumerate_matchings(complete_graph(3));
    REQUIRE(k3.size() == 4);
    CHECK(k3[0].empty());
    CHECK(enumerate_matchings(path_graph(1)).size() == 2);
    const auto c4 = enumerate_matchings(cycle_graph(4));
    CHECK(c4.size() == 7);
    CHECK(as_set(c4).count({0, 2}) == 1);
    CHECK(as_set(c4).count({1, 3}) == 1);
    CHECK(enumerate_matchings(edgeless_graph(3)).size() == 1);
}

TEST_CASE("matching counts agree with the subset oracle")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t v = 3 + seed % 5;
        const Graph g = random_graph(v, std::min<std::size_t>(seed % 11, v * (v - 1) / 2), seed);
        const auto ms = enumerate_matchings(g);
        CHECK(ms.size() == oracle::count_matchings(g));
        for (const auto& m : ms)
            CHECK(is_matching(g, m));
    }
    CHECK_FALSE(is_matching(path_graph(2), Matching{{0, 1}}));
    CHECK_FALSE(is_matching(path_graph(2), Matching{{5}}));
}

TEST_CASE("max_weight_matchings examples")
{
    const Graph k3 = complete_graph(3);
    CHECK(as_set(max_weight_matchings(k3, wp({3, 1, 1}))) == std::set<Edges>{{0}});
    CHECK(as_set(max_weight_matchings(k3, wp({-1, -2, -3}))) == std::set<Edges>{{}});
    CHECK(as_set(max_weight_matchings(k3, wp({1, 1, 1}))) == std::set<Edges>{{0}, {1}, {2}});
    CHECK_THROWS_AS(max_weight_matchings(k3, wp({1, 1})), std::invalid_argument);
    // weight 3 sits on the edge numbered 1, which is the third edge
    CHECK(as_set(max_weight_matchings(k3, wp({3, 1, 1}), EdgeNumbering({2, 3, 1}))) ==
          std::set<Edges>{{2}});
}

TEST_CASE("max_weight_matchings agrees with subset brute force")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-3, 3);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t v = 4 + seed % 3;
        const Graph g = random_graph(v, std::min<std::size_t>(2 + seed % 7, v * (v - 1) / 2), seed);
        const EdgeNumbering num = EdgeNumbering::random(g.edge_count(), rng);
        WeightPoint w;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            w.emplace_back(d(rng));
        CHECK(as_set(max_weight_matchings(g, w, num)) == subset_argmax(g, w, num));
    }
}

TEST_CASE("sign_vector examples")
{
    const Arrangement a = build_matching_arrangement(path_graph(2)); // [x1, x1-x2, x2]
    using S = Sign;
    CHECK(sign_vector(a, wp({2, 1})) == SignVector{S::positive, S::positive, S::positive});
    CHECK(sign_vector(a, wp({1, 2})) == SignVector{S::positive, S::negative, S::positive});
    try {
        sign_vector(a, wp({1, 1}));
        FAIL("expected OnHyperplane");
    } catch (const OnHyperplane& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("sign vectors are antipodal")
{
    const Arrangement a = build_matching_arrangement(cycle_graph(4));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        WeightPoint p = sample_generic_point(a, seed);
        const SignVector s = sign_vector(a, p);
        for (auto& x : p)
            x = -x;
        const SignVector t = sign_vector(a, p);
        REQUIRE(s.size() == t.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(static_cast<int>(s[i]) == -static_cast<int>(t[i]));
    }
}

TEST_CASE("sample_generic_point is deterministic and off every hyperplane")
{
    const Arrangement a = build_matching_arrangement(complete_graph(4));
    CHECK(sample_generic_point(a, 17) == sample_generic_point(a, 17));
    CHECK(sample_generic_point(a, 17) != sample_generic_point(a, 18));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const WeightPoint p = sample_generic_point(a, seed);
        CHECK(p.size() == 6);
        CHECK_NOTHROW(sign_vector(a, p));
        for (const auto& x : p) {
            CHECK(x.get_den() == 1);
            CHECK(abs(x) <= 1000000);
        }
    }
    CHECK(sample_generic_point(Arrangement(3), 1).size() == 3);
}

TEST_CASE("symdiff_decompose examples")
{
    const auto c4 = symdiff_decompose({{0, 2}}, {{1, 3}}, cycle_graph(4));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].kind == SequenceKind::even_cycle);
    CHECK(c4[0].edges.size() == 4);
    CHECK(symdiff_decompose({{0}}, {{0}}, path_graph(2)).empty());
    const auto p = symdiff_decompose({{0}}, {{1}}, path_graph(2));
    REQUIRE(p.size() == 1);
    CHECK(p[0].kind == SequenceKind::path);
    CHECK(p[0].edges == Edges{0, 1});
}

TEST_CASE("symmetric differences split into alternating paths and even cycles")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_graph(5 + seed % 3, 4 + seed % 6, seed);
        const auto ms = enumerate_matchings(g);
        const EdgeNumbering num = EdgeNumbering::random(g.edge_count(), rng);
        WeightPoint w;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            w.emplace_back(d(rng));
        for (std::size_t i = 0; i < ms.size(); i += 3)
            for (std::size_t j = 0; j < ms.size(); j += 2) {
                const std::set<std::size_t> in1(ms[i].edges.begin(), ms[i].edges.end());
                std::size_t total = 0;
                for (const auto& c : symdiff_decompose(ms[i], ms[j], g)) {
                    CHECK(is_valid_sequence(g, c));
                    if (c.kind == SequenceKind::even_cycle)
                        CHECK(c.edges.size() % 2 == 0);
                    for (std::size_t k = 1; k < c.edges.size(); ++k)
                        CHECK(in1.count(c.edges[k]) != in1.count(c.edges[k - 1]));
                    total += c.edges.size();

                    // swapping a component changes the weight by the hyperplane's value
                    Rational delta = 0;
                    for (std::size_t e : c.edges)
                        delta += in1.count(e) ? w[num.coordinate(e)] : -w[num.coordinate(e)];
                    const Normal n = normal_vector(c, num).normal;
                    Rational dot = 0;
                    for (std::size_t k = 0; k < n.size(); ++k)
                        dot += n[k] * w[k];
                    CHECK(abs(delta) == abs(dot));
                }
                std::vector<std::size_t> sym;
                std::set_symmetric_difference(ms[i].edges.begin(), ms[i].edges.end(), ms[j].edges.begin(),
                                              ms[j].edges.end(), std::back_inserter(sym));
                CHECK(total == sym.size());
            }
    }
}

TEST_CASE("probe examples")
{
    const RegionReport k3 = probe_theorem2(complete_graph(3), EdgeNumbering::identity(3), 200, 7);
    CHECK(k3.samples == 200);
    CHECK(k3.seed == 7);
    CHECK(k3.constancy_violations == 0);
    CHECK(k3.uniqueness_violations == 0);
    CHECK(k3.sign_vectors_seen <= 24);
    CHECK(k3.distinct_argmax_seen <= 4);

    const RegionReport edge = probe_theorem2(path_graph(1), EdgeNumbering::identity(1), 50, 1);
    CHECK(edge.sign_vectors_seen == 2);
    CHECK(edge.distinct_argmax_seen == 2);
    CHECK(edge.constancy_violations == 0);
}

TEST_CASE("probe is reproducible and seeds are mixed per sample")
{
    const Graph g = cycle_graph(4);
    const auto a = probe_theorem2(g, EdgeNumbering::identity(4), 100, 42);
    const auto b = probe_theorem2(g, EdgeNumbering::identity(4), 100, 42);
    CHECK(a.sign_vectors_seen == b.sign_vectors_seen);
    CHECK(a.distinct_argmax_seen == b.distinct_argmax_seen);
    CHECK(sample_seed(1, 0) != sample_seed(1, 1));
    CHECK(sample_seed(1, 0) != sample_seed(2, 0));
    CHECK(sample_seed(5, 3) == sample_seed(5, 3));
}

TEST_CASE("matching guard")
{
    CHECK_THROWS_AS(enumerate_matchings(path_graph(13)), GuardError);
}
