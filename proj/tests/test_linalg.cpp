#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcharr/linalg.hpp"

#include <random>

using namespace matcharr;

namespace {

RatVector rv(std::initializer_list<long> xs)
{
    RatVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> d(-1, 1);
    RatMatrix m(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        RatVector row;
        for (std::size_t c = 0; c < cols; ++c)
            row.emplace_back(d(rng));
        m.push_back(row);
    }
    return m;
}

} // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(RatMatrix(2, {rv({1, 0}), rv({0, 1}), rv({1, -1})})) == 2);
    CHECK(rank(RatMatrix(3)) == 0);
    CHECK(rank(RatMatrix(3, {rv({1, -1, 0}), rv({0, 1, -1}), rv({-1, 0, 1})})) == 2);
    CHECK(rank(RatMatrix(2, {rv({0, 0})})) == 0);
    CHECK(rank(RatMatrix(2, {RatVector{Rational(1, 2), Rational(1, 3)}, rv({3, 2})})) == 1);
}

TEST_CASE("row length is checked")
{
    RatMatrix m(2);
    CHECK_THROWS_AS(m.push_back(rv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("in_span examples")
{
    const RatMatrix e12(3, {rv({1, 0, 0}), rv({0, 1, 0})});
    CHECK(in_span(rv({1, -1, 0}), e12));
    CHECK_FALSE(in_span(rv({0, 0, 1}), e12));
    CHECK(in_span(rv({1, -1, 1}), RatMatrix(3, {rv({1, -1, 0}), rv({0, 0, 1})})));
    CHECK(in_span(rv({0, 0, 0}), RatMatrix(3)));
    CHECK_THROWS(in_span(rv({1, 0}), e12));
}

TEST_CASE("rank is invariant under row permutation and scaling")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix m = random_matrix(rng, 1 + trial % 6, 1 + trial % 5);
        auto rows = m.data();
        std::shuffle(rows.begin(), rows.end(), rng);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (auto& x : rows[i])
                x *= Rational(static_cast<long>(i) + 2, 3);
        CHECK(rank(RatMatrix(m.cols(), rows)) == rank(m));
    }
}

TEST_CASE("span is closed under addition")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const RatMatrix basis = random_matrix(rng, 2, 4);
        const RatMatrix probes = random_matrix(rng, 6, 4);
        for (std::size_t i = 0; i < probes.rows(); ++i)
            for (std::size_t j = 0; j < probes.rows(); ++j) {
                if (!in_span(probes.row(i), basis) || !in_span(probes.row(j), basis))
                    continue;
                RatVector sum = probes.row(i);
                for (std::size_t k = 0; k < sum.size(); ++k)
                    sum[k] += probes.row(j)[k];
                CHECK(in_span(sum, basis));
            }
        CHECK(in_span(basis.row(0), basis));
    }
}

TEST_CASE("echelon basis agrees between machine and big integers")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        EchelonBasis<std::int64_t> small(5);
        EchelonBasis<BigInt> big(5);
        for (int k = 0; k < 7; ++k) {
            std::vector<std::int64_t> v(5);
            std::vector<BigInt> w(5);
            for (std::size_t i = 0; i < 5; ++i) {
                v[i] = d(rng);
                w[i] = v[i];
            }
            CHECK(small.contains(v) == big.contains(w));
            CHECK(small.insert(v) == big.insert(w));
            CHECK(small.rank() == big.rank());
        }
    }
}

TEST_CASE("fm_feasible examples")
{
    StrictSystem contradiction(1);
    contradiction.add(rv({1}));
    contradiction.add(rv({-1}));
    CHECK_FALSE(fm_feasible(contradiction));

    StrictSystem chain(2);
    chain.add(rv({1, 0}));
    chain.add(rv({0, 1}));
    chain.add(rv({1, -1}));
    CHECK(fm_feasible(chain));

    StrictSystem empty(3);
    CHECK(fm_feasible(empty));

    StrictSystem s(2);
    CHECK_THROWS_AS(s.add(rv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(s.add(rv({1})), std::invalid_argument);
}

TEST_CASE("six of eight sign patterns over x1, x2, x1-x2 are feasible")
{
    const std::vector<RatVector> normals{rv({1, 0}), rv({0, 1}), rv({1, -1})};
    int feasible = 0;
    for (int mask = 0; mask < 8; ++mask) {
        StrictSystem s(2);
        for (int i = 0; i < 3; ++i)
            s.add(normals[i], (mask >> i) & 1 ? Strict::negative : Strict::positive);
        // a witness exists iff the signs of x1, x2, x1-x2 are consistent
        bool witness = false;
        for (int x = -3; x <= 3 && !witness; ++x)
            for (int y = -3; y <= 3 && !witness; ++y) {
                const int vals[3] = {x, y, x - y};
                bool ok = true;
                for (int i = 0; i < 3; ++i)
                    ok = ok && ((mask >> i) & 1 ? vals[i] < 0 : vals[i] > 0);
                witness = ok;
            }
        CHECK(fm_feasible(s) == witness);
        feasible += witness;
    }
    CHECK(feasible == 6);
}

TEST_CASE("fm_feasible agrees with random witnesses")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> coef(-1, 1);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t dim = 1 + trial % 4;
        StrictSystem s(dim);
        while (s.constraints().size() < 2 + static_cast<std::size_t>(trial % 6)) {
            RatVector n;
            bool nonzero = false;
            for (std::size_t i = 0; i < dim; ++i) {
                n.emplace_back(coef(rng));
                nonzero = nonzero || n.back() != 0;
            }
            if (nonzero)
                s.add(n, rng() & 1 ? Strict::positive : Strict::negative);
        }
        bool found = false;
        for (int k = 0; k < 10000 && !found; ++k) {
            std::vector<long> x(dim);
            for (auto& xi : x)
                xi = coord(rng);
            found = std::all_of(s.constraints().begin(), s.constraints().end(), [&](const auto& c) {
                Rational dot = 0;
                for (std::size_t i = 0; i < dim; ++i)
                    dot += c.normal[i] * x[i];
                return c.sign == Strict::positive ? dot > 0 : dot < 0;
            });
        }
        if (found)
            CHECK(fm_feasible(s));
    }
}

TEST_CASE("fm_feasible enforces its guards")
{
    StrictSystem wide(6);
    wide.add(rv({1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(fm_feasible(wide), GuardError);
    StrictSystem tall(1);
    for (int i = 0; i < 17; ++i)
        tall.add(rv({1}));
    CHECK_THROWS_AS(fm_feasible(tall), GuardError);
}
