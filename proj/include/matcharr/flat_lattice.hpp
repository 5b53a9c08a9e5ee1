#pragma once

#include "matcharr/arrangement.hpp"
#include "matcharr/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace matcharr {

// Hyperplane index set; bit i stands for hyperplane i of the arrangement.
using FlatMask = std::uint64_t;

struct Flat {
    FlatMask members = 0;
    std::size_t rank = 0;

    bool contains(std::size_t hyperplane) const { return (members >> hyperplane) & 1U; }
    bool is_subset_of(const Flat& other) const { return (members & ~other.members) == 0; }
    std::vector<std::size_t> member_indices() const;
    std::size_t size() const;

    friend bool operator==(const Flat&, const Flat&) = default;
};

// Lattice of flats of the matroid of normal vectors. Flats are stored bottom
// first, grouped by ascending rank; within a rank they appear in discovery
// order, which is deterministic.
class FlatLattice {
public:
    FlatLattice(std::vector<Flat> flats, std::vector<std::vector<std::size_t>> lower_covers,
                std::vector<BigInt> mobius, std::size_t hyperplane_count);

    std::size_t size() const noexcept { return flats_.size(); }
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    const Flat& flat(std::size_t i) const { return flats_.at(i); }
    const Flat& bottom() const { return flats_.front(); }
    const Flat& top() const { return flats_.back(); }
    std::size_t matroid_rank() const noexcept { return flats_.back().rank; }
    std::size_t hyperplane_count() const noexcept { return hyperplane_count_; }

    // Indices of the flats covered by flat i.
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_covers_.at(i); }
    const BigInt& mobius(std::size_t i) const { return mobius_.at(i); }
    const std::vector<BigInt>& mobius() const noexcept { return mobius_; }
    bool leq(std::size_t a, std::size_t b) const { return flats_.at(a).is_subset_of(flats_.at(b)); }

    // Flat count per rank, index = rank.
    std::vector<std::size_t> rank_profile() const;

private:
    std::vector<Flat> flats_;
    std::vector<std::vector<std::size_t>> lower_covers_;
    std::vector<BigInt> mobius_;
    std::size_t hyperplane_count_;
};

Flat closure(const Arrangement& a, std::span<const std::size_t> subset);

FlatLattice build_flat_lattice(const Arrangement& a, const Limits& limits = {});

// sum mu(x) t^(rank(M) - rank(x)), times t^(dimension - rank(M))
IntPolynomial characteristic_polynomial(const FlatLattice& lattice, std::size_t dimension);
IntPolynomial characteristic_polynomial(const Arrangement& a, const Limits& limits = {});

// (-1)^dimension chi(-1)
BigInt region_count(const IntPolynomial& chi, std::size_t dimension);
BigInt region_count(const Arrangement& a, const Limits& limits = {});

} // namespace matcharr
