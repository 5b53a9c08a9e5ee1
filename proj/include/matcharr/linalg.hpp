#pragma once

#include "matcharr/limits.hpp"
#include "matcharr/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace matcharr {

using RatVector = std::vector<Rational>;

// Rectangular matrix of exact rationals stored row-major as RatVectors.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t cols) : cols_(cols) {}
    // Throws std::invalid_argument if the rows have different lengths.
    RatMatrix(std::size_t cols, std::vector<RatVector> rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const RatVector& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<RatVector>& data() const noexcept { return rows_; }
    void push_back(RatVector r);

private:
    std::size_t cols_ = 0;
    std::vector<RatVector> rows_;
};

RatVector to_rational(std::span<const int> v);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

// True iff v lies in the row space of basis. Throws std::invalid_argument on a
// dimension mismatch.
bool in_span(const RatVector& v, const RatMatrix& basis);

enum class Strict { positive, negative };

// sign * <normal, x> > 0
struct StrictConstraint {
    RatVector normal;
    Strict sign = Strict::positive;
};

class StrictSystem {
public:
    explicit StrictSystem(std::size_t dimension) : dimension_(dimension) {}

    // Throws std::invalid_argument on a zero normal or a length mismatch.
    void add(RatVector normal, Strict sign = Strict::positive);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<StrictConstraint>& constraints() const noexcept { return constraints_; }

private:
    std::size_t dimension_;
    std::vector<StrictConstraint> constraints_;
};

// Exact test for a point satisfying every strict inequality, by Fourier-Motzkin
// elimination. The variable with the fewest nonzero coefficients goes first.
bool fm_feasible(const StrictSystem& s, const Limits& limits = {});

// Integer row-echelon basis maintained incrementally with fraction-free
// reduction. Rows are kept primitive (gcd 1), so entries stay bounded by
// minors of the inserted vectors.
template <typename Int>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }

    // True iff v is in the span of the inserted rows.
    bool contains(std::span<const Int> v) const;
    // Inserts v; returns false (and changes nothing) when v is already in the span.
    bool insert(std::span<const Int> v);

private:
    std::vector<Int> reduce(std::span<const Int> v) const;

    std::size_t dimension_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::size_t> pivots_;
};

extern template class EchelonBasis<BigInt>;
extern template class EchelonBasis<std::int64_t>;

} // namespace matcharr
