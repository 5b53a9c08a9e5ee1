#include "matcharr/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace matcharr {

RatMatrix::RatMatrix(std::size_t cols, std::vector<RatVector> rows) : cols_(cols)
{
    for (auto& r : rows)
        push_back(std::move(r));
}

void RatMatrix::push_back(RatVector r)
{
    if (r.size() != cols_)
        throw std::invalid_argument("row length " + std::to_string(r.size()) +
                                    " differs from column count " + std::to_string(cols_));
    rows_.push_back(std::move(r));
}

RatVector to_rational(std::span<const int> v)
{
    RatVector out;
    out.reserve(v.size());
    for (int x : v)
        out.emplace_back(x);
    return out;
}

namespace {

// Positive multiple of v with integer entries.
std::vector<BigInt> clear_denominators(const RatVector& v)
{
    BigInt l = 1;
    for (const Rational& x : v)
        l = lcm(l, BigInt(x.get_den()));
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const Rational& x : v)
        out.push_back(BigInt(x.get_num()) * (l / BigInt(x.get_den())));
    return out;
}

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const RatMatrix& m)
{
    std::vector<std::vector<BigInt>> a;
    a.reserve(m.rows());
    for (const RatVector& row : m.data())
        a.push_back(clear_denominators(row));
    return bareiss_rank(std::move(a), m.cols());
}

bool in_span(const RatVector& v, const RatMatrix& basis)
{
    if (v.size() != basis.cols())
        throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                    " differs from basis dimension " +
                                    std::to_string(basis.cols()));
    RatMatrix extended = basis;
    extended.push_back(v);
    return rank(extended) == rank(basis);
}

void StrictSystem::add(RatVector normal, Strict sign)
{
    if (normal.size() != dimension_)
        throw std::invalid_argument("constraint length differs from system dimension");
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& x) { return x == 0; }))
        throw std::invalid_argument("strict constraint with a zero normal");
    constraints_.push_back({std::move(normal), sign});
}

namespace {

using IntRow = std::vector<BigInt>;

void make_primitive(IntRow& row)
{
    BigInt g = 0;
    for (const BigInt& x : row)
        g = gcd(g, x);
    if (g > 1)
        for (BigInt& x : row)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

bool is_zero_row(const IntRow& row)
{
    return std::all_of(row.begin(), row.end(), [](const BigInt& x) { return x == 0; });
}

} // namespace

bool fm_feasible(const StrictSystem& s, const Limits& limits)
{
    check_guard("max_fm_constraints", s.constraints().size(), limits.max_fm_constraints);
    check_guard("max_fm_dimension", s.dimension(), limits.max_fm_dimension);

    // Every constraint becomes <row, x> > 0 with a primitive integer row.
    std::set<IntRow> system;
    for (const StrictConstraint& c : s.constraints()) {
        IntRow row = clear_denominators(c.normal);
        if (c.sign == Strict::negative)
            for (BigInt& x : row)
                x = -x;
        make_primitive(row);
        system.insert(std::move(row));
    }

    std::vector<bool> eliminated(s.dimension(), false);
    for (std::size_t step = 0; step < s.dimension(); ++step) {
        if (system.empty())
            return true;
        std::size_t var = s.dimension();
        std::size_t best = 0;
        for (std::size_t j = 0; j < s.dimension(); ++j) {
            if (eliminated[j])
                continue;
            std::size_t count = 0;
            for (const IntRow& row : system)
                count += row[j] != 0;
            if (var == s.dimension() || count < best) {
                var = j;
                best = count;
            }
        }
        eliminated[var] = true;

        std::vector<const IntRow*> pos;
        std::vector<const IntRow*> neg;
        std::set<IntRow> next;
        for (const IntRow& row : system) {
            if (row[var] > 0)
                pos.push_back(&row);
            else if (row[var] < 0)
                neg.push_back(&row);
            else
                next.insert(row);
        }
        // With only one side present, var can absorb those constraints.
        if (!pos.empty() && !neg.empty()) {
            for (const IntRow* p : pos)
                for (const IntRow* n : neg) {
                    const BigInt a = -(*n)[var];
                    const BigInt b = (*p)[var];
                    IntRow combined(s.dimension());
                    for (std::size_t j = 0; j < s.dimension(); ++j)
                        combined[j] = a * (*p)[j] + b * (*n)[j];
                    if (is_zero_row(combined))
                        return false; // 0 > 0
                    make_primitive(combined);
                    next.insert(std::move(combined));
                }
        }
        system = std::move(next);
    }
    return system.empty();
}

namespace {

template <typename Int>
struct Arith;

template <>
struct Arith<BigInt> {
    // a*x - b*y
    static BigInt mul_sub(const BigInt& a, const BigInt& x, const BigInt& b, const BigInt& y)
    {
        return a * x - b * y;
    }
    static BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }
    static void div_exact(BigInt& x, const BigInt& g)
    {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
};

template <>
struct Arith<std::int64_t> {
    static std::int64_t mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y)
    {
        std::int64_t p = 0;
        std::int64_t q = 0;
        std::int64_t r = 0;
        if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) ||
            __builtin_sub_overflow(p, q, &r))
            throw std::overflow_error("64-bit overflow in echelon reduction");
        return r;
    }
    static std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static void div_exact(std::int64_t& x, std::int64_t g) { x /= g; }
};

} // namespace

template <typename Int>
std::vector<Int> EchelonBasis<Int>::reduce(std::span<const Int> v) const
{
    if (v.size() != dimension_)
        throw std::invalid_argument("vector length differs from basis dimension");
    std::vector<Int> w(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (w[p] == 0)
            continue;
        const auto& row = rows_[k];
        const Int a = row[p];
        const Int b = w[p];
        Int g = 0;
        for (std::size_t j = 0; j < dimension_; ++j) {
            w[j] = Arith<Int>::mul_sub(a, w[j], b, row[j]);
            g = Arith<Int>::gcd_of(g, w[j]);
        }
        if (g > 1)
            for (Int& x : w)
                Arith<Int>::div_exact(x, g);
    }
    return w;
}

template <typename Int>
bool EchelonBasis<Int>::contains(std::span<const Int> v) const
{
    const auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

template <typename Int>
bool EchelonBasis<Int>::insert(std::span<const Int> v)
{
    auto w = reduce(v);
    auto it = std::find_if(w.begin(), w.end(), [](const Int& x) { return x != 0; });
    if (it == w.end())
        return false;
    pivots_.push_back(static_cast<std::size_t>(it - w.begin()));
    rows_.push_back(std::move(w));
    return true;
}

template class EchelonBasis<BigInt>;
template class EchelonBasis<std::int64_t>;

} // namespace matcharr
