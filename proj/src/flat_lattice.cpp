#include "matcharr/flat_lattice.hpp"
#include "matcharr/linalg.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace matcharr {

std::vector<std::size_t> Flat::member_indices() const
{
    std::vector<std::size_t> out;
    for (FlatMask m = members; m != 0; m &= m - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

std::size_t Flat::size() const { return static_cast<std::size_t>(std::popcount(members)); }

FlatLattice::FlatLattice(std::vector<Flat> flats, std::vector<std::vector<std::size_t>> lower_covers,
                         std::vector<BigInt> mobius, std::size_t hyperplane_count)
    : flats_(std::move(flats)), lower_covers_(std::move(lower_covers)), mobius_(std::move(mobius)),
      hyperplane_count_(hyperplane_count)
{
    if (flats_.empty() || lower_covers_.size() != flats_.size() || mobius_.size() != flats_.size())
        throw std::invalid_argument("inconsistent flat lattice data");
}

std::vector<std::size_t> FlatLattice::rank_profile() const
{
    std::vector<std::size_t> profile(matroid_rank() + 1, 0);
    for (const Flat& f : flats_)
        ++profile[f.rank];
    return profile;
}

namespace {

template <typename Int>
std::vector<std::vector<Int>> integer_normals(const Arrangement& a)
{
    std::vector<std::vector<Int>> out;
    out.reserve(a.size());
    for (const Normal& n : a.normals())
        out.emplace_back(n.begin(), n.end());
    return out;
}

void check_lattice_guard(const Arrangement& a, const Limits& limits)
{
    check_guard("max_lattice_hyperplanes", a.size(), limits.max_lattice_hyperplanes);
    check_guard("lattice_bitmask_capacity", a.size(), Limits::hard_lattice_cap);
}

template <typename Int>
Flat closure_with(const std::vector<std::vector<Int>>& normals, std::size_t dimension,
                  std::span<const std::size_t> subset)
{
    EchelonBasis<Int> basis(dimension);
    Flat f;
    for (std::size_t i : subset) {
        if (i >= normals.size())
            throw std::out_of_range("hyperplane index out of range");
        basis.insert(normals[i]);
    }
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (basis.contains(normals[i]))
            f.members |= FlatMask{1} << i;
    f.rank = basis.rank();
    return f;
}

struct RawLattice {
    std::vector<Flat> flats;
    std::vector<std::vector<std::size_t>> lower_covers;
};

// Rank-by-rank generation: every cover of a flat F is closure(F + h) for some
// h outside F, and every h lying in an already found cover yields that cover.
template <typename Int>
RawLattice generate_flats(const Arrangement& a)
{
    const auto normals = integer_normals<Int>(a);
    const std::size_t m = normals.size();
    const std::size_t dim = a.dimension();

    RawLattice out;
    std::vector<std::vector<std::size_t>> bases; // independent hyperplanes spanning each flat
    std::unordered_map<FlatMask, std::size_t> index;

    out.flats.push_back(closure_with(normals, dim, std::span<const std::size_t>{}));
    out.lower_covers.emplace_back();
    bases.emplace_back();
    index.emplace(out.flats[0].members, 0);

    std::size_t level_begin = 0;
    std::size_t level_end = 1;
    while (level_begin < level_end) {
        for (std::size_t fi = level_begin; fi < level_end; ++fi) {
            const Flat flat = out.flats[fi];
            EchelonBasis<Int> span(dim);
            for (std::size_t b : bases[fi])
                span.insert(normals[b]);

            FlatMask covered = flat.members;
            for (std::size_t h = 0; h < m; ++h) {
                if ((covered >> h) & 1U)
                    continue;
                EchelonBasis<Int> extended = span;
                extended.insert(normals[h]);
                Flat cover{flat.members | (FlatMask{1} << h), flat.rank + 1};
                for (std::size_t i = 0; i < m; ++i)
                    if (!cover.contains(i) && extended.contains(normals[i]))
                        cover.members |= FlatMask{1} << i;
                covered |= cover.members;

                auto [it, inserted] = index.emplace(cover.members, out.flats.size());
                if (inserted) {
                    out.flats.push_back(cover);
                    out.lower_covers.emplace_back();
                    auto basis = bases[fi];
                    basis.push_back(h);
                    bases.push_back(std::move(basis));
                }
                out.lower_covers[it->second].push_back(fi);
            }
        }
        level_begin = level_end;
        level_end = out.flats.size();
    }
    return out;
}

template <typename Int>
Flat closure_dispatch(const Arrangement& a, std::span<const std::size_t> subset)
{
    return closure_with(integer_normals<Int>(a), a.dimension(), subset);
}

} // namespace

Flat closure(const Arrangement& a, std::span<const std::size_t> subset)
{
    check_guard("lattice_bitmask_capacity", a.size(), Limits::hard_lattice_cap);
    try {
        return closure_dispatch<std::int64_t>(a, subset);
    } catch (const std::overflow_error&) {
        return closure_dispatch<BigInt>(a, subset);
    }
}

FlatLattice build_flat_lattice(const Arrangement& a, const Limits& limits)
{
    check_lattice_guard(a, limits);
    RawLattice raw;
    try {
        raw = generate_flats<std::int64_t>(a);
    } catch (const std::overflow_error&) {
        raw = generate_flats<BigInt>(a);
    }

    // mu(bottom) = 1, mu(x) = -sum_{z < x} mu(z); the strict down-set of x is
    // reached through lower covers.
    const std::size_t count = raw.flats.size();
    std::vector<BigInt> mobius(count, BigInt(0));
    std::vector<std::size_t> stamp(count, count);
    std::vector<std::size_t> stack;
    mobius[0] = 1;
    for (std::size_t x = 1; x < count; ++x) {
        BigInt sum = 0;
        stack.assign(raw.lower_covers[x].begin(), raw.lower_covers[x].end());
        for (std::size_t z : stack)
            stamp[z] = x;
        while (!stack.empty()) {
            const std::size_t z = stack.back();
            stack.pop_back();
            sum += mobius[z];
            for (std::size_t y : raw.lower_covers[z])
                if (stamp[y] != x) {
                    stamp[y] = x;
                    stack.push_back(y);
                }
        }
        mobius[x] = -sum;
    }
    return FlatLattice(std::move(raw.flats), std::move(raw.lower_covers), std::move(mobius),
                       a.size());
}

IntPolynomial characteristic_polynomial(const FlatLattice& lattice, std::size_t dimension)
{
    const std::size_t r = lattice.matroid_rank();
    if (r > dimension)
        throw std::invalid_argument("lattice rank exceeds the ambient dimension");
    std::vector<BigInt> coeffs(dimension + 1, BigInt(0));
    for (std::size_t i = 0; i < lattice.size(); ++i)
        coeffs[dimension - lattice.flat(i).rank] += lattice.mobius(i);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial characteristic_polynomial(const Arrangement& a, const Limits& limits)
{
    return characteristic_polynomial(build_flat_lattice(a, limits), a.dimension());
}

BigInt region_count(const IntPolynomial& chi, std::size_t dimension)
{
    Rational v = poly_eval(chi, Rational(-1));
    BigInt n = v.get_num();
    return dimension % 2 == 0 ? n : BigInt(-n);
}

BigInt region_count(const Arrangement& a, const Limits& limits)
{
    return region_count(characteristic_polynomial(a, limits), a.dimension());
}

} // namespace matcharr
