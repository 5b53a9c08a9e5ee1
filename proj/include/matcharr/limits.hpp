#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matcharr {

// Size guards for the brute-force routines. Every exponential procedure checks
// its input against one of these before starting.
struct Limits {
    std::size_t max_path_edges = 12;          // path/cycle enumeration, arrangement, matchings
    std::size_t max_iso_vertices = 8;         // permutation-search isomorphism
    std::size_t max_chromatic_edges = 10;     // deletion-contraction
    std::size_t max_orientation_edges = 8;    // 2^|E| orientation scan
    std::size_t max_fm_constraints = 16;      // Fourier-Motzkin
    std::size_t max_fm_dimension = 5;
    std::size_t max_lattice_hyperplanes = 40; // flat lattice; never above 64 (bitmask flats)
    std::size_t max_field_dimension = 4;      // q^n point scan
    std::size_t max_region_dimension = 4;     // exact sign-vector enumeration
    std::size_t max_region_hyperplanes = 14;
    std::size_t min_tree_vertices = 2;
    std::size_t max_tree_vertices = 8;

    static constexpr std::size_t hard_lattice_cap = 64;
};

class GuardError : public std::runtime_error {
public:
    GuardError(std::string guard, std::size_t actual, std::size_t limit);

    const std::string& guard() const noexcept { return guard_; }
    std::size_t actual() const noexcept { return actual_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::string guard_;
    std::size_t actual_;
    std::size_t limit_;
};

// Throws GuardError when actual > limit.
void check_guard(const std::string& guard, std::size_t actual, std::size_t limit);

} // namespace matcharr
