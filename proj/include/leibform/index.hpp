#pragma once

/**
 * @file index.hpp
 * @brief Exponent/frequency multi-indices and strictly increasing index sets.
 *
 * Axes are 0-based throughout the C++ API. The textual grammar (x1, dx[1,2])
 * is 1-based; conversion happens only in text.cpp.
 */

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibform {

inline constexpr int kMaxDim = 8;

/// Exponent vector (polynomials) or frequency vector (trig). Unused slots are 0.
using MultiIndex = std::array<int, kMaxDim>;

inline int total_degree(const MultiIndex& m) {
    int s = 0;
    for (int v : m) s += v;
    return s;
}

inline MultiIndex unit_index(int axis) {
    MultiIndex m{};
    m[static_cast<std::size_t>(axis)] = 1;
    return m;
}

inline MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

/// Graded lexicographic: total degree first, then lexicographic.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

inline void check_dim(int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) + "]");
}

inline void check_axis(int axis, int dim) {
    if (axis < 0 || axis >= dim)
        throw std::out_of_range("axis " + std::to_string(axis + 1) + " out of range for dimension " +
                                std::to_string(dim));
}

/// All exponent vectors in `dim` variables with total degree exactly `deg`, in grlex order.
std::vector<MultiIndex> monomials_of_degree(int dim, int deg);

// ---------------------------------------------------------------------------
// Index sets I = {i1 < i2 < ... < ik} are bit masks over the axes.

using IndexSet = std::uint32_t;

inline int set_size(IndexSet s) { return std::popcount(s); }
inline bool contains(IndexSet s, int axis) { return (s >> axis) & 1U; }
inline IndexSet bit(int axis) { return IndexSet{1} << axis; }
inline IndexSet full_set(int dim) { return (IndexSet{1} << dim) - 1; }

/// Number of elements of s strictly below axis.
inline int count_below(IndexSet s, int axis) { return std::popcount(s & (bit(axis) - 1)); }

inline int parity_sign(int count) { return (count & 1) ? -1 : 1; }

/// Elements of s in increasing order.
inline std::vector<int> elements(IndexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

/// Lexicographic order on the increasing tuples of equal-size sets.
struct LexSetLess {
    bool operator()(IndexSet a, IndexSet b) const {
        if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
        const IndexSet diff = a ^ b;
        if (diff == 0) return false;
        return (a & (diff & (~diff + 1))) != 0;
    }
};

/// Sign of e_I ^ e_J relative to e_{I u J} for disjoint I, J (0 if they overlap).
inline int wedge_sign(IndexSet a, IndexSet b) {
    if (a & b) return 0;
    int swaps = 0;
    for (IndexSet t = b; t; t &= t - 1) {
        const int j = std::countr_zero(t);
        swaps += std::popcount(a >> (j + 1));
    }
    return parity_sign(swaps);
}

/// Sign s with iota_{e_{i1}} then ... then iota_{e_{ik}} applied to dx_J equal to s dx_{J \ I}.
/// Requires I subset of J; the lowest index is contracted first.
inline int contraction_sign(IndexSet inner, IndexSet target) {
    int swaps = 0;
    IndexSet remaining = target;
    for (IndexSet t = inner; t; t &= t - 1) {
        const int j = std::countr_zero(t);
        swaps += count_below(remaining, j);
        remaining &= ~bit(j);
    }
    return parity_sign(swaps);
}

/// All subsets of {0..dim-1} with exactly k elements, in lexicographic order.
std::vector<IndexSet> subsets_of_size(int dim, int k);

}  // namespace leibform
