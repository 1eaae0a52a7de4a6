// SPDX-License-Identifier: Apache-2.0
#pragma once

// Bit-level GF(2) helpers shared by every module.
//
// Convention: a vector of width N is an integer whose most significant of the
// N bits is coordinate 1 (x_1). A matrix is a sequence of row masks of width
// N; the product U*v has its first row as the most significant result bit.

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rdnl::gf2 {

using Mask = std::uint64_t;

constexpr unsigned parity(Mask v) noexcept { return static_cast<unsigned>(std::popcount(v) & 1); }

constexpr Mask low_bits(unsigned width) noexcept {
    return width >= 64 ? ~Mask{0} : ((Mask{1} << width) - 1);
}

/// Bit position of 0-based column `col` in a width-`ncols` mask.
constexpr unsigned column_bit(unsigned ncols, unsigned col) noexcept { return ncols - 1 - col; }

/// Multiply the matrix `rows` by `v`.
inline Mask apply(std::span<const Mask> rows, Mask v) noexcept {
    Mask z = 0;
    for (Mask row : rows)
        z = (z << 1) | parity(row & v);
    return z;
}

inline unsigned rank(std::vector<Mask> rows) {
    unsigned r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Mask pivot = rows[i];
        if (pivot == 0)
            continue;
        ++r;
        const Mask lead = std::bit_floor(pivot);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & lead)
                rows[j] ^= pivot;
    }
    return r;
}

/// Inverse of a square n x n matrix given as row masks; throws SingularMatrix.
inline std::vector<Mask> inverse(std::span<const Mask> rows, unsigned n) {
    require(rows.size() == n, ErrorKind::InvalidArgument, "matrix must have n rows");
    std::vector<std::pair<Mask, Mask>> aug;
    aug.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        require((rows[i] & ~low_bits(n)) == 0, ErrorKind::InvalidArgument, "row wider than n columns");
        aug.emplace_back(rows[i], Mask{1} << column_bit(n, i));
    }
    for (unsigned col = 0; col < n; ++col) {
        const Mask bit = Mask{1} << column_bit(n, col);
        unsigned p = col;
        while (p < n && !(aug[p].first & bit))
            ++p;
        if (p == n)
            fail(ErrorKind::SingularMatrix, "matrix is not invertible over GF(2)");
        std::swap(aug[p], aug[col]);
        for (unsigned i = 0; i < n; ++i) {
            if (i != col && (aug[i].first & bit)) {
                aug[i].first ^= aug[col].first;
                aug[i].second ^= aug[col].second;
            }
        }
    }
    std::vector<Mask> inv(n);
    for (unsigned i = 0; i < n; ++i)
        inv[i] = aug[i].second;
    return inv;
}

inline bool is_invertible(std::span<const Mask> rows, unsigned n) {
    if (rows.size() != n)
        return false;
    return rank(std::vector<Mask>(rows.begin(), rows.end())) == n;
}

} // namespace rdnl::gf2
