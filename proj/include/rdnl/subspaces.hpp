// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rank-r binary matrices up to row equivalence, each represented by its
// reduced row echelon form.
//
// Canonical order: pivot-column tuples ascending lexicographically, then the
// free entries read as one integer ascending. The free-entry integer takes
// row 0's free columns as its most significant bits, left to right within a
// row. Indices into this order are 64-bit; enumerations whose size does not
// fit are refused with SpaceTooLarge.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "gf2.hpp"

namespace rdnl {

using gf2::Mask;

inline boost::multiprecision::cpp_int gaussian_binomial(unsigned N, unsigned r) {
    require(r <= N && N <= 64, ErrorKind::RankOutOfRange,
            "need 0 <= r <= N <= 64, got N=" + std::to_string(N) + " r=" + std::to_string(r));
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    for (unsigned i = 0; i < r; ++i) {
        num *= (cpp_int(1) << (N - i)) - 1;
        den *= (cpp_int(1) << (r - i)) - 1;
    }
    return num / den;
}

/// A rank-r linear map over ncols columns, held in reduced row echelon form.
struct LinearMap {
    unsigned ncols = 0;
    std::vector<Mask> rows;
    std::vector<unsigned> pivots; // column index of each row's leading 1, strictly increasing

    unsigned rank() const noexcept { return static_cast<unsigned>(rows.size()); }

    friend bool operator==(const LinearMap &, const LinearMap &) = default;
};

/// Names columns x1..xn then y1..ym.
inline std::string column_name(unsigned col, unsigned n_inputs) {
    return col < n_inputs ? "x" + std::to_string(col + 1) : "y" + std::to_string(col - n_inputs + 1);
}

/// "x3+x5" style rendering of one row; `n_inputs` columns are x's, the rest y's.
inline std::string format_row(Mask row, unsigned ncols, unsigned n_inputs) {
    std::string out;
    for (unsigned c = 0; c < ncols; ++c) {
        if (row & (Mask{1} << gf2::column_bit(ncols, c))) {
            if (!out.empty())
                out += '+';
            out += column_name(c, n_inputs);
        }
    }
    return out.empty() ? "0" : out;
}

inline std::vector<std::string> format_rows(const LinearMap &U, unsigned n_inputs) {
    std::vector<std::string> out;
    for (Mask row : U.rows)
        out.push_back(format_row(row, U.ncols, n_inputs));
    return out;
}

/// Result of reducing arbitrary rows: the RREF of their span and its rank.
struct CanonicalForm {
    LinearMap map;
    unsigned rank = 0;
};

inline CanonicalForm canonicalize(std::vector<Mask> rows, unsigned ncols) {
    require(ncols >= 1 && ncols <= 64, ErrorKind::InvalidArgument, "column count must be in 1..64");
    for (Mask row : rows)
        require((row & ~gf2::low_bits(ncols)) == 0, ErrorKind::InvalidArgument, "row wider than ncols");

    LinearMap U{ncols, {}, {}};
    std::size_t next = 0;
    for (unsigned c = 0; c < ncols && next < rows.size(); ++c) {
        const Mask bit = Mask{1} << gf2::column_bit(ncols, c);
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                               [bit](Mask r) { return r & bit; });
        if (it == rows.end())
            continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != next && (rows[i] & bit))
                rows[i] ^= rows[next];
        U.pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    U.rows = std::move(rows);
    return {std::move(U), static_cast<unsigned>(next)};
}

inline bool is_rref(const LinearMap &U) {
    if (U.rows.size() != U.pivots.size())
        return false;
    for (std::size_t i = 0; i < U.rows.size(); ++i) {
        if (i > 0 && U.pivots[i] <= U.pivots[i - 1])
            return false;
        if (U.pivots[i] >= U.ncols)
            return false;
        const Mask bit = Mask{1} << gf2::column_bit(U.ncols, U.pivots[i]);
        if (std::bit_floor(U.rows[i]) != bit)
            return false;
        for (std::size_t j = 0; j < U.rows.size(); ++j)
            if (j != i && (U.rows[j] & bit))
                return false;
    }
    return true;
}

/// Half-open interval [lo, hi) of canonical enumeration indices.
struct SubspaceRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    std::uint64_t size() const noexcept { return hi - lo; }
    friend bool operator==(const SubspaceRange &, const SubspaceRange &) = default;
};

/// Indexable view of the canonical RREF order for fixed (N, r).
class RrefSpace {
  public:
    RrefSpace(unsigned ncols, unsigned rank) : N_(ncols), R_(rank), K_(ncols - rank) {
        require(rank >= 1 && rank <= ncols && ncols <= 64, ErrorKind::RankOutOfRange,
                "need 1 <= r <= N <= 64, got N=" + std::to_string(ncols) + " r=" + std::to_string(rank));
        using u128 = unsigned __int128;
        constexpr u128 cap = u128{1} << 63;
        // completions_[j][s]: ways to fill j further rows whose pivot offsets are >= s,
        // counting free entries of those rows only.
        completions_.assign(R_ + 1, std::vector<std::uint64_t>(K_ + 1, 0));
        std::fill(completions_[0].begin(), completions_[0].end(), 1);
        for (unsigned j = 1; j <= R_; ++j) {
            u128 acc = 0;
            for (unsigned s = K_ + 1; s-- > 0;) {
                acc += (u128{1} << (K_ - s)) * completions_[j - 1][s];
                if (acc >= cap)
                    fail(ErrorKind::SpaceTooLarge, "subspace count for N=" + std::to_string(N_) +
                                                       " r=" + std::to_string(R_) + " exceeds 2^63");
                completions_[j][s] = static_cast<std::uint64_t>(acc);
            }
        }
        total_ = completions_[R_][0];
    }

    unsigned ncols() const noexcept { return N_; }
    unsigned rank() const noexcept { return R_; }
    std::uint64_t size() const noexcept { return total_; }
    SubspaceRange full() const noexcept { return {0, total_}; }

    /// Matrix at canonical position `index`; O(r*N).
    LinearMap unrank(std::uint64_t index) const {
        require(index < total_, ErrorKind::InvalidArgument, "enumeration index out of range");
        std::vector<unsigned> pivots(R_);
        unsigned weight = 0, s = 0;
        for (unsigned k = 0; k < R_; ++k) {
            for (unsigned t = s;; ++t) {
                const std::uint64_t block = (std::uint64_t{1} << (weight + K_ - t)) * completions_[R_ - k - 1][t];
                if (index < block) {
                    pivots[k] = t + k;
                    weight += K_ - t;
                    s = t;
                    break;
                }
                index -= block;
            }
        }
        return build(pivots, index);
    }

    /// Canonical position of an RREF matrix of this shape.
    std::uint64_t rank_of(const LinearMap &U) const {
        require(U.ncols == N_ && U.rank() == R_ && is_rref(U), ErrorKind::InvalidArgument,
                "matrix is not an RREF of this enumeration's shape");
        std::uint64_t index = 0;
        unsigned weight = 0, s = 0;
        for (unsigned k = 0; k < R_; ++k) {
            const unsigned tk = U.pivots[k] - k;
            for (unsigned t = s; t < tk; ++t)
                index += (std::uint64_t{1} << (weight + K_ - t)) * completions_[R_ - k - 1][t];
            weight += K_ - tk;
            s = tk;
        }
        return index + free_entries(U);
    }

    /// Streams matrices with indices in `range`, in canonical order.
    template <class Fn>
    void for_each(SubspaceRange range, Fn &&fn) const {
        require(range.lo <= range.hi && range.hi <= total_, ErrorKind::InvalidArgument, "range outside enumeration");
        if (range.lo == range.hi)
            return;
        LinearMap U = unrank(range.lo);
        std::uint64_t free = free_entries(U);
        std::vector<unsigned> pivots = U.pivots;
        for (std::uint64_t idx = range.lo;;) {
            fn(idx, static_cast<const LinearMap &>(U));
            if (++idx == range.hi)
                break;
            if (++free >> free_count(pivots)) {
                next_combination(pivots);
                free = 0;
            }
            U = build(pivots, free);
        }
    }

    template <class Fn>
    void for_each(Fn &&fn) const {
        for_each(full(), std::forward<Fn>(fn));
    }

  private:
    unsigned free_count(const std::vector<unsigned> &pivots) const noexcept {
        unsigned w = 0;
        for (unsigned k = 0; k < R_; ++k)
            w += K_ - (pivots[k] - k);
        return w;
    }

    void next_combination(std::vector<unsigned> &p) const noexcept {
        unsigned i = R_;
        while (i-- > 0)
            if (p[i] < N_ - R_ + i)
                break;
        ++p[i];
        for (unsigned j = i + 1; j < R_; ++j)
            p[j] = p[j - 1] + 1;
    }

    /// Lays out `free` over the non-pivot columns right of each pivot; the last
    /// row's rightmost free column takes the lowest bit.
    LinearMap build(const std::vector<unsigned> &pivots, std::uint64_t free) const {
        LinearMap U{N_, std::vector<Mask>(R_, 0), pivots};
        Mask pivot_mask = 0;
        for (unsigned p : pivots)
            pivot_mask |= Mask{1} << gf2::column_bit(N_, p);
        for (unsigned i = R_; i-- > 0;) {
            Mask row = Mask{1} << gf2::column_bit(N_, pivots[i]);
            for (unsigned c = N_; c-- > pivots[i] + 1;) {
                const Mask bit = Mask{1} << gf2::column_bit(N_, c);
                if (pivot_mask & bit)
                    continue;
                if (free & 1)
                    row |= bit;
                free >>= 1;
            }
            U.rows[i] = row;
        }
        return U;
    }

    std::uint64_t free_entries(const LinearMap &U) const {
        Mask pivot_mask = 0;
        for (unsigned p : U.pivots)
            pivot_mask |= Mask{1} << gf2::column_bit(N_, p);
        std::uint64_t free = 0;
        for (unsigned i = 0; i < R_; ++i)
            for (unsigned c = U.pivots[i] + 1; c < N_; ++c) {
                const Mask bit = Mask{1} << gf2::column_bit(N_, c);
                if (!(pivot_mask & bit))
                    free = (free << 1) | ((U.rows[i] & bit) ? 1 : 0);
            }
        return free;
    }

    unsigned N_, R_, K_;
    std::vector<std::vector<std::uint64_t>> completions_;
    std::uint64_t total_ = 0;
};

/// Streams every RREF of rank r over N columns in canonical order.
template <class Fn>
void enumerate_rref(unsigned N, unsigned r, Fn &&fn) {
    RrefSpace(N, r).for_each([&](std::uint64_t, const LinearMap &U) { fn(U); });
}

/// Disjoint cover of the enumeration by `parts` near-equal ranges.
inline std::vector<SubspaceRange> split_range(unsigned N, unsigned r, unsigned parts) {
    require(parts >= 1, ErrorKind::InvalidArgument, "parts must be >= 1");
    const std::uint64_t total = RrefSpace(N, r).size();
    std::vector<SubspaceRange> out;
    std::uint64_t lo = 0;
    for (unsigned i = 0; i < parts; ++i) {
        const std::uint64_t len = total / parts + (i < total % parts ? 1 : 0);
        out.push_back({lo, lo + len});
        lo += len;
    }
    return out;
}

} // namespace rdnl
