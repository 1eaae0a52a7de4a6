// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library beyond the BooleanFunction accessors.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <rdnl/boolean_function.hpp>

namespace oracle {

inline unsigned dot(std::uint64_t a, std::uint64_t x) {
    unsigned p = 0;
    for (std::uint64_t v = a & x; v; v >>= 1)
        p ^= v & 1;
    return p;
}

/// sum_x (-1)^(f(x) + a.x) by the O(4^n) double loop.
inline std::vector<std::int64_t> naive_walsh(const rdnl::BooleanFunction &f) {
    std::vector<std::int64_t> out(f.size());
    for (std::uint32_t a = 0; a < f.size(); ++a) {
        std::int64_t s = 0;
        for (std::uint32_t x = 0; x < f.size(); ++x)
            s += ((f(x) ? 1u : 0u) ^ dot(a, x)) ? -1 : 1;
        out[a] = s;
    }
    return out;
}

/// Minimum distance to every affine function a.x + c.
inline std::uint64_t affine_distance(const rdnl::BooleanFunction &f) {
    std::uint64_t best = f.size();
    for (std::uint32_t a = 0; a < f.size(); ++a)
        for (unsigned c = 0; c < 2; ++c) {
            std::uint64_t d = 0;
            for (std::uint32_t x = 0; x < f.size(); ++x)
                d += (f(x) ? 1u : 0u) != (dot(a, x) ^ c);
            best = std::min(best, d);
        }
    return best;
}

/// Schoolbook GF(2^k) multiply with reduction by `modulus`.
inline std::uint32_t field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned k) {
    std::uint32_t acc = 0;
    for (unsigned i = 0; i < k; ++i) {
        if (b & (1u << i))
            acc ^= a;
        a <<= 1;
        if (a & (1u << k))
            a ^= modulus;
    }
    return acc;
}

inline double entropy_bits(const std::vector<std::uint64_t> &counts) {
    std::uint64_t D = 0;
    for (auto c : counts)
        D += c;
    double h = 0;
    for (auto c : counts)
        if (c)
            h -= double(c) / double(D) * std::log2(double(c) / double(D));
    return h;
}

inline rdnl::BooleanFunction random_function(unsigned n, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(0.5);
    return rdnl::BooleanFunction::from_predicate(n, [&](std::uint32_t) { return coin(rng); });
}

inline rdnl::BooleanFunction random_nonzero_function(unsigned n, std::mt19937_64 &rng) {
    for (;;) {
        auto f = random_function(n, rng);
        if (f.weight() > 0)
            return f;
    }
}

/// Random invertible n x n matrix by rejection.
inline std::vector<std::uint64_t> random_invertible(unsigned n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> row(0, (std::uint64_t{1} << n) - 1);
    for (;;) {
        std::vector<std::uint64_t> m(n);
        for (auto &r : m)
            r = row(rng);
        // rank by elimination on a copy
        auto t = m;
        unsigned rank = 0;
        for (unsigned bit = n; bit-- > 0;) {
            std::size_t p = rank;
            while (p < n && !((t[p] >> bit) & 1))
                ++p;
            if (p == n)
                continue;
            std::swap(t[p], t[rank]);
            for (std::size_t i = 0; i < n; ++i)
                if (i != rank && ((t[i] >> bit) & 1))
                    t[i] ^= t[rank];
            ++rank;
        }
        if (rank == n)
            return m;
    }
}

} // namespace oracle
