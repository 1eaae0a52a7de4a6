// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "boolean_function.hpp"
#include "errors.hpp"

namespace rdnl {

namespace gf2x {

/// Carry-less product of two GF(2)[t] polynomials.
constexpr std::uint32_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
    std::uint32_t r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1)
            r ^= a;
    return r;
}

constexpr int degree(std::uint32_t p) noexcept { return p ? std::bit_width(p) - 1 : -1; }

constexpr std::uint32_t mod(std::uint32_t a, std::uint32_t m) noexcept {
    const int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a))
        a ^= m << (da - dm);
    return a;
}

constexpr std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) noexcept {
    return mod(clmul(a, b), m);
}

/// Trial division by every polynomial of degree 1 .. deg/2.
constexpr bool is_irreducible(std::uint32_t p) noexcept {
    const int d = degree(p);
    if (d < 1)
        return false;
    for (std::uint32_t q = 2; degree(q) <= d / 2; ++q)
        if (mod(p, q) == 0)
            return false;
    return true;
}

} // namespace gf2x

/// Multiplicative inversion in GF(2^k) as a k x k S-box, with 0 -> 0.
/// `modulus` carries the degree-k bit (0x13 is t^4 + t + 1).
inline VectorialFunction gf_inverse_sbox(unsigned k, std::uint32_t modulus) {
    require(k >= 1 && k <= 8, ErrorKind::InvalidArgument, "field degree must be in 1..8");
    if (gf2x::degree(modulus) != static_cast<int>(k))
        fail(ErrorKind::DegreeMismatch, "modulus degree does not equal k=" + std::to_string(k));
    if (!gf2x::is_irreducible(modulus))
        fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(2)");

    const std::uint32_t order = 1u << k;
    std::vector<std::uint32_t> table(order, 0);
    for (std::uint32_t a = 1; a < order; ++a) {
        if (table[a] != 0)
            continue;
        for (std::uint32_t b = 1; b < order; ++b) {
            if (gf2x::mulmod(a, b, modulus) == 1) {
                table[a] = b;
                table[b] = a;
                break;
            }
        }
    }
    return VectorialFunction(k, k, std::move(table));
}

} // namespace rdnl
