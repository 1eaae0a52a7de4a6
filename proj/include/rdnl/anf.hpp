// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "boolean_function.hpp"
#include "errors.hpp"

namespace rdnl {

/// Algebraic normal form: a GF(2) sum of monomials. A monomial is a mask over
/// variables with bit (i-1) set for x_i; the empty mask is the constant 1.
struct AnfExpression {
    unsigned n = 0;
    std::set<std::uint32_t> monomials;

    /// Variable indices (1-based) of a monomial, ascending.
    static std::vector<unsigned> variables(std::uint32_t monomial) {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < 32; ++i)
            if (monomial & (1u << i))
                out.push_back(i + 1);
        return out;
    }

    friend bool operator==(const AnfExpression &, const AnfExpression &) = default;
};

/// Parses "x1*x2 + x3 + 1". Duplicate monomials cancel.
inline AnfExpression parse_anf(std::string_view text, unsigned n) {
    require(n >= 1 && n <= kMaxArity, ErrorKind::InvalidArgument, "arity must be in 1..24");
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    require(!s.empty(), ErrorKind::ParseError, "empty ANF expression");

    AnfExpression e{n, {}};
    std::size_t pos = 0;
    auto parse_factor = [&]() -> std::uint32_t {
        if (pos < s.size() && s[pos] == '1') {
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                fail(ErrorKind::ParseError, "unknown constant token at offset " + std::to_string(pos - 1));
            return 0;
        }
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
            const std::size_t start = ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            require(pos > start, ErrorKind::ParseError, "variable without index at offset " + std::to_string(start - 1));
            require(pos - start <= 3, ErrorKind::ParseError, "variable index out of range");
            const unsigned idx = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
            require(idx >= 1 && idx <= n, ErrorKind::ParseError,
                    "variable index x" + std::to_string(idx) + " out of range 1.." + std::to_string(n));
            return 1u << (idx - 1);
        }
        fail(ErrorKind::ParseError,
             pos < s.size() ? "unknown token '" + std::string(1, s[pos]) + "' at offset " + std::to_string(pos)
                            : std::string("unexpected end of expression"));
    };

    while (true) {
        std::uint32_t monomial = parse_factor();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            monomial |= parse_factor();
        }
        if (!e.monomials.erase(monomial))
            e.monomials.insert(monomial);
        if (pos == s.size())
            break;
        if (s[pos] != '+')
            fail(ErrorKind::ParseError, "unknown token '" + std::string(1, s[pos]) + "' at offset " + std::to_string(pos));
        ++pos;
    }
    return e;
}

/// Truth table of an ANF: f(x) = XOR over monomials of the AND of their variables.
inline BooleanFunction anf_to_function(const AnfExpression &e) {
    // Monomial variable x_i corresponds to input bit (n - i) under the MSB-first convention.
    std::vector<std::uint32_t> input_masks;
    input_masks.reserve(e.monomials.size());
    for (auto mono : e.monomials) {
        std::uint32_t mask = 0;
        for (unsigned v : AnfExpression::variables(mono))
            mask |= 1u << (e.n - v);
        input_masks.push_back(mask);
    }
    return BooleanFunction::from_predicate(e.n, [&](std::uint32_t x) {
        unsigned acc = 0;
        for (auto mask : input_masks)
            acc ^= (x & mask) == mask;
        return acc != 0;
    });
}

} // namespace rdnl
