// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"

namespace rdnl {

inline constexpr unsigned kMaxArity = 24;          // conventional n, and n+m in vectorial mode
inline constexpr unsigned kMaxVectorialInputs = 16;

/// Conventional Boolean function stored as a packed truth table.
/// Entry i is f(x) for the assignment whose x_1 is the most significant bit of i.
class BooleanFunction {
  public:
    BooleanFunction() = default;

    /// Constant-zero function of arity n.
    explicit BooleanFunction(unsigned n) : n_(n) {
        require(n >= 1 && n <= kMaxArity, ErrorKind::InvalidArgument, "arity must be in 1..24");
        words_.assign(word_count(n), 0);
    }

    static BooleanFunction from_bits(unsigned n, std::span<const std::uint8_t> bits) {
        BooleanFunction f(n);
        require(bits.size() == f.size(), ErrorKind::InvalidArgument, "truth table length must be 2^n");
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i])
                f.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return f;
    }

    template <class Pred>
    static BooleanFunction from_predicate(unsigned n, Pred &&pred) {
        BooleanFunction f(n);
        for (std::size_t x = 0; x < f.size(); ++x)
            if (pred(static_cast<std::uint32_t>(x)))
                f.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
        return f;
    }

    unsigned arity() const noexcept { return n_; }
    std::size_t size() const noexcept { return std::size_t{1} << n_; }

    bool operator()(std::uint32_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1; }

    std::uint64_t weight() const noexcept {
        std::uint64_t w = 0;
        for (auto word : words_)
            w += static_cast<std::uint64_t>(std::popcount(word));
        return w;
    }

    bool is_balanced() const noexcept { return 2 * weight() == size(); }

    /// Inputs x with f(x) = 1, ascending.
    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> out;
        out.reserve(weight());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BooleanFunction &, const BooleanFunction &) = default;

  private:
    static std::size_t word_count(unsigned n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

    unsigned n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Vectorial Boolean function (S-box) with n inputs and m outputs; y_1 is the
/// most significant output bit.
class VectorialFunction {
  public:
    VectorialFunction() = default;

    VectorialFunction(unsigned n, unsigned m, std::vector<std::uint32_t> table)
        : n_(n), m_(m), table_(std::move(table)) {
        require(m >= 1 && m <= n && n <= kMaxVectorialInputs && n + m <= kMaxArity,
                ErrorKind::InvalidArgument, "vectorial arity requires 1 <= m <= n <= 16 and n+m <= 24");
        require(table_.size() == (std::size_t{1} << n), ErrorKind::InvalidArgument,
                "truth table length must be 2^n");
        for (auto y : table_)
            require(y < (std::uint32_t{1} << m), ErrorKind::InvalidArgument, "table entry exceeds 2^m");
    }

    /// The single-output function viewed as an S-box with m = 1.
    static VectorialFunction from_boolean(const BooleanFunction &f) {
        std::vector<std::uint32_t> t(f.size());
        for (std::uint32_t x = 0; x < t.size(); ++x)
            t[x] = f(x);
        return VectorialFunction(f.arity(), 1, std::move(t));
    }

    unsigned inputs() const noexcept { return n_; }
    unsigned outputs() const noexcept { return m_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::uint32_t operator()(std::uint32_t x) const noexcept { return table_[x]; }
    std::span<const std::uint32_t> table() const noexcept { return table_; }

    /// Stacked graph point (x, F(x)) as an (n+m)-bit vector, x_1 most significant.
    std::uint64_t graph_point(std::uint32_t x) const noexcept {
        return (std::uint64_t{x} << m_) | table_[x];
    }

    friend bool operator==(const VectorialFunction &, const VectorialFunction &) = default;

  private:
    unsigned n_ = 0;
    unsigned m_ = 0;
    std::vector<std::uint32_t> table_;
};

/// Component b.F(x) of an S-box.
inline BooleanFunction component_function(const VectorialFunction &F, std::uint32_t b) {
    require(b != 0, ErrorKind::ZeroMask, "component mask b must be nonzero");
    require(b < (std::uint32_t{1} << F.outputs()), ErrorKind::InvalidArgument, "component mask wider than m");
    return BooleanFunction::from_predicate(F.inputs(),
                                           [&](std::uint32_t x) { return gf2::parity(F(x) & b) != 0; });
}

/// g(x) = f(Ax + b) for invertible A given as n row masks.
inline BooleanFunction apply_affine_change(const BooleanFunction &f, std::span<const gf2::Mask> A,
                                           gf2::Mask b) {
    const unsigned n = f.arity();
    require(A.size() == n, ErrorKind::InvalidArgument, "A must be n x n");
    if (!gf2::is_invertible(A, n))
        fail(ErrorKind::SingularMatrix, "affine change requires an invertible matrix");
    require((b & ~gf2::low_bits(n)) == 0, ErrorKind::InvalidArgument, "shift wider than n");
    return BooleanFunction::from_predicate(n, [&](std::uint32_t x) {
        return f(static_cast<std::uint32_t>(gf2::apply(A, x) ^ b));
    });
}

// ---------------------------------------------------------------------------
// Hex truth-table format.
//
// Conventional: 2^n/4 hex digits (one digit for n < 2), bit-packed with
// index 0 at the most significant bit of the first digit.
// Vectorial (m <= 4): 2^n hex digits, one per output value in index order.
// Whitespace is ignored.

namespace detail {

inline std::string strip_hex(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            fail(ErrorKind::ParseError, std::string("non-hex character '") + c + "' in truth table");
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

inline unsigned hex_value(char c) { return c <= '9' ? unsigned(c - '0') : unsigned(c - 'a' + 10); }

inline constexpr char kHexDigits[] = "0123456789abcdef";

} // namespace detail

inline std::size_t boolean_hex_digits(unsigned n) { return n >= 2 ? (std::size_t{1} << n) / 4 : 1; }

inline BooleanFunction parse_boolean_hex(std::string_view text, unsigned n) {
    const std::string hex = detail::strip_hex(text);
    BooleanFunction probe(n);
    require(hex.size() == boolean_hex_digits(n), ErrorKind::ParseError,
            "expected " + std::to_string(boolean_hex_digits(n)) + " hex digits for n=" + std::to_string(n) +
                ", got " + std::to_string(hex.size()));
    std::vector<std::uint8_t> bits(probe.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = (detail::hex_value(hex[i / 4]) >> (3 - i % 4)) & 1;
    if (n < 2) {
        const unsigned used = 1u << n;
        const unsigned tail = detail::hex_value(hex[0]) & ((1u << (4 - used)) - 1);
        require(tail == 0, ErrorKind::ParseError, "unused truth-table bits must be zero");
    }
    return BooleanFunction::from_bits(n, bits);
}

inline std::string to_hex(const BooleanFunction &f) {
    std::string out(boolean_hex_digits(f.arity()), '0');
    for (std::uint32_t x = 0; x < f.size(); ++x)
        if (f(x))
            out[x / 4] = detail::kHexDigits[detail::hex_value(out[x / 4]) | (8u >> (x % 4))];
    return out;
}

inline VectorialFunction parse_vectorial_hex(std::string_view text, unsigned n, unsigned m) {
    require(m >= 1 && m <= 4, ErrorKind::InvalidArgument, "hex vectorial format supports m <= 4");
    const std::string hex = detail::strip_hex(text);
    require(hex.size() == (std::size_t{1} << n), ErrorKind::ParseError,
            "expected " + std::to_string(std::size_t{1} << n) + " hex digits for n=" + std::to_string(n) +
                ", got " + std::to_string(hex.size()));
    std::vector<std::uint32_t> table(hex.size());
    for (std::size_t i = 0; i < hex.size(); ++i) {
        table[i] = detail::hex_value(hex[i]);
        require(table[i] < (1u << m), ErrorKind::ParseError, "hex digit exceeds 2^m - 1");
    }
    return VectorialFunction(n, m, std::move(table));
}

inline std::string to_hex(const VectorialFunction &F) {
    if (F.outputs() == 1) {
        return to_hex(component_function(F, 1));
    }
    require(F.outputs() <= 4, ErrorKind::InvalidArgument, "hex vectorial format supports m <= 4");
    std::string out;
    out.reserve(F.size());
    for (auto y : F.table())
        out.push_back(detail::kHexDigits[y]);
    return out;
}

} // namespace rdnl
