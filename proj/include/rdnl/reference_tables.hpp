// SPDX-License-Identifier: Apache-2.0
#pragma once

// Published reference values for two worked examples: a five-variable
// Boolean function and the 4-bit field-inversion S-box. Integers are exact;
// entropies are the printed values and are compared at kEntropyTolerance.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anf.hpp"
#include "boolean_function.hpp"
#include "nonlinearity.hpp"
#include "sbox.hpp"

namespace rdnl::reference {

inline constexpr double kEntropyTolerance = 1e-3;

inline constexpr std::string_view kFiveVariableAnf =
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x4 + x2*x5 + x3 + x4 + x5";
inline constexpr unsigned kFiveVariableArity = 5;

inline constexpr unsigned kSboxDegree = 4;
inline constexpr std::uint32_t kSboxModulus = 0x13; // t^4 + t + 1

inline BooleanFunction five_variable_function() {
    return anf_to_function(parse_anf(kFiveVariableAnf, kFiveVariableArity));
}

inline VectorialFunction inversion_sbox() { return gf_inverse_sbox(kSboxDegree, kSboxModulus); }

struct Row {
    unsigned r;
    std::uint64_t u;
    std::size_t c;
    unsigned N_f;
    double H_f;
    std::uint64_t T_q;
    std::vector<std::uint64_t> top_profile; // largest-class counts, descending; empty if not printed in full
};

inline const std::vector<Row> &table1() {
    static const std::vector<Row> rows = {
        {1, 31, 2, 0, 0.95441, 16, {10, 6}},
        {2, 155, 5, 0, 1.82320, 8, {5, 5, 5, 1}},
        {3, 155, 7, 1, 2.65563, 12, {4, 3, 3, 2, 2, 1, 1, 0}},
        {4, 31, 3, 6, 3.2500, 1, {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0}},
    };
    return rows;
}

inline const std::vector<Row> &table2() {
    static const std::vector<Row> rows = [] {
        std::vector<Row> t = {
            {1, 255, 3, 0, 0.8112, 30, {12, 4}},
            {2, 10795, 12, 1, 1.5, 135, {8, 4, 4, 0}},
            {3, 97155, 35, 3, 2, 15, {8, 2, 2, 2, 2, 0, 0, 0}},
            {4, 200787, 49, 10, 2.4056, 3, {6, 2, 2, 2, 2, 2}},
            {5, 97155, 21, 23, 3, 30, {4, 2, 2, 2, 2, 1, 1, 1, 1}},
            {6, 10795, 9, 52, 3.4528, 90, {}},
            {7, 255, 3, 114, 3.75, 15, {}},
        };
        // Pad printed nonzero profiles with their zero entries.
        for (auto &row : t)
            if (!row.top_profile.empty())
                row.top_profile.resize(std::size_t{1} << row.r, 0);
        return t;
    }();
    return rows;
}

struct CellCheck {
    std::string column;
    std::string expected;
    std::string actual;
    bool pass;
};

/// Cell-by-cell comparison of a computed report against a reference row.
inline std::vector<CellCheck> check_row(const Row &want, const NonlinearityReport &got) {
    std::vector<CellCheck> out;
    auto exact = [&](const char *col, std::uint64_t e, std::uint64_t a) {
        out.push_back({col, std::to_string(e), std::to_string(a), e == a});
    };
    exact("u", want.u, got.u);
    exact("c", want.c, got.c());
    exact("N_f", want.N_f, got.N_f());
    exact("T_q", want.T_q, got.T_q());
    out.push_back({"H_f", std::to_string(want.H_f), std::to_string(got.H_f()),
                   std::abs(want.H_f - got.H_f()) <= kEntropyTolerance});
    if (!want.top_profile.empty()) {
        auto fmt = [](const std::vector<std::uint64_t> &v) {
            std::string s;
            for (auto c : v)
                s += (s.empty() ? "" : ",") + std::to_string(c);
            return s;
        };
        const auto prof = got.q().profile();
        out.push_back({"q", fmt(want.top_profile), fmt(prof), prof == want.top_profile});
    }
    return out;
}

} // namespace rdnl::reference
