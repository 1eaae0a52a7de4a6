// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON / CSV / markdown renderings of reports and search censuses.
// Entropies are rounded to 5 decimals; every other number is exact.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolean_function.hpp"
#include "distributions.hpp"
#include "nonlinearity.hpp"
#include "optimal.hpp"
#include "walsh.hpp"

namespace rdnl::io {

using nlohmann::json;

inline double round5(double v) { return std::round(v * 1e5) / 1e5; }

inline std::string fixed5(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

inline json to_json(const NonlinearityReport &rep) {
    json classes = json::array();
    for (const auto &cls : rep.classes)
        classes.push_back({{"N", cls.zero_count()},
                           {"H", round5(cls.entropy_bits())},
                           {"size", cls.size},
                           {"counts", cls.representative.counts}});
    return {{"mode", to_string(rep.mode)},
            {"n", rep.n},
            {"m", rep.m},
            {"r", rep.r},
            {"u", rep.u},
            {"c", rep.c()},
            {"N_f", rep.N_f()},
            {"H_f", round5(rep.H_f())},
            {"T_q", rep.T_q()},
            {"U_q", format_rows(rep.U_q(), rep.n)},
            {"q", format_fractions(rep.q())},
            {"classes", std::move(classes)}};
}

inline std::string markdown_header() {
    return "| r | u | c | U_q | q | N_f | H_f | T_q |\n|---|---|---|---|---|---|---|---|\n";
}

inline std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string markdown_row(const NonlinearityReport &rep) {
    std::ostringstream os;
    os << "| " << rep.r << " | " << rep.u << " | " << rep.c() << " | " << join(format_rows(rep.U_q(), rep.n), ", ")
       << " | " << join(format_fractions(rep.q(), true), ", ") << " | " << rep.N_f() << " | " << fixed5(rep.H_f())
       << " | " << rep.T_q() << " |\n";
    return os.str();
}

inline std::string csv_header() { return "r,u,c,U_q,q,N_f,H_f,T_q\n"; }

inline std::string csv_row(const NonlinearityReport &rep) {
    std::ostringstream os;
    os << rep.r << ',' << rep.u << ',' << rep.c() << ",\"" << join(format_rows(rep.U_q(), rep.n), ";") << "\",\""
       << join(format_fractions(rep.q()), ";") << "\"," << rep.N_f() << ',' << fixed5(rep.H_f()) << ','
       << rep.T_q() << '\n';
    return os.str();
}

/// Spectrum as W_a fractions indexed by a.
inline json to_json(const WalshSpectrum &spec) {
    json values = json::array();
    for (std::uint32_t a = 0; a < spec.size(); ++a) {
        const Rational w = spec.value(a);
        values.push_back(boost::multiprecision::numerator(w).str() + "/" +
                         boost::multiprecision::denominator(w).str());
    }
    return {{"n", spec.arity()}, {"W", std::move(values)}};
}

/// One JSON line per function class, best class first.
inline std::string census_jsonl(const SearchResult &res) {
    std::string out;
    for (const auto &cls : res.census) {
        json line = {{"N", cls.N_f()},
                     {"H", round5(cls.H_f())},
                     {"size", cls.member_count},
                     {"first_member_hex", to_hex(cls.examples.front())}};
        out += line.dump() + "\n";
    }
    return out;
}

inline json summary_json(const SearchResult &res, const std::optional<PnComparison> &pn = std::nullopt) {
    const auto &best = res.optimal();
    json s = {{"n", res.n},
              {"m", res.m},
              {"r", res.r},
              {"scanned", res.scanned},
              {"classes", res.census.size()},
              {"optimal", {{"N", best.N_f()}, {"H", round5(best.H_f())}, {"size", best.member_count},
                           {"first_member_hex", to_hex(best.examples.front())}}}};
    if (pn) {
        json cex_opt = json::array(), cex_pn = json::array();
        for (const auto &F : pn->optimal_not_pn)
            cex_opt.push_back(to_hex(F));
        for (const auto &F : pn->pn_not_optimal)
            cex_pn.push_back(to_hex(F));
        s["perfect_nonlinear"] = {{"count", pn->perfect_nonlinear_count},
                                  {"optimal_equals_pn", pn->holds()},
                                  {"optimal_not_pn", std::move(cex_opt)},
                                  {"pn_not_optimal", std::move(cex_pn)}};
    }
    return s;
}

} // namespace rdnl::io
