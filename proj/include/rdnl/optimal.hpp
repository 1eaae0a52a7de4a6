// SPDX-License-Identifier: Apache-2.0
#pragma once

// Optimal functions: order whole functions by their (N_f, H_f) at a fixed
// (n, m, r) and find the smallest class by scanning a function space.
// Functions are analyzed in vectorial mode, with maps over all n+m columns.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "boolean_function.hpp"
#include "distributions.hpp"
#include "errors.hpp"
#include "nonlinearity.hpp"
#include "walsh.hpp"

namespace rdnl {

inline constexpr unsigned kMaxFullSearchBits = 20; // m * 2^n

/// Truth-table integer of a function: entry x occupies m bits, entry 0 most
/// significant. For m = 1 this is the packed hex format read as an integer.
inline VectorialFunction function_from_index(unsigned n, unsigned m, std::uint64_t index) {
    const std::size_t len = std::size_t{1} << n;
    require(m * len <= 64, ErrorKind::SpaceTooLarge, "truth table does not fit a 64-bit index");
    std::vector<std::uint32_t> table(len);
    const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    for (std::size_t x = 0; x < len; ++x)
        table[x] = static_cast<std::uint32_t>((index >> ((len - 1 - x) * m)) & mask);
    return VectorialFunction(n, m, std::move(table));
}

inline std::uint64_t function_index(const VectorialFunction &F) {
    require(F.outputs() * F.size() <= 64, ErrorKind::SpaceTooLarge, "truth table does not fit a 64-bit index");
    std::uint64_t index = 0;
    for (auto y : F.table())
        index = (index << F.outputs()) | y;
    return index;
}

/// Functions sharing (N_f, H_f) at a fixed (n, m, r).
struct FunctionClass {
    unsigned n = 0, m = 0, r = 0;
    ClassKey key;
    std::uint64_t member_count = 0;
    std::vector<VectorialFunction> examples; // first members in scan order

    unsigned N_f() const noexcept { return key.zeros; }
    double H_f() const { return entropy_from_key(key.entropy, std::uint64_t{1} << n); }
};

inline constexpr std::size_t kClassExamples = 4;

/// Smaller is better: fewer zeros, then larger entropy (smaller key).
inline std::strong_ordering compare_function_classes(const FunctionClass &a, const FunctionClass &b) {
    require(a.n == b.n && a.m == b.m && a.r == b.r, ErrorKind::ParameterMismatch,
            "function classes computed at different (n, m, r)");
    return compare_distribution_keys(a.key, b.key);
}

/// (N_f, entropy key) of one function at rank r.
inline ClassKey function_class_key(const VectorialFunction &F, unsigned r) {
    return analyze(F, r).top().key;
}

/// What to scan: the full space of m*2^n-bit truth tables, that space
/// restricted by a predicate, or an explicit candidate list.
struct SearchScope {
    std::function<bool(const VectorialFunction &)> predicate; // empty: accept everything
    std::optional<std::vector<VectorialFunction>> candidates;

    static SearchScope all() { return {}; }
    static SearchScope filtered(std::function<bool(const VectorialFunction &)> pred) { return {std::move(pred), {}}; }
    static SearchScope list(std::vector<VectorialFunction> fns) { return {{}, std::move(fns)}; }

    bool is_full() const noexcept { return !predicate && !candidates; }
};

struct SearchResult {
    unsigned n = 0, m = 0, r = 0;
    std::uint64_t scanned = 0;
    std::vector<FunctionClass> census; // ascending: census[0] is the optimal class
    std::vector<VectorialFunction> optimal_members;

    const FunctionClass &optimal() const { return census.front(); }
};

namespace detail {

struct ScanShard {
    std::vector<ClassKey> keys;            // distinct keys seen in this shard
    std::vector<std::uint32_t> key_of;     // per scanned function
    std::vector<std::uint64_t> scanned_id; // function index (full space) or candidate position
};

inline std::uint32_t intern(ScanShard &shard, const ClassKey &key) {
    for (std::uint32_t i = 0; i < shard.keys.size(); ++i)
        if (shard.keys[i] == key)
            return i;
    shard.keys.push_back(key);
    return static_cast<std::uint32_t>(shard.keys.size() - 1);
}

inline void graph_of(const VectorialFunction &F, std::vector<std::uint64_t> &pts) {
    pts.resize(F.size());
    for (std::uint32_t x = 0; x < pts.size(); ++x)
        pts[x] = F.graph_point(x);
}

} // namespace detail

inline SearchResult optimal_search(unsigned n, unsigned m, unsigned r, const SearchScope &scope = SearchScope::all(),
                                   unsigned jobs = 1) {
    require(m >= 1 && m <= n && n <= kMaxVectorialInputs, ErrorKind::InvalidArgument, "need 1 <= m <= n <= 16");
    require(r >= 1 && r <= n + m, ErrorKind::RankOutOfRange,
            "r=" + std::to_string(r) + " outside 1.." + std::to_string(n + m));
    const bool enumerate_space = !scope.candidates.has_value();
    const std::uint64_t bits = std::uint64_t{m} << n;
    if (enumerate_space && bits > kMaxFullSearchBits)
        fail(ErrorKind::SpaceTooLarge, "full scan of 2^" + std::to_string(bits) +
                                           " functions exceeds the 2^20 cap; pass an explicit candidate list");
    if (scope.candidates)
        for (const auto &F : *scope.candidates)
            require(F.inputs() == n && F.outputs() == m, ErrorKind::ParameterMismatch,
                    "candidate arity differs from the search parameters");

    const std::uint64_t total = enumerate_space ? (std::uint64_t{1} << bits) : scope.candidates->size();
    jobs = std::max(1u, jobs);
    std::vector<detail::ScanShard> shards(jobs);

    auto run = [&](unsigned s) {
        TopClassEvaluator eval(n + m, r);
        auto &shard = shards[s];
        std::vector<std::uint64_t> pts;
        const std::uint64_t lo = total * s / jobs, hi = total * (s + 1) / jobs;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const VectorialFunction F = enumerate_space ? function_from_index(n, m, i) : (*scope.candidates)[i];
            if (scope.predicate && !scope.predicate(F))
                continue;
            detail::graph_of(F, pts);
            shard.key_of.push_back(detail::intern(shard, eval.top(pts)));
            shard.scanned_id.push_back(i);
        }
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned s = 0; s < jobs; ++s)
            workers.emplace_back(run, s);
    }

    auto fetch = [&](std::uint64_t id) {
        return enumerate_space ? function_from_index(n, m, id) : (*scope.candidates)[id];
    };
    auto less = [](const ClassKey &a, const ClassKey &b) { return compare_distribution_keys(a, b) < 0; };
    std::map<ClassKey, FunctionClass, decltype(less)> classes(less);
    SearchResult res{n, m, r, 0, {}, {}};
    // Shards cover increasing id ranges, so visiting them in order preserves scan order.
    for (const auto &shard : shards) {
        for (std::size_t j = 0; j < shard.key_of.size(); ++j) {
            const ClassKey &key = shard.keys[shard.key_of[j]];
            auto [it, inserted] = classes.try_emplace(key);
            auto &cls = it->second;
            if (inserted)
                cls = FunctionClass{n, m, r, key, 0, {}};
            ++cls.member_count;
            if (cls.examples.size() < kClassExamples)
                cls.examples.push_back(fetch(shard.scanned_id[j]));
            ++res.scanned;
        }
    }
    require(!classes.empty(), ErrorKind::InvalidArgument, "search scope contains no functions");
    for (auto &[key, cls] : classes)
        res.census.push_back(std::move(cls));

    const ClassKey &best = res.census.front().key;
    for (const auto &shard : shards)
        for (std::size_t j = 0; j < shard.key_of.size(); ++j)
            if (shard.keys[shard.key_of[j]] == best)
                res.optimal_members.push_back(fetch(shard.scanned_id[j]));
    return res;
}

/// Outcome of comparing the optimal set with the perfect-nonlinear set over a scope.
struct PnComparison {
    SearchResult search;
    std::uint64_t perfect_nonlinear_count = 0;
    std::vector<VectorialFunction> optimal_not_pn; // bounded list of counterexamples
    std::vector<VectorialFunction> pn_not_optimal;
    bool holds() const noexcept { return optimal_not_pn.empty() && pn_not_optimal.empty(); }
};

inline constexpr std::size_t kCounterexampleLimit = 16;

inline PnComparison verify_optimal_equals_pn(unsigned n, unsigned m, unsigned r,
                                             const SearchScope &scope = SearchScope::all(), unsigned jobs = 1) {
    require(n % 2 == 0 && n >= 2 * m, ErrorKind::InvalidArgument, "requires even n >= 2m");
    PnComparison out{optimal_search(n, m, r, scope, jobs), 0, {}, {}};
    const auto &best = out.search.optimal().key;

    auto visit = [&](const VectorialFunction &F) {
        const bool pn = is_perfect_nonlinear(F);
        out.perfect_nonlinear_count += pn;
        if (!pn)
            return;
        // PN functions are rare; only they need a fresh class evaluation.
        if (!(function_class_key(F, r) == best) && out.pn_not_optimal.size() < kCounterexampleLimit)
            out.pn_not_optimal.push_back(F);
    };
    if (scope.candidates) {
        for (const auto &F : *scope.candidates)
            if (!scope.predicate || scope.predicate(F))
                visit(F);
    } else {
        const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{m} << n);
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto F = function_from_index(n, m, i);
            if (!scope.predicate || scope.predicate(F))
                visit(F);
        }
    }
    for (const auto &F : out.search.optimal_members) {
        if (!is_perfect_nonlinear(F) && out.optimal_not_pn.size() < kCounterexampleLimit)
            out.optimal_not_pn.push_back(F);
    }
    return out;
}

} // namespace rdnl
