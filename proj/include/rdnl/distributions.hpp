// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolean_function.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "subspaces.hpp"

namespace rdnl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact q as integer counts over a common denominator.
/// Conventional mode: denom = weight(f). Vectorial mode: denom = 2^n.
struct InducedDistribution {
    unsigned r = 0;
    std::vector<std::uint64_t> counts; // indexed by outcome z, z_1 most significant
    std::uint64_t denom = 0;

    unsigned zero_count() const noexcept {
        return static_cast<unsigned>(std::count(counts.begin(), counts.end(), 0u));
    }

    /// Counts sorted descending; two distributions with equal profiles are
    /// permutations of one another.
    std::vector<std::uint64_t> profile() const {
        auto p = counts;
        std::sort(p.begin(), p.end(), std::greater<>{});
        return p;
    }

    friend bool operator==(const InducedDistribution &, const InducedDistribution &) = default;
};

namespace detail {

/// Histogram of U*v over the given points.
inline void count_images(std::span<const Mask> rows, std::span<const std::uint64_t> points,
                         std::vector<std::uint64_t> &counts) {
    counts.assign(std::size_t{1} << rows.size(), 0);
    for (auto v : points)
        ++counts[gf2::apply(rows, v)];
}

inline std::vector<std::uint64_t> support_points(const BooleanFunction &f) {
    const auto s = f.support();
    return {s.begin(), s.end()};
}

inline std::vector<std::uint64_t> graph_points(const VectorialFunction &F) {
    std::vector<std::uint64_t> pts(F.size());
    for (std::uint32_t x = 0; x < pts.size(); ++x)
        pts[x] = F.graph_point(x);
    return pts;
}

} // namespace detail

inline InducedDistribution induce_conventional(const BooleanFunction &f, const LinearMap &U) {
    require(U.ncols == f.arity(), ErrorKind::ColumnMismatch,
            "map has " + std::to_string(U.ncols) + " columns, function has n=" + std::to_string(f.arity()));
    const auto pts = detail::support_points(f);
    require(!pts.empty(), ErrorKind::EmptySupport, "constant-zero function has no support distribution");
    InducedDistribution d{U.rank(), {}, pts.size()};
    detail::count_images(U.rows, pts, d.counts);
    return d;
}

inline InducedDistribution induce_vectorial(const VectorialFunction &F, const LinearMap &U) {
    require(U.ncols == F.inputs() + F.outputs(), ErrorKind::ColumnMismatch,
            "map has " + std::to_string(U.ncols) + " columns, expected n+m=" +
                std::to_string(F.inputs() + F.outputs()));
    const auto pts = detail::graph_points(F);
    InducedDistribution d{U.rank(), {}, pts.size()};
    detail::count_images(U.rows, pts, d.counts);
    return d;
}

/// Shannon entropy in bits over the support of q.
inline double support_entropy(const InducedDistribution &d) {
    require(d.denom >= 1, ErrorKind::InvalidArgument, "denominator must be positive");
    const double D = static_cast<double>(d.denom);
    double h = 0;
    for (auto c : d.counts)
        if (c > 0) {
            const double p = static_cast<double>(c) / D;
            h -= p * std::log2(p);
        }
    return h;
}

/// The exact entropy key prod_{c > 0} c^c, held as its prime factorization.
///
/// For a fixed denominator D the support entropy is log2(D) - log2(key)/D,
/// so a larger key means a strictly smaller entropy.
class EntropyKey {
  public:
    EntropyKey() = default;

    template <class Range>
    static EntropyKey from_counts(const Range &counts) {
        std::map<std::uint64_t, std::uint64_t> exps;
        double log2_value = 0;
        for (std::uint64_t c : counts) {
            if (c < 2)
                continue;
            log2_value += static_cast<double>(c) * std::log2(static_cast<double>(c));
            std::uint64_t rest = c;
            for (std::uint64_t p = 2; p * p <= rest; ++p)
                while (rest % p == 0) {
                    exps[p] += c;
                    rest /= p;
                }
            if (rest > 1)
                exps[rest] += c;
        }
        EntropyKey k;
        k.factors_.assign(exps.begin(), exps.end());
        k.log2_ = log2_value;
        return k;
    }

    /// log2(key), approximate.
    double log2() const noexcept { return log2_; }

    const std::vector<std::pair<std::uint64_t, std::uint64_t>> &factors() const noexcept { return factors_; }

    BigInt value() const {
        BigInt v = 1;
        for (auto [p, e] : factors_)
            v *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
        return v;
    }

    friend bool operator==(const EntropyKey &a, const EntropyKey &b) noexcept { return a.factors_ == b.factors_; }

    /// Exact: decided by the float logarithm when it separates the keys by a
    /// wide margin, otherwise by comparing the integers.
    friend std::strong_ordering operator<=>(const EntropyKey &a, const EntropyKey &b) {
        if (a.factors_ == b.factors_)
            return std::strong_ordering::equal;
        const double diff = a.log2_ - b.log2_;
        const double scale = std::max({1.0, std::abs(a.log2_), std::abs(b.log2_)});
        if (std::abs(diff) > 1e-9 * scale)
            return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        const BigInt va = a.value(), vb = b.value();
        return va < vb ? std::strong_ordering::less : std::strong_ordering::greater;
    }

  private:
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors_;
    double log2_ = 0;
};

/// Class identity of a distribution: (zero count N, entropy key).
struct ClassKey {
    unsigned zeros = 0;
    EntropyKey entropy;

    friend bool operator==(const ClassKey &, const ClassKey &) = default;
};

inline ClassKey class_key(const InducedDistribution &d) {
    return {d.zero_count(), EntropyKey::from_counts(d.counts)};
}

/// Entropy in bits recovered from a key: log2(D) - log2(key)/D.
inline double entropy_from_key(const EntropyKey &key, std::uint64_t denom) {
    const double D = static_cast<double>(denom);
    return std::log2(D) - key.log2() / D;
}

/// Distinguishability order: more zeros is larger; at equal zeros a smaller
/// entropy (larger key) is larger.
inline std::strong_ordering compare_distribution_keys(const ClassKey &a, const ClassKey &b) {
    if (a.zeros != b.zeros)
        return a.zeros <=> b.zeros;
    return a.entropy <=> b.entropy;
}

/// One equivalence class of induced distributions within a single analysis.
struct DistributionClass {
    ClassKey key;
    std::uint64_t denom = 0;
    std::uint64_t size = 0;
    std::uint64_t representative_index = 0; // canonical enumeration index
    LinearMap representative_map;
    InducedDistribution representative;

    unsigned zero_count() const noexcept { return key.zeros; }
    double entropy_bits() const { return entropy_from_key(key.entropy, denom); }
};

inline std::strong_ordering compare_distribution_classes(const DistributionClass &a, const DistributionClass &b) {
    require(a.denom == b.denom, ErrorKind::DenominatorMismatch,
            "classes come from analyses with different denominators");
    return compare_distribution_keys(a.key, b.key);
}

/// Reduced fraction num/den. `compact` drops the denominator of integers ("0", "1").
inline std::string format_fraction(std::uint64_t num, std::uint64_t den, bool compact = false) {
    const std::uint64_t g = std::gcd(num, den);
    if (compact && den / g == 1)
        return std::to_string(num / g);
    return std::to_string(num / g) + "/" + std::to_string(den / g);
}

inline std::vector<std::string> format_fractions(const InducedDistribution &d, bool compact = false) {
    std::vector<std::string> out;
    out.reserve(d.counts.size());
    for (auto c : d.counts)
        out.push_back(format_fraction(c, d.denom, compact));
    return out;
}

} // namespace rdnl
