// SPDX-License-Identifier: Apache-2.0
#pragma once

// r-dimensional non-linearity: enumerate every rank-r map up to row
// equivalence, bucket the induced distributions into classes keyed by
// (zero count, entropy key), and order the classes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "boolean_function.hpp"
#include "distributions.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "subspaces.hpp"
#include "walsh.hpp"

namespace rdnl {

enum class Mode { Conventional, Vectorial };

inline std::string to_string(Mode m) { return m == Mode::Conventional ? "conventional" : "vectorial"; }

/// The point multiset a function contributes: its support (conventional) or
/// its graph (vectorial), each point carrying weight 1/denom.
struct AnalysisTarget {
    Mode mode = Mode::Conventional;
    unsigned n = 0;
    unsigned m = 0;
    std::vector<std::uint64_t> points;

    unsigned ncols() const noexcept { return n + m; }
    std::uint64_t denom() const noexcept { return points.size(); }
    unsigned max_rank() const noexcept { return ncols(); }

    static AnalysisTarget of(const BooleanFunction &f) {
        AnalysisTarget t{Mode::Conventional, f.arity(), 0, detail::support_points(f)};
        require(!t.points.empty(), ErrorKind::EmptySupport, "constant-zero function has no support distribution");
        return t;
    }

    static AnalysisTarget of(const VectorialFunction &F) {
        return {Mode::Vectorial, F.inputs(), F.outputs(), detail::graph_points(F)};
    }
};

/// Aggregate for one distribution profile (sorted counts) within a census.
struct ProfileEntry {
    std::uint64_t size = 0;
    std::uint64_t first_index = 0;
    LinearMap first_map;
    std::vector<std::uint64_t> first_counts;
};

/// Census over part of the subspace enumeration. Merging partials is
/// commutative; representatives are chosen by smallest canonical index.
struct PartialCensus {
    Mode mode = Mode::Conventional;
    unsigned n = 0, m = 0, r = 0;
    std::uint64_t denom = 0;
    std::vector<SubspaceRange> covered;
    std::map<std::vector<std::uint64_t>, ProfileEntry> profiles;

    void add(std::uint64_t index, const LinearMap &U, const std::vector<std::uint64_t> &counts) {
        auto profile = counts;
        std::sort(profile.begin(), profile.end(), std::greater<>{});
        auto [it, inserted] = profiles.try_emplace(std::move(profile));
        auto &e = it->second;
        ++e.size;
        if (inserted || index < e.first_index) {
            e.first_index = index;
            e.first_map = U;
            e.first_counts = counts;
        }
    }

    void absorb(const PartialCensus &other) {
        covered.insert(covered.end(), other.covered.begin(), other.covered.end());
        for (const auto &[profile, e] : other.profiles) {
            auto [it, inserted] = profiles.try_emplace(profile, e);
            if (inserted)
                continue;
            it->second.size += e.size;
            if (e.first_index < it->second.first_index) {
                it->second.first_index = e.first_index;
                it->second.first_map = e.first_map;
                it->second.first_counts = e.first_counts;
            }
        }
    }
};

struct NonlinearityReport {
    Mode mode = Mode::Conventional;
    unsigned n = 0, m = 0, r = 0;
    std::uint64_t denom = 0;
    std::uint64_t u = 0;
    std::vector<DistributionClass> classes; // descending: classes[0] is the largest

    std::size_t c() const noexcept { return classes.size(); }
    const DistributionClass &top() const { return classes.front(); }
    unsigned N_f() const { return top().zero_count(); }
    double H_f() const { return top().entropy_bits(); }
    std::uint64_t T_q() const { return top().size; }
    const LinearMap &U_q() const { return top().representative_map; }
    const InducedDistribution &q() const { return top().representative; }
};

inline void check_rank(const AnalysisTarget &t, unsigned r) {
    require(r >= 1 && r <= t.max_rank(), ErrorKind::RankOutOfRange,
            "r=" + std::to_string(r) + " outside 1.." + std::to_string(t.max_rank()) + " for " + to_string(t.mode) +
                " mode");
}

/// Census over one range of the canonical enumeration.
inline PartialCensus census_range(const AnalysisTarget &t, unsigned r, SubspaceRange range) {
    check_rank(t, r);
    const RrefSpace space(t.ncols(), r);
    PartialCensus pc{t.mode, t.n, t.m, r, t.denom(), {range}, {}};
    std::vector<std::uint64_t> counts;
    space.for_each(range, [&](std::uint64_t idx, const LinearMap &U) {
        detail::count_images(U.rows, t.points, counts);
        pc.add(idx, U, counts);
    });
    return pc;
}

/// Folds partial censuses that exactly tile the enumeration into a report.
inline NonlinearityReport merge_partial(std::span<const PartialCensus> partials) {
    auto first = std::find_if(partials.begin(), partials.end(), [](const PartialCensus &p) { return p.r != 0; });
    require(first != partials.end(), ErrorKind::IncompleteCover, "no partial census carries any range");
    PartialCensus all{first->mode, first->n, first->m, first->r, first->denom, {}, {}};
    for (const auto &p : partials) {
        if (p.covered.empty() && p.profiles.empty())
            continue;
        require(p.mode == all.mode && p.n == all.n && p.m == all.m && p.r == all.r && p.denom == all.denom,
                ErrorKind::ParameterMismatch, "partial censuses come from different analyses");
        all.absorb(p);
    }

    const RrefSpace space(all.n + all.m, all.r);
    auto ranges = all.covered;
    std::erase_if(ranges, [](const SubspaceRange &s) { return s.lo == s.hi; });
    std::sort(ranges.begin(), ranges.end(), [](auto &a, auto &b) { return a.lo < b.lo; });
    std::uint64_t at = 0;
    for (const auto &s : ranges) {
        require(s.lo == at, ErrorKind::IncompleteCover,
                s.lo < at ? "partial ranges overlap" : "gap in partial ranges at index " + std::to_string(at));
        at = s.hi;
    }
    require(at == space.size(), ErrorKind::IncompleteCover, "partial ranges stop short of the full enumeration");

    auto less = [](const ClassKey &a, const ClassKey &b) { return compare_distribution_keys(a, b) < 0; };
    std::map<ClassKey, DistributionClass, decltype(less)> by_key(less);
    for (const auto &[profile, e] : all.profiles) {
        ClassKey key = class_key(InducedDistribution{all.r, profile, all.denom});
        auto [it, inserted] = by_key.try_emplace(key);
        auto &cls = it->second;
        if (inserted) {
            cls.key = std::move(key);
            cls.denom = all.denom;
        }
        cls.size += e.size;
        if (inserted || e.first_index < cls.representative_index) {
            cls.representative_index = e.first_index;
            cls.representative_map = e.first_map;
            cls.representative = InducedDistribution{all.r, e.first_counts, all.denom};
        }
    }

    NonlinearityReport rep{all.mode, all.n, all.m, all.r, all.denom, space.size(), {}};
    for (auto it = by_key.rbegin(); it != by_key.rend(); ++it)
        rep.classes.push_back(std::move(it->second));
    return rep;
}

inline NonlinearityReport analyze(const AnalysisTarget &t, unsigned r, unsigned jobs = 1) {
    check_rank(t, r);
    jobs = std::max(1u, jobs);
    const auto ranges = split_range(t.ncols(), r, jobs);
    std::vector<PartialCensus> partials(ranges.size());
    if (jobs == 1) {
        partials[0] = census_range(t, r, ranges[0]);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t i = 0; i < ranges.size(); ++i)
            workers.emplace_back([&, i] { partials[i] = census_range(t, r, ranges[i]); });
    }
    return merge_partial(partials);
}

inline NonlinearityReport analyze(const BooleanFunction &f, unsigned r, unsigned jobs = 1) {
    return analyze(AnalysisTarget::of(f), r, jobs);
}

inline NonlinearityReport analyze(const VectorialFunction &F, unsigned r, unsigned jobs = 1) {
    return analyze(AnalysisTarget::of(F), r, jobs);
}

// ---------------------------------------------------------------------------
// r = 1 through the Walsh-Hadamard transform.
//
// A rank-1 map is a single nonzero mask w. For conventional f with weight v,
// c0 - c1 = -S_w / 2 where S is the integer spectrum of f. For vectorial F and
// w = (a, b), c0 - c1 = sum_x (-1)^(a.x + b.F(x)), the spectrum of component b.

inline NonlinearityReport analyze_r1_fast(const BooleanFunction &f) {
    const std::uint64_t v = f.weight();
    require(v >= 1, ErrorKind::EmptySupport, "constant-zero function has no support distribution");
    const unsigned n = f.arity();
    const auto spec = walsh_spectrum(f);
    const RrefSpace space(n, 1);
    PartialCensus pc{Mode::Conventional, n, 0, 1, v, {space.full()}, {}};
    for (std::uint64_t w = 1; w < f.size(); ++w) {
        const std::int64_t diff = -spec.sum(static_cast<std::uint32_t>(w)) / 2;
        const auto c0 = static_cast<std::uint64_t>((static_cast<std::int64_t>(v) + diff) / 2);
        const LinearMap U{n, {w}, {static_cast<unsigned>(n - std::bit_width(w))}};
        pc.add(space.rank_of(U), U, {c0, v - c0});
    }
    const PartialCensus parts[] = {std::move(pc)};
    return merge_partial(parts);
}

inline NonlinearityReport analyze_r1_fast(const VectorialFunction &F) {
    const unsigned n = F.inputs(), m = F.outputs(), N = n + m;
    const std::uint64_t D = F.size();
    const RrefSpace space(N, 1);
    PartialCensus pc{Mode::Vectorial, n, m, 1, D, {space.full()}, {}};
    std::vector<std::int64_t> signs(F.size());
    for (std::uint32_t b = 0; b < (1u << m); ++b) {
        for (std::uint32_t x = 0; x < signs.size(); ++x)
            signs[x] = gf2::parity(F(x) & b) ? -1 : 1;
        fast_walsh_hadamard(signs);
        for (std::uint64_t a = 0; a < F.size(); ++a) {
            const std::uint64_t w = (a << m) | b;
            if (w == 0)
                continue;
            const auto c0 = static_cast<std::uint64_t>((static_cast<std::int64_t>(D) + signs[a]) / 2);
            const LinearMap U{N, {w}, {static_cast<unsigned>(N - std::bit_width(w))}};
            pc.add(space.rank_of(U), U, {c0, D - c0});
        }
    }
    const PartialCensus parts[] = {std::move(pc)};
    return merge_partial(parts);
}

// ---------------------------------------------------------------------------
// Top class only, for scanning many functions against a fixed set of maps.

/// Evaluates (N_f, entropy key) of many functions at one (N, r), reusing the
/// materialized map list and a profile -> key cache. Not thread-safe; use one
/// per worker.
class TopClassEvaluator {
  public:
    TopClassEvaluator(unsigned ncols, unsigned r) {
        const RrefSpace space(ncols, r);
        require(space.size() <= (std::uint64_t{1} << 24), ErrorKind::SpaceTooLarge,
                "too many subspaces to materialize for a function scan");
        maps_.reserve(space.size());
        space.for_each([&](std::uint64_t, const LinearMap &U) { maps_.push_back(U.rows); });
    }

    std::uint64_t subspace_count() const noexcept { return maps_.size(); }

    /// Largest class under the distinguishability order.
    ClassKey top(std::span<const std::uint64_t> points) {
        bool have = false;
        unsigned best_zeros = 0;
        const EntropyKey *best_key = nullptr;
        std::vector<std::uint64_t> best_profile;
        for (const auto &rows : maps_) {
            detail::count_images(rows, points, counts_);
            const auto zeros = static_cast<unsigned>(std::count(counts_.begin(), counts_.end(), 0u));
            if (have && zeros < best_zeros)
                continue;
            std::sort(counts_.begin(), counts_.end(), std::greater<>{});
            if (have && zeros == best_zeros && counts_ == best_profile)
                continue;
            const EntropyKey &key = key_for(counts_);
            if (!have || zeros > best_zeros || key > *best_key) {
                have = true;
                best_zeros = zeros;
                best_key = &key;
                best_profile = counts_;
            }
        }
        return {best_zeros, *best_key};
    }

  private:
    const EntropyKey &key_for(const std::vector<std::uint64_t> &profile) {
        auto it = cache_.find(profile);
        if (it == cache_.end())
            it = cache_.emplace(profile, EntropyKey::from_counts(profile)).first;
        return it->second;
    }

    std::vector<std::vector<Mask>> maps_;
    std::vector<std::uint64_t> counts_;
    std::map<std::vector<std::uint64_t>, EntropyKey> cache_;
};

} // namespace rdnl
