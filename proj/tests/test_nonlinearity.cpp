// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <rdnl/nonlinearity.hpp>
#include <rdnl/reference_tables.hpp>

#include "oracles.hpp"

using namespace rdnl;

namespace {

/// Ordered census as comparable plain data.
std::vector<std::tuple<unsigned, BigInt, std::uint64_t>> census(const NonlinearityReport &rep) {
    std::vector<std::tuple<unsigned, BigInt, std::uint64_t>> out;
    for (const auto &c : rep.classes)
        out.emplace_back(c.zero_count(), c.key.entropy.value(), c.size);
    return out;
}

void expect_self_consistent(const NonlinearityReport &rep) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        total += rep.classes[i].size;
        if (i > 0)
            EXPECT_TRUE(compare_distribution_keys(rep.classes[i - 1].key, rep.classes[i].key) > 0);
        const auto &cls = rep.classes[i];
        EXPECT_EQ(class_key(cls.representative), cls.key);
    }
    EXPECT_EQ(total, rep.u);
    EXPECT_EQ(BigInt(rep.u), gaussian_binomial(rep.n + rep.m, rep.r));
    EXPECT_EQ(rep.T_q(), rep.classes.front().size);
}

} // namespace

TEST(Analyze, FiveVariableRankTwo) {
    const auto rep = analyze(reference::five_variable_function(), 2);
    EXPECT_EQ(rep.u, 155u);
    EXPECT_EQ(rep.c(), 5u);
    EXPECT_EQ(rep.N_f(), 0u);
    EXPECT_NEAR(rep.H_f(), 1.8232, 1e-3);
    EXPECT_EQ(rep.T_q(), 8u);
    EXPECT_EQ(rep.q().profile(), (std::vector<std::uint64_t>{5, 5, 5, 1}));
    expect_self_consistent(rep);
}

TEST(Analyze, InversionSboxRankFour) {
    const auto rep = analyze(reference::inversion_sbox(), 4);
    EXPECT_EQ(rep.u, 200787u);
    EXPECT_EQ(rep.c(), 49u);
    EXPECT_EQ(rep.N_f(), 10u);
    EXPECT_NEAR(rep.H_f(), 2.4056, 1e-3);
    EXPECT_EQ(rep.T_q(), 3u);
    expect_self_consistent(rep);
}

TEST(Analyze, FullRankIsSingleClass) {
    std::mt19937_64 rng(31);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto f = oracle::random_nonzero_function(n, rng);
        const auto rep = analyze(f, n);
        EXPECT_EQ(rep.c(), 1u);
        EXPECT_EQ(rep.N_f(), f.size() - f.weight());
        EXPECT_NEAR(rep.H_f(), std::log2(double(f.weight())), 1e-12);
    }
}

TEST(Analyze, RepresentativeIsFirstInCanonicalOrder) {
    const auto rep = analyze(reference::five_variable_function(), 2);
    const RrefSpace space(5, 2);
    for (const auto &cls : rep.classes) {
        EXPECT_EQ(space.unrank(cls.representative_index), cls.representative_map);
        std::uint64_t first = space.size();
        space.for_each([&](std::uint64_t idx, const LinearMap &U) {
            if (first == space.size() &&
                class_key(induce_conventional(reference::five_variable_function(), U)) == cls.key)
                first = idx;
        });
        EXPECT_EQ(cls.representative_index, first);
    }
}

TEST(Analyze, Errors) {
    auto kind = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind([] { analyze(BooleanFunction(4), 1); }), ErrorKind::EmptySupport);
    EXPECT_EQ(kind([] { analyze(reference::five_variable_function(), 0); }), ErrorKind::RankOutOfRange);
    EXPECT_EQ(kind([] { analyze(reference::five_variable_function(), 6); }), ErrorKind::RankOutOfRange);
    EXPECT_EQ(kind([] { analyze(reference::inversion_sbox(), 9); }), ErrorKind::RankOutOfRange);
}

TEST(AnalyzeR1Fast, ReferenceRows) {
    const auto f = analyze_r1_fast(reference::five_variable_function());
    EXPECT_EQ(f.u, 31u);
    EXPECT_EQ(f.c(), 2u);
    EXPECT_EQ(f.N_f(), 0u);
    EXPECT_NEAR(f.H_f(), 0.9544, 1e-3);
    EXPECT_EQ(f.T_q(), 16u);

    const auto s = analyze_r1_fast(reference::inversion_sbox());
    EXPECT_EQ(s.u, 255u);
    EXPECT_EQ(s.c(), 3u);
    EXPECT_EQ(s.T_q(), 30u);
    EXPECT_EQ(s.q().profile(), (std::vector<std::uint64_t>{12, 4}));
}

TEST(AnalyzeR1Fast, MatchesEnumeration) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + trial % 6;
        const auto f = oracle::random_nonzero_function(n, rng);
        const auto fast = analyze_r1_fast(f), slow = analyze(f, 1);
        EXPECT_EQ(census(fast), census(slow));
        EXPECT_EQ(fast.U_q(), slow.U_q());
        EXPECT_EQ(fast.q(), slow.q());
    }
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + trial % 4, m = 1 + trial % n;
        std::vector<std::uint32_t> t(std::size_t{1} << n);
        for (auto &y : t)
            y = static_cast<std::uint32_t>(rng() & ((1u << m) - 1));
        const VectorialFunction F(n, m, t);
        const auto fast = analyze_r1_fast(F), slow = analyze(F, 1);
        EXPECT_EQ(census(fast), census(slow));
        EXPECT_EQ(fast.U_q(), slow.U_q());
    }
}

TEST(MergePartial, SplitsGiveIdenticalReports) {
    const auto target = AnalysisTarget::of(reference::inversion_sbox());
    const auto whole = analyze(target, 3);
    for (unsigned parts : {2u, 7u}) {
        std::vector<PartialCensus> partials;
        for (const auto &range : split_range(8, 3, parts))
            partials.push_back(census_range(target, 3, range));
        std::reverse(partials.begin(), partials.end()); // merge order must not matter
        const auto merged = merge_partial(partials);
        EXPECT_EQ(census(merged), census(whole));
        ASSERT_EQ(merged.c(), whole.c());
        for (std::size_t i = 0; i < merged.c(); ++i) {
            EXPECT_EQ(merged.classes[i].representative_index, whole.classes[i].representative_index);
            EXPECT_EQ(merged.classes[i].representative, whole.classes[i].representative);
        }
    }
}

TEST(MergePartial, IdentityAndEmptyPartials) {
    const auto target = AnalysisTarget::of(reference::five_variable_function());
    const auto one = census_range(target, 2, RrefSpace(5, 2).full());
    const auto whole = merge_partial(std::vector<PartialCensus>{one});
    EXPECT_EQ(census(whole), census(analyze(target, 2)));
    const auto with_empty = merge_partial(std::vector<PartialCensus>{PartialCensus{}, one, PartialCensus{}});
    EXPECT_EQ(census(with_empty), census(whole));
}

TEST(MergePartial, IncompleteCoverIsRejected) {
    const auto target = AnalysisTarget::of(reference::five_variable_function());
    const auto parts = split_range(5, 2, 3);
    std::vector<PartialCensus> partials = {census_range(target, 2, parts[0]), census_range(target, 2, parts[2])};
    try {
        merge_partial(partials);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncompleteCover);
    }
    partials.push_back(census_range(target, 2, parts[1]));
    partials.push_back(census_range(target, 2, parts[1]));
    EXPECT_THROW(merge_partial(partials), Error); // overlap
    EXPECT_THROW(merge_partial(std::vector<PartialCensus>{}), Error);
}

TEST(Analyze, WorkerCountDoesNotChangeReport) {
    const auto S = reference::inversion_sbox();
    const auto base = analyze(S, 2, 1);
    for (unsigned jobs : {2u, 7u}) {
        const auto rep = analyze(S, 2, jobs);
        EXPECT_EQ(census(rep), census(base));
        EXPECT_EQ(rep.U_q(), base.U_q());
    }
}

TEST(Analyze, AffineInvarianceOfCensus) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = oracle::random_nonzero_function(5, rng);
        const auto A = oracle::random_invertible(5, rng);
        const auto g = apply_affine_change(f, A, rng() & 31);
        for (unsigned r : {1u, 2u})
            EXPECT_EQ(census(analyze(g, r)), census(analyze(f, r)));
    }
}

TEST(TopClassEvaluator, AgreesWithFullAnalysis) {
    std::mt19937_64 rng(34);
    TopClassEvaluator eval(5, 2);
    EXPECT_EQ(eval.subspace_count(), 155u);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint32_t> t(16);
        for (auto &y : t)
            y = rng() & 1;
        const VectorialFunction F(4, 1, t);
        const auto target = AnalysisTarget::of(F);
        EXPECT_EQ(eval.top(target.points), analyze(target, 2).top().key);
    }
}
