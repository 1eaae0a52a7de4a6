// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include <rdnl/subspaces.hpp>

using namespace rdnl;
using BigInt = boost::multiprecision::cpp_int;

namespace {

std::vector<LinearMap> collect(unsigned N, unsigned r) {
    std::vector<LinearMap> out;
    enumerate_rref(N, r, [&](const LinearMap &U) { out.push_back(U); });
    return out;
}

} // namespace

TEST(GaussianBinomial, ReferenceCounts) {
    EXPECT_EQ(gaussian_binomial(5, 1), 31);
    EXPECT_EQ(gaussian_binomial(5, 2), 155);
    EXPECT_EQ(gaussian_binomial(8, 2), 10795);
    EXPECT_EQ(gaussian_binomial(8, 3), 97155);
    EXPECT_EQ(gaussian_binomial(8, 4), 200787);
    for (unsigned N = 0; N <= 64; N += 8) {
        EXPECT_EQ(gaussian_binomial(N, 0), 1);
        EXPECT_EQ(gaussian_binomial(N, N), 1);
    }
    EXPECT_THROW(gaussian_binomial(4, 5), Error);
    EXPECT_THROW(gaussian_binomial(65, 1), Error);
}

TEST(GaussianBinomial, PascalRecurrence) {
    // [N, r] = [N-1, r-1] + 2^r [N-1, r]
    for (unsigned N = 1; N <= 40; ++N)
        for (unsigned r = 1; r < N; ++r)
            EXPECT_EQ(gaussian_binomial(N, r),
                      gaussian_binomial(N - 1, r - 1) + (BigInt(1) << r) * gaussian_binomial(N - 1, r));
}

TEST(Enumerate, SingleRowsAreAllNonzeroMasks) {
    const auto maps = collect(5, 1);
    ASSERT_EQ(maps.size(), 31u);
    std::set<Mask> masks;
    for (const auto &U : maps)
        masks.insert(U.rows[0]);
    EXPECT_EQ(masks.size(), 31u);
    EXPECT_EQ(*masks.begin(), 1u);
    EXPECT_EQ(*masks.rbegin(), 31u);
}

TEST(Enumerate, FullRankIsIdentity) {
    const auto maps = collect(3, 3);
    ASSERT_EQ(maps.size(), 1u);
    EXPECT_EQ(maps[0].rows, (std::vector<Mask>{0b100, 0b010, 0b001}));
}

TEST(Enumerate, CountsMatchClosedForm) {
    for (unsigned N = 1; N <= 10; ++N)
        for (unsigned r = 1; r <= N; ++r) {
            const RrefSpace space(N, r);
            std::uint64_t seen = 0;
            space.for_each([&](std::uint64_t, const LinearMap &) { ++seen; });
            EXPECT_EQ(BigInt(seen), gaussian_binomial(N, r)) << N << "," << r;
            EXPECT_EQ(BigInt(space.size()), gaussian_binomial(N, r));
        }
    EXPECT_EQ(RrefSpace(8, 2).size(), 10795u);
}

TEST(Enumerate, EveryOutputIsRrefAndCanonicalOrderHolds) {
    for (unsigned N = 2; N <= 7; ++N)
        for (unsigned r = 1; r <= N; ++r) {
            const auto maps = collect(N, r);
            for (std::size_t i = 0; i < maps.size(); ++i) {
                ASSERT_TRUE(is_rref(maps[i]));
                EXPECT_EQ(canonicalize(maps[i].rows, N).map, maps[i]);
                if (i > 0) // pivot tuples never decrease
                    EXPECT_LE(maps[i - 1].pivots, maps[i].pivots);
            }
        }
}

TEST(Enumerate, NoTwoMapsAreRowEquivalent) {
    for (unsigned N = 1; N <= 6; ++N)
        for (unsigned r = 1; r <= N; ++r) {
            std::set<std::vector<Mask>> spans;
            for (const auto &U : collect(N, r)) {
                // The full row space identifies the equivalence class.
                std::vector<Mask> span;
                for (Mask c = 0; c < (Mask{1} << r); ++c) {
                    Mask v = 0;
                    for (unsigned i = 0; i < r; ++i)
                        if (c & (Mask{1} << i))
                            v ^= U.rows[i];
                    span.push_back(v);
                }
                std::sort(span.begin(), span.end());
                EXPECT_TRUE(spans.insert(span).second);
            }
        }
}

TEST(Enumerate, RejectsBadRank) {
    EXPECT_THROW(RrefSpace(4, 0), Error);
    EXPECT_THROW(RrefSpace(4, 5), Error);
    try {
        RrefSpace(4, 5);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::RankOutOfRange);
    }
}

TEST(Canonicalize, Examples) {
    const auto a = canonicalize({0b110, 0b011}, 3);
    EXPECT_EQ(a.rank, 2u);
    EXPECT_EQ(a.map.rows, (std::vector<Mask>{0b101, 0b011}));
    EXPECT_EQ(a.map.pivots, (std::vector<unsigned>{0, 1}));

    const auto b = canonicalize({0b101, 0b101}, 3);
    EXPECT_EQ(b.rank, 1u);
    EXPECT_EQ(b.map.rows, (std::vector<Mask>{0b101}));

    const auto z = canonicalize({0, 0}, 3);
    EXPECT_EQ(z.rank, 0u);
    EXPECT_TRUE(z.map.rows.empty());
}

TEST(Canonicalize, EveryMatrixLandsInTheEnumeration) {
    for (unsigned N = 1; N <= 5; ++N)
        for (unsigned r = 1; r <= N; ++r) {
            const RrefSpace space(N, r);
            std::set<std::vector<Mask>> enumerated;
            space.for_each([&](std::uint64_t, const LinearMap &U) { enumerated.insert(U.rows); });
            const std::uint64_t cells = std::uint64_t{N} * r;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
                std::vector<Mask> rows(r);
                for (unsigned i = 0; i < r; ++i)
                    rows[i] = (bits >> (i * N)) & gf2::low_bits(N);
                const auto cf = canonicalize(rows, N);
                if (cf.rank != r)
                    continue;
                EXPECT_TRUE(enumerated.count(cf.map.rows));
            }
        }
}

TEST(RrefSpace, UnrankAndRankAreInverse) {
    for (unsigned N = 1; N <= 8; ++N)
        for (unsigned r = 1; r <= N; ++r) {
            const RrefSpace space(N, r);
            space.for_each([&](std::uint64_t idx, const LinearMap &U) {
                EXPECT_EQ(space.unrank(idx), U);
                EXPECT_EQ(space.rank_of(U), idx);
            });
        }
}

TEST(RrefSpace, LargeShapesSeekWithoutEnumerating) {
    const RrefSpace space(40, 1);
    const RrefSpace wide(24, 2);
    EXPECT_EQ(wide.rank_of(wide.unrank(wide.size() - 7)), wide.size() - 7);
    const std::uint64_t idx = space.size() / 3;
    const auto U = space.unrank(idx);
    EXPECT_TRUE(is_rref(U));
    EXPECT_EQ(space.rank_of(U), idx);
    EXPECT_THROW(RrefSpace(64, 32), Error);
}

TEST(SplitRange, CoversExactly) {
    EXPECT_EQ(split_range(5, 2, 1), (std::vector<SubspaceRange>{{0, 155}}));
    const auto parts = split_range(5, 2, 5);
    ASSERT_EQ(parts.size(), 5u);
    std::uint64_t total = 0, at = 0;
    for (const auto &p : parts) {
        EXPECT_EQ(p.lo, at);
        at = p.hi;
        total += p.size();
    }
    EXPECT_EQ(total, 155u);
    EXPECT_THROW(split_range(5, 2, 0), Error);
}

TEST(SplitRange, ConcatenatedShardsEqualUnsplitStream) {
    for (unsigned parts : {1u, 2u, 3u, 7u, 200u}) {
        const RrefSpace space(7, 3);
        std::vector<LinearMap> joined;
        for (const auto &range : split_range(7, 3, parts))
            space.for_each(range, [&](std::uint64_t, const LinearMap &U) { joined.push_back(U); });
        EXPECT_EQ(joined, collect(7, 3)) << parts;
    }
}

TEST(Format, RowsAsLinearForms) {
    EXPECT_EQ(format_row(0b00101, 5, 5), "x3+x5");
    EXPECT_EQ(format_row(0b10000110, 8, 4), "x1+y2+y3");
    EXPECT_EQ(format_row(0, 4, 4), "0");
}
