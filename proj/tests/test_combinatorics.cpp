#include "dendra/combinatorics.hpp"
#include "dendra/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace dendra;

namespace {

ColorSum full_sum(int n) { return ColorSum::full(n); }

/// Every permutation of 1..n+m that is increasing on both blocks.
std::vector<std::vector<int>> brute_force_shuffles(int n, int m)
{
    std::vector<int> p(n + m);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = std::is_sorted(p.begin(), p.begin() + n) && std::is_sorted(p.begin() + n, p.end());
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST(R0Map, KnownExamples)
{
    EXPECT_EQ(r0_map(2, 2, 2, 3), (Color{2, 2}));
    EXPECT_EQ(r0_map(2, 1, 2, 2), (Color{2, 1}));
}

TEST(R0Map, ArityOneIsIdentity)
{
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= m; ++i)
            for (int r = 1; r <= m; ++r)
                EXPECT_EQ(r0_map(m, i, 1, r), (Color{m, r}));
}

TEST(RiMap, KnownExamples)
{
    EXPECT_EQ(ri_map(2, 2, 2, 1), full_sum(2));
    EXPECT_EQ(ri_map(2, 1, 2, 2), ColorSum::single(2, 2));
}

TEST(RiMap, ArityOneIsConstant)
{
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= m; ++i)
            for (int r = 1; r <= m; ++r)
                EXPECT_EQ(ri_map(m, i, 1, r), ColorSum::single(1, 1));
}

TEST(ColorMaps, ExactlyOneBranchApplies)
{
    for (int m = 1; m <= 4; ++m)
        for (int i = 1; i <= m; ++i)
            for (int n = 1; n <= 4; ++n)
                for (int r = 1; r <= m + n - 1; ++r) {
                    bool before = r <= i - 1, inside = i <= r && r <= i + n - 1, after = r >= i + n;
                    ASSERT_EQ(int(before) + int(inside) + int(after), 1);
                    Color c = r0_map(m, i, n, r);
                    ColorSum s = ri_map(m, i, n, r);
                    if (before) {
                        EXPECT_EQ(c.r, r);
                        EXPECT_EQ(s, full_sum(n));
                    } else if (inside) {
                        EXPECT_EQ(c.r, i);
                        EXPECT_EQ(s, ColorSum::single(n, r - i + 1));
                    } else {
                        EXPECT_EQ(c.r, r - n + 1);
                        EXPECT_EQ(s, full_sum(n));
                    }
                }
}

TEST(ColorMaps, RejectInvalidArguments)
{
    EXPECT_THROW(r0_map(2, 3, 2, 1), IndexOutOfRange);
    EXPECT_THROW(r0_map(2, 1, 2, 4), IndexOutOfRange);
    EXPECT_THROW(ri_map(2, 0, 2, 1), IndexOutOfRange);
    EXPECT_THROW(ColorSum::single(2, 3), IndexOutOfRange);
}

TEST(ColorSum, DropsZeroCoefficients)
{
    ColorSum s(3);
    s.add(2, 1);
    s.add(2, -1);
    EXPECT_TRUE(s.terms().empty());
}

TEST(Shuffles, OneOne)
{
    auto s = shuffles(1, 1);
    ASSERT_EQ(s.sh1.size(), 1u);
    ASSERT_EQ(s.sh2.size(), 1u);
    EXPECT_EQ(s.sh1[0].sigma, (std::vector<int>{2, 1}));
    EXPECT_EQ(s.sh2[0].sigma, (std::vector<int>{1, 2}));
}

TEST(Shuffles, TwoOne)
{
    auto s = shuffles(2, 1);
    EXPECT_EQ(s.sh1.size() + s.sh2.size(), 3u);
    // sigma(2) = 3 for [1,3,2], [2,3,1]; sigma(3) = 3 for [1,2,3].
    EXPECT_EQ(s.sh1.size(), 2u);
    EXPECT_EQ(s.sh2.size(), 1u);
}

TEST(Shuffles, PartitionMatchesBruteForce)
{
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 8; ++m) {
            auto s = shuffles(n, m);
            auto all = brute_force_shuffles(n, m);
            EXPECT_EQ(s.sh1.size() + s.sh2.size(), binomial(n + m, n));
            std::vector<std::vector<int>> expect1, expect2;
            for (const auto& p : all) {
                ASSERT_NE(p[n - 1] == n + m, p[n + m - 1] == n + m);
                (p[n - 1] == n + m ? expect1 : expect2).push_back(p);
            }
            std::vector<std::vector<int>> got1, got2;
            for (const auto& x : s.sh1)
                got1.push_back(x.sigma);
            for (const auto& x : s.sh2)
                got2.push_back(x.sigma);
            EXPECT_EQ(got1, expect1) << n << "," << m;
            EXPECT_EQ(got2, expect2) << n << "," << m;
        }
}

TEST(Shuffles, RespectsCap)
{
    EXPECT_THROW(shuffles(10, 10, 1000), ResourceLimit);
}
