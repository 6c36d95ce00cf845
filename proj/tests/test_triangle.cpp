#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

using namespace steinhaus;

TEST(Triangle, BuildRows) {
    const Triangle t = build(from_string("0001001"));
    const std::vector<std::string> want = {"0001001", "001101", "01011", "1110", "001", "01", "1"};
    ASSERT_EQ(t.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(t.rows[i].to_string(), want[i]);
    EXPECT_EQ(t.entry_count(), 28u);
    EXPECT_EQ(t.weight(), 14u);

    EXPECT_EQ(build(from_string("1")).size(), 1u);
    const Triangle z = build(from_string("00"));
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(z.rows[1], from_string("0"));
    EXPECT_THROW(build(BitSeq{}), std::invalid_argument);
}

TEST(Triangle, RowInvariant) {
    const Triangle t = build(from_pattern("1101001", 100));
    for (std::size_t i = 0; i + 1 < t.size(); ++i) ASSERT_EQ(t.rows[i + 1], derivative(t.rows[i]));
    EXPECT_EQ(t.rows.back().size(), 1u);
}

TEST(Triangle, WeightExamples) {
    EXPECT_EQ(triangle_weight(from_string("1011")), 7u);
    EXPECT_EQ(triangle_weight(from_string("0110")), 6u);
    EXPECT_EQ(triangle_weight(BitSeq::zeros(20)), 0u);
    EXPECT_EQ(triangle_weight(from_string("0001001")), 14u);
    EXPECT_EQ(triangle_weight(from_string("001000")), 8u);
    EXPECT_THROW(triangle_weight(BitSeq{}), std::invalid_argument);
}

TEST(Triangle, StreamedEqualsMaterializedExhaustively) {
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BitSeq x = BitSeq::from_word(b, n);
            const std::size_t w = triangle_weight(x);
            ASSERT_EQ(w, build(x).weight()) << x;
            ASSERT_LE(w, n * (n + 1) / 2);
        }
    }
}

TEST(Triangle, WeightMatchesOracleForLongSequences) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 128;
        oracle::Seq v(n);
        for (auto& b : v) b = static_cast<int>(rng() & 1);
        ASSERT_EQ(triangle_weight(oracle::to_bitseq(v)), oracle::triangle_weight(v)) << n;
    }
}

TEST(Triangle, WeightInvariantUnderSymmetriesExhaustively) {
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BitSeq x = BitSeq::from_word(b, n);
            const std::size_t w = triangle_weight(x);
            for (const auto& y : images(x)) ASSERT_EQ(triangle_weight(y), w) << x << " -> " << y;
        }
    }
}

TEST(Triangle, SubtriangleGenerator) {
    const BitSeq x = from_string("0001001");
    EXPECT_EQ(subtriangle_generator(x, 0, 0, 7), x);
    EXPECT_EQ(subtriangle_generator(x, 2, 1, 3), from_string("101"));
    const BitSeq a = from_string("1011");
    for (std::size_t s = 0; s + 2 <= 4; ++s) EXPECT_EQ(triangle_weight(subtriangle_generator(a, 0, s, 2)), 2u);
    EXPECT_EQ(subtriangle_generator(from_string("0110"), 1, 0, 3), from_string("101"));
    EXPECT_EQ(triangle_weight(from_string("101")), 4u);
    EXPECT_THROW(subtriangle_generator(x, 7, 0, 1), std::out_of_range);
    EXPECT_THROW(subtriangle_generator(x, 1, 4, 3), std::out_of_range);
    EXPECT_THROW(subtriangle_generator(x, 0, 0, 0), std::out_of_range);
}

TEST(Triangle, S3) {
    EXPECT_EQ(s3(from_string("11011")), 8u);
    EXPECT_EQ(s3(BitSeq::zeros(5)), 0u);
    for (std::size_t n = 3; n <= 100; ++n) {
        for (const std::string p : {"110", "011", "101"}) ASSERT_EQ(s3(from_pattern(p, n)), 2 * n - 2) << p << n;
    }
    EXPECT_THROW(s3(from_string("10")), std::invalid_argument);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 3 + rng() % 120;
        oracle::Seq v(n);
        for (auto& b : v) b = static_cast<int>(rng() & 1);
        ASSERT_EQ(s3(oracle::to_bitseq(v)), oracle::s3(v));
    }
}

TEST(Triangle, Render) {
    EXPECT_EQ(render(from_string("1")), "1\n");
    EXPECT_EQ(render(from_string("10")), "1 .\n 1\n");
    EXPECT_EQ(render(from_string("10"), {'1', '0'}), "1 0\n 1\n");
    const std::string fig = render(from_string("0001001"), {'1', '0'});
    EXPECT_EQ(fig,
              "0 0 0 1 0 0 1\n"
              " 0 0 1 1 0 1\n"
              "  0 1 0 1 1\n"
              "   1 1 1 0\n"
              "    0 0 1\n"
              "     0 1\n"
              "      1\n");
}
