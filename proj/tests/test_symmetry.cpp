#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "steinhaus/symmetry.hpp"
#include "steinhaus/triangle.hpp"

using namespace steinhaus;

TEST(Symmetry, FigureExample) {
    const BitSeq x = from_string("0001001");
    EXPECT_EQ(rot_r(x), from_string("1110111"));
    EXPECT_EQ(rot_l(x), from_string("1001000"));
    EXPECT_EQ(invert_i(x), from_string("1001000"));
}

TEST(Symmetry, AllOnesOrbit) {
    for (std::size_t n = 2; n <= 128; ++n) {
        const BitSeq a1 = BitSeq::ones(n);
        const BitSeq a2 = concat(from_string("1"), BitSeq::zeros(n - 1));
        const BitSeq a3 = concat(BitSeq::zeros(n - 1), from_string("1"));
        ASSERT_EQ(rot_r(a1), a2);
        ASSERT_EQ(rot_l(a1), a3);
        const Orbit o = orbit(a1);
        ASSERT_EQ(o.size(), 3u);
        ASSERT_TRUE(o.contains(a2) && o.contains(a3));
        ASSERT_EQ(canonical(a1), a3);
        ASSERT_EQ(canonical(a2), a3);
    }
    EXPECT_EQ(rot_r(from_string("1")), from_string("1"));
}

TEST(Symmetry, ReversalExamples) {
    EXPECT_EQ(invert_i(from_string("0110")), from_string("0110"));
    const BitSeq x = from_pattern("1100101", 100);
    EXPECT_EQ(invert_i(invert_i(x)), x);
    std::string s = x.to_string();
    std::reverse(s.begin(), s.end());
    EXPECT_EQ(invert_i(x).to_string(), s);
    EXPECT_TRUE(invert_i(BitSeq{}).empty());
}

TEST(Symmetry, ZFamilyWhenNIsOneModThree) {
    for (std::size_t n = 4; n <= 100; n += 3) {
        const BitSeq z1 = from_pattern("110", n), z2 = from_pattern("011", n), z3 = from_pattern("101", n);
        for (const auto& z : {z1, z2, z3}) {
            EXPECT_EQ(rot_r(z), z) << n;
            EXPECT_EQ(rot_l(z), z) << n;
        }
        EXPECT_EQ(invert_i(z1), z3);
        EXPECT_EQ(orbit(z1).members, (std::vector<BitSeq>{z3, z1})) << n;
        EXPECT_EQ(orbit(z2).size(), 1u) << n;
    }
}

TEST(Symmetry, RemarkOrbitAtTen) {
    const Orbit o = orbit(from_string("0001000000"));
    const std::vector<std::string> want = {"0000001000", "0000001100", "0001000000",
                                           "0001000100", "0010001000", "0011000000"};
    ASSERT_EQ(o.size(), 6u);
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(o.members[k].to_string(), want[k]);
}

TEST(Symmetry, Canonical) {
    EXPECT_EQ(canonical(from_string("0110")), from_string("0110"));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 128;
        const BitSeq x = BitSeq::from_words({rng(), rng()}, n);
        const BitSeq c = canonical(x);
        ASSERT_EQ(canonical(c), c);
        std::string least = x.to_string();
        for (const auto& y : images(x)) least = std::min(least, y.to_string());
        ASSERT_EQ(c.to_string(), least);
    }
}

TEST(Symmetry, MatchesRowOracle) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 128;
        oracle::Seq v(n);
        for (auto& b : v) b = static_cast<int>(rng() & 1);
        const BitSeq x = oracle::to_bitseq(v);
        ASSERT_EQ(rot_r(x).to_string(), oracle::to_text(oracle::rot_r(v)));
        ASSERT_EQ(rot_l(x).to_string(), oracle::to_text(oracle::rot_l(v)));
        ASSERT_EQ(invert_i(x).to_string(), oracle::to_text(oracle::reversed(v)));
    }
}

TEST(Symmetry, GroupLawsExhaustively) {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BitSeq x = BitSeq::from_word(b, n);
            const BitSeq r = rot_r(x), l = rot_l(x), i = invert_i(x);
            ASSERT_EQ(rot_l(r), x);
            ASSERT_EQ(rot_r(l), x);
            ASSERT_EQ(invert_i(i), x);
            ASSERT_EQ(rot_r(r), l);
            ASSERT_EQ(rot_r(rot_r(r)), x);
            ASSERT_EQ(invert_i(rot_r(i)), l);
        }
    }
}

TEST(Symmetry, RotationOfBasisVectorsMatchesBinomialFormula) {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t k = 0; k < n; ++k) {
            oracle::Seq e(n, 0);
            e[k] = 1;
            const BitSeq r = rot_r(oracle::to_bitseq(e));
            for (std::size_t j = 0; j < n; ++j) {
                // Last entry of row j is entry n-1-j.
                ASSERT_EQ(r[j], oracle::row_entry(e, j, n - 1 - j) == 1) << n << " " << k << " " << j;
            }
        }
    }
}

TEST(Symmetry, OrbitSizesPartitionTheCube) {
    for (std::size_t n = 1; n <= 14; ++n) {
        std::set<std::string> seen_canonical;
        std::uint64_t total = 0;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const BitSeq x = BitSeq::from_word(b, n);
            const Orbit o = orbit(x);
            ASSERT_TRUE(o.size() == 1 || o.size() == 2 || o.size() == 3 || o.size() == 6);
            ASSERT_EQ(o.canonical, o.members.front());
            for (const auto& y : o.members) {
                ASSERT_TRUE(o.contains(rot_r(y)) && o.contains(rot_l(y)) && o.contains(invert_i(y)));
            }
            if (seen_canonical.insert(o.canonical.to_string()).second) total += o.size();
        }
        ASSERT_EQ(total, std::uint64_t{1} << n) << n;
    }
}

TEST(Symmetry, EmptyInputRejected) {
    EXPECT_THROW(rot_r(BitSeq{}), std::invalid_argument);
    EXPECT_THROW(rot_l(BitSeq{}), std::invalid_argument);
    EXPECT_THROW(orbit(BitSeq{}), std::invalid_argument);
    EXPECT_THROW(canonical(BitSeq{}), std::invalid_argument);
}
