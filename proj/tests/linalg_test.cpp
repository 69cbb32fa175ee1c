#include <gtest/gtest.h>

#include <random>

#include "symcoh/error.hpp"
#include "symcoh/integer_matrix.hpp"
#include "symcoh/modular.hpp"

using namespace symcoh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = dist(rng);
    return a;
}

}  // namespace

TEST(Smith, KnownExample) {
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto r = smith_normal_form(a);
    EXPECT_EQ(r.U * a * r.V, r.S);
    EXPECT_EQ(r.S(0, 0), 2);
    EXPECT_EQ(r.S(1, 1), 6);
    EXPECT_EQ(r.S(2, 2), 12);
    EXPECT_EQ(abs(determinant(r.U)), 1);
    EXPECT_EQ(abs(determinant(r.V)), 1);
}

TEST(Smith, RandomizedInvariants) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto a = random_matrix(rng, r, c, -9, 9);
        auto s = smith_normal_form(a);
        ASSERT_EQ(s.U * a * s.V, s.S);
        ASSERT_TRUE(s.S.is_diagonal());
        EXPECT_EQ(abs(determinant(s.U)), 1);
        EXPECT_EQ(abs(determinant(s.V)), 1);
        std::size_t m = std::min(r, c);
        for (std::size_t i = 0; i < m; ++i) {
            ASSERT_GE(s.S(i, i), 0);
            if (i + 1 < m && s.S(i, i) != 0) EXPECT_EQ(s.S(i + 1, i + 1) % s.S(i, i), 0);
            if (s.S(i, i) == 0 && i + 1 < m) EXPECT_EQ(s.S(i + 1, i + 1), 0);
        }
    }
}

TEST(Smith, Degenerate) {
    auto z = smith_normal_form(IntMatrix(2, 3));
    EXPECT_EQ(z.S, IntMatrix(2, 3));
    auto e = smith_normal_form(IntMatrix(0, 0));
    EXPECT_EQ(e.S.rows(), 0u);
}

TEST(SolveMod, FindsAndRejects) {
    IntMatrix a{{2, 0}, {0, 3}};
    auto x = solve_mod(a, {4, 3}, {6, 9});
    ASSERT_TRUE(x);
    EXPECT_EQ(((*x)[0] * 2 - 4) % 6, 0);
    EXPECT_EQ(((*x)[1] * 3 - 3) % 9, 0);
    EXPECT_FALSE(solve_mod(IntMatrix{{2}}, {1}, {4}));
    EXPECT_THROW(solve_mod(a, {1}, {6, 9}), Error);
    EXPECT_THROW(solve_mod(a, {1, 1}, {0, 9}), Error);
}

TEST(Invariants, CanonicalForm) {
    auto a = AbGroupInvariants::from_cyclic_orders({6, 4, 1});
    EXPECT_EQ(a.factors, (std::vector<std::int64_t>{2, 12}));
    EXPECT_EQ(a.to_string(), "Z/2 + Z/12");
    EXPECT_EQ(a.order(), 24);
    EXPECT_EQ(AbGroupInvariants{}.to_string(), "0");
}

TEST(Invariants, HomologyOfSmallComplex) {
    // Z/4 --x2--> Z/4 --x2--> Z/4 is exact.
    EXPECT_TRUE(homology_invariants(IntMatrix{{2}}, IntMatrix{{2}}, {4}, {4}).trivial());
    // Z --x2--> Z/4 --0--> Z/4 leaves Z/2.
    auto h = homology_invariants(IntMatrix{{0}}, IntMatrix{{2}}, {4}, {4});
    EXPECT_EQ(h.factors, std::vector<std::int64_t>{2});
    // Z --0--> Z/6 --0--> Z/6
    auto k = homology_invariants(IntMatrix{{0}}, IntMatrix{{0}}, {6}, {6});
    EXPECT_EQ(k.factors, std::vector<std::int64_t>{6});
    EXPECT_THROW(homology_invariants(IntMatrix{{1}}, IntMatrix{{1}}, {4}, {4}), Error);
}

TEST(Modular, RingArithmetic) {
    zn::Ring r(12);
    EXPECT_EQ(r.ideal(8), 4u);
    EXPECT_EQ(r.ideal(0), 12u);
    EXPECT_EQ(r.mul(r.normalizer(8), 8), 4u);
    EXPECT_EQ(r.mul(r.inverse(5), 5), 1u);
    EXPECT_EQ(r.from_signed(-1), 11u);
    zn::Ring big(1u << 30);
    EXPECT_EQ(big.reduce((std::uint64_t{1} << 31) + 3), 3u);
}

TEST(Modular, HowellMembership) {
    zn::Ring r(4);
    zn::HowellBasis h(r, 2);
    h.insert(zn::Vector{2, 1});
    // 2 * (2, 1) = (0, 2) must be in the span and detected.
    EXPECT_TRUE(h.contains({0, 2}));
    EXPECT_FALSE(h.contains({0, 1}));
    EXPECT_FALSE(h.contains({1, 0}));
    EXPECT_EQ(h.cardinality(), 4);
}

// The Z/N engine and the integer Smith route must agree on random complexes
// A --f--> (Z/N)^b --g--> (Z/N)^c with g f = 0.
TEST(Modular, QuotientAgreesWithIntegerRoute) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const std::int64_t n = std::vector<std::int64_t>{2, 3, 4, 6, 8, 9, 12}[rng() % 7];
        const std::size_t a = 1 + rng() % 4, b = 1 + rng() % 5, c = 1 + rng() % 4;
        // g = random, f = columns drawn from the kernel of g
        auto g = random_matrix(rng, c, b, 0, static_cast<int>(n - 1));
        zn::Ring ring(n);
        std::vector<zn::SparseVector> g_cols(b);
        for (std::size_t j = 0; j < b; ++j)
            for (std::size_t i = 0; i < c; ++i) {
                auto v = static_cast<zn::Residue>(g(i, j));
                if (v) g_cols[j].emplace_back(static_cast<std::uint32_t>(i), v);
            }
        auto ker = zn::kernel(ring, c, g_cols, {});
        IntMatrix f(b, a);
        for (std::size_t j = 0; j < a; ++j)
            for (auto& y : ker)
                if (rng() % 2) {
                    auto s = rng() % n;
                    for (std::size_t i = 0; i < b; ++i) f(i, j) = (f(i, j) + Integer(s) * y[i]) % n;
                }
        std::vector<Integer> mid(b, n), out(c, n);
        auto expected = homology_invariants(g, f, mid, out);

        zn::HowellBasis k(ring, b);
        for (auto& y : ker) k.insert(y);
        std::vector<zn::Vector> bgen;
        for (std::size_t j = 0; j < a; ++j) {
            zn::Vector v(b);
            for (std::size_t i = 0; i < b; ++i) v[i] = static_cast<zn::Residue>(f(i, j));
            bgen.push_back(v);
        }
        zn::Quotient q(k, bgen);
        EXPECT_EQ(AbGroupInvariants::from_cyclic_orders(q.factors()), expected) << "trial " << trial;
        // generator i has order factors[i] and coordinates are e_i
        for (std::size_t i = 0; i < q.generators().size(); ++i) {
            auto coords = q.coordinates(q.generators()[i]);
            ASSERT_TRUE(coords);
            for (std::size_t j = 0; j < coords->size(); ++j) EXPECT_EQ((*coords)[j], i == j ? 1 : 0);
        }
        for (auto& v : bgen) {
            auto coords = q.coordinates(v);
            ASSERT_TRUE(coords);
            for (auto x : *coords) EXPECT_EQ(x, 0);
        }
    }
}

TEST(Modular, SolveAndImageOrder) {
    zn::Ring r(6);
    std::vector<zn::SparseVector> gens{{{0, 2}}, {{1, 3}}};
    auto y = zn::solve(r, 2, gens, {}, {4, 3});
    ASSERT_TRUE(y);
    EXPECT_EQ(r.mul((*y)[0], 2), 4u);
    EXPECT_EQ(r.mul((*y)[1], 3), 3u);
    EXPECT_FALSE(zn::solve(r, 2, gens, {}, {1, 0}));
    // Z/2 -> Z/4 by 2, Z/3 -> Z/3 by 1
    EXPECT_EQ(zn::image_order({4}, {{2}}), 2);
    EXPECT_EQ(zn::image_order({2, 6}, {{1, 3}}), 2);
}
