#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symcoh/cochain.hpp"
#include "symcoh/error.hpp"

using namespace symcoh;

namespace {

Cochain random_cochain(std::mt19937_64& rng, const GModule& m, std::size_t n) {
    auto c = zero_cochain(m, n);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] = static_cast<std::int64_t>(rng() % m.exponents()[i % m.rank()]);
    return c;
}

std::vector<GModule> sample_modules() {
    auto z4 = build_cyclic(4);
    auto s3 = build_symmetric(3);
    auto v4 = direct_product(build_cyclic(2), build_cyclic(2));
    return {trivial_module(build_cyclic(3), {3}), sign_module(z4, 3), sign_module(s3, 3),
            trivial_module(v4, {2, 4}), module_from_generators(build_cyclic(5), {11}, {{1, {{3}}}})};
}

Cochain column(const GModule& m, std::size_t n, const SparseIntVector& v) { return cochain_from_sparse(m, n, v); }

}  // namespace

TEST(Tuples, RoundTrip) {
    for (std::size_t i = 0; i < 125; ++i) EXPECT_EQ(encode_tuple(5, decode_tuple(5, 3, i)), i);
    EXPECT_EQ(decode_tuple(3, 2, 5), (std::vector<Element>{1, 2}));
}

TEST(Coboundary, SquareIsZero) {
    std::mt19937_64 rng(3);
    for (auto& m : sample_modules())
        for (std::size_t n = 0; n <= 2; ++n) {
            auto phi = random_cochain(rng, m, n);
            EXPECT_TRUE(coboundary(m, coboundary(m, phi)).is_zero()) << m.group().name() << " n=" << n;
        }
}

TEST(Coboundary, MatrixMatchesPointwise) {
    std::mt19937_64 rng(5);
    for (auto& m : sample_modules())
        for (std::size_t n = 0; n <= 2; ++n) {
            auto d = coboundary_matrix(m, n);
            auto phi = random_cochain(rng, m, n);
            EXPECT_EQ(apply_map(m, n + 1, d, phi), coboundary(m, phi));
        }
}

TEST(Coboundary, DegreeZeroAndOne) {
    auto m = sign_module(build_cyclic(4), 5);
    auto phi = zero_cochain(m, 0);
    phi.values = {1};
    auto d = coboundary(m, phi);
    // (d m)(g) = g m - m
    EXPECT_EQ(d.values, (std::vector<std::int64_t>{0, 3, 0, 3}));
}

TEST(Tau, Involutions) {
    std::mt19937_64 rng(9);
    for (auto& m : sample_modules())
        for (std::size_t n = 1; n <= 3; ++n) {
            if (n == 3 && m.group().order() > 4) continue;
            auto phi = random_cochain(rng, m, n);
            for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(tau(m, i, tau(m, i, phi)), phi);
        }
    auto m = trivial_module(build_cyclic(3), {3});
    EXPECT_THROW(tau(m, 0, zero_cochain(m, 2)), Error);
    EXPECT_THROW(tau(m, 3, zero_cochain(m, 2)), Error);
}

TEST(Tau, CommutesWithCoboundaryOnSymmetric) {
    // d maps symmetric cochains to symmetric cochains.
    for (auto& m : sample_modules())
        for (std::size_t n = 1; n <= 2; ++n) {
            auto e = subgroup_embedding(m, n, Flavor::symmetric);
            for (auto& col : e.columns) {
                auto phi = column(m, n, col);
                EXPECT_TRUE(is_member(m, coboundary(m, phi), Flavor::symmetric));
            }
        }
}

TEST(Embedding, GeneratorsAreMembers) {
    for (auto& m : sample_modules())
        for (std::size_t n = 0; n <= 3; ++n) {
            if (n == 3 && m.group().order() > 5) continue;
            for (auto f : {Flavor::classical, Flavor::normalized, Flavor::symmetric, Flavor::exterior}) {
                auto e = subgroup_embedding(m, n, f);
                for (auto& col : e.columns) EXPECT_TRUE(is_member(m, column(m, n, col), f)) << to_string(f);
            }
        }
}

// Brute force: the symmetric subgroup of C^1(Z/3, Z/3) and C^2(Z/2, Z/3 sign)
// is exactly the span of the generators.
TEST(Embedding, SpanMatchesBruteForce) {
    for (auto& [m, n] : std::vector<std::pair<GModule, std::size_t>>{
             {trivial_module(build_cyclic(3), {3}), 1},
             {trivial_module(build_cyclic(3), {3}), 2},
             {sign_module(build_cyclic(2), 3), 2},
             {trivial_module(build_cyclic(2), {4}), 2}}) {
        for (auto f : {Flavor::symmetric, Flavor::exterior}) {
            auto e = subgroup_embedding(m, n, f);
            std::set<std::vector<std::int64_t>> span{zero_cochain(m, n).values};
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<std::vector<std::int64_t>> cur(span.begin(), span.end());
                for (auto& v : cur)
                    for (auto& col : e.columns) {
                        auto c = cochain_add(m, Cochain{n, v}, column(m, n, col));
                        grew = span.insert(c.values).second || grew;
                    }
            }
            std::size_t members = 0;
            auto total = zero_cochain(m, n).values.size();
            std::size_t states = 1;
            for (std::size_t i = 0; i < total; ++i) states *= m.exponents()[i % m.rank()];
            for (std::size_t s = 0; s < states; ++s) {
                Cochain c{n, std::vector<std::int64_t>(total)};
                std::size_t x = s;
                for (std::size_t i = 0; i < total; ++i) {
                    auto d = m.exponents()[i % m.rank()];
                    c.values[i] = static_cast<std::int64_t>(x % d);
                    x /= d;
                }
                if (is_member(m, c, f)) {
                    ++members;
                    EXPECT_TRUE(span.count(c.values));
                }
            }
            EXPECT_EQ(members, span.size()) << to_string(f) << " n=" << n;
        }
    }
}

TEST(Embedding, SizeGuard) {
    auto m = trivial_module(build_cyclic(9), {3});
    Limits tight{1000, 6};
    EXPECT_THROW(subgroup_embedding(m, 4, Flavor::classical, tight), Error);
    EXPECT_THROW(coboundary_matrix(m, 3, tight), Error);
    try {
        coboundary_matrix(m, 3, tight);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::size_guard);
    }
}
