#include <gtest/gtest.h>

#include <random>

#include "symcoh/cohomology.hpp"
#include "symcoh/error.hpp"

using namespace symcoh;

namespace {

using F = std::vector<std::int64_t>;

Cochain random_cochain(std::mt19937_64& rng, const GModule& m, std::size_t n) {
    auto c = zero_cochain(m, n);
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] = static_cast<std::int64_t>(rng() % m.exponents()[i % m.rank()]);
    return c;
}

}  // namespace

TEST(Cohomology, TrivialGroup) {
    auto m = trivial_module(build_cyclic(1), {6});
    for (auto f : {Flavor::classical, Flavor::normalized, Flavor::symmetric, Flavor::exterior}) {
        EXPECT_EQ(cohomology(m, 0, f).invariants.factors, F{6});
        for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(cohomology(m, n, f).invariants.trivial());
    }
}

TEST(Cohomology, CyclicTrivialCoefficients) {
    // H^n(Z/p, Z/d) = Z/gcd(p, d) for n >= 1
    for (auto [p, d] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 2}, {3, 3}, {4, 2}, {2, 4}, {5, 3}, {4, 4}}) {
        CohomologyEngine e(trivial_module(build_cyclic(p), {d}));
        const auto g = std::gcd(static_cast<std::int64_t>(p), d);
        for (std::size_t n = 1; n <= 3; ++n) {
            auto r = e.cohomology(n, Flavor::classical);
            EXPECT_EQ(r.invariants, AbGroupInvariants::from_cyclic_orders({g})) << p << " " << d << " " << n;
            EXPECT_EQ(e.cohomology(n, Flavor::normalized).invariants, r.invariants);
        }
        EXPECT_EQ(e.cohomology(0, Flavor::classical).invariants.factors, F{d});
    }
}

TEST(Cohomology, RepresentativesAreCocyclesOfTheFlavor) {
    for (auto& m : {sign_module(build_symmetric(3), 3), trivial_module(build_cyclic(4), {2, 4}),
                    trivial_module(direct_product(build_cyclic(2), build_cyclic(2)), {2})}) {
        CohomologyEngine e(m);
        for (std::size_t n = 0; n <= 2; ++n)
            for (auto f : {Flavor::classical, Flavor::normalized, Flavor::symmetric, Flavor::exterior}) {
                auto r = e.cohomology(n, f);
                ASSERT_EQ(r.representatives.size(), r.invariants.factors.size());
                for (std::size_t i = 0; i < r.representatives.size(); ++i) {
                    auto& phi = r.representatives[i];
                    EXPECT_TRUE(is_member(m, phi, f));
                    EXPECT_TRUE(coboundary(m, phi).is_zero());
                    auto c = e.class_coordinates(phi, f);
                    ASSERT_TRUE(c);
                    for (std::size_t j = 0; j < c->size(); ++j) EXPECT_EQ((*c)[j], i == j ? 1 : 0);
                    if (n > 0) {
                        EXPECT_FALSE(e.is_coboundary(phi, f));
                        auto ord = r.invariants.factors[i];
                        EXPECT_TRUE(e.is_coboundary(cochain_scale(m, ord, phi), f));
                    }
                }
            }
    }
}

TEST(Cohomology, SymmetricSecondCohomology) {
    EXPECT_TRUE(cohomology(trivial_module(build_cyclic(2), {2}), 2, Flavor::symmetric).invariants.trivial());
    EXPECT_EQ(cohomology(trivial_module(build_cyclic(3), {3}), 2, Flavor::symmetric).invariants.factors, F{3});
}

TEST(Comparison, AlphaAndGamma) {
    for (auto& m : {trivial_module(build_cyclic(3), {3}), sign_module(build_symmetric(3), 3),
                    trivial_module(build_cyclic(2), {2})}) {
        CohomologyEngine e(m);
        for (std::size_t n = 0; n <= 2; ++n) {
            auto a = e.comparison_map(n, Flavor::symmetric, Flavor::classical);
            EXPECT_TRUE(a.injective);
            if (n < 2) EXPECT_TRUE(a.surjective);
            auto g = e.comparison_map(n, Flavor::exterior, Flavor::symmetric);
            EXPECT_TRUE(g.injective && g.surjective);
            auto direct = e.comparison_map(n, Flavor::exterior, Flavor::classical);
            EXPECT_EQ(compose_matrices(g, a), direct.matrix);
            auto nm = e.comparison_map(n, Flavor::normalized, Flavor::classical);
            EXPECT_TRUE(nm.injective && nm.surjective);
        }
    }
    EXPECT_THROW(comparison_map(trivial_module(build_cyclic(2), {2}), 1, Flavor::classical, Flavor::symmetric), Error);
}

TEST(Coboundary, Decisions) {
    auto m = trivial_module(build_cyclic(2), {2});
    auto f = zero_cochain(m, 2);
    f.values[encode_tuple(2, {1, 1})] = 1;
    EXPECT_FALSE(is_coboundary(m, f, Flavor::classical));
    EXPECT_TRUE(is_coboundary(m, zero_cochain(m, 2), Flavor::classical));
    std::mt19937_64 rng(2);
    auto m3 = sign_module(build_symmetric(3), 3);
    for (int i = 0; i < 5; ++i) {
        auto g = random_cochain(rng, m3, 1);
        auto w = is_coboundary(m3, coboundary(m3, g), Flavor::classical);
        ASSERT_TRUE(w);
        EXPECT_EQ(coboundary(m3, *w), coboundary(m3, g));
    }
    auto bad = zero_cochain(m, 2);
    bad.values[1] = 1;
    EXPECT_THROW(is_coboundary(m, bad, Flavor::classical), Error);
}

TEST(Criteria, Flags) {
    auto m = trivial_module(build_cyclic(3), {3});
    auto z = lemma_symmetry_criterion(m, zero_cochain(m, 3));
    EXPECT_TRUE(z.by_tau && z.by_vanishing);
    ASSERT_TRUE(z.by_two_pattern);
    auto cf = lemma_coboundary_criterion(m, zero_cochain(m, 3), zero_cochain(m, 2));
    EXPECT_TRUE(cf.g_symmetric && cf.g_vanishes_on_inverses);
    for (auto& phi : cohomology(m, 3, Flavor::exterior).representatives) {
        auto f = lemma_symmetry_criterion(m, phi);
        EXPECT_TRUE(f.by_tau);
        EXPECT_TRUE(f.by_vanishing);
    }
}

TEST(Alpha3, TrivialWitnesses) {
    auto m = trivial_module(build_cyclic(3), {3});
    auto w = class_in_image_alpha3(m, zero_cochain(m, 3));
    ASSERT_TRUE(w);
    for (auto& phi : cohomology(m, 3, Flavor::exterior).representatives) {
        auto v = class_in_image_alpha3(m, phi);
        ASSERT_TRUE(v);
        EXPECT_EQ(cochain_sub(m, phi, v->phi), coboundary(m, v->g));
    }
}
