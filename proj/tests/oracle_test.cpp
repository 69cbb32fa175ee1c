#include <gtest/gtest.h>

#include <random>

#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/error.hpp"
#include "symcoh/oracle.hpp"

using namespace symcoh;

namespace {

oracle::Table to_table(const GModule& m, const Cochain& c) {
    oracle::Table t;
    const std::size_t count = c.values.size() / std::max<std::size_t>(m.rank(), 1);
    for (std::size_t i = 0; i < count; ++i) t.push_back(c.at(m, i));
    return t;
}

Cochain random_cochain(const GModule& m, std::size_t n, std::mt19937_64& rng) {
    Cochain c = zero_cochain(m, n);
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = static_cast<std::int64_t>(rng() % m.exponents()[i % m.rank()]);
    return c;
}

const Flavor all_flavors[] = {Flavor::classical, Flavor::normalized, Flavor::symmetric, Flavor::exterior};

}  // namespace

TEST(Oracle, GoldenValues) {
    auto z2 = trivial_module(build_cyclic(2), {2});
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(oracle::enumerate_cohomology(z2, n, Flavor::classical), std::vector<std::int64_t>{2});
    EXPECT_TRUE(oracle::enumerate_cohomology(trivial_module(build_cyclic(2), {3}), 1, Flavor::classical).empty());
    auto one = trivial_module(build_cyclic(1), {6});
    EXPECT_EQ(oracle::enumerate_cohomology(one, 0, Flavor::classical), std::vector<std::int64_t>{6});
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(oracle::enumerate_cohomology(one, n, Flavor::exterior).empty());
    auto v4 = trivial_module(direct_product(build_cyclic(2), build_cyclic(2)), {2});
    EXPECT_EQ(oracle::enumerate_cohomology(v4, 2, Flavor::classical), (std::vector<std::int64_t>{2, 2, 2}));
}

TEST(Oracle, PointwiseMapsMatchEngine) {
    std::mt19937_64 rng(5);
    for (const auto& m : {trivial_module(build_cyclic(3), {3}), sign_module(build_symmetric(3), 3),
                          trivial_module(build_cyclic(4), {2, 4})}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                auto phi = random_cochain(m, n, rng);
                EXPECT_EQ(oracle::coboundary(m, n, to_table(m, phi)), to_table(m, coboundary(m, phi)));
                for (std::size_t i = 1; i <= n; ++i)
                    EXPECT_EQ(oracle::tau(m, n, i, to_table(m, phi)), to_table(m, tau(m, i, phi)));
            }
        }
    }
}

TEST(Oracle, Coboundaries) {
    auto z2 = trivial_module(build_cyclic(2), {2});
    oracle::Table zero(4, ModuleElement{0});
    auto w = oracle::exhaustive_coboundary(z2, 2, zero, Flavor::classical);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, oracle::Table(2, ModuleElement{0}));
    // Z/4 as an extension of Z/2 by Z/2
    oracle::Table z4 = {{0}, {0}, {0}, {1}};
    EXPECT_FALSE(oracle::exhaustive_coboundary(z2, 2, z4, Flavor::classical));
    EXPECT_FALSE(oracle::exhaustive_coboundary(z2, 2, z4, Flavor::normalized));

    std::mt19937_64 rng(9);
    auto z3 = trivial_module(build_cyclic(3), {3});
    for (int rep = 0; rep < 10; ++rep) {
        auto g = to_table(z3, random_cochain(z3, 2, rng));
        auto phi = oracle::coboundary(z3, 2, g);
        auto found = oracle::exhaustive_coboundary(z3, 3, phi, Flavor::classical);
        ASSERT_TRUE(found);
        EXPECT_EQ(oracle::coboundary(z3, 2, *found), phi);
    }
}

TEST(Oracle, BudgetIsEnforced) {
    auto z3 = trivial_module(build_cyclic(3), {2});
    try {
        oracle::enumerate_cohomology(z3, 3, Flavor::classical);
        FAIL() << "no budget error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::budget_exhausted);
    }
    EXPECT_THROW(oracle::enumerate_cohomology(z3, 1, Flavor::classical, {4}), Error);
}

TEST(Oracle, AgreesWithEngine) {
    struct Case {
        GModule m;
        std::size_t max_degree;
    };
    const std::vector<Case> cases = {
        {trivial_module(build_cyclic(2), {2}), 3},
        {trivial_module(build_cyclic(2), {3}), 3},
        {trivial_module(build_cyclic(2), {4}), 3},
        {sign_module(build_cyclic(2), 3), 3},
        {trivial_module(build_cyclic(3), {2}), 2},
        {trivial_module(build_cyclic(3), {3}), 2},
        {trivial_module(direct_product(build_cyclic(2), build_cyclic(2)), {2}), 2},
        {sign_module(build_symmetric(3), 3), 1},
    };
    for (const auto& c : cases) {
        CohomologyEngine engine(c.m);
        for (std::size_t n = 0; n <= c.max_degree; ++n)
            for (auto f : all_flavors)
                EXPECT_EQ(engine.cohomology(n, f).invariants.factors, oracle::enumerate_cohomology(c.m, n, f))
                    << c.m.group().name() << " n=" << n << " " << to_string(f);
    }
}

TEST(Oracle, CoboundaryAgreesWithEngine) {
    std::mt19937_64 rng(13);
    auto m = trivial_module(build_cyclic(3), {3});
    CohomologyEngine engine(m);
    for (auto f : all_flavors) {
        auto reps = engine.cohomology(2, f).representatives;
        for (int rep = 0; rep < 20; ++rep) {
            // random cocycles of the flavor: small combinations of boundaries and class representatives
            auto g = random_cochain(m, 1, rng);
            if (!is_member(m, g, f)) g = zero_cochain(m, 1);
            Cochain phi = coboundary(m, g);
            if (!reps.empty() && rep % 2) phi = cochain_add(m, phi, reps[rng() % reps.size()]);
            const bool engine_says = engine.is_coboundary(phi, f).has_value();
            const bool oracle_says = oracle::exhaustive_coboundary(m, 2, to_table(m, phi), f).has_value();
            EXPECT_EQ(engine_says, oracle_says) << to_string(f);
        }
    }
}

TEST(Oracle, FixtureClasses) {
    for (std::int64_t twist : {1, 4, 7}) {
        auto xe = cyclic_crossed_extension(3, twist);
        auto f = three_cocycle(xe, normalised_section(xe));
        const bool zero = oracle::exhaustive_coboundary(xe.m(), 3, to_table(xe.m(), f), Flavor::classical).has_value();
        EXPECT_EQ(zero, twist == 1) << "twist " << twist;
        EXPECT_EQ(zero, is_coboundary(xe.m(), f, Flavor::classical).has_value());
    }
}
