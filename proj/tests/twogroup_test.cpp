#include <gtest/gtest.h>

#include "symcoh/cohomology.hpp"
#include "symcoh/error.hpp"
#include "symcoh/twogroup.hpp"

using namespace symcoh;

namespace {

// S3 acting on itself by conjugation, boundary the identity.
CrossedModule conjugation_module() {
    const auto s3 = build_symmetric(3);
    CrossedModule xm{s3, s3, {}, {}};
    for (Element t = 0; t < 6; ++t) xm.boundary.push_back(t);
    xm.raction.assign(6, std::vector<Element>(6));
    for (Element r = 0; r < 6; ++r)
        for (Element t = 0; t < 6; ++t) xm.raction[r][t] = s3.mul(s3.mul(r, t), s3.inv(r));
    return xm;
}

std::vector<CrossedExtension> fixtures() {
    return {cyclic_crossed_extension(3), cyclic_crossed_extension(3, 4),
            trivial_crossed_extension(trivial_module(build_cyclic(3), {3})),
            trivial_crossed_extension(sign_module(build_symmetric(3), 3))};
}

}  // namespace

TEST(CatGroup, ExhaustiveLawsOnSmallModules) {
    auto cat = build_cat_group(conjugation_module());
    EXPECT_TRUE(cat.report().exhaustive);
    EXPECT_GT(cat.report().checks, 46656u);
    for (const auto& xe : fixtures()) {
        auto c = build_cat_group(crossed_module_of(xe));
        EXPECT_TRUE(c.report().exhaustive) << xe.name();
    }
}

TEST(CatGroup, LargeModulesAreSampled) {
    auto cat = build_cat_group(crossed_module_of(cyclic_crossed_extension(5, 6)), 20000);
    EXPECT_FALSE(cat.report().exhaustive);
    EXPECT_GT(cat.report().checks, 0u);
}

TEST(CatGroup, MorphismCalculus) {
    auto cat = build_cat_group(crossed_module_of(cyclic_crossed_extension(3, 4)));
    const Morphism a{2, 5};
    EXPECT_EQ(cat.target(a), (5u + 6u) % 9u);
    EXPECT_EQ(cat.compose(cat.inverse(a), a), cat.identity(5));
    EXPECT_THROW(cat.compose(a, a), Error);
    // r acts on T by multiplication with 4^r
    EXPECT_EQ(cat.tensor(cat.identity(1), Morphism{1, 3}), (Morphism{4, 4}));
    EXPECT_EQ(cat.tensor(Morphism{1, 3}, cat.identity(1)), (Morphism{1, 4}));
}

TEST(CatGroup, PeifferFailureIsRejected) {
    const auto s3 = build_symmetric(3);
    CrossedModule xm{s3, build_cyclic(1), std::vector<Element>(6, 0), {std::vector<Element>(6)}};
    for (Element t = 0; t < 6; ++t) xm.raction[0][t] = t;
    try {
        build_cat_group(xm);
        FAIL() << "accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
        EXPECT_NE(std::string(e.what()).find("Peiffer"), std::string::npos);
    }
}

TEST(SFunctors, TrivialExtensionIsStrict) {
    auto xe = trivial_crossed_extension(trivial_module(build_cyclic(3), {3}));
    auto cat = build_cat_group(crossed_module_of(xe));
    auto sf = section_functor(xe, cat, normalised_section(xe));
    EXPECT_TRUE(sf.normalized);
    for (auto t : sf.xi) EXPECT_EQ(t, 0u);
    EXPECT_TRUE(is_monoidal(cat, sf));
    EXPECT_TRUE(is_symmetric_sfunctor(cat, sf));
    EXPECT_TRUE(split_check(xe).splits);
}

TEST(SFunctors, WeaklySymmetricXi) {
    auto xe = cyclic_crossed_extension(3);
    auto cat = build_cat_group(crossed_module_of(xe));
    auto sf = section_functor(xe, cat, weakly_symmetric_section(xe));
    EXPECT_EQ(sf.xi_at(1, 2), cat.identity(sf.f[0]));
}

TEST(SFunctors, BadSectionRejected) {
    auto xe = cyclic_crossed_extension(3);
    auto cat = build_cat_group(crossed_module_of(xe));
    auto sec = normalised_section(xe);
    sec.sigma[4] = (sec.sigma[4] + 1) % 9;
    EXPECT_THROW(section_functor(xe, cat, sec), Error);
}

TEST(SFunctors, EquivalencesOnAllSections) {
    for (const auto& xe : fixtures()) {
        auto cat = build_cat_group(crossed_module_of(xe));
        auto sections = sample_normalized_sections(xe, 2000, 7);
        ASSERT_FALSE(sections.empty());
        std::size_t monoidal = 0, symmetric = 0;
        for (const auto& sec : sections) {
            auto sf = section_functor(xe, cat, sec);
            const bool mon = is_monoidal(cat, sf);
            const bool sym = is_symmetric_sfunctor(cat, sf);
            EXPECT_EQ(mon, three_cocycle(xe, sec).is_zero()) << xe.name();
            EXPECT_EQ(sym, prop41_check(xe, sec)) << xe.name();
            if (mon) EXPECT_TRUE(sym) << xe.name();
            monoidal += mon;
            symmetric += sym;
        }
        EXPECT_GE(symmetric, monoidal);
    }
}

TEST(SplitCheck, MatchesCocycleClass) {
    for (const auto& xe : fixtures()) {
        auto result = split_check(xe);
        std::size_t tried = 0;
        for (const auto& sec : sample_normalized_sections(xe, 3, 11)) {
            EXPECT_EQ(result.splits, is_coboundary(xe.m(), three_cocycle(xe, sec), Flavor::normalized).has_value())
                << xe.name();
            ++tried;
        }
        EXPECT_GE(tried, 2u);
        if (result.splits) {
            ASSERT_TRUE(result.monoidal_section);
            EXPECT_TRUE(three_cocycle(xe, *result.monoidal_section).is_zero());
        }
    }
    EXPECT_TRUE(split_check(cyclic_crossed_extension(3)).splits);
    EXPECT_FALSE(split_check(cyclic_crossed_extension(3, 4)).splits);
}
