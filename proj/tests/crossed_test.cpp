#include <gtest/gtest.h>

#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/error.hpp"

using namespace symcoh;

namespace {

std::string validation_message(const CrossedExtensionData& d) {
    try {
        validate_crossed_extension(d);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
        return e.what();
    }
    ADD_FAILURE() << "accepted";
    return {};
}

}  // namespace

TEST(CrossedModule, FixturesValidate) {
    auto x9 = cyclic_crossed_extension(3);
    EXPECT_EQ(x9.t().order(), 9u);
    EXPECT_EQ(x9.iota({1}), 3u);
    EXPECT_EQ(x9.iota_inverse(6), ModuleElement{2});
    EXPECT_FALSE(x9.iota_inverse(1));
    cyclic_crossed_extension(3, 4);
    cyclic_crossed_extension(5);
    cyclic_crossed_extension(5, 6);
    cyclic_crossed_extension(2);
    trivial_crossed_extension(trivial_module(build_cyclic(3), {3}));
    trivial_crossed_extension(sign_module(build_symmetric(3), 3));
}

TEST(CrossedModule, ViolationsAreNamed) {
    auto base = cyclic_crossed_extension(3).data();
    auto d = base;
    d.raction[1][1] = 2;
    EXPECT_NE(validation_message(d).find("raction"), std::string::npos);
    d = base;
    d.boundary[1] = 1;
    EXPECT_NE(validation_message(d).find("boundary"), std::string::npos);
    d = base;
    d.iota = {1};
    EXPECT_NE(validation_message(d).find("iota"), std::string::npos);
    d = base;
    // r -> (-1)^r is not an action of Z/9
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t t = 0; t < 9; ++t) d.raction[r][t] = static_cast<Element>(((r % 2 ? 8 : 1) * t) % 9);
    EXPECT_NE(validation_message(d).find("not an action"), std::string::npos);
}

TEST(Sections, NormalisedAndWeaklySymmetric) {
    auto x9 = cyclic_crossed_extension(3);
    auto n = normalised_section(x9);
    EXPECT_TRUE(n.normalized);
    auto w = weakly_symmetric_section(x9);
    EXPECT_TRUE(w.weakly_symmetric);
    EXPECT_EQ(w.s[2], x9.r().inv(w.s[1]));
    EXPECT_EQ(w.sig(3, 1, 2), 0u);
    EXPECT_EQ(w.sig(3, 2, 1), 0u);
    EXPECT_THROW(weakly_symmetric_section(cyclic_crossed_extension(2)), Error);
    auto triv = trivial_crossed_extension(trivial_module(build_cyclic(3), {3}));
    auto ts = normalised_section(triv);
    for (Element x = 0; x < 3; ++x) EXPECT_EQ(ts.s[x], x);
    EXPECT_TRUE(three_cocycle(triv, ts).is_zero());
    EXPECT_TRUE(prop41_check(triv, ts));
    EXPECT_TRUE(def44_check(triv, ts));
}

TEST(Sections, CocycleClassIsSectionIndependent) {
    for (auto xe : {cyclic_crossed_extension(3), cyclic_crossed_extension(3, 4), cyclic_crossed_extension(5)}) {
        CohomologyEngine e(xe.m());
        auto f1 = three_cocycle(xe, normalised_section(xe));
        auto f2 = three_cocycle(xe, weakly_symmetric_section(xe));
        EXPECT_TRUE(e.is_coboundary(cochain_sub(xe.m(), f1, f2), Flavor::classical));
        EXPECT_EQ(prop41_check(xe, normalised_section(xe)), is_member(xe.m(), f1, Flavor::symmetric));
    }
}

// Z/p^2 -> Z/p^2 with trivial action has zero class; twisting by 4 (p = 3)
// or 6 (p = 5) gives a nonzero class.
TEST(Sections, FixtureClasses) {
    auto zero = [](const CrossedExtension& xe) {
        return is_coboundary(xe.m(), three_cocycle(xe, normalised_section(xe)), Flavor::classical).has_value();
    };
    EXPECT_TRUE(zero(cyclic_crossed_extension(3)));
    EXPECT_FALSE(zero(cyclic_crossed_extension(3, 4)));
    EXPECT_TRUE(zero(cyclic_crossed_extension(5)));
    EXPECT_FALSE(zero(cyclic_crossed_extension(5, 6)));
}

TEST(Sections, TheoremConsistency) {
    for (auto xe : {cyclic_crossed_extension(3), cyclic_crossed_extension(3, 4), cyclic_crossed_extension(5),
                    cyclic_crossed_extension(5, 6), trivial_crossed_extension(trivial_module(build_cyclic(3), {3}))}) {
        auto search = find_symmetric_section(xe);
        ASSERT_NE(search.status, SearchStatus::budget_exhausted);
        EXPECT_FALSE(search.out_of_theorem_scope);
        auto f = three_cocycle(xe, weakly_symmetric_section(xe));
        auto alpha = class_in_image_alpha3(xe.m(), f);
        EXPECT_EQ(search.status == SearchStatus::found, alpha.has_value()) << xe.name();
        if (search.section) {
            EXPECT_TRUE(def44_check(xe, *search.section));
            EXPECT_TRUE(prop41_check(xe, *search.section));
            EXPECT_TRUE(is_member(xe.m(), three_cocycle(xe, *search.section), Flavor::symmetric));
        }
    }
    auto x4 = find_symmetric_section(cyclic_crossed_extension(2));
    EXPECT_TRUE(x4.out_of_theorem_scope);
    EXPECT_EQ(find_symmetric_section(cyclic_crossed_extension(3, 4), 1).status, SearchStatus::budget_exhausted);
    EXPECT_EQ(find_symmetric_section(cyclic_crossed_extension(3, 4), 3).status, SearchStatus::none);
}

TEST(Sections, RelabelingKeepsVerdicts) {
    auto xe = cyclic_crossed_extension(3);
    std::vector<Element> perm{0, 2, 1, 4, 3, 6, 5, 8, 7};
    auto re = relabel_crossed_extension(xe, perm, perm);
    EXPECT_EQ(find_symmetric_section(re).status, find_symmetric_section(xe).status);
    CohomologyEngine e(xe.m());
    auto f1 = three_cocycle(xe, normalised_section(xe));
    auto f2 = three_cocycle(re, normalised_section(re));
    EXPECT_TRUE(e.is_coboundary(cochain_sub(xe.m(), f1, f2), Flavor::classical));
}

TEST(Extensions, TwistedProducts) {
    auto m = trivial_module(build_cyclic(2), {2});
    auto f = zero_cochain(m, 2);
    f.values[3] = 1;
    auto ext = extension_from_2cocycle(m, f);
    // (0, 1) has order 4
    EXPECT_EQ(ext.k.element_order(1), 4u);
    EXPECT_FALSE(symmetric_section_search_2d(ext));
    auto split = extension_from_2cocycle(m, zero_cochain(m, 2));
    auto s = symmetric_section_search_2d(split);
    ASSERT_TRUE(s);
    EXPECT_EQ(recovered_2cocycle(split, *s), zero_cochain(m, 2));
    std::vector<Element> canon{0, 1};
    EXPECT_EQ(recovered_2cocycle(ext, canon), f);
    auto bad = zero_cochain(trivial_module(build_cyclic(3), {3}), 2);
    bad.values[4] = 1;
    EXPECT_THROW(extension_from_2cocycle(trivial_module(build_cyclic(3), {3}), bad), Error);
}

TEST(Json, CrossedExtensionRoundTrip) {
    auto xe = cyclic_crossed_extension(3, 4);
    auto doc = crossed_extension_to_json(xe);
    auto back = crossed_extension_from_json(doc);
    EXPECT_EQ(back.data().raction, xe.data().raction);
    doc["raction"][1][1] = 5;
    try {
        crossed_extension_from_json(doc);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(std::string(e.what()).rfind("$.raction", 0), 0u) << e.what();
    }
    nlohmann::json short_doc = {{"T", "cyclic:9"}, {"R", "cyclic:9"}, {"G", "cyclic:3"}, {"M", "trivial:3"},
                                {"boundary", {0, 3, 6, 0, 3, 6, 0, 3, 6}}, {"pi", {0, 1, 2, 0, 1, 2, 0, 1, 2}},
                                {"iota", {3}}};
    EXPECT_EQ(crossed_extension_from_json(short_doc).t().order(), 9u);
}
