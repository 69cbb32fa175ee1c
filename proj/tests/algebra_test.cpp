#include <gtest/gtest.h>

#include <json.hpp>

#include "symcoh/algebra_io.hpp"
#include "symcoh/error.hpp"
#include "symcoh/group.hpp"
#include "symcoh/module.hpp"

using namespace symcoh;

namespace {

template <class F>
std::string error_of(F&& f, ErrorKind expected = ErrorKind::validation) {
    try {
        f();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), expected) << e.what();
        return e.what();
    }
    ADD_FAILURE() << "no error raised";
    return {};
}

bool associative(const FiniteGroup& g) {
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            for (Element c = 0; c < g.order(); ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

}  // namespace

TEST(Group, CyclicBasics) {
    auto g = build_cyclic(9);
    EXPECT_EQ(g.order(), 9u);
    EXPECT_EQ(g.mul(4, 7), 2u);
    EXPECT_EQ(g.inv(2), 7u);
    EXPECT_EQ(g.element_order(3), 3u);
    EXPECT_EQ(g.element_order(1), 9u);
    EXPECT_TRUE(associative(g));
    error_of([] { build_cyclic(0); }, ErrorKind::invalid_parameter);
}

TEST(Group, ProductAndSymmetric) {
    auto p = direct_product(build_cyclic(2), build_cyclic(3));
    EXPECT_EQ(p.order(), 6u);
    EXPECT_EQ(p.mul(1 * 3 + 2, 1 * 3 + 2), 0 * 3 + 1);
    auto s3 = build_symmetric(3);
    EXPECT_EQ(s3.order(), 6u);
    EXPECT_TRUE(associative(s3));
    bool abelian = true;
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
    EXPECT_FALSE(abelian);
    EXPECT_EQ(build_symmetric(4).order(), 24u);
}

TEST(Group, ValidationWitnesses) {
    auto bad_latin = error_of([] { validate_group({{0, 1}, {1, 1}}); });
    EXPECT_NE(bad_latin.find("Latin"), std::string::npos);
    auto bad_identity = error_of([] { validate_group({{1, 0}, {0, 1}}); });
    EXPECT_NE(bad_identity.find("identity"), std::string::npos);
    // Latin square with identity 0 that is not associative (order 5 loop).
    std::vector<std::vector<std::int64_t>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    auto bad_assoc = error_of([&] { validate_group(loop); });
    EXPECT_NE(bad_assoc.find("associativ"), std::string::npos);
    error_of([] { validate_group({}); });
    error_of([] { validate_group({{0, 1}, {1}}); });
    error_of([] { validate_group({{0, 2}, {1, 0}}); });
}

TEST(Group, RelabelPreservesStructure) {
    auto g = build_cyclic(5);
    auto h = relabel(g, {0, 3, 1, 4, 2});
    EXPECT_TRUE(associative(h));
    EXPECT_EQ(h.mul(3, 3), 1u);  // old 1+1 = 2 -> new 1
    error_of([&] { relabel(g, {1, 0, 2, 3, 4}); }, ErrorKind::invalid_parameter);
}

TEST(Group, OrderTwoCensus) {
    auto c = order_two_census(build_cyclic(9));
    EXPECT_FALSE(c.has_order_two);
    ASSERT_EQ(c.pairing.size(), 4u);
    EXPECT_EQ(c.pairing[0], std::make_pair(Element{1}, Element{8}));
    auto d = order_two_census(build_cyclic(4));
    EXPECT_TRUE(d.has_order_two);
    EXPECT_EQ(d.witness, 2u);
}

TEST(Group, SignCharacter) {
    auto s3 = build_symmetric(3);
    auto chi = sign_character(s3);
    ASSERT_EQ(chi.size(), 6u);
    int odd = 0;
    for (Element a = 0; a < 6; ++a) {
        odd += chi[a];
        for (Element b = 0; b < 6; ++b) EXPECT_EQ(chi[s3.mul(a, b)], (chi[a] + chi[b]) % 2);
    }
    EXPECT_EQ(odd, 3);
    EXPECT_TRUE(sign_character(build_cyclic(9)).empty());
    auto v4 = sign_character(direct_product(build_cyclic(2), build_cyclic(2)));
    EXPECT_EQ(v4.size(), 4u);
}

TEST(Module, TrivialAndSign) {
    auto g = build_cyclic(4);
    auto m = trivial_module(g, {2, 4});
    EXPECT_EQ(m.exponent(), 4);
    EXPECT_EQ(m.cardinality(), 8u);
    EXPECT_TRUE(m.trivial_action());
    auto s = sign_module(g, 3);
    EXPECT_FALSE(s.trivial_action());
    EXPECT_EQ(s.act(1, {1}), ModuleElement{2});
    EXPECT_EQ(s.act(2, {1}), ModuleElement{1});
    for (std::size_t i = 0; i < m.cardinality(); ++i) EXPECT_EQ(m.index_of(m.element_at(i)), i);
    error_of([] { sign_module(build_cyclic(3), 3); });
}

TEST(Module, ValidationOrder) {
    auto g = build_cyclic(2);
    EXPECT_NE(error_of([&] { validate_module(g, {1}, {{{1}}, {{1}}}); }).find("exponent"), std::string::npos);
    auto ni = error_of([&] { validate_module(g, {3}, {{{1}}, {{0}}}); });
    EXPECT_NE(ni.find("non-invertible"), std::string::npos);
    auto hom = error_of([&] { validate_module(build_cyclic(3), {7}, {{{1}}, {{3}}, {{5}}}); });
    EXPECT_NE(hom.find("homomorphism"), std::string::npos);
    error_of([&] { validate_module(g, {3}, {{{2}}, {{2}}}); });
}

TEST(Module, FromGenerators) {
    auto g = build_cyclic(9);
    auto m = module_from_generators(g, {7}, {{1, {{2}}}});
    EXPECT_EQ(m.act(3, {1}), ModuleElement{1});
    EXPECT_EQ(m.act(2, {1}), ModuleElement{4});
    error_of([&] { module_from_generators(g, {7}, {{3, {{1}}}}); });
}

TEST(Json, GroupDocuments) {
    auto g = group_from_json(nlohmann::json::parse(R"({"product":[{"cyclic":3},{"cyclic":3}]})"));
    EXPECT_EQ(g.order(), 9u);
    auto t = group_from_json(group_to_json(g));
    EXPECT_EQ(t, g);
    auto msg = error_of([] {
        group_from_json(nlohmann::json::parse(R"({"product":[{"cyclic":2},{"table":[[0,1],[1,1]]}]})"));
    });
    EXPECT_EQ(msg.rfind("$.product[1].table", 0), 0u) << msg;
    EXPECT_EQ(parse_group_spec("cyclic:5").order(), 5u);
    EXPECT_EQ(parse_group_spec("symmetric:3").order(), 6u);
    EXPECT_EQ(parse_group_spec("product:2,2").order(), 4u);
}

TEST(Json, ModuleDocuments) {
    auto g = build_symmetric(3);
    auto m = parse_module_spec(g, "sign:3");
    auto back = module_from_json(g, module_to_json(m));
    for (Element x = 0; x < 6; ++x) EXPECT_EQ(back.action_matrix(x), m.action_matrix(x));
    auto msg = error_of([&] {
        module_from_json(g, nlohmann::json::parse(R"({"exponents":[0],"action":"trivial"})"));
    });
    EXPECT_EQ(msg.rfind("$.exponents", 0), 0u) << msg;
    EXPECT_EQ(parse_module_spec(g, "trivial:2,4").rank(), 2u);
}
