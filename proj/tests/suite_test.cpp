#include <gtest/gtest.h>

#include <set>

#include "symcoh/render.hpp"
#include "symcoh/suite.hpp"

using namespace symcoh;

namespace {

SuiteOptions fast() {
    SuiteOptions o;
    o.fixture_dir = SYMCOH_FIXTURES;
    o.samples = 10;
    o.only = {"algebra", "linalg", "cli", "crossed.hs2-cross-check", "cohomology.functoriality"};
    return o;
}

}  // namespace

TEST(Suite, RegistryIdsUniqueAndSorted) {
    const auto& reg = claim_registry();
    std::set<std::string> ids;
    for (std::size_t i = 0; i < reg.size(); ++i) {
        EXPECT_TRUE(ids.insert(reg[i].id).second) << reg[i].id;
        if (i) EXPECT_LT(reg[i - 1].id, reg[i].id);
        EXPECT_FALSE(reg[i].statement.empty());
    }
    for (int c = 1; c <= 9; ++c) {
        bool covered = false;
        for (const auto& info : reg) covered = covered || info.criterion == c;
        EXPECT_TRUE(covered) << "criterion " << c;
    }
}

TEST(Suite, SelectionAndSkipReasons) {
    auto opt = fast();
    opt.skip = {"oracle"};
    const auto r = run_suite(opt);
    EXPECT_EQ(r.claims.size(), claim_registry().size());
    for (const auto& c : r.claims) {
        if (c.verdict == Verdict::skipped) {
            EXPECT_FALSE(c.skip_reason.empty()) << c.info.id;
        } else {
            EXPECT_EQ(c.verdict, Verdict::pass) << c.info.id << " " << c.witness.dump();
            EXPECT_FALSE(c.info.uses_oracle);
        }
    }
    EXPECT_EQ(r.claims.size(), r.count(Verdict::pass) + r.count(Verdict::skipped));
}

TEST(Suite, ReportIndependentOfJobs) {
    auto a = fast(), b = fast();
    b.jobs = 4;
    const auto ra = render_document(report_to_json(run_suite(a)));
    const auto rb = render_document(report_to_json(run_suite(b)));
    EXPECT_EQ(ra, rb);
    auto c = fast();
    c.seed = 7;
    EXPECT_NE(ra, render_document(report_to_json(run_suite(c))));
}

TEST(Suite, MissingFixtureDirectoryIsValidationError) {
    SuiteOptions o;
    o.fixture_dir = "/nonexistent/fixtures";
    EXPECT_THROW(run_suite(o), std::exception);
}
