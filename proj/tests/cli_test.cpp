#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "symcoh/algebra_io.hpp"
#include "symcoh/render.hpp"

using namespace symcoh;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + SYMCOH_CLI + " " + args;
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string fixture(const std::string& rel) { return std::string(SYMCOH_FIXTURES) + "/" + rel; }

fs::path scratch(const std::string& name) {
    auto dir = fs::path(testing::TempDir()) / ("symcoh_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST(Cli, CohomologyJson) {
    auto r = run("cohomology --group cyclic:3 --module trivial:3 --degree 3 --flavor classical --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["invariants"], json::array({3}));
    EXPECT_EQ(doc["order"], "3");
}

TEST(Cli, SymmetricDegreeZeroIsInvariants) {
    auto r = run("cohomology --group symmetric:3 --module sign:3 --degree 0 --flavor symmetric --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["invariants"], json::array());
    r = run("cohomology --group cyclic:4 --module trivial:2,4 --degree 0 --flavor symmetric --format json");
    EXPECT_EQ(json::parse(r.out)["invariants"], json::array({2, 4}));
}

TEST(Cli, CohomologyRoundTrip) {
    auto r = run("cohomology --group cyclic:3 --module trivial:3 --degree 2 --flavor exterior --representatives "
                 "--format json");
    ASSERT_EQ(r.code, 0);
    const auto g = parse_group_spec("cyclic:3");
    const auto m = parse_module_spec(g, "trivial:3");
    EXPECT_EQ(render_document(cohomology_to_json(m, cohomology_from_json(m, json::parse(r.out)), true)), r.out);
}

TEST(Cli, CompareVerdicts) {
    auto r = run("compare --group cyclic:3 --module trivial:3 --degree 1 --format json");
    ASSERT_EQ(r.code, 0);
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["verdict"], "bijective");
    EXPECT_EQ(render_document(comparison_to_json(comparison_from_json(doc))), r.out);
    r = run("compare --group cyclic:2 --module trivial:2 --degree 2 --format json");
    EXPECT_EQ(json::parse(r.out)["injective"], true);
    EXPECT_EQ(run("compare --group cyclic:2 --module trivial:2 --degree 2 --source classical --target symmetric").code,
              2);
}

TEST(Cli, TextFormat) {
    auto r = run("cohomology --group cyclic:2 --module trivial:2 --degree 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Z/2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    auto dir = scratch("exit");
    std::ofstream(dir / "bad.json") << R"({"table": [[0, 1], [1, 1]]})";
    auto r = run("cohomology --group " + (dir / "bad.json").string() + " --module trivial:2 --degree 1 2>&1");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("$.table"), std::string::npos) << r.out;
    EXPECT_EQ(run("cohomology --group cyclic:3 --module trivial:3 --degree 2 --flavor bogus 2>/dev/null").code, 2);
    EXPECT_EQ(run("cohomology --group cyclic:3 --degree 2 2>/dev/null").code, 2);
    EXPECT_EQ(run("cohomology --group cyclic:9 --module trivial:3 --degree 3 --max-cells 100 2>/dev/null").code, 3);
    EXPECT_EQ(run("suite --only cli.exit-codes", "SYMCOH_BUDGET=x").code, 2);
}

TEST(Cli, XmodCommands) {
    auto r = run("xmod verify " + fixture("extensions/X9.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("valid"), std::string::npos);
    r = run("xmod split-check --format json " + fixture("extensions/trivial-C3-Z3.json"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["splits"], true);
    r = run("xmod split-check --format json " + fixture("extensions/X9-twisted.json"));
    EXPECT_EQ(json::parse(r.out)["splits"], false);
}

TEST(Cli, SearchMatchesAlphaImage) {
    for (const std::string x : {"X9", "X9-twisted", "X25", "X25-twisted", "trivial-C5-Z5"}) {
        const auto file = fixture("extensions/" + x + ".json");
        auto s = run("xmod find-symmetric-section --format json " + file);
        ASSERT_EQ(s.code, 0) << x;
        auto i = run("xmod cocycle " + file + " | " + SYMCOH_CLI + " class-in-image-alpha3 --format json");
        ASSERT_EQ(i.code, 0) << x;
        EXPECT_EQ(json::parse(s.out)["status"] == "found", json::parse(i.out)["in_image"].get<bool>()) << x;
    }
}

TEST(Cli, CorruptedFixtureFailsWithWitness) {
    auto dir = scratch("corrupt");
    fs::copy(SYMCOH_FIXTURES, dir, fs::copy_options::recursive);
    auto path = dir / "extensions" / "X9.json";
    auto doc = load_json_file(path.string());
    doc["boundary"][1] = 1;
    std::ofstream(path) << doc.dump(2);
    auto r = run("suite --format json --only crossed.fixtures-validate --fixtures " + dir.string());
    EXPECT_EQ(r.code, 1);
    auto rep = json::parse(r.out);
    bool seen = false;
    for (auto& c : rep["claims"])
        if (c["id"] == "crossed.fixtures-validate") {
            EXPECT_EQ(c["verdict"], "fail");
            EXPECT_EQ(c["witness"]["fixture"], "X9");
            seen = true;
        }
    EXPECT_TRUE(seen);
}

TEST(Cli, SkipOracle) {
    auto r = run("suite --format json --only cohomology --skip oracle --fixtures " + std::string(SYMCOH_FIXTURES));
    ASSERT_EQ(r.code, 0) << r.out;
    auto rep = json::parse(r.out);
    for (auto& c : rep["claims"]) {
        if (c["module"] != "cohomology_engine") {
            EXPECT_EQ(c["verdict"], "skipped");
            continue;
        }
        if (c["uses_oracle"] == true) {
            EXPECT_EQ(c["verdict"], "skipped");
            EXPECT_EQ(c["skip_reason"], "oracle claims skipped by request");
        } else {
            EXPECT_EQ(c["verdict"], "pass") << c["id"];
        }
    }
}
