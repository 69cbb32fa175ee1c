#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "symcoh/fixtures.hpp"
#include "symcoh/suite.hpp"

namespace symcoh::detail {

struct ClaimFailure {
    nlohmann::json witness;
};

class ClaimContext {
public:
    ClaimContext(const FixtureSet& fx, const SuiteOptions& opt, ClaimRecord& rec, std::uint64_t seed)
        : fx(fx), opt(opt), rng(seed), rec_(rec) {}

    const FixtureSet& fx;
    const SuiteOptions& opt;
    std::mt19937_64 rng;

    template <class W>
    void require(bool ok, W&& witness) {
        ++rec_.checks;
        if (!ok) throw ClaimFailure{witness()};
    }

    void tally() { ++rec_.checks; }
    std::uint64_t uniform(std::uint64_t n) { return n ? rng() % n : 0; }
    void finding(std::string s) { rec_.findings.push_back(std::move(s)); }
    nlohmann::json& details() { return rec_.details; }

    /// Records the fixture; a fixture that failed to load fails the claim.
    const GModule& module(const ModuleFixture& f);
    const CrossedExtension& extension(const ExtensionFixture& f);
    CohomologyEngine& engine(const ModuleFixture& f);
    CohomologyEngine& engine(const ExtensionFixture& f);

private:
    void use(const std::string& id);

    ClaimRecord& rec_;
    std::vector<std::shared_ptr<CohomologyEngine>> held_;
};

struct ClaimDef {
    ClaimInfo info;
    std::function<void(ClaimContext&)> run;
};

const std::vector<ClaimDef>& claim_defs();

}  // namespace symcoh::detail
