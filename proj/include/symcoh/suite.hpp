#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "symcoh/cochain.hpp"

namespace symcoh {

struct SuiteOptions {
    std::string fixture_dir = "fixtures/v1";
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    /// Claim ids, module names, id prefixes ("cohomology"), or "oracle" for
    /// every claim that needs the oracle.
    std::set<std::string> skip;
    /// When nonempty, only matching claims run; the rest are skipped.
    std::set<std::string> only;
    std::uint64_t oracle_budget = 10'000'000;
    /// Random instances per fixture for sampled claims.
    std::size_t samples = 100;
    Limits limits;
};

enum class Verdict { pass, fail, skipped };
const char* to_string(Verdict v) noexcept;

struct ClaimInfo {
    std::string id;
    std::string module;
    std::string statement;
    int criterion = 0;  // acceptance criterion covered, 0 if none
    bool uses_oracle = false;
};

struct ClaimRecord {
    ClaimInfo info;
    Verdict verdict = Verdict::skipped;
    std::vector<std::string> fixtures;
    std::size_t checks = 0;
    /// Discrepancies and notable empirical results; never a failure by themselves.
    std::vector<std::string> findings;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json witness;  // null unless failed
    std::string skip_reason;
    double seconds = 0;
};

struct SuiteReport {
    int fixture_version = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<ClaimRecord> claims;  // in claim-id order of the registry

    bool passed() const;
    std::size_t count(Verdict v) const;
};

/// Every claim, in report order.
const std::vector<ClaimInfo>& claim_registry();

/// Runs the selected claims on up to opt.jobs threads. The report does not
/// depend on the number of jobs.
SuiteReport run_suite(const SuiteOptions& opt);

/// Timing is excluded unless asked for, keeping reports reproducible.
nlohmann::json report_to_json(const SuiteReport& r, bool timing = false);
std::string report_to_text(const SuiteReport& r, bool timing = false);

}  // namespace symcoh
