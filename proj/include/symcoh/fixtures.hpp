#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"

namespace symcoh {

// A fixture that failed to load keeps its error; claims that use it fail
// with that error as witness instead of aborting the whole run.
struct GroupFixture {
    std::string id;
    std::optional<FiniteGroup> group;
    std::string error;
};

struct ModuleFixture {
    std::string id;
    std::string group_id;
    std::optional<GModule> module;
    std::string error;
};

struct ExtensionFixture {
    std::string id;
    std::optional<CrossedExtension> xe;
    std::string error;
};

/// Manifest layout (directory/manifest.json):
///   {"version": 1,
///    "groups": {"<id>": "<file>", ...},
///    "modules": [{"id": "...", "group": "<group id>", "module": <module document>}, ...],
///    "extensions": [{"id": "...", "file": "<file>"}, ...]}
class FixtureSet {
public:
    /// Throws a validation error only when the manifest itself is unusable.
    static FixtureSet load(const std::string& dir);

    int version() const noexcept { return version_; }
    const std::vector<GroupFixture>& groups() const noexcept { return groups_; }
    const std::vector<ModuleFixture>& modules() const noexcept { return modules_; }
    const std::vector<ExtensionFixture>& extensions() const noexcept { return extensions_; }
    const ModuleFixture* find_module(const std::string& id) const;

    /// One shared engine per key, created on first use. Thread-safe.
    std::shared_ptr<CohomologyEngine> engine(const std::string& key, const GModule& m, const Limits& limits) const;

private:
    int version_ = 0;
    std::vector<GroupFixture> groups_;
    std::vector<ModuleFixture> modules_;
    std::vector<ExtensionFixture> extensions_;
    mutable std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
    mutable std::shared_ptr<std::map<std::string, std::shared_ptr<CohomologyEngine>>> engines_ =
        std::make_shared<std::map<std::string, std::shared_ptr<CohomologyEngine>>>();
};

}  // namespace symcoh
