#include "symcoh/fixtures.hpp"

#include <filesystem>

#include "symcoh/algebra_io.hpp"
#include "symcoh/error.hpp"

namespace symcoh {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <class F>
std::string capture(F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

FixtureSet FixtureSet::load(const std::string& dir) {
    const fs::path root(dir);
    const json manifest = load_json_file((root / "manifest.json").string());
    if (!manifest.is_object()) fail(ErrorKind::validation, "manifest.json: expected an object");
    FixtureSet fx;
    if (!manifest.contains("version") || !manifest["version"].is_number_integer())
        fail(ErrorKind::validation, "manifest.json: $.version: expected an integer");
    fx.version_ = manifest["version"].get<int>();

    if (manifest.contains("groups")) {
        if (!manifest["groups"].is_object()) fail(ErrorKind::validation, "manifest.json: $.groups: expected an object");
        for (const auto& [id, file] : manifest["groups"].items()) {
            GroupFixture g{id, std::nullopt, {}};
            g.error = capture([&] {
                if (!file.is_string()) fail(ErrorKind::validation, "$.groups." + id + ": expected a file name");
                const auto path = (root / file.get<std::string>()).string();
                const json doc = load_json_file(path);
                try {
                    g.group = group_from_json(doc);
                } catch (const Error& e) {
                    fail(e.kind(), file.get<std::string>() + ": " + e.what());
                }
            });
            fx.groups_.push_back(std::move(g));
        }
    }

    if (manifest.contains("modules")) {
        if (!manifest["modules"].is_array()) fail(ErrorKind::validation, "manifest.json: $.modules: expected an array");
        for (std::size_t i = 0; i < manifest["modules"].size(); ++i) {
            const json& entry = manifest["modules"][i];
            const std::string path = "$.modules[" + std::to_string(i) + "]";
            ModuleFixture mf;
            mf.id = entry.value("id", path);
            mf.group_id = entry.value("group", "");
            mf.error = capture([&] {
                const GroupFixture* g = nullptr;
                for (const auto& cand : fx.groups_)
                    if (cand.id == mf.group_id) g = &cand;
                if (!g) fail(ErrorKind::validation, path + ".group: unknown group '" + mf.group_id + "'");
                if (!g->group) fail(ErrorKind::validation, "group " + g->id + " did not load: " + g->error);
                if (!entry.contains("module")) fail(ErrorKind::validation, path + ".module: missing");
                mf.module = module_from_json(*g->group, entry["module"], path + ".module");
            });
            fx.modules_.push_back(std::move(mf));
        }
    }

    if (manifest.contains("extensions")) {
        if (!manifest["extensions"].is_array())
            fail(ErrorKind::validation, "manifest.json: $.extensions: expected an array");
        for (std::size_t i = 0; i < manifest["extensions"].size(); ++i) {
            const json& entry = manifest["extensions"][i];
            ExtensionFixture ef;
            ef.id = entry.value("id", "$.extensions[" + std::to_string(i) + "]");
            ef.error = capture([&] {
                const std::string file = entry.value("file", "");
                if (file.empty()) fail(ErrorKind::validation, "$.extensions[" + std::to_string(i) + "].file: missing");
                const fs::path path = root / file;
                const json doc = load_json_file(path.string());
                try {
                    ef.xe = crossed_extension_from_json(doc, path.parent_path().string());
                } catch (const Error& e) {
                    fail(e.kind(), file + ": " + e.what());
                }
            });
            fx.extensions_.push_back(std::move(ef));
        }
    }
    return fx;
}

const ModuleFixture* FixtureSet::find_module(const std::string& id) const {
    for (const auto& m : modules_)
        if (m.id == id) return &m;
    return nullptr;
}

std::shared_ptr<CohomologyEngine> FixtureSet::engine(const std::string& key, const GModule& m,
                                                     const Limits& limits) const {
    std::lock_guard lock(*mutex_);
    auto& slot = (*engines_)[key];
    if (!slot) slot = std::make_shared<CohomologyEngine>(m, limits);
    return slot;
}

}  // namespace symcoh
