#include "symcoh/suite.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "claims.hpp"
#include "symcoh/error.hpp"

namespace symcoh {

using nlohmann::json;

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

bool SuiteReport::passed() const { return count(Verdict::fail) == 0; }

std::size_t SuiteReport::count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.verdict == v;
    return n;
}

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& d : detail::claim_defs()) out.push_back(d.info);
        return out;
    }();
    return infos;
}

namespace {

// FNV-1a, stable across platforms
std::uint64_t claim_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

// claim id, module name, or the id prefix before the dot
bool selects(const std::set<std::string>& names, const ClaimInfo& info) {
    return names.count(info.id) || names.count(info.module) || names.count(info.id.substr(0, info.id.find('.')));
}

std::string skip_reason(const ClaimInfo& info, const SuiteOptions& opt) {
    if (!opt.only.empty() && !selects(opt.only, info)) return "not selected by --only";
    if (selects(opt.skip, info)) return "skipped by request";
    if (info.uses_oracle && opt.skip.count("oracle")) return "oracle claims skipped by request";
    return {};
}

void run_claim(const detail::ClaimDef& def, const FixtureSet& fx, const SuiteOptions& opt, ClaimRecord& rec) {
    const auto start = std::chrono::steady_clock::now();
    detail::ClaimContext ctx(fx, opt, rec, claim_seed(opt.seed, def.info.id));
    try {
        def.run(ctx);
        rec.verdict = Verdict::pass;
    } catch (const detail::ClaimFailure& f) {
        rec.verdict = Verdict::fail;
        rec.witness = f.witness;
    } catch (const Error& e) {
        rec.verdict = Verdict::fail;
        rec.witness = {{"error", to_string(e.kind())}, {"message", e.what()}};
    } catch (const std::exception& e) {
        rec.verdict = Verdict::fail;
        rec.witness = {{"error", "exception"}, {"message", e.what()}};
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& opt) {
    const FixtureSet fx = FixtureSet::load(opt.fixture_dir);
    const auto& defs = detail::claim_defs();
    SuiteReport report;
    report.fixture_version = fx.version();
    report.seed = opt.seed;
    report.samples = opt.samples;
    report.claims.resize(defs.size());

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < defs.size(); ++i) {
        report.claims[i].info = defs[i].info;
        report.claims[i].skip_reason = skip_reason(defs[i].info, opt);
        if (report.claims[i].skip_reason.empty()) todo.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < todo.size();)
            run_claim(defs[todo[k]], fx, opt, report.claims[todo[k]]);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, todo.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return report;
}

json report_to_json(const SuiteReport& r, bool timing) {
    json claims = json::array();
    for (const auto& c : r.claims) {
        json j = {{"id", c.info.id},
                  {"module", c.info.module},
                  {"statement", c.info.statement},
                  {"criterion", c.info.criterion},
                  {"uses_oracle", c.info.uses_oracle},
                  {"verdict", to_string(c.verdict)},
                  {"fixtures", c.fixtures},
                  {"checks", c.checks},
                  {"findings", c.findings},
                  {"details", c.details}};
        if (c.verdict == Verdict::fail) j["witness"] = c.witness;
        if (c.verdict == Verdict::skipped) j["skip_reason"] = c.skip_reason;
        if (timing) j["seconds"] = c.seconds;
        claims.push_back(std::move(j));
    }
    return {{"kind", "suite"},
            {"fixture_version", r.fixture_version},
            {"seed", r.seed},
            {"samples", r.samples},
            {"summary",
             {{"pass", r.count(Verdict::pass)}, {"fail", r.count(Verdict::fail)}, {"skipped", r.count(Verdict::skipped)}}},
            {"claims", claims}};
}

std::string report_to_text(const SuiteReport& r, bool timing) {
    std::size_t width = 0;
    for (const auto& c : r.claims) width = std::max(width, c.info.id.size());
    std::ostringstream os;
    os << "fixtures v" << r.fixture_version << ", seed " << r.seed << ", " << r.samples << " samples\n";
    for (const auto& c : r.claims) {
        std::string v = to_string(c.verdict);
        for (auto& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << std::left << std::setw(8) << v << std::setw(static_cast<int>(width) + 2) << c.info.id;
        if (c.verdict == Verdict::skipped) {
            os << c.skip_reason;
        } else {
            os << std::setw(10) << (std::to_string(c.checks) + " checks") << " " << c.fixtures.size() << " fixtures";
            if (timing) os << "  " << std::fixed << std::setprecision(2) << c.seconds << "s";
        }
        os << "\n";
        if (c.verdict == Verdict::fail) os << "        witness: " << c.witness.dump() << "\n";
        for (const auto& f : c.findings) os << "        finding: " << f << "\n";
    }
    os << r.count(Verdict::pass) << " passed, " << r.count(Verdict::fail) << " failed, " << r.count(Verdict::skipped)
       << " skipped\n";
    return os.str();
}

}  // namespace symcoh
