#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "symcoh/algebra_io.hpp"
#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/error.hpp"
#include "symcoh/render.hpp"
#include "symcoh/suite.hpp"
#include "symcoh/twogroup.hpp"

using namespace symcoh;
using nlohmann::json;

namespace {

struct Common {
    std::string format = "text";
    std::size_t max_cells = Limits{}.max_cells;

    Limits limits() const {
        Limits l;
        l.max_cells = max_cells;
        return l;
    }
    bool as_json() const { return format == "json"; }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--max-cells", c.max_cells, "size guard on |G|^(n+1) * rank(M)");
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) fail(ErrorKind::validation, path + ": cannot open");
    return {std::istreambuf_iterator<char>(in), {}};
}

CrossedExtension load_extension(const std::string& path) {
    const json doc = load_json_file(path);
    std::string dir = ".";
    if (auto slash = path.find_last_of('/'); slash != std::string::npos) dir = path.substr(0, slash);
    try {
        return crossed_extension_from_json(doc, dir);
    } catch (const Error& e) {
        fail(e.kind(), path + ": " + e.what());
    }
}

std::uint64_t env_budget() {
    if (const char* s = std::getenv("SYMCOH_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        fail(ErrorKind::invalid_parameter, "SYMCOH_BUDGET: expected a positive integer");
    }
    return SuiteOptions{}.oracle_budget;
}

std::string section_text(const SSection& s, std::size_t q) {
    std::ostringstream os;
    os << "  s:";
    for (auto v : s.s) os << " " << v;
    os << "\n  sigma:\n";
    for (std::size_t x = 0; x < q; ++x) {
        os << "   ";
        for (std::size_t y = 0; y < q; ++y) os << " " << s.sigma[x * q + y];
        os << "\n";
    }
    return os.str();
}

json cocycle_document(const CrossedExtension& xe, const Cochain& f) {
    return {{"kind", "cocycle"},
            {"group", group_to_json(xe.g())},
            {"module", module_to_json(xe.m())},
            {"cochain", cochain_to_json(f)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcoh: symmetric and exterior group cohomology, crossed extensions"};
    app.require_subcommand(1);

    // cohomology
    Common coh_c;
    std::string coh_group, coh_module, coh_flavor = "classical";
    std::size_t coh_degree = 0;
    bool coh_reps = false;
    auto* coh = app.add_subcommand("cohomology", "invariant factors of H^n in one flavor");
    coh->add_option("--group", coh_group, "group spec or file")->required();
    coh->add_option("--module", coh_module, "module spec or file")->required();
    coh->add_option("--degree", coh_degree)->required();
    coh->add_option("--flavor", coh_flavor, "classical, normalized, symmetric or exterior");
    coh->add_flag("--representatives", coh_reps, "print representative cocycles");
    add_common(coh, coh_c);

    // compare
    Common cmp_c;
    std::string cmp_group, cmp_module, cmp_source = "symmetric", cmp_target = "classical";
    std::size_t cmp_degree = 0;
    auto* cmp = app.add_subcommand("compare", "map induced by a flavor inclusion");
    cmp->add_option("--group", cmp_group)->required();
    cmp->add_option("--module", cmp_module)->required();
    cmp->add_option("--degree", cmp_degree)->required();
    cmp->add_option("--source", cmp_source);
    cmp->add_option("--target", cmp_target);
    add_common(cmp, cmp_c);

    // xmod
    Common xm_c;
    std::string xm_file, xm_section = "normalised";
    std::size_t xm_budget = 100000;
    auto* xm = app.add_subcommand("xmod", "crossed extension tools");
    xm->require_subcommand(1);
    auto* xm_verify = xm->add_subcommand("verify", "validate an extension document");
    auto* xm_cocycle = xm->add_subcommand("cocycle", "3-cocycle of a normalized section");
    auto* xm_find = xm->add_subcommand("find-symmetric-section", "search for a symmetric s-section");
    auto* xm_split = xm->add_subcommand("split-check", "is the s-functor of some section monoidal");
    for (auto* s : {xm_verify, xm_cocycle, xm_find, xm_split}) {
        s->add_option("file", xm_file, "extension document")->required();
        add_common(s, xm_c);
    }
    xm_cocycle->add_option("--section", xm_section, "normalised or weakly-symmetric")
        ->check(CLI::IsMember({"normalised", "weakly-symmetric"}));
    xm_find->add_option("--budget", xm_budget, "s-choices to examine");

    // class-in-image-alpha3
    Common img_c;
    std::string img_input = "-";
    auto* img = app.add_subcommand("class-in-image-alpha3", "is [f] in the image of symmetric H^3");
    img->add_option("input", img_input, "cocycle document from 'xmod cocycle', or - for stdin");
    add_common(img, img_c);

    // suite
    Common st_c;
    SuiteOptions st;
    std::vector<std::string> st_skip, st_only;
    bool st_timing = false;
    auto* suite = app.add_subcommand("suite", "run every claim on the fixture corpus");
    suite->add_option("--fixtures", st.fixture_dir, "fixture directory");
    suite->add_option("--seed", st.seed);
    suite->add_option("--jobs", st.jobs)->check(CLI::PositiveNumber);
    suite->add_option("--samples", st.samples)->check(CLI::PositiveNumber);
    suite->add_option("--oracle-budget", st.oracle_budget, "defaults to $SYMCOH_BUDGET or 10000000");
    suite->add_option("--skip", st_skip, "claim id, module name, or 'oracle'");
    suite->add_option("--only", st_only, "claim id or module name");
    suite->add_flag("--timing", st_timing, "include per-claim seconds");
    add_common(suite, st_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*coh) {
            const auto g = parse_group_spec(coh_group);
            const auto m = parse_module_spec(g, coh_module);
            const auto r = cohomology(m, coh_degree, parse_flavor(coh_flavor), coh_c.limits());
            std::cout << (coh_c.as_json() ? render_document(cohomology_to_json(m, r, coh_reps))
                                          : render_cohomology_text(m, r, coh_reps));
            return 0;
        }
        if (*cmp) {
            const auto g = parse_group_spec(cmp_group);
            const auto m = parse_module_spec(g, cmp_module);
            const auto r =
                comparison_map(m, cmp_degree, parse_flavor(cmp_source), parse_flavor(cmp_target), cmp_c.limits());
            std::cout << (cmp_c.as_json() ? render_document(comparison_to_json(r)) : render_comparison_text(r));
            return 0;
        }
        if (*xm) {
            const auto xe = load_extension(xm_file);
            const std::size_t q = xe.g().order();
            if (*xm_verify) {
                const json doc = {{"kind", "crossed-extension"},
                                  {"name", xe.name()},
                                  {"valid", true},
                                  {"orders",
                                   {{"T", xe.t().order()}, {"R", xe.r().order()}, {"G", q}, {"M", xe.m().cardinality()}}}};
                if (xm_c.as_json()) std::cout << render_document(doc);
                else
                    std::cout << xe.name() << ": valid (|T| = " << xe.t().order() << ", |R| = " << xe.r().order()
                              << ", |G| = " << q << ", |M| = " << xe.m().cardinality() << ")\n";
                return 0;
            }
            if (*xm_cocycle) {
                const auto sec = xm_section == "normalised" ? normalised_section(xe) : weakly_symmetric_section(xe);
                const auto f = three_cocycle(xe, sec);
                // always a document, so it can be piped
                std::cout << render_document(cocycle_document(xe, f));
                return 0;
            }
            if (*xm_find) {
                const auto r = find_symmetric_section(xe, xm_budget);
                json doc = {{"kind", "symmetric-section-search"},
                            {"status", to_string(r.status)},
                            {"out_of_theorem_scope", r.out_of_theorem_scope},
                            {"s_choices_examined", r.s_choices_examined},
                            {"s_choices_total", r.s_choices_total}};
                if (r.section) doc["section"] = section_to_json(*r.section);
                if (xm_c.as_json()) {
                    std::cout << render_document(doc);
                } else {
                    std::cout << xe.name() << ": " << to_string(r.status) << " (" << r.s_choices_examined << " of "
                              << r.s_choices_total << " s-choices examined)"
                              << (r.out_of_theorem_scope ? ", G has elements of order two" : "") << "\n";
                    if (r.section) std::cout << section_text(*r.section, q);
                }
                return r.status == SearchStatus::budget_exhausted ? 3 : 0;
            }
            if (*xm_split) {
                const auto r = split_check(xe, xm_c.limits());
                json doc = {{"kind", "split-check"}, {"splits", r.splits}};
                if (r.monoidal_section) doc["monoidal_section"] = section_to_json(*r.monoidal_section);
                if (xm_c.as_json()) {
                    std::cout << render_document(doc);
                } else {
                    std::cout << xe.name() << ": " << (r.splits ? "splits" : "does not split") << "\n";
                    if (r.monoidal_section) std::cout << section_text(*r.monoidal_section, q);
                }
                return 0;
            }
        }
        if (*img) {
            json doc;
            try {
                doc = json::parse(read_input(img_input));
            } catch (const json::parse_error& e) {
                fail(ErrorKind::validation, img_input + ": " + e.what());
            }
            if (!doc.is_object() || !doc.contains("group") || !doc.contains("module") || !doc.contains("cochain"))
                fail(ErrorKind::validation, "$: expected a cocycle document with group, module and cochain");
            const auto g = group_from_json(doc["group"], "$.group");
            const auto m = module_from_json(g, doc["module"], "$.module");
            const auto f = cochain_from_json(m, doc["cochain"]);
            const auto w = class_in_image_alpha3(m, f, img_c.limits());
            json out = {{"kind", "alpha3-image"}, {"in_image", w.has_value()}};
            if (w) {
                out["phi"] = cochain_to_json(w->phi);
                out["g"] = cochain_to_json(w->g);
            }
            if (img_c.as_json()) std::cout << render_document(out);
            else std::cout << (w ? "in image" : "not in image") << "\n";
            return 0;
        }
        if (*suite) {
            st.skip.insert(st_skip.begin(), st_skip.end());
            st.only.insert(st_only.begin(), st_only.end());
            st.limits = st_c.limits();
            if (suite->count("--oracle-budget") == 0) st.oracle_budget = env_budget();
            const auto report = run_suite(st);
            std::cout << (st_c.as_json() ? render_document(report_to_json(report, st_timing))
                                         : report_to_text(report, st_timing));
            return report.passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error (internal): " << e.what() << "\n";
        return 4;
    }
    return 0;
}
