#include "symcoh/render.hpp"

#include <sstream>

#include "symcoh/algebra_io.hpp"

namespace symcoh {

using nlohmann::json;

namespace {

[[noreturn]] void reject(const std::string& msg) { fail(ErrorKind::validation, msg); }

const json& field(const json& doc, const std::string& key) {
    if (!doc.is_object() || !doc.contains(key)) reject("$." + key + ": missing");
    return doc[key];
}

std::vector<std::int64_t> int_list(const json& doc, const std::string& key) {
    const json& v = field(doc, key);
    if (!v.is_array()) reject("$." + key + ": expected an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) reject("$." + key + ": expected an array of integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

bool flag(const json& doc, const std::string& key) {
    const json& v = field(doc, key);
    if (!v.is_boolean()) reject("$." + key + ": expected a boolean");
    return v.get<bool>();
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace

json cochain_to_json(const Cochain& c) { return {{"degree", c.degree}, {"values", c.values}}; }

Cochain cochain_from_json(const GModule& m, const json& doc) {
    const json& d = field(doc, "degree");
    if (!d.is_number_unsigned()) reject("$.degree: expected a nonnegative integer");
    Cochain c;
    c.degree = d.get<std::size_t>();
    c.values = int_list(doc, "values");
    const std::size_t k = m.rank();
    if (c.values.size() != tuple_count(m.group().order(), c.degree) * k)
        reject("$.values: expected |G|^n * rank(M) = " + std::to_string(tuple_count(m.group().order(), c.degree) * k) +
               " entries");
    for (std::size_t i = 0; i < c.values.size(); ++i)
        if (c.values[i] < 0 || c.values[i] >= m.exponents()[i % k])
            reject("$.values[" + std::to_string(i) + "]: not reduced modulo " + std::to_string(m.exponents()[i % k]));
    return c;
}

json cohomology_to_json(const GModule& m, const CohomologyResult& r, bool with_representatives) {
    json doc = {{"kind", "cohomology"},
                {"group", {{"name", m.group().name()}, {"order", m.group().order()}}},
                {"module", module_to_json(m)},
                {"degree", r.degree},
                {"flavor", to_string(r.flavor)},
                {"invariants", r.invariants.factors},
                {"order", r.invariants.order().str()}};
    if (with_representatives) {
        json reps = json::array();
        for (const auto& c : r.representatives) reps.push_back(c.values);
        doc["representatives"] = reps;
    }
    return doc;
}

CohomologyResult cohomology_from_json(const GModule& m, const json& doc) {
    if (field(doc, "kind") != "cohomology") reject("$.kind: expected \"cohomology\"");
    CohomologyResult r;
    const json& d = field(doc, "degree");
    if (!d.is_number_unsigned()) reject("$.degree: expected a nonnegative integer");
    r.degree = d.get<std::size_t>();
    const json& f = field(doc, "flavor");
    if (!f.is_string()) reject("$.flavor: expected a string");
    r.flavor = parse_flavor(f.get<std::string>());
    r.invariants = AbGroupInvariants::from_cyclic_orders(int_list(doc, "invariants"));
    if (r.invariants.factors != int_list(doc, "invariants")) reject("$.invariants: not in invariant-factor form");
    if (doc.contains("representatives")) {
        const json& reps = doc["representatives"];
        if (!reps.is_array()) reject("$.representatives: expected an array");
        for (const auto& v : reps) r.representatives.push_back(cochain_from_json(m, {{"degree", r.degree}, {"values", v}}));
    }
    return r;
}

const char* map_verdict(const ComparisonReport& r) noexcept {
    if (r.injective && r.surjective) return "bijective";
    if (r.injective) return "injective";
    if (r.surjective) return "surjective";
    return "neither";
}

json comparison_to_json(const ComparisonReport& r) {
    return {{"kind", "comparison"},
            {"degree", r.degree},
            {"source", to_string(r.source)},
            {"target", to_string(r.target)},
            {"source_invariants", r.source_invariants.factors},
            {"target_invariants", r.target_invariants.factors},
            {"matrix", r.matrix},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"verdict", map_verdict(r)}};
}

ComparisonReport comparison_from_json(const json& doc) {
    if (field(doc, "kind") != "comparison") reject("$.kind: expected \"comparison\"");
    ComparisonReport r;
    const json& d = field(doc, "degree");
    if (!d.is_number_unsigned()) reject("$.degree: expected a nonnegative integer");
    r.degree = d.get<std::size_t>();
    const json &s = field(doc, "source"), &t = field(doc, "target");
    if (!s.is_string() || !t.is_string()) reject("$.source/$.target: expected flavor names");
    r.source = parse_flavor(s.get<std::string>());
    r.target = parse_flavor(t.get<std::string>());
    r.source_invariants.factors = int_list(doc, "source_invariants");
    r.target_invariants.factors = int_list(doc, "target_invariants");
    const json& mat = field(doc, "matrix");
    if (!mat.is_array()) reject("$.matrix: expected an array of rows");
    for (const auto& row : mat) {
        if (!row.is_array()) reject("$.matrix: expected an array of rows");
        std::vector<std::int64_t> v;
        for (const auto& e : row) {
            if (!e.is_number_integer()) reject("$.matrix: expected integers");
            v.push_back(e.get<std::int64_t>());
        }
        r.matrix.push_back(std::move(v));
    }
    r.injective = flag(doc, "injective");
    r.surjective = flag(doc, "surjective");
    if (field(doc, "verdict") != map_verdict(r)) reject("$.verdict: inconsistent with the injective/surjective flags");
    return r;
}

json section_to_json(const SSection& s) {
    return {{"s", s.s},
            {"sigma", s.sigma},
            {"normalized", s.normalized},
            {"weakly_symmetric", s.weakly_symmetric},
            {"symmetric", s.symmetric}};
}

std::string render_document(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_cohomology_text(const GModule& m, const CohomologyResult& r, bool with_representatives) {
    std::ostringstream os;
    os << "H^" << r.degree << "(" << m.group().name() << "; " << join(m.exponents()) << ") " << to_string(r.flavor)
       << ": " << r.invariants.to_string() << "\n";
    os << "  invariant factors: " << join(r.invariants.factors) << "\n";
    os << "  order: " << r.invariants.order().str() << "\n";
    if (with_representatives)
        for (std::size_t i = 0; i < r.representatives.size(); ++i)
            os << "  generator " << i << " (order " << r.invariants.factors[i] << "): " << join(r.representatives[i].values)
               << "\n";
    return os.str();
}

std::string render_comparison_text(const ComparisonReport& r) {
    std::ostringstream os;
    os << to_string(r.source) << " -> " << to_string(r.target) << " in degree " << r.degree << ": " << map_verdict(r)
       << "\n";
    os << "  source: " << r.source_invariants.to_string() << "\n";
    os << "  target: " << r.target_invariants.to_string() << "\n";
    for (std::size_t j = 0; j < r.matrix.size(); ++j) os << "  generator " << j << " -> " << join(r.matrix[j]) << "\n";
    return os.str();
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_parameter:
    case ErrorKind::validation: return 2;
    case ErrorKind::size_guard:
    case ErrorKind::budget_exhausted: return 3;
    case ErrorKind::internal_inconsistency: return 4;
    }
    return 4;
}

}  // namespace symcoh
