#include "symcoh/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

using nlohmann::json;

namespace {

[[noreturn]] void reject(const std::string& path, const std::string& msg) {
    fail(ErrorKind::validation, path + ": " + msg);
}

// Re-throws validation errors from the core validators with the document path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::validation || e.kind() == ErrorKind::invalid_parameter)
            reject(path, e.what());
        throw;
    }
}

std::int64_t as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) reject(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> as_int_matrix(const json& v, const std::string& path) {
    if (!v.is_array()) reject(path, "expected an array of arrays");
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) reject(rp, "expected an array");
        std::vector<std::int64_t> r;
        for (std::size_t j = 0; j < row.size(); ++j) r.push_back(as_int(row[j], rp + "[" + std::to_string(j) + "]"));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::int64_t> split_ints(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(ErrorKind::validation, what + ": malformed integer list '" + s + "'");
        }
    }
    if (out.empty()) fail(ErrorKind::validation, what + ": empty integer list");
    return out;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::validation, "cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::validation, path + ": malformed JSON: " + e.what());
    }
}

FiniteGroup group_from_json(const json& doc, const std::string& path) {
    if (!doc.is_object()) reject(path, "group document must be an object");
    if (doc.contains("cyclic")) {
        auto n = as_int(doc["cyclic"], path + ".cyclic");
        if (n < 1) reject(path + ".cyclic", "order must be positive");
        return build_cyclic(static_cast<std::size_t>(n));
    }
    if (doc.contains("symmetric")) {
        auto n = as_int(doc["symmetric"], path + ".symmetric");
        return at_path(path + ".symmetric", [&] { return build_symmetric(static_cast<std::size_t>(n)); });
    }
    if (doc.contains("product")) {
        const auto& p = doc["product"];
        if (!p.is_array() || p.size() != 2) reject(path + ".product", "expected exactly two factor groups");
        auto a = group_from_json(p[0], path + ".product[0]");
        auto b = group_from_json(p[1], path + ".product[1]");
        return direct_product(a, b);
    }
    if (doc.contains("table")) {
        auto t = as_int_matrix(doc["table"], path + ".table");
        std::string name = doc.value("name", std::string("table"));
        return at_path(path + ".table", [&] { return validate_group(t, name); });
    }
    reject(path, "group document needs one of 'cyclic', 'symmetric', 'product', 'table'");
}

GModule module_from_json(const FiniteGroup& g, const json& doc, const std::string& path) {
    if (!doc.is_object()) reject(path, "module document must be an object");
    if (!doc.contains("exponents") || !doc["exponents"].is_array()) reject(path + ".exponents", "missing exponent list");
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < doc["exponents"].size(); ++i)
        exps.push_back(as_int(doc["exponents"][i], path + ".exponents[" + std::to_string(i) + "]"));
    at_path(path + ".exponents", [&] { return trivial_module(g, exps); });
    const json action = doc.value("action", json("trivial"));
    const std::string ap = path + ".action";
    if (action.is_string()) {
        auto kind = action.get<std::string>();
        if (kind == "trivial") return at_path(ap, [&] { return trivial_module(g, exps); });
        if (kind == "sign") {
            if (exps.size() != 1) reject(ap, "sign action needs exactly one exponent");
            return at_path(ap, [&] { return sign_module(g, exps[0]); });
        }
        reject(ap, "unknown action '" + kind + "'");
    }
    if (!action.is_object()) reject(ap, "expected a string or an object");
    if (action.contains("element_matrices")) {
        const auto& em = action["element_matrices"];
        if (!em.is_array()) reject(ap + ".element_matrices", "expected an array of matrices");
        std::vector<IntSquare> mats;
        for (std::size_t x = 0; x < em.size(); ++x)
            mats.push_back(as_int_matrix(em[x], ap + ".element_matrices[" + std::to_string(x) + "]"));
        return at_path(ap, [&] { return validate_module(g, exps, mats); });
    }
    if (action.contains("generator_matrices")) {
        const auto& gm = action["generator_matrices"];
        if (!gm.is_object()) reject(ap + ".generator_matrices", "expected an object keyed by element index");
        std::map<Element, IntSquare> mats;
        for (auto it = gm.begin(); it != gm.end(); ++it) {
            std::string kp = ap + ".generator_matrices." + it.key();
            std::size_t used = 0;
            long idx = -1;
            try {
                idx = std::stol(it.key(), &used);
            } catch (const std::exception&) {
            }
            if (idx < 0 || used != it.key().size()) reject(kp, "key must be an element index");
            mats[static_cast<Element>(idx)] = as_int_matrix(it.value(), kp);
        }
        return at_path(ap, [&] { return module_from_generators(g, exps, mats); });
    }
    reject(ap, "action object needs 'element_matrices' or 'generator_matrices'");
}

json group_to_json(const FiniteGroup& g) {
    json t = json::array();
    for (auto& row : g.table_rows()) t.push_back(row);
    return json{{"name", g.name()}, {"table", t}};
}

json module_to_json(const GModule& m) {
    json doc{{"exponents", m.exponents()}};
    if (m.trivial_action()) {
        doc["action"] = "trivial";
    } else {
        json mats = json::array();
        for (Element x = 0; x < m.group().order(); ++x) mats.push_back(m.action_matrix(x));
        doc["action"] = json{{"element_matrices", mats}};
    }
    return doc;
}

FiniteGroup parse_group_spec(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(ErrorKind::validation, std::string("inline group: malformed JSON: ") + e.what());
        }
        return group_from_json(doc);
    }
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        auto kind = text.substr(0, colon);
        auto args = split_ints(text.substr(colon + 1), "group '" + text + "'");
        if (kind == "cyclic" && args.size() == 1) {
            if (args[0] < 1) fail(ErrorKind::validation, "group '" + text + "': order must be positive");
            return build_cyclic(static_cast<std::size_t>(args[0]));
        }
        if (kind == "symmetric" && args.size() == 1) return at_path("group '" + text + "'", [&] {
            return build_symmetric(static_cast<std::size_t>(args[0]));
        });
        if (kind == "product") {
            for (auto a : args)
                if (a < 1) fail(ErrorKind::validation, "group '" + text + "': orders must be positive");
            FiniteGroup g = build_cyclic(static_cast<std::size_t>(args[0]));
            for (std::size_t i = 1; i < args.size(); ++i) g = direct_product(g, build_cyclic(static_cast<std::size_t>(args[i])));
            return g;
        }
        fail(ErrorKind::validation, "unknown group shorthand '" + text + "'");
    }
    return group_from_json(load_json_file(text), text + ": $");
}

GModule parse_module_spec(const FiniteGroup& g, const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(ErrorKind::validation, std::string("inline module: malformed JSON: ") + e.what());
        }
        return module_from_json(g, doc);
    }
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        auto kind = text.substr(0, colon);
        auto args = split_ints(text.substr(colon + 1), "module '" + text + "'");
        auto where = "module '" + text + "'";
        if (kind == "trivial") return at_path(where, [&] { return trivial_module(g, args); });
        if (kind == "sign" && args.size() == 1) return at_path(where, [&] { return sign_module(g, args[0]); });
        fail(ErrorKind::validation, "unknown module shorthand '" + text + "'");
    }
    return module_from_json(g, load_json_file(text), text + ": $");
}

}  // namespace symcoh
