#include "symcoh/crossed.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "symcoh/algebra_io.hpp"
#include "symcoh/error.hpp"
#include "symcoh/modular.hpp"

namespace symcoh {

using nlohmann::json;

namespace {

[[noreturn]] void reject(const std::string& msg) { fail(ErrorKind::validation, msg); }

std::string pair_str(std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ")";
    return os.str();
}

ModuleElement unit_vector(const GModule& m, std::size_t i) {
    ModuleElement e(m.rank(), 0);
    e[i] = 1;
    return e;
}

Element power(const FiniteGroup& g, Element a, std::int64_t e) {
    Element r = FiniteGroup::identity;
    for (std::int64_t i = 0; i < e; ++i) r = g.mul(r, a);
    return r;
}

// Table of M as an additive group, elements in index_of order.
FiniteGroup module_as_group(const GModule& m) {
    const std::size_t n = m.cardinality();
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = static_cast<std::int64_t>(m.index_of(m.add(m.element_at(a), m.element_at(b))));
    std::ostringstream name;
    for (std::size_t i = 0; i < m.rank(); ++i) name << (i ? "x" : "") << "Z/" << m.exponents()[i];
    return validate_group(t, m.rank() ? name.str() : "1");
}

}  // namespace

std::optional<ModuleElement> CrossedExtension::iota_inverse(Element t) const {
    const auto idx = iota_inv_[t];
    if (idx < 0) return std::nullopt;
    return data_.m.element_at(static_cast<std::size_t>(idx));
}

std::optional<Element> CrossedExtension::least_boundary_preimage(Element r) const {
    if (boundary_pre_[r] < 0) return std::nullopt;
    return static_cast<Element>(boundary_pre_[r]);
}

CrossedExtension validate_crossed_extension(CrossedExtensionData data) {
    const FiniteGroup &T = data.t, &R = data.r, &G = data.g;
    const GModule& M = data.m;
    const std::size_t nt = T.order(), nr = R.order(), ng = G.order(), k = M.rank();

    if (!(M.group() == G)) reject("M: module is not over the group G");
    if (data.boundary.size() != nt) reject("boundary: expected " + std::to_string(nt) + " entries");
    for (std::size_t t = 0; t < nt; ++t)
        if (data.boundary[t] >= nr) reject("boundary[" + std::to_string(t) + "]: index out of range");
    if (data.raction.size() != nr) reject("raction: expected " + std::to_string(nr) + " rows");
    for (std::size_t r = 0; r < nr; ++r) {
        if (data.raction[r].size() != nt) reject("raction[" + std::to_string(r) + "]: expected " + std::to_string(nt) + " entries");
        for (std::size_t t = 0; t < nt; ++t)
            if (data.raction[r][t] >= nt)
                reject("raction[" + std::to_string(r) + "][" + std::to_string(t) + "]: index out of range");
    }
    if (data.pi.size() != nr) reject("pi: expected " + std::to_string(nr) + " entries");
    for (std::size_t r = 0; r < nr; ++r)
        if (data.pi[r] >= ng) reject("pi[" + std::to_string(r) + "]: index out of range");
    if (data.iota.size() != k) reject("iota: expected one T element per generator of M (" + std::to_string(k) + ")");
    for (std::size_t i = 0; i < k; ++i)
        if (data.iota[i] >= nt) reject("iota[" + std::to_string(i) + "]: index out of range");

    const auto& bd = data.boundary;
    const auto& ra = data.raction;
    for (Element a = 0; a < nt; ++a)
        for (Element b = 0; b < nt; ++b)
            if (bd[T.mul(a, b)] != R.mul(bd[a], bd[b]))
                reject("boundary: non-homomorphism at " + pair_str(a, b));

    for (Element t = 0; t < nt; ++t)
        if (ra[0][t] != t) reject("raction[0]: identity of R does not act trivially (witness t = " + std::to_string(t) + ")");
    for (Element r = 0; r < nr; ++r)
        for (Element a = 0; a < nt; ++a)
            for (Element b = 0; b < nt; ++b)
                if (ra[r][T.mul(a, b)] != T.mul(ra[r][a], ra[r][b]))
                    reject("raction[" + std::to_string(r) + "]: not an automorphism of T at " + pair_str(a, b));
    for (Element r = 0; r < nr; ++r)
        for (Element q = 0; q < nr; ++q)
            for (Element t = 0; t < nt; ++t)
                if (ra[R.mul(r, q)][t] != ra[r][ra[q][t]])
                    reject("raction: not an action, (rq)t != r(qt) at r, q = " + pair_str(r, q) +
                           ", t = " + std::to_string(t));

    for (Element r = 0; r < nr; ++r)
        for (Element t = 0; t < nt; ++t)
            if (bd[ra[r][t]] != R.mul(R.mul(r, bd[t]), R.inv(r)))
                reject("raction: equivariance violated, boundary(r t) != r boundary(t) r^-1 at (r, t) = " +
                       pair_str(r, t));
    for (Element t = 0; t < nt; ++t)
        for (Element s = 0; s < nt; ++s)
            if (ra[bd[t]][s] != T.mul(T.mul(t, s), T.inv(t)))
                reject("raction: Peiffer identity violated at (t, s) = " + pair_str(t, s));

    // iota on generators, then on all of M
    for (std::size_t i = 0; i < k; ++i) {
        if (power(T, data.iota[i], M.exponents()[i]) != FiniteGroup::identity)
            reject("iota[" + std::to_string(i) + "]: order of the image does not divide " +
                   std::to_string(M.exponents()[i]));
        for (std::size_t j = 0; j < i; ++j)
            if (T.mul(data.iota[i], data.iota[j]) != T.mul(data.iota[j], data.iota[i]))
                reject("iota: images of generators " + pair_str(j, i) + " do not commute");
    }
    CrossedExtension xe;
    xe.iota_.resize(M.cardinality());
    xe.iota_inv_.assign(nt, -1);
    for (std::size_t idx = 0; idx < M.cardinality(); ++idx) {
        const auto e = M.element_at(idx);
        Element v = FiniteGroup::identity;
        for (std::size_t i = 0; i < k; ++i) v = T.mul(v, power(T, data.iota[i], e[i]));
        xe.iota_[idx] = v;
        if (xe.iota_inv_[v] >= 0)
            reject("iota: not injective, module elements " + pair_str(static_cast<std::size_t>(xe.iota_inv_[v]), idx) +
                   " (by index) have the same image");
        xe.iota_inv_[v] = static_cast<std::int64_t>(idx);
    }
    for (Element t = 0; t < nt; ++t) {
        const bool in_kernel = bd[t] == FiniteGroup::identity;
        const bool in_image = xe.iota_inv_[t] >= 0;
        if (in_image && !in_kernel) reject("exactness at T: boundary(iota(m)) != 1 for T element " + std::to_string(t));
        if (in_kernel && !in_image) reject("exactness at T: T element " + std::to_string(t) + " lies in ker(boundary) but not in iota(M)");
    }

    for (Element a = 0; a < nr; ++a)
        for (Element b = 0; b < nr; ++b)
            if (data.pi[R.mul(a, b)] != G.mul(data.pi[a], data.pi[b]))
                reject("pi: non-homomorphism at " + pair_str(a, b));
    xe.pi_pre_.assign(ng, {});
    for (Element r = 0; r < nr; ++r) xe.pi_pre_[data.pi[r]].push_back(r);
    for (Element x = 0; x < ng; ++x)
        if (xe.pi_pre_[x].empty()) reject("pi: not surjective, G element " + std::to_string(x) + " has no preimage");
    xe.boundary_pre_.assign(nr, -1);
    for (Element t = nt; t-- > 0;) xe.boundary_pre_[bd[t]] = t;
    for (Element r = 0; r < nr; ++r) {
        const bool in_image = xe.boundary_pre_[r] >= 0;
        const bool in_kernel = data.pi[r] == FiniteGroup::identity;
        if (in_image != in_kernel)
            reject("exactness at R: element " + std::to_string(r) + (in_image ? " lies in im(boundary) but not in ker(pi)"
                                                                              : " lies in ker(pi) but not in im(boundary)"));
    }

    for (Element r = 0; r < nr; ++r)
        for (std::size_t i = 0; i < k; ++i) {
            const auto expected = xe.iota_[M.index_of(M.act(data.pi[r], unit_vector(M, i)))];
            if (ra[r][data.iota[i]] != expected)
                reject("action mismatch: R element " + std::to_string(r) + " acts on iota(e_" + std::to_string(i) +
                       ") differently from G element " + std::to_string(data.pi[r]) + " on M");
        }

    xe.data_ = std::move(data);
    return xe;
}

namespace {

FiniteGroup group_field(const json& doc, const std::string& key, const std::string& base_dir) {
    const std::string path = "$." + key;
    if (!doc.contains(key)) reject(path + ": missing group");
    const auto& v = doc[key];
    try {
        if (v.is_string()) {
            const auto s = v.get<std::string>();
            std::filesystem::path p(s);
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            if (std::filesystem::exists(p)) return group_from_json(load_json_file(p.string()), path);
            return parse_group_spec(s);
        }
        return group_from_json(v, path);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::validation && e.kind() != ErrorKind::invalid_parameter) throw;
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        reject(path + ": " + what);
    }
}

std::vector<Element> index_list(const json& doc, const std::string& key) {
    const std::string path = "$." + key;
    if (!doc.contains(key) || !doc[key].is_array()) reject(path + ": expected an array of element indices");
    std::vector<Element> out;
    const auto& a = doc[key];
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number_integer() || a[i].get<std::int64_t>() < 0)
            reject(path + "[" + std::to_string(i) + "]: expected a nonnegative integer");
        out.push_back(static_cast<Element>(a[i].get<std::int64_t>()));
    }
    return out;
}

}  // namespace

CrossedExtension crossed_extension_from_json(const json& doc, const std::string& base_dir) {
    if (!doc.is_object()) reject("$: crossed extension document must be an object");
    CrossedExtensionData d;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) reject("$.name: expected a string");
        d.name = doc["name"].get<std::string>();
    }
    d.t = group_field(doc, "T", base_dir);
    d.r = group_field(doc, "R", base_dir);
    d.g = group_field(doc, "G", base_dir);
    if (!doc.contains("M")) reject("$.M: missing module");
    if (doc["M"].is_string()) {
        try {
            d.m = parse_module_spec(d.g, doc["M"].get<std::string>());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::validation) throw;
            reject(std::string("$.M: ") + e.what());
        }
    } else {
        d.m = module_from_json(d.g, doc["M"], "$.M");
    }
    d.boundary = index_list(doc, "boundary");
    d.pi = index_list(doc, "pi");
    d.iota = index_list(doc, "iota");
    const json ra = doc.value("raction", json("trivial"));
    if (ra.is_string()) {
        if (ra.get<std::string>() != "trivial") reject("$.raction: expected \"trivial\" or a table");
        std::vector<Element> id(d.t.order());
        std::iota(id.begin(), id.end(), Element{0});
        d.raction.assign(d.r.order(), id);
    } else {
        if (!ra.is_array()) reject("$.raction: expected \"trivial\" or an array of rows");
        for (std::size_t r = 0; r < ra.size(); ++r) {
            const std::string rp = "$.raction[" + std::to_string(r) + "]";
            if (!ra[r].is_array()) reject(rp + ": expected an array");
            std::vector<Element> row;
            for (std::size_t t = 0; t < ra[r].size(); ++t) {
                if (!ra[r][t].is_number_integer() || ra[r][t].get<std::int64_t>() < 0)
                    reject(rp + "[" + std::to_string(t) + "]: expected a nonnegative integer");
                row.push_back(static_cast<Element>(ra[r][t].get<std::int64_t>()));
            }
            d.raction.push_back(std::move(row));
        }
    }
    try {
        return validate_crossed_extension(std::move(d));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::validation) throw;
        reject(std::string("$.") + e.what());
    }
}

json crossed_extension_to_json(const CrossedExtension& xe) {
    const auto& d = xe.data();
    return json{{"name", d.name},         {"T", group_to_json(d.t)},     {"R", group_to_json(d.r)},
                {"G", group_to_json(d.g)}, {"M", module_to_json(d.m)},    {"boundary", d.boundary},
                {"pi", d.pi},             {"raction", d.raction},         {"iota", d.iota}};
}

CrossedExtension cyclic_crossed_extension(std::int64_t p, std::int64_t twist) {
    if (p < 2) fail(ErrorKind::invalid_parameter, "cyclic crossed extension needs p >= 2");
    const std::int64_t q = p * p;
    CrossedExtensionData d;
    d.name = "Z/" + std::to_string(q) + " -> Z/" + std::to_string(q) + (twist == 1 ? "" : " twisted by " + std::to_string(twist));
    d.t = build_cyclic(static_cast<std::size_t>(q));
    d.r = build_cyclic(static_cast<std::size_t>(q));
    d.g = build_cyclic(static_cast<std::size_t>(p));
    d.m = trivial_module(d.g, {p});
    for (std::int64_t t = 0; t < q; ++t) d.boundary.push_back(static_cast<Element>((p * t) % q));
    for (std::int64_t r = 0; r < q; ++r) d.pi.push_back(static_cast<Element>(r % p));
    std::int64_t w = 1;
    for (std::int64_t r = 0; r < q; ++r) {
        std::vector<Element> row;
        for (std::int64_t t = 0; t < q; ++t) row.push_back(static_cast<Element>(floor_mod(w * t, q)));
        d.raction.push_back(std::move(row));
        w = floor_mod(w * twist, q);
    }
    d.iota = {static_cast<Element>(p)};
    return validate_crossed_extension(std::move(d));
}

CrossedExtension trivial_crossed_extension(const GModule& m) {
    CrossedExtensionData d;
    d.name = "trivial extension of " + m.group().name();
    d.t = module_as_group(m);
    d.r = m.group();
    d.g = m.group();
    d.m = m;
    d.boundary.assign(d.t.order(), FiniteGroup::identity);
    for (Element r = 0; r < d.r.order(); ++r) {
        d.pi.push_back(r);
        std::vector<Element> row;
        for (std::size_t t = 0; t < d.t.order(); ++t)
            row.push_back(static_cast<Element>(m.index_of(m.act(r, m.element_at(t)))));
        d.raction.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < m.rank(); ++i) d.iota.push_back(static_cast<Element>(m.index_of(unit_vector(m, i))));
    return validate_crossed_extension(std::move(d));
}

CrossedExtension relabel_crossed_extension(const CrossedExtension& xe, const std::vector<Element>& t_perm,
                                           const std::vector<Element>& r_perm) {
    const auto& d = xe.data();
    CrossedExtensionData n;
    n.name = d.name + " (relabeled)";
    n.t = relabel(d.t, t_perm);
    n.r = relabel(d.r, r_perm);
    n.g = d.g;
    n.m = d.m;
    n.boundary.resize(d.boundary.size());
    n.pi.resize(d.pi.size());
    n.raction.assign(d.raction.size(), std::vector<Element>(d.t.order()));
    for (Element t = 0; t < d.t.order(); ++t) n.boundary[t_perm[t]] = r_perm[d.boundary[t]];
    for (Element r = 0; r < d.r.order(); ++r) {
        n.pi[r_perm[r]] = d.pi[r];
        for (Element t = 0; t < d.t.order(); ++t) n.raction[r_perm[r]][t_perm[t]] = t_perm[d.raction[r][t]];
    }
    for (auto e : d.iota) n.iota.push_back(t_perm[e]);
    return validate_crossed_extension(std::move(n));
}

// ---------------------------------------------------------------------------
// s-sections

namespace {

bool weakly_symmetric_shape(const CrossedExtension& xe, const SSection& sec) {
    const auto &G = xe.g(), &R = xe.r();
    const std::size_t q = G.order();
    for (Element x = 0; x < q; ++x) {
        if (sec.s[G.inv(x)] != R.inv(sec.s[x])) return false;
        if (sec.sig(q, x, G.inv(x)) != FiniteGroup::identity) return false;
    }
    return true;
}

bool def44_identities(const CrossedExtension& xe, const SSection& sec) {
    const auto &G = xe.g(), &T = xe.t();
    const std::size_t q = G.order();
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element xy = G.mul(x, y);
            if (T.mul(sec.sig(q, x, y), xe.act(sec.s[x], sec.sig(q, G.inv(x), xy))) != FiniteGroup::identity)
                return false;
            if (T.mul(sec.sig(q, x, y), sec.sig(q, xy, G.inv(y))) != FiniteGroup::identity) return false;
        }
    return true;
}

std::vector<Element> least_sigma(const CrossedExtension& xe, const std::vector<Element>& s) {
    const auto &G = xe.g(), &R = xe.r();
    const std::size_t q = G.order();
    std::vector<Element> sigma(q * q);
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element target = R.mul(R.mul(s[x], s[y]), R.inv(s[G.mul(x, y)]));
            auto t = xe.least_boundary_preimage(target);
            if (!t) fail(ErrorKind::internal_inconsistency, "s(x)s(y)s(xy)^-1 outside im(boundary)");
            sigma[x * q + y] = *t;
        }
    return sigma;
}

}  // namespace

SSection classify_section(const CrossedExtension& xe, std::vector<Element> s, std::vector<Element> sigma) {
    const auto &G = xe.g(), &R = xe.r(), &T = xe.t();
    const std::size_t q = G.order();
    if (s.size() != q) reject("section: s needs one entry per element of G");
    if (sigma.size() != q * q) reject("section: sigma needs |G|^2 entries");
    for (Element x = 0; x < q; ++x) {
        if (s[x] >= R.order()) reject("section: s[" + std::to_string(x) + "] out of range");
        if (xe.pi(s[x]) != x) reject("section: p(s(x)) != x at x = " + std::to_string(x));
    }
    for (auto t : sigma)
        if (t >= T.order()) reject("section: sigma entry out of range");
    SSection sec{std::move(s), std::move(sigma)};
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y)
            if (R.mul(sec.s[x], sec.s[y]) != R.mul(xe.boundary(sec.sig(q, x, y)), sec.s[G.mul(x, y)]))
                reject("section: s(x)s(y) != boundary(sigma(x,y)) s(xy) at " + pair_str(x, y));
    sec.normalized = sec.s[0] == FiniteGroup::identity;
    for (Element x = 0; x < q && sec.normalized; ++x)
        sec.normalized = sec.sig(q, 0, x) == FiniteGroup::identity && sec.sig(q, x, 0) == FiniteGroup::identity;
    sec.weakly_symmetric = sec.normalized && weakly_symmetric_shape(xe, sec);
    sec.symmetric = sec.weakly_symmetric && def44_identities(xe, sec);
    return sec;
}

SSection normalised_section(const CrossedExtension& xe) {
    const std::size_t q = xe.g().order();
    std::vector<Element> s(q);
    for (Element x = 0; x < q; ++x) s[x] = x == 0 ? FiniteGroup::identity : xe.least_pi_preimage(x);
    auto sigma = least_sigma(xe, s);
    auto sec = classify_section(xe, std::move(s), std::move(sigma));
    if (!sec.normalized) fail(ErrorKind::internal_inconsistency, "constructed section is not normalized");
    return sec;
}

std::vector<SSection> sample_normalized_sections(const CrossedExtension& xe, std::size_t count, std::uint64_t seed,
                                                 bool weak_shape) {
    const auto &G = xe.g(), &T = xe.t(), &R = xe.r();
    const GModule& M = xe.m();
    const std::size_t q = G.order(), mc = M.cardinality();
    std::vector<Element> free_x;  // elements whose s-value is chosen
    if (weak_shape) {
        const auto census = order_two_census(G);
        if (census.has_order_two)
            reject("two-torsion present: element " + std::to_string(census.witness) + " of G has order 2");
        for (auto [x, xi] : census.pairing) free_x.push_back(x);
    } else {
        for (Element x = 1; x < q; ++x) free_x.push_back(x);
    }
    std::vector<std::pair<Element, Element>> free_pairs;  // sigma corrections
    for (Element x = 1; x < q; ++x)
        for (Element y = 1; y < q; ++y)
            if (!weak_shape || y != G.inv(x)) free_pairs.emplace_back(x, y);
    std::vector<std::size_t> radices;
    for (auto x : free_x) radices.push_back(xe.pi_preimages(x).size());
    for (std::size_t i = 0; i < free_pairs.size(); ++i) radices.push_back(mc);
    long double total = 1;
    for (auto r : radices) total *= static_cast<long double>(r);
    const bool all = total <= static_cast<long double>(count);
    const std::size_t n = all ? static_cast<std::size_t>(total) : count;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> digit(radices.size(), 0);
    std::vector<SSection> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (all) {
            std::size_t rest = k;
            for (std::size_t i = radices.size(); i-- > 0;) {
                digit[i] = rest % radices[i];
                rest /= radices[i];
            }
        } else {
            for (std::size_t i = 0; i < radices.size(); ++i) digit[i] = rng() % radices[i];
        }
        std::vector<Element> s(q, FiniteGroup::identity);
        for (std::size_t i = 0; i < free_x.size(); ++i) {
            s[free_x[i]] = xe.pi_preimages(free_x[i])[digit[i]];
            if (weak_shape) s[G.inv(free_x[i])] = R.inv(s[free_x[i]]);
        }
        auto sigma = least_sigma(xe, s);
        for (std::size_t i = 0; i < free_pairs.size(); ++i) {
            const auto [x, y] = free_pairs[i];
            sigma[x * q + y] = T.mul(sigma[x * q + y], xe.iota(M.element_at(digit[free_x.size() + i])));
        }
        out.push_back(classify_section(xe, std::move(s), std::move(sigma)));
    }
    return out;
}

SSection weakly_symmetric_section(const CrossedExtension& xe) {
    const auto& G = xe.g();
    const auto census = order_two_census(G);
    if (census.has_order_two)
        reject("two-torsion present: element " + std::to_string(census.witness) + " of G has order 2");
    std::vector<Element> s(G.order(), FiniteGroup::identity);
    for (auto [x, xi] : census.pairing) {
        s[x] = xe.least_pi_preimage(x);
        s[xi] = xe.r().inv(s[x]);
    }
    auto sigma = least_sigma(xe, s);
    auto sec = classify_section(xe, std::move(s), std::move(sigma));
    if (!sec.weakly_symmetric) fail(ErrorKind::internal_inconsistency, "constructed section is not weakly symmetric");
    return sec;
}

Cochain three_cocycle(const CrossedExtension& xe, const SSection& sec) {
    if (!sec.normalized) reject("three_cocycle needs a normalized section");
    const auto &G = xe.g(), &T = xe.t();
    const GModule& M = xe.m();
    const std::size_t q = G.order();
    Cochain f = zero_cochain(M, 3, Limits{~std::size_t{0}, 64});
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y)
            for (Element z = 0; z < q; ++z) {
                Element v = xe.act(sec.s[x], sec.sig(q, y, z));
                v = T.mul(v, sec.sig(q, x, G.mul(y, z)));
                v = T.mul(v, T.inv(sec.sig(q, G.mul(x, y), z)));
                v = T.mul(v, T.inv(sec.sig(q, x, y)));
                auto m = xe.iota_inverse(v);
                if (!m) fail(ErrorKind::internal_inconsistency, "3-cocycle value outside ker(boundary)");
                f.set(M, encode_tuple(q, {x, y, z}), *m);
            }
    if (!is_normalized(G, f, M.rank()) || !coboundary(M, f, Limits{~std::size_t{0}, 64}).is_zero())
        fail(ErrorKind::internal_inconsistency, "3-cocycle of a section is not a normalized cocycle");
    return f;
}

bool prop41_check(const CrossedExtension& xe, const SSection& sec) {
    if (!sec.normalized) reject("prop41_check needs a normalized section");
    const auto &G = xe.g(), &T = xe.t();
    const std::size_t q = G.order();
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element xi = G.inv(x), yi = G.inv(y);
            const Element lhs1 = T.mul(xe.act(sec.s[x], sec.sig(q, xi, y)), sec.sig(q, x, G.mul(xi, y)));
            if (lhs1 != sec.sig(q, x, xi)) return false;
            const Element lhs2 = T.mul(sec.sig(q, x, y), sec.sig(q, G.mul(x, y), yi));
            if (lhs2 != xe.act(sec.s[x], sec.sig(q, y, yi))) return false;
        }
    return true;
}

bool def44_check(const CrossedExtension& xe, const SSection& sec) {
    return sec.normalized && weakly_symmetric_shape(xe, sec) && def44_identities(xe, sec);
}

const char* to_string(SearchStatus s) noexcept {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

// Corrections c in C^2(G, M) turning sigma0 into a symmetric sigma for fixed s.
std::optional<std::vector<Element>> solve_corrections(const CrossedExtension& xe, const std::vector<Element>& s,
                                                      const std::vector<Element>& sigma0) {
    const auto &G = xe.g(), &T = xe.t();
    const GModule& M = xe.m();
    const std::size_t q = G.order(), k = M.rank();
    const zn::Ring ring(static_cast<std::uint64_t>(M.exponent()));

    // unknowns: pairs (x, y) with x, y != 1 and y != x^-1
    std::vector<std::int64_t> var_of(q * q, -1);
    std::vector<std::pair<Element, Element>> vars;
    for (Element x = 1; x < q; ++x)
        for (Element y = 1; y < q; ++y)
            if (y != G.inv(x)) {
                var_of[x * q + y] = static_cast<std::int64_t>(vars.size());
                vars.emplace_back(x, y);
            }
    const std::size_t width = 2 * q * q * k;
    std::vector<std::map<std::uint32_t, std::int64_t>> cols(vars.size() * k);
    zn::Vector target(width, 0);
    auto eq_index = [&](std::size_t type, Element x, Element y, std::size_t i) {
        return static_cast<std::uint32_t>(((type * q + x) * q + y) * k + i);
    };
    auto add_identity = [&](std::size_t type, Element x, Element y, Element u, Element v) {
        const auto var = var_of[u * q + v];
        if (var < 0) return;
        for (std::size_t j = 0; j < k; ++j) cols[static_cast<std::size_t>(var) * k + j][eq_index(type, x, y, j)] += 1;
    };
    auto add_action = [&](std::size_t type, Element x, Element y, Element g, Element u, Element v) {
        const auto var = var_of[u * q + v];
        if (var < 0) return;
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) {
                const auto a = M.action_entry(g, i, j);
                if (a != 0) cols[static_cast<std::size_t>(var) * k + j][eq_index(type, x, y, i)] += a;
            }
    };
    auto set_target = [&](std::size_t type, Element x, Element y, Element t) {
        auto m = xe.iota_inverse(t);
        if (!m) fail(ErrorKind::internal_inconsistency, "symmetry defect outside ker(boundary)");
        for (std::size_t i = 0; i < k; ++i) target[eq_index(type, x, y, i)] = ring.from_signed(-(*m)[i]);
    };
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element xi = G.inv(x), xy = G.mul(x, y), yi = G.inv(y);
            // c(x,y) + x c(x^-1, xy) = -P1
            add_identity(0, x, y, x, y);
            add_action(0, x, y, x, xi, xy);
            set_target(0, x, y, T.mul(sigma0[x * q + y], xe.act(s[x], sigma0[xi * q + xy])));
            // c(x,y) + c(xy, y^-1) = -P2
            add_identity(1, x, y, x, y);
            add_identity(1, x, y, xy, yi);
            set_target(1, x, y, T.mul(sigma0[x * q + y], sigma0[xy * q + yi]));
        }
    std::vector<zn::SparseVector> gens;
    gens.reserve(cols.size());
    for (auto& c : cols) {
        zn::SparseVector v;
        for (auto [i, a] : c) {
            const auto r = ring.from_signed(a);
            if (r) v.emplace_back(i, r);
        }
        gens.push_back(std::move(v));
    }
    std::vector<zn::SparseVector> rel;
    for (std::size_t e = 0; e < 2 * q * q; ++e)
        for (std::size_t i = 0; i < k; ++i)
            if (M.exponents()[i] != M.exponent())
                rel.push_back({{static_cast<std::uint32_t>(e * k + i), static_cast<zn::Residue>(M.exponents()[i])}});
    auto y = zn::solve(ring, width, gens, rel, target);
    if (!y) return std::nullopt;
    std::vector<Element> sigma = sigma0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        ModuleElement c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = floor_mod((*y)[v * k + i], M.exponents()[i]);
        auto [a, b] = vars[v];
        sigma[a * q + b] = T.mul(sigma0[a * q + b], xe.iota(c));
    }
    return sigma;
}

}  // namespace

SectionSearch find_symmetric_section(const CrossedExtension& xe, std::size_t budget) {
    const auto &G = xe.g(), &R = xe.r();
    const std::size_t q = G.order();
    SectionSearch out;
    out.out_of_theorem_scope = order_two_census(G).has_order_two;

    // slots: one per pair {x, x^-1} (x the smaller index) and per involution
    std::vector<Element> slot_elem;
    std::vector<std::vector<Element>> slot_choices;
    for (Element x = 1; x < q; ++x) {
        const Element xi = G.inv(x);
        if (xi < x) continue;
        std::vector<Element> choices;
        for (auto r : xe.pi_preimages(x))
            if (xi != x || R.mul(r, r) == FiniteGroup::identity) choices.push_back(r);
        if (choices.empty()) {
            out.status = SearchStatus::none;
            return out;
        }
        slot_elem.push_back(x);
        slot_choices.push_back(std::move(choices));
    }
    std::size_t total = 1;
    bool saturated = false;
    for (auto& c : slot_choices) {
        if (total > std::numeric_limits<std::size_t>::max() / c.size()) saturated = true;
        if (!saturated) total *= c.size();
    }
    out.s_choices_total = saturated ? std::numeric_limits<std::size_t>::max() : total;

    std::vector<std::size_t> digit(slot_elem.size(), 0);
    for (;;) {
        if (out.s_choices_examined >= budget) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        ++out.s_choices_examined;
        std::vector<Element> s(q, FiniteGroup::identity);
        for (std::size_t i = 0; i < slot_elem.size(); ++i) {
            const Element x = slot_elem[i], r = slot_choices[i][digit[i]];
            s[x] = r;
            s[G.inv(x)] = R.inv(r);
        }
        const auto sigma0 = least_sigma(xe, s);
        if (auto sigma = solve_corrections(xe, s, sigma0)) {
            auto sec = classify_section(xe, std::move(s), std::move(*sigma));
            if (!sec.symmetric) fail(ErrorKind::internal_inconsistency, "solved section is not symmetric");
            out.status = SearchStatus::found;
            out.section = std::move(sec);
            return out;
        }
        // next choice, last slot fastest
        std::size_t i = slot_elem.size();
        while (i > 0) {
            --i;
            if (++digit[i] < slot_choices[i].size()) break;
            digit[i] = 0;
            if (i == 0) {
                out.status = SearchStatus::none;
                return out;
            }
        }
        if (slot_elem.empty()) {
            out.status = SearchStatus::none;
            return out;
        }
    }
}

// ---------------------------------------------------------------------------
// group extensions

void validate_group_extension(const GroupExtension& ext) {
    const auto& K = ext.k;
    const GModule& M = ext.m;
    const auto& G = M.group();
    const std::size_t nk = K.order(), nm = M.cardinality();
    if (ext.i.size() != nm) reject("extension: i needs one entry per module element");
    if (ext.p.size() != nk) reject("extension: p needs one entry per element of K");
    for (auto v : ext.i)
        if (v >= nk) reject("extension: i entry out of range");
    for (auto v : ext.p)
        if (v >= G.order()) reject("extension: p entry out of range");
    for (std::size_t a = 0; a < nm; ++a)
        for (std::size_t b = 0; b < nm; ++b)
            if (ext.i[M.index_of(M.add(M.element_at(a), M.element_at(b)))] != K.mul(ext.i[a], ext.i[b]))
                reject("extension: i is not a homomorphism at " + pair_str(a, b));
    std::vector<char> hit(nk, 0);
    for (auto v : ext.i) {
        if (hit[v]) reject("extension: i is not injective");
        hit[v] = 1;
    }
    for (Element a = 0; a < nk; ++a)
        for (Element b = 0; b < nk; ++b)
            if (ext.p[K.mul(a, b)] != G.mul(ext.p[a], ext.p[b])) reject("extension: p is not a homomorphism at " + pair_str(a, b));
    std::vector<char> onto(G.order(), 0);
    for (Element a = 0; a < nk; ++a) {
        onto[ext.p[a]] = 1;
        if ((ext.p[a] == FiniteGroup::identity) != static_cast<bool>(hit[a]))
            reject("extension: not exact at K (element " + std::to_string(a) + ")");
    }
    for (Element x = 0; x < G.order(); ++x)
        if (!onto[x]) reject("extension: p is not surjective");
    for (Element a = 0; a < nk; ++a)
        for (std::size_t m = 0; m < nm; ++m) {
            const Element lhs = K.mul(K.mul(a, ext.i[m]), K.inv(a));
            const Element rhs = ext.i[M.index_of(M.act(ext.p[a], M.element_at(m)))];
            if (lhs != rhs) reject("extension: k i(m) k^-1 != i(p(k) m) at " + pair_str(a, m));
        }
}

GroupExtension extension_from_2cocycle(const GModule& m, const Cochain& f) {
    const auto& G = m.group();
    const std::size_t q = G.order(), nm = m.cardinality();
    if (f.degree != 2 || f.values.size() != q * q * m.rank()) reject("extension needs a 2-cochain over the module");
    if (!is_normalized(G, f, m.rank())) reject("2-cochain is not normalized");
    const auto df = coboundary(m, f);
    for (std::size_t idx = 0; idx < q * q * q; ++idx)
        if (!m.is_zero(df.at(m, idx))) {
            auto t = decode_tuple(q, 3, idx);
            reject("not a cocycle: associativity of the twisted product fails at (" + std::to_string(t[0]) + ", " +
                   std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
        }
    const std::size_t nk = nm * q;
    std::vector<std::vector<std::int64_t>> table(nk, std::vector<std::int64_t>(nk));
    for (std::size_t ai = 0; ai < nm; ++ai)
        for (Element x = 0; x < q; ++x)
            for (std::size_t bi = 0; bi < nm; ++bi)
                for (Element y = 0; y < q; ++y) {
                    auto c = m.add(m.add(m.element_at(ai), m.act(x, m.element_at(bi))), f.at(m, x * q + y));
                    table[ai * q + x][bi * q + y] = static_cast<std::int64_t>(m.index_of(c) * q + G.mul(x, y));
                }
    GroupExtension ext{validate_group(table, "twisted product"), m, {}, {}};
    for (std::size_t a = 0; a < nm; ++a) ext.i.push_back(static_cast<Element>(a * q));
    for (std::size_t kx = 0; kx < nk; ++kx) ext.p.push_back(static_cast<Element>(kx % q));
    validate_group_extension(ext);
    return ext;
}

Cochain recovered_2cocycle(const GroupExtension& ext, const std::vector<Element>& section) {
    const auto& K = ext.k;
    const GModule& M = ext.m;
    const auto& G = M.group();
    const std::size_t q = G.order();
    std::vector<std::int64_t> i_inv(K.order(), -1);
    for (std::size_t a = 0; a < ext.i.size(); ++a) i_inv[ext.i[a]] = static_cast<std::int64_t>(a);
    Cochain f = zero_cochain(M, 2);
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element v = K.mul(K.mul(section[x], section[y]), K.inv(section[G.mul(x, y)]));
            if (i_inv[v] < 0) reject("not a section: s(x)s(y)s(xy)^-1 outside i(M)");
            f.set(M, x * q + y, M.element_at(static_cast<std::size_t>(i_inv[v])));
        }
    return f;
}

std::optional<std::vector<Element>> symmetric_section_search_2d(const GroupExtension& ext, std::size_t max_order) {
    const auto& K = ext.k;
    const auto& G = ext.m.group();
    if (K.order() > max_order) fail(ErrorKind::size_guard, "extension group too large for section search");
    std::vector<std::vector<Element>> pre(G.order());
    for (Element a = 0; a < K.order(); ++a) pre[ext.p[a]].push_back(a);
    // s(x) and s(x^-1) constrain only each other, so slots are independent.
    std::vector<Element> s(G.order());
    std::vector<char> done(G.order(), 0);
    for (Element x = 0; x < G.order(); ++x) {
        if (done[x]) continue;
        const Element xi = G.inv(x);
        bool ok = false;
        for (auto r : pre[x]) {
            if (xi == x && K.mul(r, r) != FiniteGroup::identity) continue;
            s[x] = r;
            s[xi] = K.inv(r);
            ok = true;
            break;
        }
        if (!ok) return std::nullopt;
        done[x] = done[xi] = 1;
    }
    return s;
}

}  // namespace symcoh
