#include "symcoh/twogroup.hpp"

#include <random>
#include <sstream>

#include "symcoh/cohomology.hpp"
#include "symcoh/error.hpp"

namespace symcoh {

namespace {

[[noreturn]] void reject(const std::string& msg) { fail(ErrorKind::validation, msg); }

std::string morph_str(Morphism a) {
    std::ostringstream os;
    os << "(t=" << a.t << ", source=" << a.source << ")";
    return os.str();
}

std::size_t saturating_product(const std::vector<std::size_t>& radices) {
    std::size_t p = 1;
    for (auto r : radices) {
        if (r && p > ~std::size_t{0} / r) return ~std::size_t{0};
        p *= r;
    }
    return p;
}

// Calls fn on every index tuple, or on `limit` random ones when there are more.
template <class Fn>
std::size_t for_instances(const std::vector<std::size_t>& radices, std::size_t limit, std::mt19937_64& rng,
                          bool& exhaustive, Fn fn) {
    const std::size_t total = saturating_product(radices);
    std::vector<std::size_t> idx(radices.size(), 0);
    if (total <= limit) {
        for (std::size_t n = 0; n < total; ++n) {
            std::size_t rest = n;
            for (std::size_t i = radices.size(); i-- > 0;) {
                idx[i] = rest % radices[i];
                rest /= radices[i];
            }
            fn(idx);
        }
        return total;
    }
    exhaustive = false;
    for (std::size_t n = 0; n < limit; ++n) {
        for (std::size_t i = 0; i < radices.size(); ++i) idx[i] = rng() % radices[i];
        fn(idx);
    }
    return limit;
}

Element el(std::size_t i) { return static_cast<Element>(i); }

}  // namespace

CrossedModule crossed_module_of(const CrossedExtension& xe) {
    const auto& d = xe.data();
    return {d.t, d.r, d.boundary, d.raction};
}

void validate_crossed_module(const CrossedModule& xm) {
    const FiniteGroup &T = xm.t, &R = xm.r;
    const std::size_t nt = T.order(), nr = R.order();
    if (xm.boundary.size() != nt) reject("boundary: expected " + std::to_string(nt) + " entries");
    for (auto b : xm.boundary)
        if (b >= nr) reject("boundary: index out of range");
    if (xm.raction.size() != nr) reject("raction: expected " + std::to_string(nr) + " rows");
    for (const auto& row : xm.raction) {
        if (row.size() != nt) reject("raction: expected " + std::to_string(nt) + " entries per row");
        for (auto v : row)
            if (v >= nt) reject("raction: index out of range");
    }
    const auto& bd = xm.boundary;
    const auto& ra = xm.raction;
    for (Element a = 0; a < nt; ++a)
        for (Element b = 0; b < nt; ++b)
            if (bd[T.mul(a, b)] != R.mul(bd[a], bd[b]))
                reject("boundary: non-homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    for (Element t = 0; t < nt; ++t)
        if (ra[0][t] != t) reject("raction[0]: identity of R does not act trivially");
    for (Element r = 0; r < nr; ++r)
        for (Element a = 0; a < nt; ++a)
            for (Element b = 0; b < nt; ++b)
                if (ra[r][T.mul(a, b)] != T.mul(ra[r][a], ra[r][b]))
                    reject("raction[" + std::to_string(r) + "]: not an automorphism of T");
    for (Element r = 0; r < nr; ++r)
        for (Element q = 0; q < nr; ++q)
            for (Element t = 0; t < nt; ++t)
                if (ra[R.mul(r, q)][t] != ra[r][ra[q][t]]) reject("raction: not an action");
    for (Element r = 0; r < nr; ++r)
        for (Element t = 0; t < nt; ++t)
            if (bd[ra[r][t]] != R.mul(R.mul(r, bd[t]), R.inv(r)))
                reject("raction: equivariance violated at (r, t) = (" + std::to_string(r) + ", " + std::to_string(t) + ")");
    for (Element t = 0; t < nt; ++t)
        for (Element s = 0; s < nt; ++s)
            if (ra[bd[t]][s] != T.mul(T.mul(t, s), T.inv(t)))
                reject("raction: Peiffer identity violated at (t, s) = (" + std::to_string(t) + ", " + std::to_string(s) + ")");
}

Morphism CatGroup::compose(Morphism second, Morphism first) const {
    if (target(first) != second.source)
        reject("compose: target of " + morph_str(first) + " is not the source of " + morph_str(second));
    return {xm_.t.mul(second.t, first.t), first.source};
}

Morphism CatGroup::tensor(Morphism a, Morphism b) const {
    return {xm_.t.mul(a.t, xm_.raction[a.source][b.t]), xm_.r.mul(a.source, b.source)};
}

CatGroup build_cat_group(CrossedModule xm, std::size_t exhaustive_limit, std::uint64_t seed) {
    validate_crossed_module(xm);
    CatGroup cat;
    cat.xm_ = std::move(xm);
    const FiniteGroup &T = cat.xm_.t, &R = cat.xm_.r;
    const std::size_t nt = T.order(), nr = R.order();
    std::mt19937_64 rng(seed);
    BifunctorReport rep{true, 0};
    auto law = [](bool ok, auto what) {
        if (!ok) reject("2-group law violated: " + what());
    };

    rep.checks += for_instances({nt, nr}, exhaustive_limit, rng, rep.exhaustive, [&](const auto& i) {
        const Morphism a{el(i[0]), el(i[1])};
        law(cat.compose(cat.identity(cat.target(a)), a) == a && cat.compose(a, cat.identity(a.source)) == a,
            [&] { return "identity at " + morph_str(a); });
        law(cat.compose(cat.inverse(a), a) == cat.identity(a.source) &&
                cat.compose(a, cat.inverse(a)) == cat.identity(cat.target(a)),
            [&] { return "inverse at " + morph_str(a); });
    });

    // endpoints, identity tensor and the two unit formulas
    rep.checks += for_instances({nt, nr, nt, nr}, exhaustive_limit, rng, rep.exhaustive, [&](const auto& i) {
        const Morphism a{el(i[0]), el(i[1])}, b{el(i[2]), el(i[3])};
        const Morphism ab = cat.tensor(a, b);
        law(ab.source == R.mul(a.source, b.source) && cat.target(ab) == R.mul(cat.target(a), cat.target(b)),
            [&] { return "tensor endpoints at " + morph_str(a) + ", " + morph_str(b); });
        const Element r = a.source, z = b.source;
        law(cat.tensor(cat.identity(r), b) == Morphism{cat.xm_.raction[r][b.t], R.mul(r, b.source)},
            [&] { return "Id_r (x) b at r=" + std::to_string(r) + ", b=" + morph_str(b); });
        law(cat.tensor(a, cat.identity(z)) == Morphism{a.t, R.mul(a.source, z)},
            [&] { return "a (x) Id_z at a=" + morph_str(a) + ", z=" + std::to_string(z); });
        law(cat.tensor(cat.identity(r), cat.identity(z)) == cat.identity(R.mul(r, z)),
            [] { return std::string("Id (x) Id"); });
    });

    // interchange: (a' o a) (x) (b' o b) = (a' (x) b') o (a (x) b)
    rep.checks += for_instances({nt, nt, nr, nt, nt, nr}, exhaustive_limit, rng, rep.exhaustive, [&](const auto& i) {
        const Morphism a{el(i[0]), el(i[2])}, b{el(i[3]), el(i[5])};
        const Morphism a2{el(i[1]), cat.target(a)}, b2{el(i[4]), cat.target(b)};
        const Morphism lhs = cat.tensor(cat.compose(a2, a), cat.compose(b2, b));
        const Morphism rhs = cat.compose(cat.tensor(a2, b2), cat.tensor(a, b));
        law(lhs == rhs, [&] {
            return "interchange at a=" + morph_str(a) + ", a'=" + morph_str(a2) + ", b=" + morph_str(b) +
                   ", b'=" + morph_str(b2);
        });
    });

    // strict associativity
    rep.checks += for_instances({nt, nr, nt, nr, nt, nr}, exhaustive_limit, rng, rep.exhaustive, [&](const auto& i) {
        const Morphism a{el(i[0]), el(i[1])}, b{el(i[2]), el(i[3])}, c{el(i[4]), el(i[5])};
        law(cat.tensor(cat.tensor(a, b), c) == cat.tensor(a, cat.tensor(b, c)),
            [&] { return "associativity at " + morph_str(a) + ", " + morph_str(b) + ", " + morph_str(c); });
    });

    cat.report_ = rep;
    return cat;
}

SFunctor section_functor(const CrossedExtension& xe, const CatGroup& cat, const SSection& sec) {
    if (!sec.normalized) reject("section_functor needs a normalized section");
    const FiniteGroup& G = xe.g();
    const std::size_t q = G.order();
    if (!(cat.xm().t == xe.t()) || !(cat.xm().r == xe.r()) || cat.xm().boundary != xe.data().boundary)
        reject("section_functor: 2-group does not come from this crossed extension");
    SFunctor sf{G, sec.s, sec.sigma, false};
    for (Element x = 0; x < q; ++x) {
        if (xe.pi(sf.f[x]) != x) reject("section_functor: p F != id at x = " + std::to_string(x));
        for (Element y = 0; y < q; ++y) {
            const Morphism m = sf.xi_at(x, y);
            if (cat.target(m) != cat.tensor(sf.f[x], sf.f[y]))
                reject("section_functor: endpoint mismatch, xi(" + std::to_string(x) + ", " + std::to_string(y) +
                       ") does not end at F(x) F(y)");
        }
    }
    sf.normalized = sf.f[0] == FiniteGroup::identity;
    for (Element x = 0; x < q && sf.normalized; ++x)
        sf.normalized = sf.xi_at(0, x) == cat.identity(sf.f[x]) && sf.xi_at(x, 0) == cat.identity(sf.f[x]);
    return sf;
}

bool is_monoidal(const CatGroup& cat, const SFunctor& sf) {
    const FiniteGroup& G = sf.g;
    const std::size_t q = G.order();
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y)
            for (Element z = 0; z < q; ++z) {
                const Morphism lhs = cat.compose(cat.tensor(sf.xi_at(x, y), cat.identity(sf.f[z])),
                                                 sf.xi_at(G.mul(x, y), z));
                const Morphism rhs = cat.compose(cat.tensor(cat.identity(sf.f[x]), sf.xi_at(y, z)),
                                                 sf.xi_at(x, G.mul(y, z)));
                if (!(lhs == rhs)) return false;
            }
    return true;
}

bool is_symmetric_sfunctor(const CatGroup& cat, const SFunctor& sf) {
    if (!sf.normalized) reject("is_symmetric_sfunctor needs a normalized s-functor");
    const FiniteGroup& G = sf.g;
    const std::size_t q = G.order();
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const Element xi = G.inv(x), yi = G.inv(y);
            const Morphism a = cat.compose(cat.tensor(sf.xi_at(x, y), cat.identity(sf.f[yi])), sf.xi_at(G.mul(x, y), yi));
            const Morphism b = cat.tensor(cat.identity(sf.f[x]), sf.xi_at(y, yi));
            if (!(a == b)) return false;
            const Morphism c = cat.compose(cat.tensor(cat.identity(sf.f[x]), sf.xi_at(xi, y)), sf.xi_at(x, G.mul(xi, y)));
            const Morphism d = cat.tensor(sf.xi_at(x, xi), cat.identity(sf.f[y]));
            if (!(c == d)) return false;
        }
    return true;
}

SplitResult split_check(const CrossedExtension& xe, const Limits& limits) {
    const GModule& M = xe.m();
    const FiniteGroup &G = xe.g(), &T = xe.t();
    const std::size_t q = G.order();
    const SSection sec = normalised_section(xe);
    const Cochain f = three_cocycle(xe, sec);
    const auto k = is_coboundary(M, f, Flavor::normalized, limits);
    if (!k) return {};
    std::vector<Element> tau(sec.sigma.size());
    for (Element x = 0; x < q; ++x)
        for (Element y = 0; y < q; ++y) {
            const std::size_t i = x * q + y;
            tau[i] = T.mul(sec.sigma[i], xe.iota(M.neg(k->at(M, i))));
        }
    SSection corrected = classify_section(xe, sec.s, std::move(tau));
    const CatGroup cat = build_cat_group(crossed_module_of(xe), 0);
    if (!corrected.normalized || !is_monoidal(cat, section_functor(xe, cat, corrected)))
        fail(ErrorKind::internal_inconsistency, "corrected section is not monoidal");
    return {true, std::move(corrected)};
}

}  // namespace symcoh
