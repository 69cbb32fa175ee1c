#include "symcoh/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "symcoh/error.hpp"

namespace symcoh::oracle {

namespace {

// Module arithmetic on element indices, tabulated.
struct Ctx {
    std::size_t q = 0, mc = 0;
    std::vector<std::uint32_t> add, neg, act;  // add[a*mc+b], act[g*mc+a]
    const GModule* m = nullptr;

    explicit Ctx(const GModule& mod) : q(mod.group().order()), mc(mod.cardinality()), m(&mod) {
        add.resize(mc * mc);
        neg.resize(mc);
        act.resize(q * mc);
        std::vector<ModuleElement> el(mc);
        for (std::size_t a = 0; a < mc; ++a) el[a] = mod.element_at(a);
        for (std::size_t a = 0; a < mc; ++a) {
            neg[a] = static_cast<std::uint32_t>(mod.index_of(mod.neg(el[a])));
            for (std::size_t b = 0; b < mc; ++b)
                add[a * mc + b] = static_cast<std::uint32_t>(mod.index_of(mod.add(el[a], el[b])));
            for (std::size_t g = 0; g < q; ++g)
                act[g * mc + a] = static_cast<std::uint32_t>(mod.index_of(mod.act(static_cast<Element>(g), el[a])));
        }
    }
    std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * mc + b]; }
    std::uint32_t minus(std::uint32_t a, std::uint32_t b) const { return add[a * mc + neg[b]]; }
};

using Idx = std::vector<std::uint32_t>;

std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<Element> decode(std::size_t q, std::size_t n, std::size_t index) {
    std::vector<Element> t(n);
    for (std::size_t i = n; i-- > 0;) {
        t[i] = static_cast<Element>(index % q);
        index /= q;
    }
    return t;
}

std::size_t encode(std::size_t q, const std::vector<Element>& t) {
    std::size_t index = 0;
    for (auto g : t) index = index * q + g;
    return index;
}

Idx d_pointwise(const Ctx& c, std::size_t n, const Idx& phi) {
    const FiniteGroup& G = c.m->group();
    const std::size_t count = power(c.q, n + 1);
    Idx out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto t = decode(c.q, n + 1, idx);
        std::uint32_t v = c.act[t[0] * c.mc + phi[encode(c.q, std::vector<Element>(t.begin() + 1, t.end()))]];
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<Element> u;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == i) continue;
                u.push_back(j == i - 1 ? G.mul(t[i - 1], t[i]) : t[j]);
            }
            const auto term = phi[encode(c.q, u)];
            v = i % 2 ? c.minus(v, term) : c.plus(v, term);
        }
        const auto last = phi[encode(c.q, std::vector<Element>(t.begin(), t.end() - 1))];
        v = (n + 1) % 2 ? c.minus(v, last) : c.plus(v, last);
        out[idx] = v;
    }
    return out;
}

Idx tau_pointwise(const Ctx& c, std::size_t n, std::size_t i, const Idx& phi) {
    const FiniteGroup& G = c.m->group();
    Idx out(phi.size());
    for (std::size_t idx = 0; idx < phi.size(); ++idx) {
        auto t = decode(c.q, n, idx);
        std::vector<Element> u = t;
        const std::size_t k = i - 1;  // 0-based position of g_i
        if (k > 0) u[k - 1] = G.mul(t[k - 1], t[k]);
        u[k] = G.inv(t[k]);
        if (k + 1 < n) u[k + 1] = G.mul(t[k], t[k + 1]);
        std::uint32_t v = phi[encode(c.q, u)];
        if (k == 0) v = c.act[t[0] * c.mc + v];
        out[idx] = c.neg[v];
    }
    return out;
}

bool member(const Ctx& c, std::size_t n, const Idx& phi, Flavor flavor) {
    if (flavor == Flavor::normalized || flavor == Flavor::exterior)
        for (std::size_t idx = 0; idx < phi.size(); ++idx) {
            if (phi[idx] == 0) continue;
            const auto t = decode(c.q, n, idx);
            if (std::find(t.begin(), t.end(), FiniteGroup::identity) != t.end()) return false;
        }
    if (flavor == Flavor::symmetric || flavor == Flavor::exterior)
        for (std::size_t i = 1; i <= n; ++i)
            if (tau_pointwise(c, n, i, phi) != phi) return false;
    return true;
}

Idx to_idx(const GModule& m, std::size_t n, const Table& t) {
    if (t.size() != power(m.group().order(), n))
        fail(ErrorKind::invalid_parameter, "oracle: cochain table has the wrong length for degree " + std::to_string(n));
    Idx out;
    for (const auto& e : t) out.push_back(static_cast<std::uint32_t>(m.index_of(m.reduce(e))));
    return out;
}

Table to_table(const GModule& m, const Idx& v) {
    Table out;
    for (auto a : v) out.push_back(m.element_at(a));
    return out;
}

// mc^(q^n), or budget + 1 when larger.
std::uint64_t space_size(std::size_t mc, std::size_t q, std::size_t n, std::uint64_t budget) {
    const std::size_t width = power(q, n);
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < width; ++i) {
        s *= mc;
        if (s > budget) return budget + 1;
    }
    return s;
}

void require_budget(std::size_t mc, std::size_t q, std::size_t n, const Budget& b) {
    if (b.max_enumeration == 0) fail(ErrorKind::invalid_parameter, "oracle: budget must be positive");
    if (space_size(mc, q, n, b.max_enumeration) > b.max_enumeration)
        fail(ErrorKind::budget_exhausted, "oracle: |M|^(|G|^" + std::to_string(n) + ") exceeds the enumeration budget of " +
                                              std::to_string(b.max_enumeration));
}

// Calls fn(code, cochain) for every degree-n cochain, code = its odometer index.
template <class Fn>
void for_each_cochain(const Ctx& c, std::size_t n, Fn fn) {
    const std::size_t width = power(c.q, n);
    Idx v(width, 0);
    std::uint64_t code = 0;
    while (true) {
        fn(code, v);
        std::size_t j = width;
        while (j > 0) {
            --j;
            if (++v[j] < c.mc) break;
            v[j] = 0;
            if (j == 0) return;
        }
        ++code;
    }
}

std::uint64_t code_of(const Ctx& c, const Idx& v) {
    std::uint64_t code = 0;
    for (auto a : v) code = code * c.mc + a;
    return code;
}

std::vector<std::int64_t> prime_factors(std::uint64_t n) {
    std::vector<std::int64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(static_cast<std::int64_t>(p));
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(static_cast<std::int64_t>(n));
    return ps;
}

// Finite abelian group from the number of elements of each order.
std::vector<std::int64_t> invariants_from_orders(const std::map<std::uint64_t, std::uint64_t>& by_order,
                                                 std::uint64_t group_order) {
    std::vector<std::vector<std::int64_t>> powers;  // per prime, prime-power parts descending
    for (auto p : prime_factors(group_order)) {
        std::vector<std::int64_t> parts;
        std::uint64_t prev_log = 0, pk = 1;
        std::vector<std::uint64_t> at_least;  // at_least[k-1] = #{parts with exponent >= k}
        while (true) {
            pk *= static_cast<std::uint64_t>(p);
            std::uint64_t killed = 0;
            for (auto [ord, cnt] : by_order)
                if (pk % ord == 0) killed += cnt;
            std::uint64_t lg = 0;
            for (std::uint64_t x = killed; x > 1; x /= static_cast<std::uint64_t>(p)) {
                if (x % static_cast<std::uint64_t>(p))
                    fail(ErrorKind::internal_inconsistency, "oracle: p-torsion count is not a power of p");
                ++lg;
            }
            if (lg == prev_log) break;
            at_least.push_back(lg - prev_log);
            prev_log = lg;
        }
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            const std::uint64_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
            std::int64_t q = 1;
            for (std::size_t e = 0; e <= k; ++e) q *= p;
            for (std::uint64_t j = 0; j < exactly; ++j) parts.push_back(q);
        }
        std::sort(parts.rbegin(), parts.rend());
        powers.push_back(parts);
    }
    std::size_t count = 0;
    for (const auto& ps : powers) count = std::max(count, ps.size());
    std::vector<std::int64_t> factors(count, 1);
    for (const auto& ps : powers)
        for (std::size_t i = 0; i < ps.size(); ++i) factors[count - 1 - i] *= ps[i];
    std::int64_t prod = 1;
    for (auto f : factors) prod *= f;
    if (static_cast<std::uint64_t>(prod) != group_order)
        fail(ErrorKind::internal_inconsistency, "oracle: order counts do not describe an abelian group");
    return factors;
}

}  // namespace

Table coboundary(const GModule& m, std::size_t n, const Table& phi) {
    const Ctx c(m);
    return to_table(m, d_pointwise(c, n, to_idx(m, n, phi)));
}

Table tau(const GModule& m, std::size_t n, std::size_t i, const Table& phi) {
    if (i < 1 || i > n) fail(ErrorKind::invalid_parameter, "oracle: tau index out of range");
    const Ctx c(m);
    return to_table(m, tau_pointwise(c, n, i, to_idx(m, n, phi)));
}

bool is_member(const GModule& m, std::size_t n, const Table& phi, Flavor flavor) {
    const Ctx c(m);
    return member(c, n, to_idx(m, n, phi), flavor);
}

std::vector<std::int64_t> enumerate_cohomology(const GModule& m, std::size_t n, Flavor flavor, Budget budget) {
    const Ctx c(m);
    require_budget(c.mc, c.q, n, budget);
    const std::uint64_t total = space_size(c.mc, c.q, n, budget.max_enumeration);

    std::vector<bool> boundary(total, false);
    std::uint64_t boundary_count = 0;
    if (n == 0) {
        boundary[0] = true;
        boundary_count = 1;
    } else {
        for_each_cochain(c, n - 1, [&](std::uint64_t, const Idx& psi) {
            if (!member(c, n - 1, psi, flavor)) return;
            const auto code = code_of(c, d_pointwise(c, n - 1, psi));
            if (!boundary[code]) {
                boundary[code] = true;
                ++boundary_count;
            }
        });
    }

    std::map<std::uint64_t, std::uint64_t> by_order;  // order of the class -> number of cocycles
    std::uint64_t cocycles = 0;
    for_each_cochain(c, n, [&](std::uint64_t, const Idx& phi) {
        if (!member(c, n, phi, flavor)) return;
        const auto dphi = d_pointwise(c, n, phi);
        if (std::any_of(dphi.begin(), dphi.end(), [](std::uint32_t a) { return a != 0; })) return;
        ++cocycles;
        std::uint64_t k = 1;
        Idx multiple = phi;
        while (!boundary[code_of(c, multiple)]) {
            for (std::size_t j = 0; j < multiple.size(); ++j) multiple[j] = c.plus(multiple[j], phi[j]);
            ++k;
        }
        ++by_order[k];
    });

    if (boundary_count == 0 || cocycles % boundary_count)
        fail(ErrorKind::internal_inconsistency, "oracle: boundaries do not form a subgroup of the cocycles");
    for (auto& [ord, cnt] : by_order) {
        if (cnt % boundary_count) fail(ErrorKind::internal_inconsistency, "oracle: coset orders are inconsistent");
        cnt /= boundary_count;
    }
    return invariants_from_orders(by_order, cocycles / boundary_count);
}

std::optional<Table> exhaustive_coboundary(const GModule& m, std::size_t n, const Table& phi, Flavor flavor,
                                           Budget budget) {
    if (n == 0) fail(ErrorKind::invalid_parameter, "oracle: exhaustive_coboundary needs degree >= 1");
    const Ctx c(m);
    const Idx target = to_idx(m, n, phi);
    require_budget(c.mc, c.q, n - 1, budget);
    std::optional<Idx> found;
    for_each_cochain(c, n - 1, [&](std::uint64_t, const Idx& g) {
        if (found || !member(c, n - 1, g, flavor)) return;
        if (d_pointwise(c, n - 1, g) == target) found = g;
    });
    if (!found) return std::nullopt;
    return to_table(m, *found);
}

}  // namespace symcoh::oracle
