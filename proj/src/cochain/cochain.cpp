#include "symcoh/cochain.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "symcoh/error.hpp"
#include "symcoh/modular.hpp"

namespace symcoh {

const char* to_string(Flavor f) noexcept {
    switch (f) {
    case Flavor::classical: return "classical";
    case Flavor::normalized: return "normalized";
    case Flavor::symmetric: return "symmetric";
    case Flavor::exterior: return "exterior";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "classical") return Flavor::classical;
    if (s == "normalized") return Flavor::normalized;
    if (s == "symmetric") return Flavor::symmetric;
    if (s == "exterior") return Flavor::exterior;
    fail(ErrorKind::validation, "unknown flavor '" + s + "' (classical, normalized, symmetric, exterior)");
}

IntMatrix SparseIntMatrix::to_int_matrix() const {
    IntMatrix a(rows, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (auto [i, v] : columns[j]) a(i, j) += v;
    return a;
}

std::size_t tuple_count(std::size_t group_order, std::size_t n) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (c > (std::size_t{1} << 40) / std::max<std::size_t>(group_order, 1))
            fail(ErrorKind::size_guard, "cochain space too large");
        c *= group_order;
    }
    return c;
}

std::size_t encode_tuple(std::size_t group_order, const std::vector<Element>& t) {
    std::size_t idx = 0;
    for (auto g : t) idx = idx * group_order + g;
    return idx;
}

std::vector<Element> decode_tuple(std::size_t group_order, std::size_t n, std::size_t index) {
    std::vector<Element> t(n);
    for (std::size_t i = n; i-- > 0;) {
        t[i] = static_cast<Element>(index % group_order);
        index /= group_order;
    }
    return t;
}

namespace {


void accumulate(SparseIntVector& v) {
    std::sort(v.begin(), v.end());
    SparseIntVector out;
    for (auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(e);
    }
    std::erase_if(out, [](auto& e) { return e.second == 0; });
    v = std::move(out);
}

}  // namespace

void check_cochain_size(const GModule& m, std::size_t n, const Limits& limits) {
    if (n > limits.max_degree) {
        std::ostringstream os;
        os << "degree " << n << " exceeds the configured maximum " << limits.max_degree;
        fail(ErrorKind::size_guard, os.str());
    }
    const std::size_t cells = tuple_count(m.group().order(), n) * std::max<std::size_t>(m.rank(), 1);
    if (cells > limits.max_cells) {
        std::ostringstream os;
        os << "cochain space of degree " << n << " has " << cells << " cells, above the limit of "
           << limits.max_cells << " (raise with --max-cells)";
        fail(ErrorKind::size_guard, os.str());
    }
}

ModuleElement Cochain::at(const GModule& m, std::size_t tuple) const {
    const std::size_t k = m.rank();
    return ModuleElement(values.begin() + static_cast<std::ptrdiff_t>(tuple * k),
                         values.begin() + static_cast<std::ptrdiff_t>((tuple + 1) * k));
}

void Cochain::set(const GModule& m, std::size_t tuple, const ModuleElement& v) {
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < k; ++i) values[tuple * k + i] = v[i];
}

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](auto v) { return v == 0; });
}

Cochain zero_cochain(const GModule& m, std::size_t n, const Limits& limits) {
    check_cochain_size(m, n, limits);
    return Cochain{n, std::vector<std::int64_t>(tuple_count(m.group().order(), n) * m.rank(), 0)};
}

Cochain cochain_from_sparse(const GModule& m, std::size_t n, const SparseIntVector& v) {
    Cochain c{n, std::vector<std::int64_t>(tuple_count(m.group().order(), n) * m.rank(), 0)};
    const std::size_t k = m.rank();
    for (auto [i, x] : v) c.values[i] += x;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = floor_mod(c.values[i], m.exponents()[i % k]);
    return c;
}

Cochain cochain_add(const GModule& m, const Cochain& a, const Cochain& b) {
    Cochain c = a;
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] = floor_mod(a.values[i] + b.values[i], m.exponents()[i % k]);
    return c;
}

Cochain cochain_sub(const GModule& m, const Cochain& a, const Cochain& b) {
    Cochain c = a;
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] = floor_mod(a.values[i] - b.values[i], m.exponents()[i % k]);
    return c;
}

Cochain cochain_scale(const GModule& m, std::int64_t s, const Cochain& a) {
    Cochain c = a;
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        const auto d = m.exponents()[i % k];
        c.values[i] = floor_mod(floor_mod(s, d) * a.values[i], d);
    }
    return c;
}

Cochain coboundary(const GModule& m, const Cochain& phi, const Limits& limits) {
    const FiniteGroup& g = m.group();
    const std::size_t n = phi.degree;
    const std::size_t q = g.order();
    const std::size_t k = m.rank();
    Cochain out = zero_cochain(m, n + 1, limits);
    const std::size_t inner = tuple_count(q, n);
    std::vector<std::int64_t> acc(k);
    for (std::size_t idx = 0; idx < out.values.size() / std::max<std::size_t>(k, 1); ++idx) {
        auto t = decode_tuple(q, n + 1, idx);
        std::fill(acc.begin(), acc.end(), 0);
        // g_0 . phi(g_1..g_n): the tail of the index
        auto first = m.act(t[0], phi.at(m, idx % inner));
        for (std::size_t i = 0; i < k; ++i) acc[i] += first[i];
        std::vector<Element> s(n);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0, p = 0; j <= n; ++j) {
                if (j == i) continue;
                s[p++] = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
            }
            auto v = phi.at(m, encode_tuple(q, s));
            const std::int64_t sign = (i % 2) ? -1 : 1;
            for (std::size_t c = 0; c < k; ++c) acc[c] += sign * v[c];
        }
        auto last = phi.at(m, idx / q);
        const std::int64_t sign = ((n + 1) % 2) ? -1 : 1;
        for (std::size_t c = 0; c < k; ++c) acc[c] += sign * last[c];
        for (std::size_t c = 0; c < k; ++c) out.values[idx * k + c] = floor_mod(acc[c], m.exponents()[c]);
    }
    return out;
}

SparseIntVector coboundary_of_basis(const GModule& m, std::size_t n, std::size_t tuple, std::size_t coord) {
    const FiniteGroup& g = m.group();
    const std::size_t q = g.order();
    const std::size_t k = m.rank();
    const auto t = decode_tuple(q, n, tuple);
    const std::size_t inner = tuple_count(q, n);
    SparseIntVector out;
    out.reserve((n + 2) * q * k);
    // g_0 . phi(t)
    for (Element g0 = 0; g0 < q; ++g0) {
        const std::size_t o = g0 * inner + tuple;
        for (std::size_t i = 0; i < k; ++i) {
            const auto a = m.action_entry(g0, i, coord);
            if (a != 0) out.emplace_back(static_cast<std::uint32_t>(o * k + i), a);
        }
    }
    // (-1)^i phi(.., g_{i-1} g_i, ..): outputs split t_i = a * b at positions i-1, i
    std::vector<Element> s(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t sign = (i % 2) ? -1 : 1;
        for (Element a = 0; a < q; ++a) {
            for (std::size_t j = 0; j + 1 < i; ++j) s[j] = t[j];
            s[i - 1] = a;
            s[i] = g.mul(g.inv(a), t[i - 1]);
            for (std::size_t j = i + 1; j <= n; ++j) s[j] = t[j - 1];
            out.emplace_back(static_cast<std::uint32_t>(encode_tuple(q, s) * k + coord), sign);
        }
    }
    const std::int64_t sign = ((n + 1) % 2) ? -1 : 1;
    for (Element last = 0; last < q; ++last)
        out.emplace_back(static_cast<std::uint32_t>((tuple * q + last) * k + coord), sign);
    accumulate(out);
    return out;
}

SparseIntMatrix coboundary_matrix(const GModule& m, std::size_t n, const Limits& limits) {
    check_cochain_size(m, n + 1, limits);
    const std::size_t q = m.group().order();
    const std::size_t k = m.rank();
    SparseIntMatrix d;
    d.rows = tuple_count(q, n + 1) * k;
    const std::size_t src = tuple_count(q, n);
    d.columns.reserve(src * k);
    for (std::size_t t = 0; t < src; ++t)
        for (std::size_t c = 0; c < k; ++c) d.columns.push_back(coboundary_of_basis(m, n, t, c));
    return d;
}

Cochain apply_map(const GModule& m, std::size_t target_degree, const SparseIntMatrix& a, const Cochain& phi) {
    if (a.cols() != phi.values.size()) fail(ErrorKind::invalid_parameter, "apply_map: width mismatch");
    Cochain out{target_degree, std::vector<std::int64_t>(a.rows, 0)};
    const std::size_t k = m.rank();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto x = phi.values[j];
        if (x == 0) continue;
        for (auto [i, v] : a.columns[j]) out.values[i] = floor_mod(out.values[i] + v * x, m.exponents()[i % k]);
    }
    return out;
}

namespace {

// Argument tuple of phi in (tau_i phi)(t), i.e. the tuple permutation pi_i.
std::vector<Element> tau_argument(const FiniteGroup& g, std::size_t i, const std::vector<Element>& t) {
    const std::size_t n = t.size();
    std::vector<Element> s = t;
    if (i == 1) {
        s[0] = g.inv(t[0]);
        if (n >= 2) s[1] = g.mul(t[0], t[1]);
    } else {
        // positions i-2, i-1, i (0-based) hold g_{i-1}, g_i, g_{i+1}
        s[i - 2] = g.mul(t[i - 2], t[i - 1]);
        s[i - 1] = g.inv(t[i - 1]);
        if (i < n) s[i] = g.mul(t[i - 1], t[i]);
    }
    return s;
}

}  // namespace

Cochain tau(const GModule& m, std::size_t i, const Cochain& phi) {
    const std::size_t n = phi.degree;
    if (i < 1 || i > n) {
        std::ostringstream os;
        os << "tau index " << i << " out of range 1.." << n;
        fail(ErrorKind::invalid_parameter, os.str());
    }
    const FiniteGroup& g = m.group();
    const std::size_t q = g.order();
    Cochain out = phi;
    const std::size_t count = tuple_count(q, n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        auto t = decode_tuple(q, n, idx);
        auto v = phi.at(m, encode_tuple(q, tau_argument(g, i, t)));
        if (i == 1) v = m.act(t[0], v);
        out.set(m, idx, m.neg(v));
    }
    return out;
}

bool is_normalized(const FiniteGroup& g, const Cochain& phi, std::size_t rank) {
    const std::size_t q = g.order();
    const std::size_t count = tuple_count(q, phi.degree);
    for (std::size_t idx = 0; idx < count; ++idx) {
        auto t = decode_tuple(q, phi.degree, idx);
        if (std::find(t.begin(), t.end(), FiniteGroup::identity) == t.end()) continue;
        for (std::size_t c = 0; c < rank; ++c)
            if (phi.values[idx * rank + c] != 0) return false;
    }
    return true;
}

bool is_member(const GModule& m, const Cochain& phi, Flavor flavor) {
    const bool want_norm = flavor == Flavor::normalized || flavor == Flavor::exterior;
    const bool want_sym = flavor == Flavor::symmetric || flavor == Flavor::exterior;
    if (want_norm && !is_normalized(m.group(), phi, m.rank())) return false;
    if (want_sym)
        for (std::size_t i = 1; i <= phi.degree; ++i)
            if (tau(m, i, phi) != phi) return false;
    return true;
}

bool has_adjacent_inverse(const FiniteGroup& g, const std::vector<Element>& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i + 1] == g.inv(t[i])) return true;
    return false;
}

namespace {

// Generators of {m in M : sign * u . m = m for every constraint (sign, u)}.
std::vector<ModuleElement> fixed_submodule(const GModule& m, const std::set<std::pair<int, Element>>& constraints) {
    const std::size_t k = m.rank();
    std::vector<ModuleElement> gens;
    if (constraints.empty()) {
        for (std::size_t j = 0; j < k; ++j) {
            ModuleElement e(k, 0);
            e[j] = 1;
            gens.push_back(e);
        }
        return gens;
    }
    zn::Ring ring(static_cast<std::uint64_t>(m.exponent()));
    const std::size_t blocks = constraints.size();
    std::vector<zn::SparseVector> images(k);
    std::size_t b = 0;
    for (auto [sign, u] : constraints) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) {
                std::int64_t v = sign * m.action_entry(u, i, j) - (i == j ? 1 : 0);
                const auto r = ring.from_signed(v);
                if (r != 0) images[j].emplace_back(static_cast<std::uint32_t>(b * k + i), r);
            }
        ++b;
    }
    std::vector<zn::SparseVector> relations;
    for (std::size_t bb = 0; bb < blocks; ++bb)
        for (std::size_t i = 0; i < k; ++i)
            if (m.exponents()[i] != m.exponent())
                relations.push_back({{static_cast<std::uint32_t>(bb * k + i), static_cast<zn::Residue>(m.exponents()[i])}});
    for (auto& y : zn::kernel(ring, blocks * k, images, relations)) {
        ModuleElement e(k);
        for (std::size_t i = 0; i < k; ++i) e[i] = floor_mod(y[i], m.exponents()[i]);
        if (!m.is_zero(e) && std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
    }
    return gens;
}

}  // namespace

SparseIntMatrix subgroup_embedding(const GModule& m, std::size_t n, Flavor flavor, const Limits& limits) {
    check_cochain_size(m, n, limits);
    const FiniteGroup& g = m.group();
    const std::size_t q = g.order();
    const std::size_t k = m.rank();
    const std::size_t count = tuple_count(q, n);
    SparseIntMatrix e;
    e.rows = count * k;
    auto degenerate = [&](const std::vector<Element>& t) {
        return std::find(t.begin(), t.end(), FiniteGroup::identity) != t.end();
    };

    if (n == 0 || flavor == Flavor::classical || flavor == Flavor::normalized) {
        for (std::size_t idx = 0; idx < count; ++idx) {
            if (flavor == Flavor::normalized && n > 0 && degenerate(decode_tuple(q, n, idx))) continue;
            for (std::size_t c = 0; c < k; ++c) e.columns.push_back({{static_cast<std::uint32_t>(idx * k + c), 1}});
        }
        return e;
    }

    // Symmetric cochains, one orbit of the tuple permutations at a time. On an
    // orbit, phi(t) = sign_t * h_t . phi(t0) where (sign_t, h_t) is the twist
    // accumulated along a path from t0; loops impose fixed-point constraints.
    std::vector<char> seen(count, 0);
    std::vector<int> sign(count, 0);
    std::vector<Element> twist(count, 0);
    for (std::size_t t0 = 0; t0 < count; ++t0) {
        if (seen[t0]) continue;
        std::vector<std::size_t> orbit{t0};
        seen[t0] = 1;
        sign[t0] = 1;
        twist[t0] = FiniteGroup::identity;
        std::set<std::pair<int, Element>> constraints;
        bool touches_identity = false;
        for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
            const std::size_t idx = orbit[pos];
            const auto t = decode_tuple(q, n, idx);
            if (degenerate(t)) touches_identity = true;
            for (std::size_t i = 1; i <= n; ++i) {
                const std::size_t next = encode_tuple(q, tau_argument(g, i, t));
                // phi(pi_i t) = -a . phi(t) with a = t_1^-1 for i = 1.
                const Element a = (i == 1) ? g.inv(t[0]) : FiniteGroup::identity;
                const int s = -sign[idx];
                const Element h = g.mul(a, twist[idx]);
                if (!seen[next]) {
                    seen[next] = 1;
                    sign[next] = s;
                    twist[next] = h;
                    orbit.push_back(next);
                } else {
                    // s h m0 = sign_next twist_next m0
                    const int cs = s * sign[next];
                    const Element cu = g.mul(g.inv(twist[next]), h);
                    if (cs != 1 || cu != FiniteGroup::identity) constraints.emplace(cs, cu);
                }
            }
        }
        if (flavor == Flavor::exterior && touches_identity) continue;
        std::sort(orbit.begin(), orbit.end());
        for (auto& m0 : fixed_submodule(m, constraints)) {
            SparseIntVector col;
            for (auto idx : orbit) {
                auto v = m.act(twist[idx], m0);
                if (sign[idx] < 0) v = m.neg(v);
                for (std::size_t c = 0; c < k; ++c)
                    if (v[c] != 0) col.emplace_back(static_cast<std::uint32_t>(idx * k + c), v[c]);
            }
            e.columns.push_back(std::move(col));
        }
    }
    return e;
}

}  // namespace symcoh
