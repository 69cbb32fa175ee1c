#include "symcoh/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::validation: return "validation";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::budget_exhausted: return "budget-exhausted";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    }
    return "unknown";
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
    std::vector<std::vector<Element>> rows(order_);
    for (std::size_t a = 0; a < order_; ++a)
        rows[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
    return rows;
}

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t k = 1;
    for (Element x = a; x != identity; x = mul(x, a)) ++k;
    return k;
}

FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table, std::string name) {
    const std::size_t n = table.size();
    auto reject = [](const std::string& msg) { fail(ErrorKind::validation, msg); };
    if (n == 0) reject("group table is empty");
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) {
            std::ostringstream os;
            os << "table is not square: row " << a << " has " << table[a].size()
               << " entries, expected " << n;
            reject(os.str());
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] < 0 || static_cast<std::size_t>(table[a][b]) >= n) {
                std::ostringstream os;
                os << "entry out of range at (" << a << "," << b << "): " << table[a][b];
                reject(os.str());
            }
        }
    }
    // Latin square
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) {
            auto v = static_cast<std::size_t>(table[a][b]);
            if (seen[v]) {
                std::ostringstream os;
                os << "Latin-square violation at row " << a << ": element " << v << " repeated";
                reject(os.str());
            }
            seen[v] = 1;
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
            auto v = static_cast<std::size_t>(table[a][b]);
            if (seen[v]) {
                std::ostringstream os;
                os << "Latin-square violation at column " << b << ": element " << v << " repeated";
                reject(os.str());
            }
            seen[v] = 1;
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (static_cast<std::size_t>(table[0][g]) != g || static_cast<std::size_t>(table[g][0]) != g) {
            std::ostringstream os;
            os << "identity violation: index 0 is not the identity (witness element " << g << ")";
            reject(os.str());
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto ab = static_cast<std::size_t>(table[a][b]);
                auto bc = static_cast<std::size_t>(table[b][c]);
                if (table[ab][c] != table[a][bc]) {
                    std::ostringstream os;
                    os << "associativity violation at triple (" << a << "," << b << "," << c << ")";
                    reject(os.str());
                }
            }

    FiniteGroup g;
    g.order_ = n;
    g.name_ = std::move(name);
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<Element>(table[a][b]);
    g.inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.table_[a * n + b] == 0) g.inv_[a] = static_cast<Element>(b);
    return g;
}

FiniteGroup build_cyclic(std::size_t n) {
    if (n == 0) fail(ErrorKind::invalid_parameter, "cyclic group order must be positive");
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::int64_t>((a + b) % n);
    return validate_group(t, "Z/" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t m = g.order(), n = h.order();
    std::vector<std::vector<std::int64_t>> t(m * n, std::vector<std::int64_t>(m * n));
    for (std::size_t a = 0; a < m * n; ++a)
        for (std::size_t b = 0; b < m * n; ++b) {
            auto gi = g.mul(static_cast<Element>(a / n), static_cast<Element>(b / n));
            auto hi = h.mul(static_cast<Element>(a % n), static_cast<Element>(b % n));
            t[a][b] = static_cast<std::int64_t>(gi * n + hi);
        }
    return validate_group(t, g.name() + "x" + h.name());
}

FiniteGroup build_symmetric(std::size_t n) {
    if (n == 0 || n > 5) fail(ErrorKind::invalid_parameter, "symmetric group degree must be in 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<int>& q) {
        return std::lower_bound(perms.begin(), perms.end(), q) - perms.begin();
    };
    std::vector<std::vector<std::int64_t>> t(perms.size(), std::vector<std::int64_t>(perms.size()));
    std::vector<int> c(n);
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            // (a*b)(i) = a(b(i))
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    return validate_group(t, "S" + std::to_string(n));
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& perm) {
    const std::size_t n = g.order();
    if (perm.size() != n || perm[0] != 0)
        fail(ErrorKind::invalid_parameter, "relabeling must be a permutation fixing 0");
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[g.mul(a, b)];
    return validate_group(t, g.name());
}

OrderTwoCensus order_two_census(const FiniteGroup& g) {
    OrderTwoCensus census;
    for (Element x = 1; x < g.order(); ++x) {
        if (g.inv(x) == x) {
            census.has_order_two = true;
            census.witness = x;
            census.pairing.clear();
            return census;
        }
        if (x < g.inv(x)) census.pairing.emplace_back(x, g.inv(x));
    }
    return census;
}

std::vector<int> sign_character(const FiniteGroup& g) {
    const std::size_t n = g.order();
    auto closure = [&](std::vector<char> in) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Element a = 0; a < n; ++a)
                if (in[a])
                    for (Element b = 0; b < n; ++b)
                        if (in[b] && !in[g.mul(a, b)]) in[g.mul(a, b)] = 1, changed = true;
        }
        return in;
    };
    std::vector<char> squares(n, 0);
    for (Element a = 0; a < n; ++a) squares[g.mul(a, a)] = 1;
    squares = closure(squares);
    // Greedy basis b_1, b_2, ... of G / G^2.
    std::vector<Element> basis;
    std::vector<char> span = squares;
    for (Element a = 0; a < n; ++a) {
        if (span[a]) continue;
        basis.push_back(a);
        span[a] = 1;
        span = closure(span);
    }
    if (basis.empty()) return {};
    std::vector<char> kernel = squares;
    for (std::size_t i = 1; i < basis.size(); ++i) kernel[basis[i]] = 1;
    kernel = closure(kernel);
    std::vector<int> chi(n);
    for (Element a = 0; a < n; ++a) chi[a] = kernel[a] ? 0 : 1;
    return chi;
}

}  // namespace symcoh
