#include "symcoh/module.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

IntSquare GModule::action_matrix(Element g) const {
    IntSquare a(rank(), std::vector<std::int64_t>(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) a[i][j] = action_entry(g, i, j);
    return a;
}

ModuleElement GModule::act(Element g, const ModuleElement& m) const {
    if (trivial_action_) return m;
    const std::size_t k = rank();
    ModuleElement out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < k; ++j) s += action_entry(g, i, j) * m[j];
        out[i] = floor_mod(s, exponents_[i]);
    }
    return out;
}

ModuleElement GModule::add(const ModuleElement& a, const ModuleElement& b) const {
    ModuleElement out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = floor_mod(a[i] + b[i], exponents_[i]);
    return out;
}

ModuleElement GModule::sub(const ModuleElement& a, const ModuleElement& b) const {
    ModuleElement out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = floor_mod(a[i] - b[i], exponents_[i]);
    return out;
}

ModuleElement GModule::neg(const ModuleElement& a) const {
    ModuleElement out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = floor_mod(-a[i], exponents_[i]);
    return out;
}

ModuleElement GModule::scale(std::int64_t c, const ModuleElement& a) const {
    ModuleElement out(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        out[i] = floor_mod(floor_mod(c, exponents_[i]) * a[i], exponents_[i]);
    return out;
}

ModuleElement GModule::reduce(ModuleElement a) const {
    for (std::size_t i = 0; i < rank(); ++i) a[i] = floor_mod(a[i], exponents_[i]);
    return a;
}

bool GModule::is_zero(const ModuleElement& a) const {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

std::size_t GModule::index_of(const ModuleElement& m) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        idx = idx * static_cast<std::size_t>(exponents_[i]) + static_cast<std::size_t>(m[i]);
    return idx;
}

ModuleElement GModule::element_at(std::size_t index) const {
    ModuleElement m(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        auto d = static_cast<std::size_t>(exponents_[i]);
        m[i] = static_cast<std::int64_t>(index % d);
        index /= d;
    }
    return m;
}

GModule validate_module(const FiniteGroup& g, std::vector<std::int64_t> exponents,
                        const std::vector<IntSquare>& element_matrices) {
    auto reject = [](const std::string& msg) { fail(ErrorKind::validation, msg); };
    const std::size_t k = exponents.size();
    std::size_t card = 1;
    std::int64_t lcm = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (exponents[i] < 2) {
            std::ostringstream os;
            os << "malformed exponents: d_" << i << " = " << exponents[i] << " (each must be >= 2)";
            reject(os.str());
        }
        if (card > (std::size_t{1} << 40) / static_cast<std::size_t>(exponents[i]))
            reject("module too large: |M| exceeds 2^40");
        card *= static_cast<std::size_t>(exponents[i]);
        lcm = std::lcm(lcm, exponents[i]);
    }
    if (element_matrices.size() != g.order()) {
        std::ostringstream os;
        os << "expected " << g.order() << " action matrices, got " << element_matrices.size();
        reject(os.str());
    }
    GModule m;
    m.group_ = g;
    m.exponents_ = exponents;
    m.exponent_ = lcm;
    m.cardinality_ = card;
    m.action_.assign(g.order() * k * k, 0);
    for (Element x = 0; x < g.order(); ++x) {
        const auto& a = element_matrices[x];
        if (a.size() != k) {
            std::ostringstream os;
            os << "action matrix of element " << x << " must be " << k << "x" << k;
            reject(os.str());
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (a[i].size() != k) {
                std::ostringstream os;
                os << "action matrix of element " << x << " must be " << k << "x" << k;
                reject(os.str());
            }
            for (std::size_t j = 0; j < k; ++j) {
                std::int64_t e = floor_mod(a[i][j], exponents[i]);
                // e_j has order d_j, so its image must be killed by d_j.
                if ((e * exponents[j]) % exponents[i] != 0) {
                    std::ostringstream os;
                    os << "action matrix of element " << x << " is not well defined at entry (" << i
                       << "," << j << ")";
                    reject(os.str());
                }
                m.action_[(x * k + i) * k + j] = e;
            }
        }
    }
    auto product = [&](Element x, Element y) {
        std::vector<std::int64_t> p(k * k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::int64_t s = 0;
                for (std::size_t l = 0; l < k; ++l) s += m.action_entry(x, i, l) * m.action_entry(y, l, j);
                p[i * k + j] = floor_mod(s, exponents[i]);
            }
        return p;
    };
    auto matrix_of = [&](Element x) {
        return std::vector<std::int64_t>(m.action_.begin() + x * k * k, m.action_.begin() + (x + 1) * k * k);
    };
    std::vector<std::int64_t> id(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
    if (matrix_of(0) != id) reject("action of the identity is not the identity matrix");
    for (Element x = 0; x < g.order(); ++x) {
        if (product(x, g.inv(x)) != id) {
            std::ostringstream os;
            os << "non-invertible action matrix at element " << x;
            reject(os.str());
        }
    }
    for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
            if (product(x, y) != matrix_of(g.mul(x, y))) {
                std::ostringstream os;
                os << "action is not a homomorphism at pair (" << x << "," << y << ")";
                reject(os.str());
            }
    for (Element x = 0; x < g.order(); ++x)
        if (matrix_of(x) != id) m.trivial_action_ = false;
    return m;
}

GModule trivial_module(const FiniteGroup& g, std::vector<std::int64_t> exponents) {
    const std::size_t k = exponents.size();
    IntSquare id(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    return validate_module(g, std::move(exponents), std::vector<IntSquare>(g.order(), id));
}

GModule sign_module(const FiniteGroup& g, std::int64_t d) {
    auto chi = sign_character(g);
    if (chi.empty()) fail(ErrorKind::validation, "group " + g.name() + " has no index-two subgroup for a sign action");
    std::vector<IntSquare> mats(g.order());
    for (Element x = 0; x < g.order(); ++x) mats[x] = {{chi[x] ? d - 1 : 1}};
    return validate_module(g, {d}, mats);
}

GModule module_from_generators(const FiniteGroup& g, std::vector<std::int64_t> exponents,
                               const std::map<Element, IntSquare>& generator_matrices) {
    const std::size_t k = exponents.size();
    for (auto& [x, a] : generator_matrices) {
        if (x >= g.order()) fail(ErrorKind::validation, "generator index " + std::to_string(x) + " out of range");
        if (a.size() != k) fail(ErrorKind::validation, "generator matrix must be " + std::to_string(k) + "x" + std::to_string(k));
        for (auto& row : a)
            if (row.size() != k)
                fail(ErrorKind::validation, "generator matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    }
    std::vector<IntSquare> mats(g.order());
    std::vector<char> done(g.order(), 0);
    IntSquare id(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    mats[0] = id;
    done[0] = 1;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        Element w = queue.front();
        queue.pop_front();
        for (auto& [x, a] : generator_matrices) {
            Element wx = g.mul(w, x);
            if (done[wx]) continue;
            IntSquare p(k, std::vector<std::int64_t>(k, 0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    std::int64_t s = 0;
                    for (std::size_t l = 0; l < k; ++l) s += mats[w][i][l] * floor_mod(a[l][j], exponents[l]);
                    p[i][j] = floor_mod(s, exponents[i]);
                }
            mats[wx] = std::move(p);
            done[wx] = 1;
            queue.push_back(wx);
        }
    }
    for (Element x = 0; x < g.order(); ++x)
        if (!done[x]) fail(ErrorKind::validation, "generator matrices do not cover element " + std::to_string(x) + " (not a generating set)");
    return validate_module(g, std::move(exponents), mats);
}

}  // namespace symcoh
