#include "claims.hpp"

#include <map>
#include <numeric>

#include "symcoh/algebra_io.hpp"
#include "symcoh/cohomology.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/error.hpp"
#include "symcoh/oracle.hpp"
#include "symcoh/render.hpp"
#include "symcoh/twogroup.hpp"

namespace symcoh::detail {

using nlohmann::json;

void ClaimContext::use(const std::string& id) {
    if (std::find(rec_.fixtures.begin(), rec_.fixtures.end(), id) == rec_.fixtures.end()) rec_.fixtures.push_back(id);
}

const GModule& ClaimContext::module(const ModuleFixture& f) {
    use(f.id);
    if (!f.module) throw ClaimFailure{{{"fixture", f.id}, {"error", f.error}}};
    return *f.module;
}

const CrossedExtension& ClaimContext::extension(const ExtensionFixture& f) {
    use(f.id);
    if (!f.xe) throw ClaimFailure{{{"fixture", f.id}, {"error", f.error}}};
    return *f.xe;
}

CohomologyEngine& ClaimContext::engine(const ModuleFixture& f) {
    held_.push_back(fx.engine("module:" + f.id, module(f), opt.limits));
    return *held_.back();
}

CohomologyEngine& ClaimContext::engine(const ExtensionFixture& f) {
    held_.push_back(fx.engine("extension:" + f.id, extension(f).m(), opt.limits));
    return *held_.back();
}

namespace {

constexpr Flavor kFlavors[] = {Flavor::classical, Flavor::normalized, Flavor::symmetric, Flavor::exterior};

// exhaustive limit for the strict 2-group laws; covers |T| = |R| = 25
constexpr std::size_t kLawLimit = 300'000'000;

bool two_torsion_free(const FiniteGroup& g) { return !order_two_census(g).has_order_two; }

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b && r > UINT64_MAX / b) return UINT64_MAX;
        r *= b;
    }
    return r;
}

Cochain random_cochain(ClaimContext& c, const GModule& m, std::size_t n) {
    auto phi = zero_cochain(m, n, c.opt.limits);
    for (std::size_t i = 0; i < phi.values.size(); ++i)
        phi.values[i] = static_cast<std::int64_t>(c.uniform(m.exponents()[i % m.rank()]));
    return phi;
}

// random combination of the flavor generators
Cochain random_member(ClaimContext& c, CohomologyEngine& e, std::size_t n, Flavor f) {
    const GModule& m = e.module();
    const auto& emb = e.embedding(n, f);
    const auto& ex = m.exponents();
    const std::size_t k = m.rank();
    Cochain phi{n, std::vector<std::int64_t>(emb.rows, 0)};
    for (const auto& col : emb.columns) {
        const auto a = static_cast<std::int64_t>(c.uniform(m.exponent()));
        if (!a) continue;
        for (auto [i, v] : col) phi.values[i] = floor_mod(phi.values[i] + a * floor_mod(v, ex[i % k]), ex[i % k]);
    }
    return phi;
}

// random representative combination plus a random flavor coboundary
Cochain random_cocycle(ClaimContext& c, CohomologyEngine& e, std::size_t n, Flavor f) {
    const GModule& m = e.module();
    const auto h = e.cohomology(n, f);
    Cochain phi = n ? coboundary(m, random_member(c, e, n - 1, f), c.opt.limits) : zero_cochain(m, 0);
    for (std::size_t i = 0; i < h.representatives.size(); ++i)
        phi = cochain_add(m, phi,
                          cochain_scale(m, static_cast<std::int64_t>(c.uniform(h.invariants.factors[i])),
                                        h.representatives[i]));
    return phi;
}

bool sparse_is_zero(const GModule& m, SparseIntVector v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < v.size();) {
        std::int64_t sum = 0;
        std::size_t j = i;
        for (; j < v.size() && v[j].first == v[i].first; ++j) sum += v[j].second;
        if (floor_mod(sum, m.exponents()[v[i].first % k]) != 0) return false;
        i = j;
    }
    return true;
}

oracle::Table to_table(const GModule& m, const Cochain& c) {
    const std::size_t k = m.rank();
    oracle::Table t(c.values.size() / (k ? k : 1));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = c.at(m, i);
    return t;
}

json cochain_witness(const std::string& fixture, const Cochain& c) {
    return {{"fixture", fixture}, {"cochain", cochain_to_json(c)}};
}

// every class of `target` spanned by the comparison image
bool in_image(const ComparisonReport& r, const std::vector<std::int64_t>& coords) {
    const auto& src = r.source_invariants.factors;
    const auto& tgt = r.target_invariants.factors;
    std::vector<std::int64_t> a(src.size(), 0);
    while (true) {
        bool hit = true;
        for (std::size_t i = 0; i < tgt.size() && hit; ++i) {
            std::int64_t v = 0;
            for (std::size_t j = 0; j < src.size(); ++j) v += a[j] * r.matrix[j][i];
            hit = floor_mod(v - coords[i], tgt[i]) == 0;
        }
        if (hit) return true;
        std::size_t j = 0;
        for (; j < src.size(); ++j) {
            if (++a[j] < src[j]) break;
            a[j] = 0;
        }
        if (j == src.size()) return false;
    }
}

// every oracle-sized instance named by the agreement criteria
struct OracleInstance {
    const ModuleFixture* fixture;
    std::size_t max_degree;
};

std::vector<OracleInstance> oracle_instances(ClaimContext& c) {
    std::vector<OracleInstance> out;
    for (const auto& mf : c.fx.modules()) {
        if (!mf.module) c.module(mf);
        const auto q = mf.module->group().order();
        if (q <= 2) out.push_back({&mf, 3});
        else if (q == 3 && mf.module->cardinality() <= 3) out.push_back({&mf, 2});
    }
    return out;
}

// ---------------------------------------------------------------- algebra

std::vector<FiniteGroup> builder_groups(ClaimContext& c) {
    std::vector<FiniteGroup> gs;
    for (std::size_t n = 1; n <= 12; ++n) gs.push_back(build_cyclic(n));
    for (std::size_t n = 1; n <= 4; ++n) gs.push_back(build_symmetric(n));
    gs.push_back(direct_product(build_cyclic(2), build_cyclic(2)));
    gs.push_back(direct_product(build_cyclic(3), build_cyclic(3)));
    gs.push_back(direct_product(build_symmetric(3), build_cyclic(2)));
    for (const auto& gf : c.fx.groups()) {
        if (!gf.group) throw ClaimFailure{{{"fixture", gf.id}, {"error", gf.error}}};
        gs.push_back(*gf.group);
    }
    return gs;
}

std::vector<std::vector<std::int64_t>> raw_table(const FiniteGroup& g) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : g.table_rows()) rows.emplace_back(r.begin(), r.end());
    return rows;
}

void builders_validate(ClaimContext& c) {
    std::size_t n = 0;
    for (const auto& g : builder_groups(c)) {
        c.require(validate_group(raw_table(g), g.name()) == g, [&] { return json{{"group", g.name()}}; });
        std::vector<Element> perm(g.order());
        std::iota(perm.begin(), perm.end(), Element{0});
        if (perm.size() > 2) std::shuffle(perm.begin() + 1, perm.end(), c.rng);
        const auto h = relabel(g, perm);
        c.require(validate_group(raw_table(h), h.name()) == h, [&] { return json{{"group", g.name()}, {"relabel", perm}}; });
        c.require(group_from_json(group_to_json(g)) == g, [&] { return json{{"group", g.name()}, {"json", group_to_json(g)}}; });
        ++n;
    }
    c.details()["groups"] = n;
}

void action_additive(ClaimContext& c) {
    for (const auto& mf : c.fx.modules()) {
        const auto& m = c.module(mf);
        const auto q = m.group().order();
        for (std::size_t s = 0; s < c.opt.samples; ++s) {
            const auto g = static_cast<Element>(c.uniform(q));
            const auto a = m.element_at(c.uniform(m.cardinality())), b = m.element_at(c.uniform(m.cardinality()));
            c.require(m.act(g, m.add(a, b)) == m.add(m.act(g, a), m.act(g, b)),
                      [&] { return json{{"fixture", mf.id}, {"g", g}, {"m", a}, {"m'", b}}; });
            c.require(m.act(FiniteGroup::identity, a) == a, [&] { return json{{"fixture", mf.id}, {"m", a}}; });
        }
    }
}

void order_two_census_claim(ClaimContext& c) {
    std::size_t with = 0, without = 0;
    for (const auto& g : builder_groups(c)) {
        const auto census = order_two_census(g);
        if (census.has_order_two) {
            ++with;
            c.require(census.witness != FiniteGroup::identity && g.mul(census.witness, census.witness) == 0,
                      [&] { return json{{"group", g.name()}, {"witness", census.witness}}; });
            continue;
        }
        ++without;
        std::vector<int> seen(g.order(), 0);
        for (auto [x, y] : census.pairing) {
            c.require(g.mul(x, y) == 0, [&] { return json{{"group", g.name()}, {"pair", {x, y}}}; });
            ++seen[x];
            ++seen[y];
        }
        for (Element x = 1; x < g.order(); ++x)
            c.require(seen[x] == 1, [&] { return json{{"group", g.name()}, {"element", x}, {"covered", seen[x]}}; });
    }
    c.details()["groups_with_involutions"] = with;
    c.details()["groups_without_involutions"] = without;
}

// ---------------------------------------------------------------- linalg

IntMatrix random_matrix(ClaimContext& c, std::size_t r, std::size_t k, int lo, int hi) {
    IntMatrix a(r, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = lo + static_cast<int>(c.uniform(hi - lo + 1));
    return a;
}

json matrix_json(const IntMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void snf_reconstruction(ClaimContext& c) {
    for (std::size_t s = 0; s < c.opt.samples; ++s) {
        const auto a = random_matrix(c, 1 + c.uniform(8), 1 + c.uniform(8), -9, 9);
        const auto r = smith_normal_form(a);
        auto wit = [&] { return json{{"matrix", matrix_json(a)}}; };
        c.require(r.U * a * r.V == r.S && r.S.is_diagonal(), wit);
        c.require(abs(determinant(r.U)) == 1 && abs(determinant(r.V)) == 1, wit);
        const std::size_t d = std::min(a.rows(), a.cols());
        for (std::size_t i = 0; i < d; ++i) {
            c.require(r.S(i, i) >= 0, wit);
            if (i + 1 < d) c.require(r.S(i + 1, i + 1) % (r.S(i, i) == 0 ? Integer(1) : r.S(i, i)) == 0 &&
                                         (r.S(i, i) != 0 || r.S(i + 1, i + 1) == 0),
                                     wit);
        }
    }
}

void solve_mod_claim(ClaimContext& c) {
    std::size_t solvable = 0, unsolvable = 0;
    for (std::size_t s = 0; s < c.opt.samples; ++s) {
        const std::size_t rows = 1 + c.uniform(3), cols = 1 + c.uniform(3);
        const auto a = random_matrix(c, rows, cols, -5, 5);
        std::vector<Integer> moduli(rows), b(rows);
        std::int64_t l = 1;
        for (auto& q : moduli) {
            const auto v = static_cast<std::int64_t>(2 + c.uniform(6));
            q = v;
            l = std::lcm(l, v);
        }
        if (s % 2 == 0) {
            for (std::size_t i = 0; i < rows; ++i) b[i] = static_cast<std::int64_t>(c.uniform(moduli[i].convert_to<std::uint64_t>()));
        } else {
            std::vector<Integer> x0(cols);
            for (auto& x : x0) x = static_cast<std::int64_t>(c.uniform(l));
            for (std::size_t i = 0; i < rows; ++i) {
                Integer v = 0;
                for (std::size_t j = 0; j < cols; ++j) v += a(i, j) * x0[j];
                b[i] = ((v % moduli[i]) + moduli[i]) % moduli[i];
            }
        }
        auto satisfies = [&](const std::vector<Integer>& x) {
            for (std::size_t i = 0; i < rows; ++i) {
                Integer v = -b[i];
                for (std::size_t j = 0; j < cols; ++j) v += a(i, j) * x[j];
                if (v % moduli[i] != 0) return false;
            }
            return true;
        };
        auto wit = [&] {
            json m = json::array(), bb = json::array();
            for (std::size_t i = 0; i < rows; ++i) {
                m.push_back(moduli[i].str());
                bb.push_back(b[i].str());
            }
            return json{{"matrix", matrix_json(a)}, {"b", bb}, {"moduli", m}};
        };
        const auto x = solve_mod(a, b, moduli);
        if (x) c.require(x->size() == cols && satisfies(*x), wit);
        if (sat_pow(static_cast<std::uint64_t>(l), cols) > 1'000'000) continue;
        bool found = false;
        std::vector<Integer> cand(cols, 0);
        std::vector<std::int64_t> idx(cols, 0);
        while (!found) {
            for (std::size_t j = 0; j < cols; ++j) cand[j] = idx[j];
            found = satisfies(cand);
            std::size_t j = 0;
            for (; j < cols; ++j) {
                if (++idx[j] < l) break;
                idx[j] = 0;
            }
            if (j == cols) break;
        }
        c.require(found == x.has_value(), wit);
        ++(found ? solvable : unsolvable);
    }
    c.details()["exhaustive_solvable"] = solvable;
    c.details()["exhaustive_unsolvable"] = unsolvable;
}

void homology_vs_oracle(ClaimContext& c) {
    std::size_t compared = 0;
    for (const auto& inst : oracle_instances(c)) {
        const auto& m = c.module(*inst.fixture);
        const std::size_t k = m.rank(), q = m.group().order();
        for (std::size_t n = 0; n <= inst.max_degree; ++n) {
            if (sat_pow(m.cardinality(), sat_pow(q, n)) > c.opt.oracle_budget) continue;
            const auto d_out = coboundary_matrix(m, n, c.opt.limits).to_int_matrix();
            const std::size_t width = tuple_count(q, n) * k;
            const auto d_in = n ? coboundary_matrix(m, n - 1, c.opt.limits).to_int_matrix() : IntMatrix(width, 0);
            std::vector<Integer> mid, out;
            for (std::size_t i = 0; i < width; ++i) mid.emplace_back(m.exponents()[i % k]);
            for (std::size_t i = 0; i < tuple_count(q, n + 1) * k; ++i) out.emplace_back(m.exponents()[i % k]);
            const auto engine = homology_invariants(d_out, d_in, mid, out).factors;
            const auto brute =
                oracle::enumerate_cohomology(m, n, Flavor::classical, {c.opt.oracle_budget});
            c.require(engine == brute, [&] {
                return json{{"fixture", inst.fixture->id}, {"degree", n}, {"linalg", engine}, {"oracle", brute}};
            });
            ++compared;
        }
    }
    c.details()["instances"] = compared;
}

// ---------------------------------------------------------------- cochain

void d_squared_zero(ClaimContext& c) {
    std::size_t bases = 0;
    for (const auto& mf : c.fx.modules()) {
        const auto& m = c.module(mf);
        const std::size_t q = m.group().order(), k = m.rank();
        for (std::size_t n = 0; n <= 4; ++n) {
            check_cochain_size(m, n + 1, c.opt.limits);
            for (std::size_t t = 0; t < tuple_count(q, n); ++t)
                for (std::size_t j = 0; j < k; ++j) {
                    const auto dd = apply_coboundary(m, n + 1, coboundary_of_basis(m, n, t, j));
                    c.require(sparse_is_zero(m, dd), [&] {
                        return json{{"fixture", mf.id}, {"degree", n}, {"tuple", decode_tuple(q, n, t)}, {"coordinate", j}};
                    });
                    ++bases;
                }
        }
    }
    c.details()["basis_cochains"] = bases;
}

void subcomplex_closure(ClaimContext& c) {
    std::size_t gens = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        for (auto f : {Flavor::normalized, Flavor::symmetric, Flavor::exterior})
            for (std::size_t n = 0; n <= 3; ++n) {
                const auto& emb = e.embedding(n, f);
                for (std::size_t j = 0; j < emb.cols(); ++j) {
                    const auto d = cochain_from_sparse(m, n + 1, apply_coboundary(m, n, emb.columns[j]));
                    c.require(is_member(m, d, f), [&] {
                        return json{{"fixture", mf.id}, {"flavor", to_string(f)}, {"degree", n}, {"generator", j}};
                    });
                    ++gens;
                }
            }
    }
    c.details()["generators"] = gens;
}

void tau_involution(ClaimContext& c) {
    const std::size_t reps = std::min<std::size_t>(c.opt.samples, 5);
    for (const auto& mf : c.fx.modules()) {
        const auto& m = c.module(mf);
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t s = 0; s < reps; ++s) {
                    const auto phi = random_cochain(c, m, n);
                    c.require(tau(m, i, tau(m, i, phi)) == phi, [&] {
                        auto w = cochain_witness(mf.id, phi);
                        w["i"] = i;
                        return w;
                    });
                }
    }
}

void exterior_adjacent_inverse(ClaimContext& c) {
    std::size_t gens = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        const std::size_t top = m.group().order() <= 5 ? 4 : 3;
        for (std::size_t n = 2; n <= top; ++n) {
            const auto& emb = e.embedding(n, Flavor::exterior);
            for (std::size_t j = 0; j < emb.cols(); ++j) {
                const auto phi = cochain_from_sparse(m, n, emb.columns[j]);
                c.require(vanishes_on_adjacent_inverses(m, phi), [&] { return cochain_witness(mf.id, phi); });
                ++gens;
            }
        }
    }
    c.details()["generators"] = gens;
}

// ---------------------------------------------------------------- cohomology

void cohomology_oracle_agreement(ClaimContext& c) {
    std::size_t compared = 0, over_budget = 0;
    for (const auto& inst : oracle_instances(c)) {
        auto& e = c.engine(*inst.fixture);
        const auto& m = e.module();
        for (std::size_t n = 0; n <= inst.max_degree; ++n)
            for (auto f : kFlavors) {
                if (sat_pow(m.cardinality(), sat_pow(m.group().order(), n)) > c.opt.oracle_budget) {
                    ++over_budget;
                    continue;
                }
                const auto engine = e.cohomology(n, f).invariants.factors;
                const auto brute = oracle::enumerate_cohomology(m, n, f, {c.opt.oracle_budget});
                c.require(engine == brute, [&] {
                    return json{{"fixture", inst.fixture->id}, {"degree", n}, {"flavor", to_string(f)},
                                {"engine", engine}, {"oracle", brute}};
                });
                ++compared;
            }
    }
    c.details()["instances"] = compared;
    c.details()["over_budget"] = over_budget;
}

json comparison_witness(const std::string& id, const ComparisonReport& r) {
    return {{"fixture", id}, {"comparison", comparison_to_json(r)}};
}

void alpha_low_degrees(ClaimContext& c) {
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        for (std::size_t n = 0; n <= 2; ++n) {
            const auto r = e.comparison_map(n, Flavor::symmetric, Flavor::classical);
            c.require(r.injective && (n == 2 || r.surjective), [&] { return comparison_witness(mf.id, r); });
            if (n == 2 && !r.surjective)
                c.details()["alpha2_not_surjective"].push_back(mf.id);
        }
    }
}

void gamma_bijective(ClaimContext& c) {
    std::size_t maps = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const std::size_t top = e.module().group().order() <= 5 ? 4 : 3;
        for (std::size_t n = 0; n <= top; ++n) {
            const auto r = e.comparison_map(n, Flavor::exterior, Flavor::symmetric);
            c.require(r.injective && r.surjective, [&] { return comparison_witness(mf.id, r); });
            ++maps;
        }
    }
    c.details()["maps"] = maps;
}

void alpha3_injective(ClaimContext& c) {
    for (const auto& mf : c.fx.modules()) {
        if (!mf.module || !two_torsion_free(mf.module->group())) continue;
        auto& e = c.engine(mf);
        const auto r = e.comparison_map(3, Flavor::symmetric, Flavor::classical);
        c.require(r.injective, [&] { return comparison_witness(mf.id, r); });
        c.details()["hs3"][mf.id] = r.source_invariants.factors;
    }
}

void symmetry_criterion(ClaimContext& c) {
    std::size_t sym = 0, nonsym = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        for (std::size_t n = 2; n <= 3; ++n)
            for (std::size_t s = 0; s < c.opt.samples; ++s) {
                const Flavor f = s % 2 ? Flavor::exterior : Flavor::normalized;
                const auto phi = random_cocycle(c, e, n, f);
                const auto flags = lemma_symmetry_criterion(m, phi);
                c.require(flags.by_tau == flags.by_vanishing && (f == Flavor::normalized || flags.by_tau),
                          [&] { return cochain_witness(mf.id, phi); });
                ++(flags.by_tau ? sym : nonsym);
            }
    }
    c.details()["symmetric_samples"] = sym;
    c.details()["nonsymmetric_samples"] = nonsym;
}

void two_pattern(ClaimContext& c) {
    std::size_t agree = 0, disagree = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        std::size_t local = 0;
        json first;
        for (std::size_t s = 0; s < c.opt.samples; ++s) {
            const Flavor f = s % 2 ? Flavor::exterior : Flavor::normalized;
            const auto phi = random_cocycle(c, e, 3, f);
            const auto flags = lemma_symmetry_criterion(m, phi);
            c.tally();
            if (flags.by_two_pattern.value_or(false) == flags.by_tau) {
                ++agree;
                continue;
            }
            ++disagree;
            if (!local++) first = phi.values;
        }
        if (local) {
            c.finding(mf.id + ": two-pattern flag differs from symmetry on " + std::to_string(local) + " of " +
                      std::to_string(c.opt.samples) + " sampled 3-cocycles");
            c.details()["first_discrepancy"][mf.id] = first;
        }
    }
    c.details()["agree"] = agree;
    c.details()["disagree"] = disagree;
}

void coboundary_criterion(ClaimContext& c) {
    std::size_t sym = 0, nonsym = 0;
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        for (std::size_t s = 0; s < c.opt.samples; ++s) {
            const auto h = random_member(c, e, 2, Flavor::exterior);
            const auto z = random_cocycle(c, e, 2, s % 2 ? Flavor::exterior : Flavor::normalized);
            const auto g = cochain_add(m, h, z);
            const auto phi = coboundary(m, g);
            const auto flags = lemma_coboundary_criterion(m, phi, g);
            c.require(flags.g_symmetric == flags.g_vanishes_on_inverses, [&] { return cochain_witness(mf.id, g); });
            ++(flags.g_symmetric ? sym : nonsym);
        }
    }
    c.details()["symmetric_g"] = sym;
    c.details()["nonsymmetric_g"] = nonsym;
}

void functoriality(ClaimContext& c) {
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto gamma = e.comparison_map(n, Flavor::exterior, Flavor::symmetric);
            const auto alpha = e.comparison_map(n, Flavor::symmetric, Flavor::classical);
            const auto direct = e.comparison_map(n, Flavor::exterior, Flavor::classical);
            const auto composite = compose_matrices(gamma, alpha);
            c.require(composite == direct.matrix, [&] {
                return json{{"fixture", mf.id}, {"degree", n}, {"direct", direct.matrix}, {"composite", composite}};
            });
        }
    }
}

// ---------------------------------------------------------------- crossed

// general samples, weak-shape samples and the canonical sections
std::vector<SSection> test_sections(ClaimContext& c, const CrossedExtension& xe, std::size_t count) {
    auto out = sample_normalized_sections(xe, count, c.rng());
    out.push_back(normalised_section(xe));
    if (two_torsion_free(xe.g())) {
        for (auto& s : sample_normalized_sections(xe, count, c.rng(), true)) out.push_back(std::move(s));
        out.push_back(weakly_symmetric_section(xe));
    }
    const auto found = find_symmetric_section(xe);
    if (found.section) out.push_back(*found.section);
    return out;
}

json section_witness(const std::string& id, const SSection& s) { return {{"fixture", id}, {"section", section_to_json(s)}}; }

void fixtures_validate(ClaimContext& c) {
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        auto& e = c.engine(ef);
        const auto doc = crossed_extension_to_json(xe);
        c.require(crossed_extension_to_json(crossed_extension_from_json(doc)) == doc,
                  [&] { return json{{"fixture", ef.id}, {"document", doc}}; });
        std::vector<SSection> secs{normalised_section(xe)};
        if (two_torsion_free(xe.g())) secs.push_back(weakly_symmetric_section(xe));
        for (const auto& s : secs) {
            c.require(s.normalized, [&] { return section_witness(ef.id, s); });
            const auto f = three_cocycle(xe, s);
            c.require(is_normalized(xe.g(), f, xe.m().rank()) && coboundary(xe.m(), f).is_zero(),
                      [&] { return cochain_witness(ef.id, f); });
        }
        const bool zero = e.is_coboundary(three_cocycle(xe, secs[0]), Flavor::classical).has_value();
        c.details()["xi_class_zero"][ef.id] = zero;
    }
}

void class_section_independence(ClaimContext& c) {
    std::size_t pairs = 0;
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        auto& e = c.engine(ef);
        const auto f0 = three_cocycle(xe, normalised_section(xe));
        const auto secs = sample_normalized_sections(xe, c.opt.samples, c.rng());
        std::size_t distinct = 0;
        for (const auto& s : secs) {
            const auto f = three_cocycle(xe, s);
            if (f != f0) ++distinct;
            c.require(e.is_coboundary(cochain_sub(xe.m(), f, f0), Flavor::classical).has_value(),
                      [&] { return section_witness(ef.id, s); });
            ++pairs;
        }
        c.details()["sections"][ef.id] = secs.size();
        c.details()["distinct_cocycles"][ef.id] = distinct;
    }
    c.details()["pairs"] = pairs;
}

void identities_vs_symmetric_cocycle(ClaimContext& c) {
    std::size_t yes = 0, no = 0;
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        for (const auto& s : test_sections(c, xe, c.opt.samples)) {
            const bool p = prop41_check(xe, s);
            c.require(p == is_member(xe.m(), three_cocycle(xe, s), Flavor::symmetric),
                      [&] { return section_witness(ef.id, s); });
            ++(p ? yes : no);
        }
    }
    c.details()["identities_hold"] = yes;
    c.details()["identities_fail"] = no;
}

void weak_symmetric_identities(ClaimContext& c) {
    std::size_t weak = 0, other = 0, agree_true = 0;
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        if (!two_torsion_free(xe.g())) continue;
        for (const auto& s : test_sections(c, xe, c.opt.samples)) {
            const bool d = def44_check(xe, s);
            if (!s.weakly_symmetric) {
                c.require(!d, [&] { return section_witness(ef.id, s); });
                ++other;
                continue;
            }
            c.require(d == prop41_check(xe, s), [&] { return section_witness(ef.id, s); });
            ++weak;
            agree_true += d;
        }
    }
    c.details()["weakly_symmetric_sections"] = weak;
    c.details()["symmetric_sections"] = agree_true;
    c.details()["other_sections"] = other;
}

void main_theorem(ClaimContext& c) {
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        auto& e = c.engine(ef);
        const auto search = find_symmetric_section(xe);
        json row = {{"search", to_string(search.status)}, {"out_of_theorem_scope", search.out_of_theorem_scope}};
        if (search.out_of_theorem_scope) {
            const bool image = e.class_in_image_alpha3(three_cocycle(xe, normalised_section(xe))).has_value();
            row["in_image_alpha3"] = image;
            if (image != (search.status == SearchStatus::found))
                c.finding(ef.id + " (G has elements of order two): search " + to_string(search.status) +
                          " but class " + (image ? "in" : "not in") + " the image of symmetric H^3");
            c.details()["extensions"][ef.id] = row;
            continue;
        }
        c.require(search.status != SearchStatus::budget_exhausted, [&] { return json{{"fixture", ef.id}, {"row", row}}; });
        const bool found = search.status == SearchStatus::found;
        if (found)
            c.require(search.section->symmetric && def44_check(xe, *search.section) && prop41_check(xe, *search.section),
                      [&] { return section_witness(ef.id, *search.section); });
        for (const auto& s : {weakly_symmetric_section(xe), normalised_section(xe)}) {
            const bool image = e.class_in_image_alpha3(three_cocycle(xe, s)).has_value();
            row["in_image_alpha3"] = image;
            c.require(found == image, [&] { return json{{"fixture", ef.id}, {"row", row}, {"section", section_to_json(s)}}; });
        }
        c.details()["extensions"][ef.id] = row;
    }
}

void hs2_cross_check(ClaimContext& c) {
    std::size_t found_total = 0, none_total = 0;
    for (const std::string id : {"C2/Z2", "C3/Z3"}) {
        const auto* mf = c.fx.find_module(id);
        if (!mf) throw ClaimFailure{{{"fixture", id}, {"error", "missing from manifest"}}};
        auto& e = c.engine(*mf);
        const auto& m = e.module();
        const auto& g = m.group();
        const std::size_t q = g.order();
        const auto alpha = e.comparison_map(2, Flavor::symmetric, Flavor::classical);
        // odometer over normalized 2-cochains
        std::vector<std::size_t> slots;
        for (Element x = 1; x < q; ++x)
            for (Element y = 1; y < q; ++y) slots.push_back(encode_tuple(q, {x, y}));
        const auto d = m.exponents()[0];
        std::vector<std::int64_t> a(slots.size(), 0);
        while (true) {
            Cochain f = zero_cochain(m, 2);
            for (std::size_t i = 0; i < slots.size(); ++i) f.values[slots[i]] = a[i];
            if (coboundary(m, f).is_zero()) {
                const bool sym = is_member(m, f, Flavor::symmetric);
                const bool image = in_image(alpha, *e.class_coordinates(f, Flavor::classical));
                const bool found = symmetric_section_search_2d(extension_from_2cocycle(m, f)).has_value();
                c.require(found == image && (!sym || found), [&] {
                    auto w = cochain_witness(id, f);
                    w["symmetric"] = sym;
                    w["in_image_alpha2"] = image;
                    w["section_found"] = found;
                    return w;
                });
                ++(found ? found_total : none_total);
            }
            std::size_t i = 0;
            for (; i < a.size(); ++i) {
                if (++a[i] < d) break;
                a[i] = 0;
            }
            if (i == a.size()) break;
        }
    }
    // Z/4 as an extension of Z/2 by Z/2
    const auto m = trivial_module(build_cyclic(2), {2});
    auto f = zero_cochain(m, 2);
    f.values[encode_tuple(2, {1, 1})] = 1;
    c.require(!symmetric_section_search_2d(extension_from_2cocycle(m, f)).has_value(),
              [&] { return cochain_witness("Z/4 over Z/2", f); });
    c.details()["cocycles_with_section"] = found_total;
    c.details()["cocycles_without_section"] = none_total;
}

std::vector<Element> random_perm(ClaimContext& c, std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    if (n > 2) std::shuffle(p.begin() + 1, p.end(), c.rng);
    return p;
}

json extension_verdicts(const CrossedExtension& xe, CohomologyEngine& e) {
    const auto f = three_cocycle(xe, normalised_section(xe));
    json v = {{"class_zero", e.is_coboundary(f, Flavor::classical).has_value()},
              {"in_image_alpha3", e.class_in_image_alpha3(f).has_value()},
              {"splits", split_check(xe).splits},
              {"search", to_string(find_symmetric_section(xe).status)}};
    return v;
}

void relabel_invariance(ClaimContext& c) {
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        auto& e = c.engine(ef);
        const auto before = extension_verdicts(xe, e);
        const auto tp = random_perm(c, xe.t().order()), rp = random_perm(c, xe.r().order());
        const auto moved = relabel_crossed_extension(xe, tp, rp);
        const auto after = extension_verdicts(moved, e);
        c.require(before == after, [&] {
            return json{{"fixture", ef.id}, {"t_perm", tp}, {"r_perm", rp}, {"before", before}, {"after", after}};
        });
        c.details()["verdicts"][ef.id] = before;
    }
}

// ---------------------------------------------------------------- two_group

void strict_laws(ClaimContext& c) {
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        const auto cat = build_cat_group(crossed_module_of(xe), kLawLimit, c.rng());
        c.require(cat.report().exhaustive, [&] { return json{{"fixture", ef.id}, {"exhaustive", false}}; });
        c.details()["law_checks"][ef.id] = cat.report().checks;
    }
}

void sfunctor_equivalences(ClaimContext& c) {
    std::size_t mono = 0, sym = 0, total = 0;
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        const auto cat = build_cat_group(crossed_module_of(xe), 2000, c.rng());
        auto secs = test_sections(c, xe, c.opt.samples);
        if (auto sp = split_check(xe); sp.monoidal_section) secs.push_back(*sp.monoidal_section);
        for (const auto& s : secs) {
            const auto sf = section_functor(xe, cat, s);
            const bool m = is_monoidal(cat, sf), y = is_symmetric_sfunctor(cat, sf);
            const auto f = three_cocycle(xe, s);
            c.require(m == f.is_zero() && y == prop41_check(xe, s) && (!m || y), [&] {
                auto w = section_witness(ef.id, s);
                w["monoidal"] = m;
                w["symmetric"] = y;
                return w;
            });
            mono += m;
            sym += y;
            ++total;
        }
    }
    c.details()["sections"] = total;
    c.details()["monoidal"] = mono;
    c.details()["symmetric"] = sym;
}

void split_check_claim(ClaimContext& c) {
    for (const auto& ef : c.fx.extensions()) {
        const auto& xe = c.extension(ef);
        auto& e = c.engine(ef);
        const auto sp = split_check(xe);
        auto secs = sample_normalized_sections(xe, 3, c.rng());
        secs.push_back(normalised_section(xe));
        c.require(secs.size() >= 2, [&] { return json{{"fixture", ef.id}, {"sections", secs.size()}}; });
        for (const auto& s : secs) {
            const bool zero = e.is_coboundary(three_cocycle(xe, s), Flavor::classical).has_value();
            c.require(sp.splits == zero, [&] {
                auto w = section_witness(ef.id, s);
                w["splits"] = sp.splits;
                return w;
            });
        }
        c.details()["splits"][ef.id] = sp.splits;
    }
}

// ---------------------------------------------------------------- oracle

void oracle_engine_agreement(ClaimContext& c) {
    std::size_t compared = 0, witnesses = 0;
    const std::size_t reps = std::min<std::size_t>(c.opt.samples, 10);
    for (const auto& inst : oracle_instances(c)) {
        auto& e = c.engine(*inst.fixture);
        const auto& m = e.module();
        const std::size_t q = m.group().order();
        for (std::size_t n = 1; n <= inst.max_degree; ++n) {
            if (sat_pow(m.cardinality(), sat_pow(q, n - 1)) > c.opt.oracle_budget) continue;
            for (auto f : kFlavors)
                for (std::size_t s = 0; s < reps; ++s) {
                    const auto phi = s ? random_cocycle(c, e, n, f) : zero_cochain(m, n);
                    const auto mine = e.is_coboundary(phi, f);
                    const auto brute = oracle::exhaustive_coboundary(m, n, to_table(m, phi), f, {c.opt.oracle_budget});
                    auto wit = [&] {
                        auto w = cochain_witness(inst.fixture->id, phi);
                        w["flavor"] = to_string(f);
                        w["engine"] = mine.has_value();
                        w["oracle"] = brute.has_value();
                        return w;
                    };
                    c.require(mine.has_value() == brute.has_value(), wit);
                    if (brute)
                        c.require(oracle::coboundary(m, n - 1, *brute) == to_table(m, phi) &&
                                      oracle::is_member(m, n - 1, *brute, f),
                                  wit);
                    if (mine) c.require(coboundary(m, *mine) == phi && is_member(m, *mine, f), wit);
                    ++compared;
                    witnesses += brute.has_value();
                }
        }
    }
    c.details()["cocycles"] = compared;
    c.details()["coboundaries"] = witnesses;
}

// ---------------------------------------------------------------- cli

void round_trip(ClaimContext& c) {
    std::size_t docs = 0;
    auto same = [&](const std::string& id, const std::string& a, const std::string& b) {
        c.require(a == b, [&] { return json{{"fixture", id}, {"first", a}, {"second", b}}; });
        ++docs;
    };
    for (const auto& mf : c.fx.modules()) {
        auto& e = c.engine(mf);
        const auto& m = e.module();
        for (std::size_t n = 0; n <= 2; ++n) {
            for (auto f : kFlavors) {
                const auto text = render_document(cohomology_to_json(m, e.cohomology(n, f), true));
                const auto back = cohomology_from_json(m, json::parse(text));
                same(mf.id, text, render_document(cohomology_to_json(m, back, true)));
            }
            const auto text = render_document(comparison_to_json(e.comparison_map(n, Flavor::symmetric, Flavor::classical)));
            same(mf.id, text, render_document(comparison_to_json(comparison_from_json(json::parse(text)))));
        }
        const auto mtext = render_document(module_to_json(m));
        same(mf.id, mtext, render_document(module_to_json(module_from_json(m.group(), json::parse(mtext)))));
        const auto gtext = render_document(group_to_json(m.group()));
        same(mf.id, gtext, render_document(group_to_json(group_from_json(json::parse(gtext)))));
    }
    for (const auto& ef : c.fx.extensions()) {
        const auto text = render_document(crossed_extension_to_json(c.extension(ef)));
        same(ef.id, text,
             render_document(crossed_extension_to_json(crossed_extension_from_json(json::parse(text)))));
    }
    c.details()["documents"] = docs;
}

void exit_codes(ClaimContext& c) {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return exit_code(e.kind());
        }
        return 0;
    };
    const auto m = trivial_module(build_cyclic(3), {3});
    const std::vector<std::pair<std::string, std::pair<int, int>>> cases = {
        {"malformed group table", {code_of([] { parse_group_spec(R"({"table": [[0, 1], [1, 1]]})"); }), 2}},
        {"unknown shorthand", {code_of([] { parse_group_spec("dihedral:x"); }), 2}},
        {"incompatible flavors", {code_of([&] { comparison_map(m, 2, Flavor::classical, Flavor::symmetric); }), 2}},
        {"size guard", {code_of([&] { cohomology(m, 4, Flavor::classical, Limits{100, 6}); }), 3}},
        {"oracle budget", {code_of([&] { oracle::enumerate_cohomology(m, 3, Flavor::classical, {1000}); }), 3}},
        {"valid input", {code_of([&] { cohomology(m, 1, Flavor::classical); }), 0}},
    };
    for (const auto& [name, pr] : cases)
        c.require(pr.first == pr.second,
                  [&] { return json{{"case", name}, {"exit_code", pr.first}, {"expected", pr.second}}; });
    c.require(exit_code(ErrorKind::internal_inconsistency) == 4, [] { return json{{"case", "internal"}}; });
}

}  // namespace

const std::vector<ClaimDef>& claim_defs() {
    static const std::vector<ClaimDef> defs = [] {
        std::vector<ClaimDef> d = {
            {{"algebra.action-additive", "algebra_core", "the module action is additive on sampled elements", 0, false},
             action_additive},
            {{"algebra.builders-validate", "algebra_core",
              "built and fixture groups pass table validation, also after relabeling and a JSON round trip", 0, false},
             builders_validate},
            {{"algebra.order-two-census", "algebra_core",
              "the inverse pairing covers each nonidentity element once with x y = 1, or an involution is named", 0,
              false},
             order_two_census_claim},
            {{"cli.exit-codes", "cli", "error kinds map to exit codes 2, 3 and 4", 0, false}, exit_codes},
            {{"cli.round-trip", "cli", "parsing an emitted document and rendering it again is byte-identical", 0,
              false},
             round_trip},
            {{"cochain.d-squared-zero", "cochain_complex", "d d vanishes on every basis cochain up to degree 4", 1,
              false},
             d_squared_zero},
            {{"cochain.exterior-adjacent-inverse", "cochain_complex",
              "exterior cochains of degree >= 2 vanish on tuples with an adjacent inverse pair", 0, false},
             exterior_adjacent_inverse},
            {{"cochain.subcomplex-closure", "cochain_complex",
              "d maps every normalized, symmetric and exterior generator into the same flavor, degrees <= 3", 2, false},
             subcomplex_closure},
            {{"cochain.tau-involution", "cochain_complex", "each tau_i is an involution", 0, false}, tau_involution},
            {{"cohomology.alpha-low-degrees", "cohomology_engine",
              "symmetric -> classical is bijective in degrees 0, 1 and injective in degree 2", 4, false},
             alpha_low_degrees},
            {{"cohomology.alpha3-injective", "cohomology_engine",
              "symmetric -> classical is injective in degree 3 for groups without involutions", 4, false},
             alpha3_injective},
            {{"cohomology.coboundary-criterion", "cohomology_engine",
              "for normalized g with dg symmetric: g symmetric iff g(x, x^-1) = 0", 5, false},
             coboundary_criterion},
            {{"cohomology.functoriality", "cohomology_engine",
              "exterior -> classical equals the composite through symmetric cohomology", 0, false},
             functoriality},
            {{"cohomology.gamma-bijective", "cohomology_engine",
              "exterior -> symmetric is bijective in degrees <= 3, and in degree 4 when |G| <= 5", 4, false},
             gamma_bijective},
            {{"cohomology.oracle-agreement", "cohomology_engine",
              "engine invariant factors equal brute-force enumeration on every in-budget instance", 3, true},
             cohomology_oracle_agreement},
            {{"cohomology.symmetry-criterion", "cohomology_engine",
              "a normalized cocycle of degree 2 or 3 is symmetric iff it vanishes on adjacent inverse pairs", 5,
              false},
             symmetry_criterion},
            {{"cohomology.two-pattern", "cohomology_engine",
              "normalized 3-cocycles: phi(x, x^-1, y) = phi(x, y, y^-1) compared with symmetry (findings only)", 5,
              false},
             two_pattern},
            {{"crossed.class-section-independence", "crossed_ext",
              "3-cocycles of two normalized sections differ by a coboundary", 6, false},
             class_section_independence},
            {{"crossed.fixtures-validate", "crossed_ext",
              "fixture extensions validate and their sections give normalized 3-cocycles", 6, false},
             fixtures_validate},
            {{"crossed.hs2-cross-check", "crossed_ext",
              "a twisted product has an inverse-preserving section iff its class comes from a symmetric 2-cocycle", 8,
              false},
             hs2_cross_check},
            {{"crossed.main-theorem", "crossed_ext",
              "without involutions in G: a symmetric section exists iff the 3-cocycle class is in the image of "
              "symmetric cohomology",
              7, false},
             main_theorem},
            {{"crossed.relabel-invariance", "crossed_ext", "relabeling T and R leaves every verdict unchanged", 0,
              false},
             relabel_invariance},
            {{"crossed.section-identities-vs-symmetric-cocycle", "crossed_ext",
              "the section identities hold iff the section's 3-cocycle is symmetric", 6, false},
             identities_vs_symmetric_cocycle},
            {{"crossed.weak-symmetric-identities", "crossed_ext",
              "on weakly symmetric sections the symmetric-section identities coincide with the cocycle identities", 6,
              false},
             weak_symmetric_identities},
            {{"linalg.homology-vs-oracle", "exact_linalg",
              "homology_invariants on coboundary matrices equals brute-force enumeration", 3, true},
             homology_vs_oracle},
            {{"linalg.snf-reconstruction", "exact_linalg", "U A V = S with S in Smith form on random matrices", 0,
              false},
             snf_reconstruction},
            {{"linalg.solve-mod", "exact_linalg",
              "solutions satisfy the congruences and non-existence agrees with exhaustive search", 0, false},
             solve_mod_claim},
            {{"oracle.engine-agreement", "oracle",
              "engine and brute-force coboundary decisions agree, with verified witnesses", 3, true},
             oracle_engine_agreement},
            {{"twogroup.sfunctor-equivalences", "two_group",
              "monoidal iff the 3-cocycle is zero, symmetric iff the section identities hold, monoidal implies "
              "symmetric",
              9, false},
             sfunctor_equivalences},
            {{"twogroup.split-check", "two_group", "split_check agrees with the class of the 3-cocycle of any section",
              9, false},
             split_check_claim},
            {{"twogroup.strict-2-group-laws", "two_group",
              "category, bifunctor and strict associativity laws hold exhaustively", 9, false},
             strict_laws},
        };
        std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.info.id < b.info.id; });
        return d;
    }();
    return defs;
}

}  // namespace symcoh::detail
