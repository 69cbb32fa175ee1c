#include "symcoh/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

namespace {

std::size_t width_of(const GModule& m, std::size_t n) { return tuple_count(m.group().order(), n) * m.rank(); }

zn::SparseVector to_zn(const zn::Ring& ring, const SparseIntVector& v) {
    zn::SparseVector out;
    out.reserve(v.size());
    for (auto [i, x] : v) {
        const auto r = ring.from_signed(x);
        if (r != 0) out.emplace_back(i, r);
    }
    return out;
}

zn::Vector to_zn(const zn::Ring& ring, const Cochain& phi) {
    zn::Vector v(phi.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring.from_signed(phi.values[i]);
    return v;
}

Cochain from_zn(const GModule& m, std::size_t n, const zn::Vector& v) {
    Cochain c{n, std::vector<std::int64_t>(v.size())};
    const std::size_t k = m.rank();
    for (std::size_t i = 0; i < v.size(); ++i) c.values[i] = floor_mod(v[i], m.exponents()[i % k]);
    return c;
}

// d_i e_j for the coordinates whose exponent is a proper divisor of N.
std::vector<zn::SparseVector> relations(const GModule& m, std::size_t n) {
    std::vector<zn::SparseVector> rel;
    const std::size_t k = m.rank();
    std::vector<std::size_t> short_coords;
    for (std::size_t i = 0; i < k; ++i)
        if (m.exponents()[i] != m.exponent()) short_coords.push_back(i);
    if (short_coords.empty()) return rel;
    const std::size_t count = tuple_count(m.group().order(), n);
    for (std::size_t t = 0; t < count; ++t)
        for (auto i : short_coords)
            rel.push_back({{static_cast<std::uint32_t>(t * k + i), static_cast<zn::Residue>(m.exponents()[i])}});
    return rel;
}

// sum_j y_j columns[j], dense over Z/N
zn::Vector combine(const zn::Ring& ring, std::size_t width, const SparseIntMatrix& e, const zn::Vector& y,
                   std::size_t offset = 0) {
    zn::Vector z(width, 0);
    for (std::size_t j = 0; j < e.cols(); ++j) {
        const auto c = y[offset + j];
        if (c == 0) continue;
        for (auto [i, x] : e.columns[j]) z[i] = ring.add(z[i], ring.mul(c, ring.from_signed(x)));
    }
    return z;
}

bool is_cocycle(const GModule& m, const Cochain& phi) { return coboundary(m, phi, Limits{~std::size_t{0}, 64}).is_zero(); }

}  // namespace

SparseIntVector apply_coboundary(const GModule& m, std::size_t n, const SparseIntVector& phi) {
    SparseIntVector acc;
    const std::size_t k = m.rank();
    for (auto [idx, x] : phi) {
        if (x == 0) continue;
        for (auto [i, v] : coboundary_of_basis(m, n, idx / k, idx % k)) acc.emplace_back(i, v * x);
    }
    std::sort(acc.begin(), acc.end());
    SparseIntVector out;
    for (auto& e : acc) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(e);
    }
    std::erase_if(out, [&](auto& e) { return floor_mod(e.second, m.exponents()[e.first % k]) == 0; });
    return out;
}

struct CohomologyEngine::EmbeddingSlot {
    std::once_flag once;
    SparseIntMatrix value;
};

struct CohomologyEngine::Level {
    std::once_flag once;
    std::optional<zn::Quotient> quotient;
};

CohomologyEngine::CohomologyEngine(GModule m, Limits limits)
    : m_(std::move(m)), limits_(limits), ring_(static_cast<std::uint64_t>(m_.exponent())) {}

const SparseIntMatrix& CohomologyEngine::embedding(std::size_t n, Flavor flavor) const {
    std::shared_ptr<EmbeddingSlot> slot;
    {
        std::lock_guard lock(mutex_);
        auto& s = embeddings_[{n, flavor}];
        if (!s) s = std::make_shared<EmbeddingSlot>();
        slot = s;
    }
    std::call_once(slot->once, [&] { slot->value = subgroup_embedding(m_, n, flavor, limits_); });
    return slot->value;
}

const CohomologyEngine::Level& CohomologyEngine::level(std::size_t n, Flavor flavor) const {
    std::shared_ptr<Level> slot;
    {
        std::lock_guard lock(mutex_);
        auto& s = levels_[{n, flavor}];
        if (!s) s = std::make_shared<Level>();
        slot = s;
    }
    std::call_once(slot->once, [&] {
        check_cochain_size(m_, n + 1, limits_);
        const auto& e = embedding(n, flavor);
        const std::size_t wn = width_of(m_, n), w1 = width_of(m_, n + 1);

        std::vector<zn::SparseVector> images;
        images.reserve(e.cols());
        for (auto& col : e.columns) images.push_back(to_zn(ring_, apply_coboundary(m_, n, col)));
        const auto ker = zn::kernel(ring_, w1, images, relations(m_, n + 1));

        zn::HowellBasis cycles(ring_, wn);
        for (auto& y : ker) cycles.insert(combine(ring_, wn, e, y));
        const auto rel = relations(m_, n);
        for (auto& r : rel) cycles.insert(r);

        std::vector<zn::Vector> boundaries;
        if (n > 0)
            for (auto& col : embedding(n - 1, flavor).columns)
                boundaries.push_back(zn::densify(to_zn(ring_, apply_coboundary(m_, n - 1, col)), wn));
        for (auto& r : rel) boundaries.push_back(zn::densify(r, wn));
        slot->quotient.emplace(std::move(cycles), boundaries);
    });
    return *slot;
}

CohomologyResult CohomologyEngine::cohomology(std::size_t n, Flavor flavor) const {
    const auto& q = *level(n, flavor).quotient;
    CohomologyResult r;
    r.flavor = flavor;
    r.degree = n;
    r.invariants.factors = q.factors();
    for (auto& g : q.generators()) r.representatives.push_back(from_zn(m_, n, g));
    if (AbGroupInvariants::from_cyclic_orders(q.factors()) != r.invariants)
        fail(ErrorKind::internal_inconsistency, "quotient factors are not in invariant-factor form");
    return r;
}

std::optional<std::vector<std::int64_t>> CohomologyEngine::class_coordinates(const Cochain& phi, Flavor flavor) const {
    if (phi.values.size() != width_of(m_, phi.degree)) fail(ErrorKind::invalid_parameter, "cochain size mismatch");
    if (!is_member(m_, phi, flavor) || !is_cocycle(m_, phi)) return std::nullopt;
    return level(phi.degree, flavor).quotient->coordinates(to_zn(ring_, phi));
}

bool is_allowed_comparison(Flavor source, Flavor target) noexcept {
    return (source == Flavor::exterior && target == Flavor::symmetric) ||
           (source == Flavor::symmetric && target == Flavor::classical) ||
           (source == Flavor::exterior && target == Flavor::classical) ||
           (source == Flavor::normalized && target == Flavor::classical);
}

ComparisonReport CohomologyEngine::comparison_map(std::size_t n, Flavor source, Flavor target) const {
    if (!is_allowed_comparison(source, target))
        fail(ErrorKind::invalid_parameter, std::string("no comparison map from ") + to_string(source) + " to " +
                                               to_string(target));
    const auto hs = cohomology(n, source);
    const auto& qt = *level(n, target).quotient;
    ComparisonReport rep;
    rep.source = source;
    rep.target = target;
    rep.degree = n;
    rep.source_invariants = hs.invariants;
    rep.target_invariants.factors = qt.factors();
    for (auto& phi : hs.representatives) {
        auto coords = qt.coordinates(to_zn(ring_, phi));
        if (!coords) fail(ErrorKind::internal_inconsistency, "source cocycle is not a target cocycle");
        rep.matrix.push_back(std::move(*coords));
    }
    const Integer img = zn::image_order(qt.factors(), rep.matrix);
    rep.injective = img == hs.invariants.order();
    rep.surjective = img == rep.target_invariants.order();
    return rep;
}

std::optional<Cochain> CohomologyEngine::is_coboundary(const Cochain& phi, Flavor flavor) const {
    const std::size_t n = phi.degree;
    if (n == 0) fail(ErrorKind::invalid_parameter, "is_coboundary needs degree >= 1");
    if (phi.values.size() != width_of(m_, n)) fail(ErrorKind::invalid_parameter, "cochain size mismatch");
    if (!is_member(m_, phi, flavor))
        fail(ErrorKind::validation, std::string("cochain is not ") + to_string(flavor));
    if (!is_cocycle(m_, phi)) fail(ErrorKind::validation, "cochain is not a cocycle");
    const auto& e = embedding(n - 1, flavor);
    std::vector<zn::SparseVector> gens;
    gens.reserve(e.cols());
    for (auto& col : e.columns) gens.push_back(to_zn(ring_, apply_coboundary(m_, n - 1, col)));
    auto y = zn::solve(ring_, width_of(m_, n), gens, relations(m_, n), to_zn(ring_, phi));
    if (!y) return std::nullopt;
    auto g = from_zn(m_, n - 1, combine(ring_, width_of(m_, n - 1), e, *y));
    if (coboundary(m_, g, Limits{~std::size_t{0}, 64}) != phi)
        fail(ErrorKind::internal_inconsistency, "coboundary witness does not verify");
    return g;
}

std::optional<AlphaWitness> CohomologyEngine::class_in_image_alpha3(const Cochain& f) const {
    if (f.degree != 3) fail(ErrorKind::invalid_parameter, "class_in_image_alpha3 needs a 3-cochain");
    if (f.values.size() != width_of(m_, 3)) fail(ErrorKind::invalid_parameter, "cochain size mismatch");
    if (!is_normalized(m_.group(), f, m_.rank())) fail(ErrorKind::validation, "3-cochain is not normalized");
    if (!is_cocycle(m_, f)) fail(ErrorKind::validation, "3-cochain is not a cocycle");
    const auto& e = embedding(3, Flavor::symmetric);
    const std::size_t k = m_.rank(), c2 = tuple_count(m_.group().order(), 2);
    std::vector<zn::SparseVector> gens;
    for (auto& col : e.columns) gens.push_back(to_zn(ring_, col));
    for (std::size_t t = 0; t < c2; ++t)
        for (std::size_t c = 0; c < k; ++c) gens.push_back(to_zn(ring_, coboundary_of_basis(m_, 2, t, c)));
    auto y = zn::solve(ring_, width_of(m_, 3), gens, relations(m_, 3), to_zn(ring_, f));
    if (!y) return std::nullopt;
    AlphaWitness w;
    w.phi = from_zn(m_, 3, combine(ring_, width_of(m_, 3), e, *y));
    zn::Vector gv(c2 * k);
    std::copy(y->begin() + static_cast<std::ptrdiff_t>(e.cols()), y->end(), gv.begin());
    w.g = from_zn(m_, 2, gv);
    if (cochain_sub(m_, f, w.phi) != coboundary(m_, w.g) || !is_member(m_, w.phi, Flavor::symmetric))
        fail(ErrorKind::internal_inconsistency, "alpha3 witness does not verify");
    return w;
}

CohomologyResult cohomology(const GModule& m, std::size_t n, Flavor flavor, const Limits& limits) {
    return CohomologyEngine(m, limits).cohomology(n, flavor);
}

ComparisonReport comparison_map(const GModule& m, std::size_t n, Flavor source, Flavor target, const Limits& limits) {
    return CohomologyEngine(m, limits).comparison_map(n, source, target);
}

std::optional<Cochain> is_coboundary(const GModule& m, const Cochain& phi, Flavor flavor, const Limits& limits) {
    return CohomologyEngine(m, limits).is_coboundary(phi, flavor);
}

std::optional<AlphaWitness> class_in_image_alpha3(const GModule& m, const Cochain& f, const Limits& limits) {
    return CohomologyEngine(m, limits).class_in_image_alpha3(f);
}

std::vector<std::vector<std::int64_t>> compose_matrices(const ComparisonReport& first, const ComparisonReport& second) {
    if (first.target != second.source || first.degree != second.degree)
        fail(ErrorKind::invalid_parameter, "comparison maps do not compose");
    const auto& tf = second.target_invariants.factors;
    std::vector<std::vector<std::int64_t>> out;
    for (auto& col : first.matrix) {
        std::vector<std::int64_t> v(tf.size(), 0);
        for (std::size_t i = 0; i < col.size(); ++i)
            for (std::size_t j = 0; j < tf.size(); ++j)
                v[j] = floor_mod(v[j] + (col[i] % tf[j]) * (second.matrix[i][j] % tf[j]), tf[j]);
        out.push_back(std::move(v));
    }
    return out;
}

bool vanishes_on_adjacent_inverses(const GModule& m, const Cochain& phi) {
    const auto& g = m.group();
    const std::size_t q = g.order(), k = m.rank();
    const std::size_t count = tuple_count(q, phi.degree);
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (!has_adjacent_inverse(g, decode_tuple(q, phi.degree, idx))) continue;
        for (std::size_t c = 0; c < k; ++c)
            if (phi.values[idx * k + c] != 0) return false;
    }
    return true;
}

SymmetryFlags lemma_symmetry_criterion(const GModule& m, const Cochain& phi) {
    if (phi.degree < 2) fail(ErrorKind::invalid_parameter, "symmetry criterion needs degree >= 2");
    if (!is_normalized(m.group(), phi, m.rank())) fail(ErrorKind::validation, "cochain is not normalized");
    if (!is_cocycle(m, phi)) fail(ErrorKind::validation, "cochain is not a cocycle");
    SymmetryFlags f;
    f.by_tau = is_member(m, phi, Flavor::symmetric);
    f.by_vanishing = vanishes_on_adjacent_inverses(m, phi);
    if (phi.degree == 3) {
        const auto& g = m.group();
        const std::size_t q = g.order();
        bool equal = true;
        for (Element x = 0; x < q && equal; ++x)
            for (Element y = 0; y < q && equal; ++y)
                equal = phi.at(m, encode_tuple(q, {x, g.inv(x), y})) == phi.at(m, encode_tuple(q, {x, y, g.inv(y)}));
        f.by_two_pattern = equal;
    }
    return f;
}

CoboundaryFlags lemma_coboundary_criterion(const GModule& m, const Cochain& phi, const Cochain& g) {
    if (g.degree != 2 || phi.degree != 3) fail(ErrorKind::invalid_parameter, "expects a 3-cochain and a 2-cochain");
    if (!is_normalized(m.group(), g, m.rank())) fail(ErrorKind::validation, "2-cochain is not normalized");
    if (coboundary(m, g) != phi) fail(ErrorKind::validation, "dg differs from phi");
    if (!is_member(m, phi, Flavor::symmetric)) fail(ErrorKind::validation, "3-cochain is not symmetric");
    CoboundaryFlags f;
    f.g_symmetric = is_member(m, g, Flavor::symmetric);
    const auto& grp = m.group();
    const std::size_t q = grp.order(), k = m.rank();
    f.g_vanishes_on_inverses = true;
    for (Element x = 0; x < q && f.g_vanishes_on_inverses; ++x)
        for (std::size_t c = 0; c < k; ++c)
            if (g.values[encode_tuple(q, {x, grp.inv(x)}) * k + c] != 0) f.g_vanishes_on_inverses = false;
    return f;
}

}  // namespace symcoh
