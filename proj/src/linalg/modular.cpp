#include "symcoh/modular.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "symcoh/error.hpp"

namespace symcoh::zn {

namespace {

// g = gcd(a, b) = s a + t b for nonnegative a, b.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_tuple(b, a - q * b);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    return {a, s0, t0};
}

constexpr std::uint64_t fast_limit = 1u << 15;

}  // namespace

Ring::Ring(std::uint64_t modulus) {
    if (modulus < 1 || modulus >= (std::uint64_t{1} << 31))
        fail(ErrorKind::size_guard, "modulus out of supported range [1, 2^31)");
    n_ = static_cast<Residue>(modulus);
    // Operands of axpy stay below 2^32 when N <= 2^15, where fastmod is exact.
    if (modulus <= fast_limit) {
        fast_ = true;
        m_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / modulus + 1;
    }
}

Residue Ring::ideal(Residue a) const noexcept {
    return a == 0 ? n_ : std::gcd(a, n_);
}

Residue Ring::normalizer(Residue a) const {
    if (a == 0) return 1;
    const std::int64_t g = std::gcd(a, n_);
    const std::int64_t ap = a / g, np = n_ / g;
    std::int64_t u0 = 0;
    if (np > 1) {
        auto [h, s, t] = ext_gcd(ap % np, np);
        (void)t;
        u0 = ((s % np) + np) % np;
    }
    for (std::int64_t u = u0; u < static_cast<std::int64_t>(n_) + u0 + 1; u += np)
        if (std::gcd(u % static_cast<std::int64_t>(n_), static_cast<std::int64_t>(n_)) == 1)
            return static_cast<Residue>(u % n_);
    fail(ErrorKind::internal_inconsistency, "no normalizing unit found");
}

Residue Ring::inverse(Residue unit) const {
    auto [g, s, t] = ext_gcd(unit, n_);
    (void)t;
    if (g != 1) fail(ErrorKind::internal_inconsistency, "inverse of a non-unit");
    return from_signed(s);
}

void Ring::axpy(Vector& dst, const Vector& src, Residue q, std::size_t from) const noexcept {
    if (q == 0) return;
    const std::size_t n = dst.size();
    Residue* d = dst.data();
    const Residue* s = src.data();
    if (fast_) {
        const std::uint64_t m = m_, mod = n_;
        for (std::size_t j = from; j < n; ++j) {
            if (s[j] == 0) continue;
            const std::uint64_t a = d[j] + std::uint64_t{q} * s[j];
            d[j] = static_cast<Residue>(((static_cast<unsigned __int128>(m * a)) * mod) >> 64);
        }
    } else {
        for (std::size_t j = from; j < n; ++j)
            if (s[j] != 0) d[j] = static_cast<Residue>((d[j] + std::uint64_t{q} * s[j]) % n_);
    }
}

void Ring::scale(Vector& v, Residue q, std::size_t from) const noexcept {
    for (std::size_t j = from; j < v.size(); ++j)
        if (v[j] != 0) v[j] = mul(v[j], q);
}

Vector densify(const SparseVector& v, std::size_t width) {
    Vector d(width, 0);
    for (auto [i, x] : v) d[i] = x;
    return d;
}

HowellBasis::HowellBasis(Ring ring, std::size_t width)
    : ring_(ring), width_(width), slot_of_column_(width, -1) {}

void HowellBasis::place(Row row) {
    const std::size_t slot = rows_.size();
    slot_of_column_[row.column] = static_cast<std::int32_t>(slot);
    auto pos = std::lower_bound(order_.begin(), order_.end(), row.column,
                                [&](std::size_t s, std::size_t c) { return rows_[s].column < c; });
    rows_.push_back(std::move(row));
    order_.insert(pos, slot);
}

void HowellBasis::insert(const SparseVector& v) { insert(densify(v, width_)); }

void HowellBasis::insert(Vector v) {
    if (v.size() != width_) fail(ErrorKind::invalid_parameter, "Howell insert: width mismatch");
    const Residue n = ring_.modulus();
    std::vector<Vector> work;
    work.push_back(std::move(v));
    while (!work.empty()) {
        Vector w = std::move(work.back());
        work.pop_back();
        std::size_t c = 0;
        for (;;) {
            while (c < width_ && w[c] == 0) ++c;
            if (c == width_) break;
            const std::int32_t slot = slot_of_column_[c];
            if (slot < 0) {
                const Residue u = ring_.normalizer(w[c]);
                if (u != 1) ring_.scale(w, u, c);
                const Residue g = w[c];
                if (g != 1) {
                    Vector companion = w;
                    ring_.scale(companion, n / g, c);
                    work.push_back(std::move(companion));
                }
                place(Row{c, g, std::move(w)});
                break;
            }
            Row& r = rows_[static_cast<std::size_t>(slot)];
            const Residue p = r.pivot, a = w[c];
            if (a % p == 0) {
                ring_.axpy(w, r.values, ring_.neg(a / p), c);
                continue;
            }
            auto [g, s, t] = ext_gcd(p, a);
            Vector combined = r.values;
            ring_.scale(combined, ring_.from_signed(s), c);
            ring_.axpy(combined, w, ring_.from_signed(t), c);
            ring_.scale(w, static_cast<Residue>(p / g), c);
            ring_.axpy(w, r.values, ring_.neg(static_cast<Residue>(a / g)), c);
            r.values = std::move(combined);
            r.pivot = static_cast<Residue>(g);
            if (g != 1) {
                Vector companion = r.values;
                ring_.scale(companion, static_cast<Residue>(n / g), c);
                work.push_back(std::move(companion));
            }
        }
    }
}

bool HowellBasis::reduce(Vector& v, std::vector<Residue>* coefficients, std::size_t limit) const {
    if (v.size() != width_) fail(ErrorKind::invalid_parameter, "Howell reduce: width mismatch");
    if (coefficients) coefficients->assign(size(), 0);
    std::size_t checked = 0;
    for (std::size_t idx = 0; idx < order_.size(); ++idx) {
        const Row& r = rows_[order_[idx]];
        if (r.column >= limit) break;
        for (; checked < r.column; ++checked)
            if (v[checked] != 0) return false;
        const Residue a = v[r.column];
        if (a == 0) continue;
        if (a % r.pivot != 0) return false;
        const Residue q = a / r.pivot;
        ring_.axpy(v, r.values, ring_.neg(q), r.column);
        if (coefficients) (*coefficients)[idx] = q;
    }
    const std::size_t end = std::min(limit, width_);
    for (; checked < end; ++checked)
        if (v[checked] != 0) return false;
    return true;
}

bool HowellBasis::contains(Vector v) const { return reduce(v); }

Integer HowellBasis::cardinality() const {
    Integer c = 1;
    for (auto& r : rows_) c *= ring_.modulus() / r.pivot;
    return c;
}

std::vector<Vector> kernel(const Ring& ring, std::size_t width, const std::vector<SparseVector>& images,
                           const std::vector<SparseVector>& relations) {
    const std::size_t c = images.size();
    HowellBasis hb(ring, width + c);
    for (std::size_t j = 0; j < c; ++j) {
        Vector row = densify(images[j], width + c);
        row[width + j] = 1;
        hb.insert(std::move(row));
    }
    for (auto& rel : relations) hb.insert(densify(rel, width + c));
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < hb.size(); ++i)
        if (hb.pivot_column(i) >= width)
            gens.emplace_back(hb.row(i).begin() + static_cast<std::ptrdiff_t>(width), hb.row(i).end());
    return gens;
}

std::optional<Vector> solve(const Ring& ring, std::size_t width, const std::vector<SparseVector>& gens,
                            const std::vector<SparseVector>& relations, const Vector& target) {
    const std::size_t c = gens.size();
    if (target.size() != width) fail(ErrorKind::invalid_parameter, "solve: target width mismatch");
    HowellBasis hb(ring, width + c);
    for (std::size_t j = 0; j < c; ++j) {
        Vector row = densify(gens[j], width + c);
        row[width + j] = 1;
        hb.insert(std::move(row));
    }
    for (auto& rel : relations) hb.insert(densify(rel, width + c));
    Vector v(width + c, 0);
    std::copy(target.begin(), target.end(), v.begin());
    if (!hb.reduce(v, nullptr, width)) return std::nullopt;
    Vector y(c);
    for (std::size_t j = 0; j < c; ++j) y[j] = ring.neg(v[width + j]);
    return y;
}

RowSmith row_smith(const Ring& ring, std::vector<Vector> a, std::size_t cols) {
    const std::size_t r = a.size();
    const Residue n = ring.modulus();
    RowSmith out;
    out.u.assign(r, Vector(r, 0));
    out.u_inverse.assign(r, Vector(r, 0));
    for (std::size_t i = 0; i < r; ++i) out.u[i][i] = out.u_inverse[i][i] = 1;
    out.diagonal.assign(r, 0);
    auto& u = out.u;
    auto& ui = out.u_inverse;

    // Row transform T on rows (t, i); U <- T U and U^-1 <- U^-1 T^-1.
    auto row_combine = [&](std::size_t t, std::size_t i, Residue s, Residue x, Residue y, Residue z) {
        // T = [[s, x], [y, z]] with det 1; T^-1 = [[z, -x], [-y, s]].
        auto apply = [&](Vector& rt, Vector& ri) {
            for (std::size_t j = 0; j < rt.size(); ++j) {
                const Residue a0 = rt[j], a1 = ri[j];
                rt[j] = ring.add(ring.mul(s, a0), ring.mul(x, a1));
                ri[j] = ring.add(ring.mul(y, a0), ring.mul(z, a1));
            }
        };
        apply(a[t], a[i]);
        apply(u[t], u[i]);
        for (auto& row : ui) {
            const Residue b0 = row[t], b1 = row[i];
            row[t] = ring.add(ring.mul(b0, z), ring.mul(b1, ring.neg(y)));
            row[i] = ring.add(ring.mul(b0, ring.neg(x)), ring.mul(b1, s));
        }
    };
    auto col_combine = [&](std::size_t t, std::size_t j, Residue s, Residue x, Residue y, Residue z) {
        for (auto& row : a) {
            const Residue a0 = row[t], a1 = row[j];
            row[t] = ring.add(ring.mul(s, a0), ring.mul(x, a1));
            row[j] = ring.add(ring.mul(y, a0), ring.mul(z, a1));
        }
    };
    auto gcd_transform = [&](Residue p, Residue b) {
        if (b % p == 0) return std::make_tuple(Residue{1}, Residue{0}, ring.neg(b / p), Residue{1});
        auto [g, s, t] = ext_gcd(p, b);
        return std::make_tuple(ring.from_signed(s), ring.from_signed(t), ring.neg(static_cast<Residue>(b / g)),
                               static_cast<Residue>(p / g));
    };

    const std::size_t steps = std::min(r, cols);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        bool finished = false;
        for (;;) {
            std::size_t bi = r, bj = cols;
            Residue best = n;
            for (std::size_t i = t; i < r && best != 1; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && ring.ideal(a[i][j]) < best) {
                        best = ring.ideal(a[i][j]);
                        bi = i, bj = j;
                        if (best == 1) break;
                    }
            if (bi == r) {
                finished = true;
                break;
            }
            if (bi != t) {
                std::swap(a[t], a[bi]);
                std::swap(u[t], u[bi]);
                for (auto& row : ui) std::swap(row[t], row[bi]);
            }
            if (bj != t)
                for (auto& row : a) std::swap(row[t], row[bj]);

            bool clear = false;
            while (!clear) {
                clear = true;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (a[i][t] != 0) {
                        auto [s, x, y, z] = gcd_transform(a[t][t], a[i][t]);
                        row_combine(t, i, s, x, y, z);
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0) {
                        auto [s, x, y, z] = gcd_transform(a[t][t], a[t][j]);
                        col_combine(t, j, s, x, y, z);
                        clear = false;
                    }
                if (!clear) {
                    clear = true;
                    for (std::size_t i = t + 1; i < r; ++i)
                        if (a[i][t] != 0) clear = false;
                }
            }
            const Residue unit = ring.normalizer(a[t][t]);
            if (unit != 1) {
                ring.scale(a[t], unit);
                ring.scale(u[t], unit);
                const Residue inv = ring.inverse(unit);
                for (auto& row : ui) row[t] = ring.mul(row[t], inv);
            }
            const Residue p = a[t][t];
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % p != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r) break;
            // row t += row bad
            row_combine(t, bad, 1, 1, 0, 1);
        }
        if (finished) break;
        out.diagonal[t] = a[t][t];
    }
    return out;
}

Quotient::Quotient(HowellBasis k, const std::vector<Vector>& b_generators) : k_(std::move(k)) {
    const Ring& ring = k_.ring();
    const Residue n = ring.modulus();
    const std::size_t r = k_.size();
    std::vector<Vector> relation_columns;
    std::vector<Residue> coeffs;
    for (std::size_t i = 0; i < r; ++i) {
        const Residue p = k_.pivot(i);
        if (p == 1) continue;
        Vector v = k_.row(i);
        ring.scale(v, n / p);
        if (!k_.reduce(v, &coeffs)) fail(ErrorKind::internal_inconsistency, "Howell condition violated");
        Vector col(r);
        for (std::size_t j = 0; j < r; ++j) col[j] = ring.neg(coeffs[j]);
        col[i] = ring.add(col[i], n / p);
        relation_columns.push_back(std::move(col));
    }
    for (auto& b : b_generators) {
        Vector v = b;
        if (!k_.reduce(v, &coeffs))
            fail(ErrorKind::internal_inconsistency, "quotient: boundary generator outside the cycle group");
        relation_columns.emplace_back(coeffs.begin(), coeffs.end());
    }
    std::vector<Vector> matrix(r, Vector(relation_columns.size()));
    for (std::size_t j = 0; j < relation_columns.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) matrix[i][j] = relation_columns[j][i];
    auto rs = row_smith(ring, std::move(matrix), relation_columns.size());
    for (std::size_t i = 0; i < r; ++i) {
        const Residue d = rs.diagonal[i] == 0 ? n : rs.diagonal[i];
        if (d == 1) continue;
        factors_.push_back(d);
        Vector gen(k_.width(), 0);
        for (std::size_t j = 0; j < r; ++j) ring.axpy(gen, k_.row(j), rs.u_inverse[j][i]);
        generators_.push_back(std::move(gen));
        coordinate_rows_.push_back(rs.u[i]);
    }
}

Integer Quotient::order() const {
    Integer o = 1;
    for (auto f : factors_) o *= f;
    return o;
}

std::optional<std::vector<std::int64_t>> Quotient::coordinates(const Vector& z) const {
    Vector v = z;
    std::vector<Residue> coeffs;
    if (!k_.reduce(v, &coeffs)) return std::nullopt;
    const Ring& ring = k_.ring();
    std::vector<std::int64_t> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Residue s = 0;
        for (std::size_t j = 0; j < coeffs.size(); ++j) s = ring.add(s, ring.mul(coordinate_rows_[i][j], coeffs[j]));
        out[i] = static_cast<std::int64_t>(s % factors_[i]);
    }
    return out;
}

Integer image_order(const std::vector<std::int64_t>& target_factors,
                    const std::vector<std::vector<std::int64_t>>& columns) {
    if (target_factors.empty()) return 1;
    std::int64_t n = 1;
    for (auto f : target_factors) n = std::lcm(n, f);
    Ring ring(static_cast<std::uint64_t>(n));
    HowellBasis hb(ring, target_factors.size());
    for (auto& col : columns) {
        Vector v(target_factors.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = ring.mul(ring.from_signed(col[j]), static_cast<Residue>(n / target_factors[j]));
        hb.insert(std::move(v));
    }
    return hb.cardinality();
}

}  // namespace symcoh::zn
