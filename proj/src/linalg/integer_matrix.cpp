#include "symcoh/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symcoh/error.hpp"

namespace symcoh {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) fail(ErrorKind::invalid_parameter, "ragged matrix literal");
        for (auto v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorKind::invalid_parameter, "matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::invalid_parameter, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

SNFResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix s = a, u = IntMatrix::identity(m), v = IntMatrix::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(s(i, c), s(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(s(r, i), s(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
    };
    // row dst -= q * row src
    auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < n; ++c)
            if (s(src, c) != 0) s(dst, c) -= q * s(src, c);
        for (std::size_t c = 0; c < m; ++c)
            if (u(src, c) != 0) u(dst, c) -= q * u(src, c);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r)
            if (s(r, src) != 0) s(r, dst) -= q * s(r, src);
        for (std::size_t r = 0; r < n; ++r)
            if (v(r, src) != 0) v(r, dst) -= q * v(r, src);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Pivot of minimal absolute value keeps remainders (and growth) small.
            std::size_t pi = m, pj = n;
            Integer best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s(i, j) != 0 && (best == 0 || abs(s(i, j)) < best)) best = abs(s(i, j)), pi = i, pj = j;
            if (pi == m) goto done;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i)
                if (s(i, t) != 0) {
                    Integer q = s(i, t) / s(t, t);
                    row_sub(i, t, q);
                    if (s(i, t) != 0) dirty = true;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (s(t, j) != 0) {
                    Integer q = s(t, j) / s(t, t);
                    col_sub(j, t, q);
                    if (s(t, j) != 0) dirty = true;
                }
            if (dirty) continue;

            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_sub(t, bad, Integer(-1));
        }
        if (s(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) s(t, c) = -s(t, c);
            for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
        }
    }
done:
    return {std::move(u), std::move(s), std::move(v)};
}

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

std::optional<std::vector<Integer>> solve_mod(const IntMatrix& a, const std::vector<Integer>& b,
                                              const std::vector<Integer>& moduli) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || moduli.size() != m)
        fail(ErrorKind::invalid_parameter, "solve_mod: dimension mismatch between A, b and moduli");
    Integer lcm = 1;
    for (auto& q : moduli) {
        if (q < 1) fail(ErrorKind::invalid_parameter, "solve_mod: moduli must be >= 1");
        lcm = boost::multiprecision::lcm(lcm, q);
    }
    // A x - diag(moduli) y = b over Z.
    IntMatrix aug(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = -moduli[i];
    }
    auto snf = smith_normal_form(aug);
    std::vector<Integer> c(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) c[i] += snf.U(i, k) * b[k];
    std::vector<Integer> y(n + m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Integer& d = i < n + m ? snf.S(i, i) : Integer(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    std::vector<Integer> x(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n + m; ++k) x[j] += snf.V(j, k) * y[k];
        x[j] = mod_floor(x[j], lcm);
    }
    return x;
}

Integer AbGroupInvariants::order() const {
    Integer o = 1;
    for (auto f : factors) o *= f;
    return o;
}

std::string AbGroupInvariants::to_string() const {
    if (factors.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " + " : "") << "Z/" << factors[i];
    return os.str();
}

AbGroupInvariants AbGroupInvariants::from_cyclic_orders(const std::vector<std::int64_t>& orders) {
    // prime -> exponents of the prime-power cyclic parts
    std::map<std::int64_t, std::vector<std::int64_t>> parts;
    for (auto o : orders) {
        if (o < 1) fail(ErrorKind::internal_inconsistency, "cyclic order must be positive");
        for (std::int64_t p = 2; p * p <= o; ++p) {
            std::int64_t q = 1;
            while (o % p == 0) o /= p, q *= p;
            if (q > 1) parts[p].push_back(q);
        }
        if (o > 1) parts[o].push_back(o);
    }
    std::size_t count = 0;
    for (auto& [p, qs] : parts) {
        std::sort(qs.rbegin(), qs.rend());
        count = std::max(count, qs.size());
    }
    // Largest factor collects the largest power of every prime, and so on.
    std::vector<std::int64_t> factors(count, 1);
    for (auto& [p, qs] : parts)
        for (std::size_t i = 0; i < qs.size(); ++i) factors[i] *= qs[i];
    std::reverse(factors.begin(), factors.end());
    return AbGroupInvariants{factors};
}

AbGroupInvariants homology_invariants(const IntMatrix& d_out, const IntMatrix& d_in,
                                      const std::vector<Integer>& mid_moduli,
                                      const std::vector<Integer>& out_moduli) {
    const std::size_t c = mid_moduli.size();
    const std::size_t r = out_moduli.size();
    if (d_out.cols() != c || d_in.rows() != c || d_out.rows() != r)
        fail(ErrorKind::invalid_parameter, "homology_invariants: dimension mismatch");
    for (auto& q : mid_moduli)
        if (q < 1) fail(ErrorKind::invalid_parameter, "homology_invariants: moduli must be >= 1");
    for (auto& q : out_moduli)
        if (q < 1) fail(ErrorKind::invalid_parameter, "homology_invariants: moduli must be >= 1");
    if (c == 0) return {};

    auto prod = d_out * d_in;
    for (std::size_t k = 0; k < prod.cols(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            if (prod(i, k) % out_moduli[i] != 0) {
                std::ostringstream os;
                os << "composition d_out * d_in is nonzero (witness column " << k << ")";
                fail(ErrorKind::validation, os.str());
            }
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < r; ++i)
            if ((d_out(i, j) * mid_moduli[j]) % out_moduli[i] != 0) {
                std::ostringstream os;
                os << "d_out is not well defined on coordinate " << j;
                fail(ErrorKind::validation, os.str());
            }

    // Kernel lattice {x : d_out x in diag(out) Z^r}.
    IntMatrix aug(r, c + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = d_out(i, j);
        aug(i, c + i) = -out_moduli[i];
    }
    auto snf = smith_normal_form(aug);
    std::size_t rank = 0;
    while (rank < std::min(r, c + r) && snf.S(rank, rank) != 0) ++rank;
    IntMatrix kernel(c, c + r - rank);
    for (std::size_t k = rank; k < c + r; ++k)
        for (std::size_t j = 0; j < c; ++j) kernel(j, k - rank) = snf.V(j, k);

    // Basis P = U2^-1 diag(s) of the kernel lattice; it has full rank c
    // because it contains diag(mid) Z^c.
    auto snf2 = smith_normal_form(kernel);
    for (std::size_t i = 0; i < c; ++i)
        if (i >= kernel.cols() || snf2.S(i, i) == 0)
            fail(ErrorKind::internal_inconsistency, "kernel lattice is not of full rank");

    IntMatrix image(c, d_in.cols() + c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < d_in.cols(); ++j) image(i, j) = d_in(i, j);
        image(i, d_in.cols() + i) = mid_moduli[i];
    }
    // Image generators in P-coordinates: diag(1/s) U2 image.
    IntMatrix coords = snf2.U * image;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < coords.cols(); ++j) {
            if (coords(i, j) % snf2.S(i, i) != 0)
                fail(ErrorKind::internal_inconsistency, "image is not contained in the kernel");
            coords(i, j) /= snf2.S(i, i);
        }
    auto snf3 = smith_normal_form(coords);
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < c; ++i) {
        Integer d = snf3.S(i, i);
        if (d == 0) fail(ErrorKind::internal_inconsistency, "homology is infinite");
        if (d > 1) {
            if (d > Integer(std::numeric_limits<std::int64_t>::max()))
                fail(ErrorKind::size_guard, "invariant factor exceeds 64 bits");
            orders.push_back(static_cast<std::int64_t>(d));
        }
    }
    return AbGroupInvariants::from_cyclic_orders(orders);
}

}  // namespace symcoh
