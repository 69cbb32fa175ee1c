#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symcoh/integer_matrix.hpp"

// Linear algebra over the ring Z/N.
//
// Every group in a cochain complex with coefficients in a module of exponent
// N is a Z/N-module, presented as (Z/N)^w modulo a relation submodule. The
// Howell form is an echelon form over Z/N in which membership can be decided
// by reduction, so kernels, images and quotients are exact without ever
// leaving machine integers.
namespace symcoh::zn {

using Residue = std::uint32_t;
using Vector = std::vector<Residue>;

/// Sparse vector as (index, residue) pairs with distinct indices.
using SparseVector = std::vector<std::pair<std::uint32_t, Residue>>;

class Ring {
public:
    explicit Ring(std::uint64_t modulus);

    Residue modulus() const noexcept { return n_; }
    Residue reduce(std::uint64_t a) const noexcept {
        if (fast_) return static_cast<Residue>(((static_cast<unsigned __int128>(m_ * a)) * n_) >> 64);
        return static_cast<Residue>(a % n_);
    }
    Residue from_signed(std::int64_t a) const noexcept {
        std::int64_t r = a % static_cast<std::int64_t>(n_);
        return static_cast<Residue>(r < 0 ? r + n_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + n_ - b); }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} * b) % n_);
    }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : n_ - a; }

    /// gcd(a, N), with gcd(0, N) = N.
    Residue ideal(Residue a) const noexcept;
    /// A unit u with u * a = gcd(a, N) (mod N).
    Residue normalizer(Residue a) const;
    Residue inverse(Residue unit) const;

    /// dst[j] += q * src[j] for j in [from, size).
    void axpy(Vector& dst, const Vector& src, Residue q, std::size_t from = 0) const noexcept;
    void scale(Vector& v, Residue q, std::size_t from = 0) const noexcept;

private:
    Residue n_;
    std::uint64_t m_ = 0;  // fastmod multiplier, valid when fast_
    bool fast_ = false;
};

/// Row space over Z/N kept in Howell form. Rows are ordered by pivot column;
/// pivot entries are divisors of N and every row satisfies the Howell
/// condition, so reduction decides membership.
class HowellBasis {
public:
    HowellBasis(Ring ring, std::size_t width);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return order_.size(); }

    void insert(Vector v);
    void insert(const SparseVector& v);

    /// Reduces v by the rows (in pivot order) restricted to pivot columns
    /// below `limit`. When `coefficients` is given it receives the multiple of
    /// each row that was subtracted (indexed like row()). Returns false as soon
    /// as v is found not to lie in the span; v is then partially reduced.
    bool reduce(Vector& v, std::vector<Residue>* coefficients = nullptr,
                std::size_t limit = static_cast<std::size_t>(-1)) const;
    bool contains(Vector v) const;

    const Vector& row(std::size_t i) const { return rows_[order_[i]].values; }
    std::size_t pivot_column(std::size_t i) const { return rows_[order_[i]].column; }
    Residue pivot(std::size_t i) const { return rows_[order_[i]].pivot; }

    /// |span| as a product of the cyclic orders N / pivot.
    Integer cardinality() const;

private:
    struct Row {
        std::size_t column;
        Residue pivot;
        Vector values;
    };

    void place(Row row);

    Ring ring_;
    std::size_t width_;
    std::vector<Row> rows_;
    std::vector<std::int32_t> slot_of_column_;  // -1 when the column has no pivot
    std::vector<std::size_t> order_;            // slots sorted by pivot column
};

Vector densify(const SparseVector& v, std::size_t width);

/// Generators of {y in (Z/N)^c : sum_j y_j images[j] lies in span(relations)}.
/// Each image and relation has length `width`.
std::vector<Vector> kernel(const Ring& ring, std::size_t width, const std::vector<SparseVector>& images,
                           const std::vector<SparseVector>& relations);

/// Some y with sum_j y_j gens[j] = target modulo span(relations), or nullopt.
std::optional<Vector> solve(const Ring& ring, std::size_t width, const std::vector<SparseVector>& gens,
                            const std::vector<SparseVector>& relations, const Vector& target);

/// Smith form over Z/N keeping the row transform: U A V = diag(d) with each
/// d_i a divisor of N (N standing for zero) and d_i | d_{i+1}.
struct RowSmith {
    std::vector<Residue> diagonal;  // length rows(A)
    std::vector<Vector> u;          // rows of U
    std::vector<Vector> u_inverse;  // rows of U^-1
};
RowSmith row_smith(const Ring& ring, std::vector<Vector> a, std::size_t cols);

/// The quotient K / B of two submodules of (Z/N)^w with B inside K, with
/// invariant factors, explicit generators and a coordinate map.
class Quotient {
public:
    Quotient(HowellBasis k, const std::vector<Vector>& b_generators);

    const HowellBasis& numerator() const noexcept { return k_; }
    const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
    /// generators()[i] has order factors()[i] in the quotient.
    const std::vector<Vector>& generators() const noexcept { return generators_; }
    Integer order() const;

    /// Coordinates of the class of z; nullopt when z is not in K.
    std::optional<std::vector<std::int64_t>> coordinates(const Vector& z) const;

private:
    HowellBasis k_;
    std::vector<std::int64_t> factors_;
    std::vector<Vector> generators_;
    std::vector<Vector> coordinate_rows_;  // over the Howell rows of K
};

/// Order of the subgroup generated by columns of a homomorphism matrix
/// between finite abelian groups given by invariant factors.
Integer image_order(const std::vector<std::int64_t>& target_factors,
                    const std::vector<std::vector<std::int64_t>>& columns);

}  // namespace symcoh::zn
