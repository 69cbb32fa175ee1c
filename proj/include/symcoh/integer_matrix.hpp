#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcoh {

using Integer = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_diagonal() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

struct SNFResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
};

/// U * A * V = S with U, V unimodular and S diagonal, nonnegative, each
/// diagonal entry dividing the next.
SNFResult smith_normal_form(const IntMatrix& a);

/// Some x with A x = b modulo moduli[i] in row i, entries reduced into
/// [0, lcm(moduli)); nullopt when no solution exists.
std::optional<std::vector<Integer>> solve_mod(const IntMatrix& a, const std::vector<Integer>& b,
                                              const std::vector<Integer>& moduli);

/// Isomorphism type of a finite abelian group: invariant factors >= 2 in
/// ascending order, each dividing the next.
struct AbGroupInvariants {
    std::vector<std::int64_t> factors;

    Integer order() const;
    bool trivial() const { return factors.empty(); }
    std::string to_string() const;
    bool operator==(const AbGroupInvariants&) const = default;

    /// Builds the canonical form from any list of cyclic orders (1s dropped).
    static AbGroupInvariants from_cyclic_orders(const std::vector<std::int64_t>& orders);
};

/// Homology at the middle term of  A --d_in--> B --d_out--> C  where
/// B = prod Z/mid_moduli and C = prod Z/out_moduli, computed over Z with
/// relation lattices and Smith normal form.
AbGroupInvariants homology_invariants(const IntMatrix& d_out, const IntMatrix& d_in,
                                      const std::vector<Integer>& mid_moduli,
                                      const std::vector<Integer>& out_moduli);

}  // namespace symcoh
