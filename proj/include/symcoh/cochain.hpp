#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symcoh/flavor.hpp"
#include "symcoh/integer_matrix.hpp"
#include "symcoh/module.hpp"

namespace symcoh {

const char* to_string(Flavor f) noexcept;
Flavor parse_flavor(const std::string& s);

/// Guards against cochain spaces too large to materialize.
struct Limits {
    std::size_t max_cells = 2'000'000;  // |G|^(n+1) * rank(M)
    std::size_t max_degree = 6;
};

/// Integer entries; reduce modulo the coordinate exponents when needed.
using SparseIntVector = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Column-sparse integer matrix. Column j is the image of basis vector j.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::vector<SparseIntVector> columns;

    std::size_t cols() const noexcept { return columns.size(); }
    IntMatrix to_int_matrix() const;
};

/// Throws size_guard when C^n exceeds the limits.
void check_cochain_size(const GModule& m, std::size_t n, const Limits& limits);

/// |G|^n; throws size_guard on overflow past 2^40.
std::size_t tuple_count(std::size_t group_order, std::size_t n);

/// Tuples are indexed mixed-radix with the leftmost argument most significant.
std::size_t encode_tuple(std::size_t group_order, const std::vector<Element>& t);
std::vector<Element> decode_tuple(std::size_t group_order, std::size_t n, std::size_t index);

/// A degree-n cochain G^n -> M. values[tuple * rank + i] is coordinate i of
/// the value at `tuple`, reduced modulo d_i.
struct Cochain {
    std::size_t degree = 0;
    std::vector<std::int64_t> values;

    ModuleElement at(const GModule& m, std::size_t tuple) const;
    void set(const GModule& m, std::size_t tuple, const ModuleElement& v);
    bool is_zero() const;
    bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const GModule& m, std::size_t n, const Limits& limits = {});
/// Reduces integer coordinates (e.g. a sparse generator) into a cochain.
Cochain cochain_from_sparse(const GModule& m, std::size_t n, const SparseIntVector& v);
Cochain cochain_add(const GModule& m, const Cochain& a, const Cochain& b);
Cochain cochain_sub(const GModule& m, const Cochain& a, const Cochain& b);
Cochain cochain_scale(const GModule& m, std::int64_t c, const Cochain& a);

/// (d phi)(g_0..g_n) = g_0 phi(g_1..g_n) + sum_i (-1)^i phi(.., g_{i-1} g_i, ..)
///                     + (-1)^(n+1) phi(g_0..g_{n-1}).
Cochain coboundary(const GModule& m, const Cochain& phi, const Limits& limits = {});

/// Image of the basis cochain with value e_coord at `tuple`.
SparseIntVector coboundary_of_basis(const GModule& m, std::size_t n, std::size_t tuple, std::size_t coord);

/// Matrix of d^n in the (tuple, coordinate) basis.
SparseIntMatrix coboundary_matrix(const GModule& m, std::size_t n, const Limits& limits = {});

/// Applies a sparse map to a cochain of matching width and reduces the result.
Cochain apply_map(const GModule& m, std::size_t target_degree, const SparseIntMatrix& a, const Cochain& phi);

/// Transposition tau_i, 1 <= i <= n.
Cochain tau(const GModule& m, std::size_t i, const Cochain& phi);

bool is_normalized(const FiniteGroup& g, const Cochain& phi, std::size_t rank);
bool is_member(const GModule& m, const Cochain& phi, Flavor flavor);

/// Generators of the flavor subgroup of C^n as sparse columns.
SparseIntMatrix subgroup_embedding(const GModule& m, std::size_t n, Flavor flavor, const Limits& limits = {});

/// True when some adjacent pair satisfies g_{i+1} = g_i^-1.
bool has_adjacent_inverse(const FiniteGroup& g, const std::vector<Element>& t);

}  // namespace symcoh
