#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace symcoh {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table.
///
/// Element 0 is always the identity. Instances are only produced by the
/// validating factories below, so every invariant (Latin square, identity
/// row/column, inverses, associativity) holds for the lifetime of the value.
class FiniteGroup {
public:
    static constexpr Element identity = 0;

    std::size_t order() const noexcept { return order_; }
    Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
    Element inv(Element a) const noexcept { return inv_[a]; }
    const std::string& name() const noexcept { return name_; }

    const std::vector<Element>& inverse_table() const noexcept { return inv_; }
    std::vector<std::vector<Element>> table_rows() const;

    /// Smallest k >= 1 with a^k = 1.
    std::size_t element_order(Element a) const;

    bool operator==(const FiniteGroup& other) const {
        return order_ == other.order_ && table_ == other.table_;
    }

private:
    friend FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>&, std::string);

    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inv_;
    std::string name_;
};

/// Checks a raw table and returns the group. Throws Error(validation) with a
/// witness on the first violated axiom.
FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                           std::string name = "table");

FiniteGroup build_cyclic(std::size_t n);

/// Pairs (i, j) are indexed i * |H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Symmetric group on n letters (n <= 5), permutations in lexicographic order.
FiniteGroup build_symmetric(std::size_t n);

/// Same group with elements renamed: new index of old element a is perm[a].
/// perm[0] must be 0.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& perm);

struct OrderTwoCensus {
    bool has_order_two = false;
    Element witness = 0;  // some involution when has_order_two
    // {x, x^-1} with x < x^-1, sorted by x; empty when has_order_two.
    std::vector<std::pair<Element, Element>> pairing;
};

OrderTwoCensus order_two_census(const FiniteGroup& g);

/// Index-two subgroup character g -> {0, 1}, or empty if G has no subgroup of
/// index two. The choice is deterministic (least non-square gets value 1).
std::vector<int> sign_character(const FiniteGroup& g);

}  // namespace symcoh
