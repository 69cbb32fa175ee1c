#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symcoh/flavor.hpp"
#include "symcoh/module.hpp"

namespace symcoh {

namespace oracle {

// Brute-force ground truth. Shares nothing with the linear-algebra engine
// beyond groups and modules; cochains are tables of module elements indexed
// by tuple, leftmost argument most significant.

struct Budget {
    std::uint64_t max_enumeration = 10'000'000;  // cap on |M|^(|G|^n)
};

using Table = std::vector<ModuleElement>;

/// Invariant factors of H^n of the flavor, ascending, each dividing the next.
/// Throws budget_exhausted when |M|^(|G|^n) exceeds the budget.
std::vector<std::int64_t> enumerate_cohomology(const GModule& m, std::size_t n, Flavor flavor, Budget budget = {});

/// First (n-1)-cochain g of the flavor with dg = phi in enumeration order, or
/// nullopt. phi has degree n >= 1. Throws budget_exhausted when
/// |M|^(|G|^(n-1)) exceeds the budget.
std::optional<Table> exhaustive_coboundary(const GModule& m, std::size_t n, const Table& phi, Flavor flavor,
                                           Budget budget = {});

// Pointwise primitives, exposed for tests.
Table coboundary(const GModule& m, std::size_t n, const Table& phi);
Table tau(const GModule& m, std::size_t n, std::size_t i, const Table& phi);
bool is_member(const GModule& m, std::size_t n, const Table& phi, Flavor flavor);

}  // namespace oracle
}  // namespace symcoh
