#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "symcoh/group.hpp"

namespace symcoh {

/// Reduced residues, one per cyclic factor: residues[i] in [0, d_i).
using ModuleElement = std::vector<std::int64_t>;

/// Square integer matrix as nested rows.
using IntSquare = std::vector<std::vector<std::int64_t>>;

/// A finite G-module M = Z/d_1 + ... + Z/d_k with G acting by the matrices
/// action(g). Entry (i, j) of action(g) is the i-th coordinate of g . e_j and
/// is only meaningful modulo d_i.
class GModule {
public:
    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t rank() const noexcept { return exponents_.size(); }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
    /// lcm of the exponents (1 for the zero module).
    std::int64_t exponent() const noexcept { return exponent_; }
    /// |M|; fits in 64 bits for every module the validator accepts.
    std::size_t cardinality() const noexcept { return cardinality_; }
    bool trivial_action() const noexcept { return trivial_action_; }

    std::int64_t action_entry(Element g, std::size_t i, std::size_t j) const noexcept {
        return action_[(g * rank() + i) * rank() + j];
    }
    IntSquare action_matrix(Element g) const;

    ModuleElement zero() const { return ModuleElement(rank(), 0); }
    ModuleElement act(Element g, const ModuleElement& m) const;
    ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
    ModuleElement sub(const ModuleElement& a, const ModuleElement& b) const;
    ModuleElement neg(const ModuleElement& a) const;
    ModuleElement scale(std::int64_t c, const ModuleElement& a) const;
    ModuleElement reduce(ModuleElement a) const;
    bool is_zero(const ModuleElement& a) const;

    /// Mixed-radix index of an element, first coordinate most significant.
    std::size_t index_of(const ModuleElement& m) const;
    ModuleElement element_at(std::size_t index) const;

private:
    friend GModule validate_module(const FiniteGroup&, std::vector<std::int64_t>, const std::vector<IntSquare>&);

    FiniteGroup group_;
    std::vector<std::int64_t> exponents_;
    std::vector<std::int64_t> action_;  // |G| * k * k, reduced
    std::int64_t exponent_ = 1;
    std::size_t cardinality_ = 1;
    bool trivial_action_ = true;
};

/// Validates exponents and one action matrix per group element.
GModule validate_module(const FiniteGroup& g, std::vector<std::int64_t> exponents,
                        const std::vector<IntSquare>& element_matrices);

GModule trivial_module(const FiniteGroup& g, std::vector<std::int64_t> exponents);

/// Z/d with the elements outside the canonical index-two subgroup acting by -1.
GModule sign_module(const FiniteGroup& g, std::int64_t d);

/// Expands matrices given on a generating set to every element, then
/// validates the result.
GModule module_from_generators(const FiniteGroup& g, std::vector<std::int64_t> exponents,
                               const std::map<Element, IntSquare>& generator_matrices);

std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept;

}  // namespace symcoh
