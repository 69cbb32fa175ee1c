#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "symcoh/cochain.hpp"
#include "symcoh/crossed.hpp"
#include "symcoh/group.hpp"

namespace symcoh {

/// boundary: T -> R with R acting on T.
struct CrossedModule {
    FiniteGroup t, r;
    std::vector<Element> boundary;
    std::vector<std::vector<Element>> raction;  // raction[r][t]
};

CrossedModule crossed_module_of(const CrossedExtension& xe);

/// Homomorphism, action by automorphisms, equivariance and Peiffer identity.
void validate_crossed_module(const CrossedModule& xm);

/// r --t--> boundary(t) r. The target is computed, never stored.
struct Morphism {
    Element t = 0;
    Element source = 0;
    bool operator==(const Morphism&) const = default;
};

struct BifunctorReport {
    bool exhaustive = false;
    std::size_t checks = 0;
};

class CatGroup {
public:
    const CrossedModule& xm() const noexcept { return xm_; }
    const BifunctorReport& report() const noexcept { return report_; }

    Element target(Morphism a) const { return xm_.r.mul(xm_.boundary[a.t], a.source); }
    Morphism identity(Element r) const { return {FiniteGroup::identity, r}; }
    /// second o first; validation error unless target(first) = source(second).
    Morphism compose(Morphism second, Morphism first) const;
    Morphism inverse(Morphism a) const { return {xm_.t.inv(a.t), target(a)}; }

    Element tensor(Element r, Element x) const { return xm_.r.mul(r, x); }
    /// (t: r -> z) (x) (s: x -> y) = (t . ^r s : rx -> zy).
    Morphism tensor(Morphism a, Morphism b) const;

private:
    friend CatGroup build_cat_group(CrossedModule xm, std::size_t exhaustive_limit, std::uint64_t seed);

    CrossedModule xm_;
    BifunctorReport report_;
};

/// Validates xm, then checks identities, inverses, the unit formulas, the
/// interchange law and strict associativity of the tensor. Exhaustive while
/// the largest loop (|T|^3 |R|^3 or |T|^4 |R|^2) stays under exhaustive_limit,
/// otherwise that many seeded random instances. A failed law is a validation error.
CatGroup build_cat_group(CrossedModule xm, std::size_t exhaustive_limit = 2'000'000, std::uint64_t seed = 1);

/// Normalized s-functor Ca_G -> Ca_{T->R}: xi(x, y) : F(xy) -> F(x) F(y).
struct SFunctor {
    FiniteGroup g;
    std::vector<Element> f;   // G -> R
    std::vector<Element> xi;  // G x G -> T, index x * |G| + y
    bool normalized = false;

    Morphism xi_at(Element x, Element y) const { return {xi[x * g.order() + y], f[g.mul(x, y)]}; }
};

/// Checks the endpoints of every xi and p F = id.
SFunctor section_functor(const CrossedExtension& xe, const CatGroup& cat, const SSection& sec);

/// (xi(x,y) (x) Id) o xi(xy,z) = (Id (x) xi(y,z)) o xi(x,yz) for all x, y, z.
bool is_monoidal(const CatGroup& cat, const SFunctor& sf);

/// Both triangles for all x, y. Requires sf.normalized.
bool is_symmetric_sfunctor(const CatGroup& cat, const SFunctor& sf);

struct SplitResult {
    bool splits = false;
    /// A normalized section whose s-functor is monoidal.
    std::optional<SSection> monoidal_section;
};

/// Corrects the canonical normalized section by a coboundary witness of its
/// 3-cocycle and confirms the corrected s-functor is monoidal.
SplitResult split_check(const CrossedExtension& xe, const Limits& limits = {});

}  // namespace symcoh
