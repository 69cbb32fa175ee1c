#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symcoh/cochain.hpp"
#include "symcoh/group.hpp"
#include "symcoh/module.hpp"

namespace symcoh {

/// Unvalidated crossed-extension data 0 -> M -> T -> R -> G -> 0.
struct CrossedExtensionData {
    std::string name = "crossed extension";
    FiniteGroup t, r, g;
    GModule m;
    std::vector<Element> boundary;             // T -> R
    std::vector<std::vector<Element>> raction;  // raction[r][t] = r acting on t
    std::vector<Element> pi;                    // R -> G
    std::vector<Element> iota;                  // image in T of each canonical generator of M
};

/// A validated crossed extension with the M <-> ker(boundary) translation tables.
class CrossedExtension {
public:
    const std::string& name() const noexcept { return data_.name; }
    const FiniteGroup& t() const noexcept { return data_.t; }
    const FiniteGroup& r() const noexcept { return data_.r; }
    const FiniteGroup& g() const noexcept { return data_.g; }
    const GModule& m() const noexcept { return data_.m; }
    const CrossedExtensionData& data() const noexcept { return data_; }

    Element boundary(Element t) const { return data_.boundary[t]; }
    Element act(Element r, Element t) const { return data_.raction[r][t]; }
    Element pi(Element r) const { return data_.pi[r]; }

    /// T element of a module element.
    Element iota(const ModuleElement& a) const { return iota_[data_.m.index_of(a)]; }
    /// Module element of a T element in ker(boundary); nullopt otherwise.
    std::optional<ModuleElement> iota_inverse(Element t) const;

    /// Least-index preimages.
    Element least_pi_preimage(Element x) const { return pi_pre_[x].front(); }
    const std::vector<Element>& pi_preimages(Element x) const { return pi_pre_[x]; }
    std::optional<Element> least_boundary_preimage(Element r) const;

private:
    friend CrossedExtension validate_crossed_extension(CrossedExtensionData data);

    CrossedExtensionData data_;
    std::vector<Element> iota_;                 // module index -> T
    std::vector<std::int64_t> iota_inv_;        // T -> module index or -1
    std::vector<std::vector<Element>> pi_pre_;  // G -> sorted preimages
    std::vector<std::int64_t> boundary_pre_;    // R -> least preimage or -1
};

/// Checks every crossed-extension axiom; violations are validation errors
/// naming the failed condition and a witness.
CrossedExtension validate_crossed_extension(CrossedExtensionData data);

/// Document schema:
///   {"name": "...", "T": <group>, "R": <group>, "G": <group>,
///    "M": <module over G>, "boundary": [...], "pi": [...],
///    "raction": "trivial" | [[...], ...], "iota": [...]}
/// A group may also be a string: a shorthand like "cyclic:9" or a path
/// (resolved against base_dir when relative). Errors cite JSON paths.
CrossedExtension crossed_extension_from_json(const nlohmann::json& doc, const std::string& base_dir = ".");
nlohmann::json crossed_extension_to_json(const CrossedExtension& xe);

/// Built-in examples.
/// 0 -> Z/p -> Z/p^2 --(*p)--> Z/p^2 -> Z/p -> 0, R acting on T by
/// multiplication with twist^r (twist = 1 gives the trivial action).
CrossedExtension cyclic_crossed_extension(std::int64_t p, std::int64_t twist = 1);
/// T = M, R = G, boundary trivial, R acting through the module action.
CrossedExtension trivial_crossed_extension(const GModule& m);

/// Renames T and R elements (perm[old] = new, perm[0] = 0).
CrossedExtension relabel_crossed_extension(const CrossedExtension& xe, const std::vector<Element>& t_perm,
                                           const std::vector<Element>& r_perm);

struct SSection {
    std::vector<Element> s;      // G -> R
    std::vector<Element> sigma;  // G x G -> T, index x * |G| + y
    bool normalized = false;
    bool weakly_symmetric = false;
    bool symmetric = false;

    Element sig(std::size_t order, Element x, Element y) const { return sigma[x * order + y]; }
};

/// Validates p s = id and s(x)s(y) = boundary(sigma(x,y)) s(xy), then sets the three flags.
SSection classify_section(const CrossedExtension& xe, std::vector<Element> s, std::vector<Element> sigma);

SSection normalised_section(const CrossedExtension& xe);

/// Every normalized section when there are at most `count`, otherwise
/// `count` seeded random ones. s ranges over p-preimages, sigma over
/// iota(M)-corrections of the least boundary preimage. With weak_shape
/// (G without two-torsion) only sections with s(x^-1) = s(x)^-1 and
/// sigma(x, x^-1) = 1 are produced.
std::vector<SSection> sample_normalized_sections(const CrossedExtension& xe, std::size_t count, std::uint64_t seed = 1,
                                                 bool weak_shape = false);

/// Requires G without elements of order two.
SSection weakly_symmetric_section(const CrossedExtension& xe);

/// f(x,y,z) = s(x)sigma(y,z) sigma(x,yz) sigma(xy,z)^-1 sigma(x,y)^-1, read in M.
Cochain three_cocycle(const CrossedExtension& xe, const SSection& sec);

bool prop41_check(const CrossedExtension& xe, const SSection& sec);
bool def44_check(const CrossedExtension& xe, const SSection& sec);

enum class SearchStatus { found, none, budget_exhausted };
const char* to_string(SearchStatus s) noexcept;

struct SectionSearch {
    SearchStatus status = SearchStatus::none;
    std::optional<SSection> section;
    std::size_t s_choices_examined = 0;
    std::size_t s_choices_total = 0;
    /// G has elements of order two.
    bool out_of_theorem_scope = false;
};

/// Searches symmetric s-sections. Budget counts examined s-choices.
SectionSearch find_symmetric_section(const CrossedExtension& xe, std::size_t budget = 100000);

/// 0 -> M -> K -> G -> 0 with K given by its table.
struct GroupExtension {
    FiniteGroup k;
    GModule m;
    std::vector<Element> i;  // module index -> K
    std::vector<Element> p;  // K -> G
};

/// Checks exactness and k i(m) k^-1 = i(p(k) m).
void validate_group_extension(const GroupExtension& ext);

/// K = M x G with (a, x)(b, y) = (a + x b + f(x, y), xy); (a, x) has index index_of(a) * |G| + x.
GroupExtension extension_from_2cocycle(const GModule& m, const Cochain& f);

/// f(x, y) = i^-1(s(x) s(y) s(xy)^-1).
Cochain recovered_2cocycle(const GroupExtension& ext, const std::vector<Element>& section);

/// Some set-section with s(x^-1) = s(x)^-1, or nullopt.
std::optional<std::vector<Element>> symmetric_section_search_2d(const GroupExtension& ext,
                                                                std::size_t max_order = std::size_t{1} << 20);

}  // namespace symcoh
