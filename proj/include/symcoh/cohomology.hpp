#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "symcoh/cochain.hpp"
#include "symcoh/integer_matrix.hpp"
#include "symcoh/modular.hpp"

namespace symcoh {

struct CohomologyResult {
    Flavor flavor = Flavor::classical;
    std::size_t degree = 0;
    AbGroupInvariants invariants;
    /// Cocycles of the flavor; representatives[i] has order invariants.factors[i].
    std::vector<Cochain> representatives;
};

struct ComparisonReport {
    Flavor source = Flavor::symmetric;
    Flavor target = Flavor::classical;
    std::size_t degree = 0;
    AbGroupInvariants source_invariants;
    AbGroupInvariants target_invariants;
    /// matrix[j][i]: coordinate i (mod target factor i) of the image of source generator j.
    std::vector<std::vector<std::int64_t>> matrix;
    bool injective = false;
    bool surjective = false;
};

struct SymmetryFlags {
    bool by_tau = false;
    bool by_vanishing = false;
    /// n = 3 only: phi(x, x^-1, y) = phi(x, y, y^-1) for all x, y.
    std::optional<bool> by_two_pattern;
};

struct CoboundaryFlags {
    bool g_symmetric = false;
    bool g_vanishes_on_inverses = false;
};

struct AlphaWitness {
    Cochain phi;  // symmetric 3-cocycle
    Cochain g;    // 2-cochain with f - phi = dg
};

/// Cohomology of one module in every flavor, with the per-degree linear
/// algebra computed once and shared. Safe to use from several threads.
class CohomologyEngine {
public:
    explicit CohomologyEngine(GModule m, Limits limits = {});

    const GModule& module() const noexcept { return m_; }
    const Limits& limits() const noexcept { return limits_; }

    CohomologyResult cohomology(std::size_t n, Flavor flavor) const;

    /// Class coordinates of a cocycle of the flavor; nullopt when phi is not one.
    std::optional<std::vector<std::int64_t>> class_coordinates(const Cochain& phi, Flavor flavor) const;

    ComparisonReport comparison_map(std::size_t n, Flavor source, Flavor target) const;

    /// Some g of the flavor with dg = phi, or nullopt. Requires n >= 1.
    std::optional<Cochain> is_coboundary(const Cochain& phi, Flavor flavor) const;

    std::optional<AlphaWitness> class_in_image_alpha3(const Cochain& f) const;

    /// Generators of the flavor subgroup of C^n (cached).
    const SparseIntMatrix& embedding(std::size_t n, Flavor flavor) const;

private:
    struct Level;
    struct EmbeddingSlot;
    const Level& level(std::size_t n, Flavor flavor) const;

    GModule m_;
    Limits limits_;
    zn::Ring ring_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, Flavor>, std::shared_ptr<Level>> levels_;
    mutable std::map<std::pair<std::size_t, Flavor>, std::shared_ptr<EmbeddingSlot>> embeddings_;
};

// Convenience wrappers around a temporary engine.
CohomologyResult cohomology(const GModule& m, std::size_t n, Flavor flavor, const Limits& limits = {});
ComparisonReport comparison_map(const GModule& m, std::size_t n, Flavor source, Flavor target,
                                const Limits& limits = {});
std::optional<Cochain> is_coboundary(const GModule& m, const Cochain& phi, Flavor flavor,
                                     const Limits& limits = {});
std::optional<AlphaWitness> class_in_image_alpha3(const GModule& m, const Cochain& f, const Limits& limits = {});

bool is_allowed_comparison(Flavor source, Flavor target) noexcept;

/// Images of source generators pushed through `second`, reduced modulo its
/// target invariants; used to check that comparisons compose.
std::vector<std::vector<std::int64_t>> compose_matrices(const ComparisonReport& first, const ComparisonReport& second);

/// phi must be a normalized cocycle of degree >= 2.
SymmetryFlags lemma_symmetry_criterion(const GModule& m, const Cochain& phi);

/// phi = dg symmetric, g a normalized 2-cochain.
CoboundaryFlags lemma_coboundary_criterion(const GModule& m, const Cochain& phi, const Cochain& g);

/// True when phi vanishes on every tuple with an adjacent inverse pair.
bool vanishes_on_adjacent_inverses(const GModule& m, const Cochain& phi);

/// d of a sparse cochain, without materializing the matrix.
SparseIntVector apply_coboundary(const GModule& m, std::size_t n, const SparseIntVector& phi);

}  // namespace symcoh
