#pragma once

#include "roughspace/order_core.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace roughspace::space {

// Bounded poset with total lower/upper operators. Structural validity is
// enforced at construction; the operator axioms are the business of
// verify_rough_space, which reports rather than throws.
struct HigherRoughSpace {
    order::FinitePoset poset;
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::vector<std::size_t> lower;  // element index -> element index
    std::vector<std::size_t> upper;

    // bottom/top auto-detected as the unique global extremes when not given
    static HigherRoughSpace make(order::FinitePoset poset,
                                 std::vector<std::size_t> lower,
                                 std::vector<std::size_t> upper,
                                 std::optional<std::size_t> bottom = std::nullopt,
                                 std::optional<std::size_t> top = std::nullopt);
};

struct HigherGranularSpace {
    order::BoundedLattice lattice;
    std::vector<std::size_t> lower;
    std::vector<std::size_t> upper;
    std::vector<std::size_t> granulation;  // sorted element indices

    static HigherGranularSpace make(order::BoundedLattice lattice,
                                    std::vector<std::size_t> lower,
                                    std::vector<std::size_t> upper,
                                    std::vector<std::size_t> granulation);

    const order::FinitePoset& poset() const { return lattice.poset(); }
    std::size_t size() const { return lattice.size(); }
};

enum class Crispness {
    lower_definite,
    upper_definite,
    definite,
    weakly_upper_definite,
    weakly_definite,
};
inline constexpr Crispness all_crispness[] = {
    Crispness::lower_definite,    Crispness::upper_definite, Crispness::definite,
    Crispness::weakly_upper_definite, Crispness::weakly_definite,
};

enum class Roughness {
    lower_rough,
    upper_rough,
    weakly_upper_rough,
    rough,
    definite_pair,
    lu_pair,
    lu_interval,
    definite_interval,
};
inline constexpr Roughness all_roughness[] = {
    Roughness::lower_rough,   Roughness::upper_rough, Roughness::weakly_upper_rough,
    Roughness::rough,         Roughness::definite_pair, Roughness::lu_pair,
    Roughness::lu_interval,   Roughness::definite_interval,
};

std::string to_string(Crispness c);
std::string to_string(Roughness r);
std::optional<Crispness> crispness_from_string(const std::string& tag);
std::optional<Roughness> roughness_from_string(const std::string& tag);

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::string witness;  // empty on pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
    const AxiomCheck* find(const std::string& axiom) const;
};

// Axiom names used in reports:
//   lower-contraction, lower-idempotence, upper-iteration, lower-monotone,
//   upper-monotone, bottom-lower-fixed, bottom-upper-fixed, top-lower-below,
//   top-upper-below, bounded
AxiomReport verify_rough_space(const HigherRoughSpace& s);

// Adds: join-table, meet-table, wra, lower-stability, full-underlap
AxiomReport verify_granular_space(const HigherGranularSpace& s);

// Powerset lattice of the universe with block-union approximations and the
// blocks as granulation. Blocks must partition the universe.
// Element labels are "{}"-style subset labels in universe input order.
HigherGranularSpace from_partition(const std::vector<std::string>& universe,
                                   const std::vector<std::vector<std::string>>& blocks);

std::vector<std::size_t> crisp_set(const HigherGranularSpace& s, Crispness concept_tag);

struct RoughCatalog {
    Roughness tag;
    bool pair_shaped = false;  // definite-pair and lu-pair catalogs hold pairs
    std::vector<std::size_t> members;
    std::vector<std::pair<std::size_t, std::size_t>> pair_members;

    std::size_t count() const { return pair_shaped ? pair_members.size() : members.size(); }
};

RoughCatalog rough_catalog(const HigherGranularSpace& s, Roughness tag);

struct ClassificationCell {
    Crispness crispness;
    Roughness roughness;
    std::size_t crisp_count = 0;
    std::size_t rough_count = 0;
};

// exactly 5 x 8 = 40 cells, crispness-major order
std::vector<ClassificationCell> classification_matrix(const HigherGranularSpace& s);

enum class Assumption { F1, F2, C1, C2, R1, R2, R3, RC1, RC2 };
std::string to_string(Assumption a);
std::optional<Assumption> assumption_from_string(const std::string& tag);

struct AssumptionProfile {
    std::size_t n = 0;  // asserted object count
    std::size_t k = 0;  // asserted crisp count
    std::vector<std::size_t> crisp;  // C
    std::vector<std::size_t> rough;  // R
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> phi;  // R -> C x C
    std::set<Assumption> flags;
};

// One report entry per asserted flag, plus "image-off-diagonal" whenever phi
// is present (the representation must land in C^2 minus the diagonal).
AxiomReport verify_assumptions(const HigherGranularSpace& s, const AssumptionProfile& p);

struct RepresentationMap {
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> assignments;
    std::vector<std::pair<std::size_t, std::size_t>> image;  // sorted, diagonal-free
    std::vector<std::size_t> unrepresentable;                // witnesses, in R order
};

// phi(x) = (x^l, x^u) when both are crisp and strictly ordered; otherwise the
// first strictly-ordered pair from the definable scopes (maximal crisp
// elements below x, minimal crisp elements above x), ties broken by element
// input order.
RepresentationMap canonical_representation(const HigherGranularSpace& s,
                                           const std::vector<std::size_t>& crisp,
                                           const std::vector<std::size_t>& rough);

}  // namespace roughspace::space
