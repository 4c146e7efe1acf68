#pragma once

#include "roughspace/chain_solvers.hpp"
#include "roughspace/space_kernel.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace roughspace::dist {

// Definable scopes of x against a crisp set C: the maximal crisp elements
// below x and the minimal crisp elements above x. Both are antichains.
struct ScopePair {
    std::size_t x = 0;
    std::vector<std::size_t> lower_scope;  // SL(x)
    std::vector<std::size_t> upper_scope;  // SU(x)

    std::size_t c() const { return lower_scope.size(); }
    std::size_t v() const { return upper_scope.size(); }
};

ScopePair scopes(const space::HigherGranularSpace& s,
                 const std::vector<std::size_t>& crisp, std::size_t x);

struct ChoiceFactor {
    std::size_t x = 0;
    std::size_t lower_choices = 0;
    std::size_t upper_choices = 0;
    std::size_t candidates = 0;  // |SL x SU| minus diagonal hits
};

struct ChoiceCount {
    std::vector<ChoiceFactor> factors;         // in R input order
    BigCount total = 1;                        // product of candidate counts
    std::optional<std::size_t> unrepresentable;  // first x with no candidates
};

ChoiceCount choice_count(const space::HigherGranularSpace& s,
                         const std::vector<std::size_t>& crisp,
                         const std::vector<std::size_t>& rough);

// Slot bookkeeping for one cover chain: the disjoint chain, its deterministic
// maximal extension, and the extension elements already counted by earlier
// chains (the parts below/through branching points that would double-count).
struct ChainSlots {
    std::vector<std::size_t> chain;      // the disjoint cover chain, ascending
    std::vector<std::size_t> extension;  // maximal chain through it, bottom..top
    std::size_t h = 0;                   // extension length
    std::size_t h_o = 0;                 // excluded element count
    std::vector<std::size_t> excluded;   // exact excluded elements, for audit
    BigCount counted_slots = 0;          // (h^2-h) - (h_o^2-h_o)
};

struct CoverPlan {
    order::ChainCover chains;  // |chains| = width of the crisp poset
    std::vector<std::size_t> branch_points;
    std::vector<ChainSlots> per_chain;
};

// Requires a bounded crisp poset. The chain holding the bottom element comes
// first; ties follow element input order throughout.
CoverPlan cover_plan(const order::FinitePoset& crisp);

// How r rough objects spread over the h^2-h slots of an h-element crisp chain.
struct SlotModel {
    enum class Kind { stars_and_bars, distinct_parts, bounded };
    Kind kind = Kind::stars_and_bars;
    std::uint64_t a = 0;  // bounded only
    std::uint64_t b = 0;

    static SlotModel stars_and_bars() { return {}; }
    static SlotModel distinct_parts() { return {Kind::distinct_parts, 0, 0}; }
    static SlotModel bounded(std::uint64_t a, std::uint64_t b) { return {Kind::bounded, a, b}; }
};

BigCount n_r_h(std::uint64_t r, std::uint64_t h, const SlotModel& model = {});

// n(r,h) - n(r,h_o): placements with the already-counted segment omitted.
// h_o <= h; a negative difference signals a non-monotone model plug-in and is
// treated as an internal error.
BigCount branch_adjusted_count(std::uint64_t r, std::uint64_t h, std::uint64_t h_o,
                               const SlotModel& model = {});

struct RboProfile {
    BigInt n;
    BigInt k;
    BigInt t;
    ExactRatio alpha;  // (n-k)/(k^2-k)
    ExactRatio beta;   // t/(k^2-k)
};

struct RboReport {
    RboProfile profile;
    bool t_within_bound = false;  // t <= n-k
    bool beta_le_alpha = false;

    bool consistent() const { return t_within_bound && beta_le_alpha; }
};

// Requires k >= 2. R2 (R and C exhausting the carrier) is deliberately not
// assumed here.
RboReport rbo_consistency(const BigInt& n, const BigInt& k, const BigInt& t);

}  // namespace roughspace::dist
