#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace roughspace::order {

namespace detail {

// Row-major bit matrix; row i holds the set {j : bit(i,j)}.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_(n ? (n + 63) / 64 : 0), bits_(n_ * words_, 0) {}

    bool test(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    void reset(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64)); }

    std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
    std::size_t words() const { return words_; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace detail

enum class RelationMode { covers, full_order };
enum class Direction { maximal, minimal };

// Finite partial order over opaque string labels. Immutable once built; all
// queries are const and safe to share across threads.
class FinitePoset {
public:
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    std::optional<std::size_t> index_of(std::string_view label) const;
    std::size_t require_index(std::string_view label) const;  // throws on unknown label

    bool leq(std::size_t a, std::size_t b) const { return up_.test(a, b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && up_.test(a, b); }

    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    std::size_t cover_count() const { return covers_.size(); }

    // unique global minimum / maximum, when they exist
    std::optional<std::size_t> bottom() const;
    std::optional<std::size_t> top() const;

    // subposet on the given indices; labels are carried over
    FinitePoset induced(const std::vector<std::size_t>& subset) const;

    // low-level row access (up-set of i as a bit row); words() == words per row
    const std::uint64_t* up_row(std::size_t i) const { return up_.row(i); }
    const std::uint64_t* down_row(std::size_t i) const { return down_.row(i); }
    std::size_t row_words() const { return up_.words(); }

    // Internal factory: order given as a ready reflexive/antisymmetric/transitive
    // bit matrix. Covers are computed here.
    static FinitePoset from_closure(std::vector<std::string> labels, detail::BitMatrix up);

private:
    FinitePoset() = default;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    detail::BitMatrix up_;    // row i: {j : i <= j}
    detail::BitMatrix down_;  // row i: {j : j <= i}
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

// Builds the reflexive-transitive closure of the given pairs. Rejects unknown
// labels, duplicate labels and cycles (the error names a witness cycle). In
// covers mode a self-pair is rejected; in full_order mode it is ignored.
FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& relation_pairs,
                        RelationMode mode);

struct ChainCover {
    std::vector<std::vector<std::size_t>> chains;  // each ascending in the order
};

struct AntichainPartition {
    std::vector<std::vector<std::size_t>> antichains;
};

struct WidthResult {
    std::size_t width = 0;
    ChainCover cover;  // exactly `width` pairwise-disjoint chains covering the poset
};

// Minimum disjoint chain cover via maximum bipartite matching on the strict
// order; the chain count equals the largest antichain size.
WidthResult width_with_cover(const FinitePoset& p);

// Recursively extracts minimal elements; the block count equals the length of
// the longest chain.
AntichainPartition min_antichain_partition(const FinitePoset& p);

struct SetFamily {
    std::vector<std::string> universe;
    std::vector<std::vector<std::size_t>> members;  // subsets of universe, by index

    static SetFamily from_labels(std::vector<std::string> universe,
                                 const std::vector<std::vector<std::string>>& members);
};

struct SdrResult {
    // representatives[i] = universe index chosen for member i
    std::optional<std::vector<std::size_t>> representatives;
    // on failure: member indices S whose union is smaller than |S|
    std::vector<std::size_t> violating_subfamily;
};

SdrResult find_sdr(const SetFamily& family);

// Bounded lattice over a finite poset: total join/meet tables validated
// exhaustively against the order (the least-upper/greatest-lower bound of
// every pair must exist and match the table entry).
class BoundedLattice {
public:
    static BoundedLattice derive(FinitePoset poset);
    static BoundedLattice from_tables(FinitePoset poset,
                                      std::vector<std::uint32_t> join_table,
                                      std::vector<std::uint32_t> meet_table);

    const FinitePoset& poset() const { return poset_; }
    std::size_t size() const { return poset_.size(); }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }

private:
    BoundedLattice() = default;

    FinitePoset poset_;
    std::vector<std::uint32_t> join_;
    std::vector<std::uint32_t> meet_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

// Smallest superset of seed closed under join and meet; with include_bounds,
// bottom and top join the seed as the values of the nullary operations.
// Result indices are sorted.
std::vector<std::size_t> sublattice_closure(const BoundedLattice& l,
                                            const std::vector<std::size_t>& seed,
                                            bool include_bounds = true);

// Elements covering, or covered by, more than one element: the points where
// chains split in the cover diagram.
std::vector<std::size_t> branching_points(const FinitePoset& p);

// Maximal (resp. minimal) elements of the induced subposet.
std::vector<std::size_t> extremal(const FinitePoset& p,
                                  const std::vector<std::size_t>& subset,
                                  Direction direction);

}  // namespace roughspace::order
