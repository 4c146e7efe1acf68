#include "roughspace/order_core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace roughspace::order {

namespace {

constexpr std::size_t NIL = std::numeric_limits<std::size_t>::max();

void and_rows(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

bool subset_of(const std::uint64_t* sub, const std::uint64_t* super, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if (sub[w] & ~super[w]) return false;
    return true;
}

}  // namespace

std::optional<std::size_t> FinitePoset::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FinitePoset::require_index(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx) throw std::invalid_argument("unknown label '" + std::string(label) + "'");
    return *idx;
}

std::optional<std::size_t> FinitePoset::bottom() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < n && below_all; ++j) below_all = leq(i, j);
        if (below_all) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        bool above_all = true;
        for (std::size_t j = 0; j < n && above_all; ++j) above_all = leq(j, i);
        if (above_all) return i;
    }
    return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> idx = subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (std::size_t i : idx)
        if (i >= size()) throw std::invalid_argument("induced: index out of range");

    const std::size_t m = idx.size();
    detail::BitMatrix up(m);
    std::vector<std::string> labels(m);
    for (std::size_t a = 0; a < m; ++a) {
        labels[a] = label(idx[a]);
        for (std::size_t b = 0; b < m; ++b)
            if (leq(idx[a], idx[b])) up.set(a, b);
    }
    return from_closure(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::from_closure(std::vector<std::string> labels, detail::BitMatrix up) {
    FinitePoset p;
    const std::size_t n = labels.size();
    p.labels_ = std::move(labels);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = p.index_.emplace(p.labels_[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate label '" + p.labels_[i] + "'");
    }
    p.up_ = std::move(up);
    p.down_ = detail::BitMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.up_.test(i, j)) p.down_.set(j, i);

    // covering pairs: (i, j) with i < j and nothing strictly between
    const std::size_t words = p.up_.words();
    std::vector<std::uint64_t> between(words);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !p.up_.test(i, j)) continue;
            and_rows(p.up_.row(i), p.down_.row(j), between.data(), words);
            between[i / 64] &= ~(std::uint64_t{1} << (i % 64));
            between[j / 64] &= ~(std::uint64_t{1} << (j % 64));
            bool empty = true;
            for (std::size_t w = 0; w < words && empty; ++w) empty = between[w] == 0;
            if (empty) p.covers_.emplace_back(i, j);
        }
    }
    return p;
}

FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& relation_pairs,
                        RelationMode mode) {
    const std::size_t n = elements.size();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = index.emplace(elements[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate label '" + elements[i] + "'");
    }

    detail::BitMatrix reach(n);
    for (const auto& [a, b] : relation_pairs) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) throw std::invalid_argument("unknown label '" + a + "'");
        if (ib == index.end()) throw std::invalid_argument("unknown label '" + b + "'");
        if (ia->second == ib->second) {
            if (mode == RelationMode::covers)
                throw std::invalid_argument("element '" + a + "' cannot cover itself");
            continue;  // reflexive statement, nothing to add
        }
        reach.set(ia->second, ib->second);
    }

    // transitive closure (Warshall on bit rows)
    const std::size_t words = reach.words();
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t* rk = reach.row(k);
        for (std::size_t i = 0; i < n; ++i) {
            if (!reach.test(i, k)) continue;
            std::uint64_t* ri = reach.row(i);
            for (std::size_t w = 0; w < words; ++w) ri[w] |= rk[w];
        }
    }

    // antisymmetry: a strict cycle makes some element reach itself
    for (std::size_t i = 0; i < n; ++i) {
        if (!reach.test(i, i)) continue;
        std::vector<std::size_t> scc;
        for (std::size_t k = 0; k < n; ++k)
            if (reach.test(i, k) && reach.test(k, i)) scc.push_back(k);
        std::string cycle;
        for (std::size_t c = 0; c < scc.size(); ++c) {
            if (c) cycle += ", ";
            cycle += elements[scc[c]];
        }
        throw std::invalid_argument("cycle detected: " + cycle);
    }

    for (std::size_t i = 0; i < n; ++i) reach.set(i, i);
    return FinitePoset::from_closure(std::move(elements), std::move(reach));
}

// --- width / chain cover (Hopcroft-Karp over the strict order) ---

namespace {

struct Matching {
    std::vector<std::size_t> match_l, match_r;
    std::size_t size = 0;
};

Matching max_matching_strict(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (p.less(u, v)) adj[u].push_back(v);

    Matching m;
    m.match_l.assign(n, NIL);
    m.match_r.assign(n, NIL);
    std::vector<std::size_t> dist(n);
    constexpr std::size_t INF = std::numeric_limits<std::size_t>::max();

    auto bfs = [&]() {
        std::vector<std::size_t> queue;
        for (std::size_t u = 0; u < n; ++u) {
            if (m.match_l[u] == NIL) {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = INF;
            }
        }
        bool found = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t u = queue[qi];
            for (std::size_t v : adj[u]) {
                std::size_t w = m.match_r[v];
                if (w == NIL) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v : adj[u]) {
            std::size_t w = m.match_r[v];
            if (w == NIL || (dist[w] == dist[u] + 1 && self(self, w))) {
                m.match_l[u] = v;
                m.match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };

    while (bfs()) {
        for (std::size_t u = 0; u < n; ++u)
            if (m.match_l[u] == NIL && dfs(dfs, u)) ++m.size;
    }
    return m;
}

}  // namespace

WidthResult width_with_cover(const FinitePoset& p) {
    if (p.empty()) throw std::invalid_argument("width_with_cover: empty poset");
    Matching m = max_matching_strict(p);

    WidthResult result;
    const std::size_t n = p.size();
    for (std::size_t start = 0; start < n; ++start) {
        if (m.match_r[start] != NIL) continue;  // has a predecessor in its chain
        std::vector<std::size_t> chain;
        for (std::size_t cur = start; cur != NIL; cur = m.match_l[cur]) chain.push_back(cur);
        result.cover.chains.push_back(std::move(chain));
    }
    result.width = result.cover.chains.size();
    return result;
}

AntichainPartition min_antichain_partition(const FinitePoset& p) {
    if (p.empty()) throw std::invalid_argument("min_antichain_partition: empty poset");
    const std::size_t n = p.size();
    std::vector<char> removed(n, 0);
    std::size_t remaining = n;

    AntichainPartition partition;
    while (remaining > 0) {
        std::vector<std::size_t> level;
        for (std::size_t i = 0; i < n; ++i) {
            if (removed[i]) continue;
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j)
                if (!removed[j] && p.less(j, i)) minimal = false;
            if (minimal) level.push_back(i);
        }
        for (std::size_t i : level) removed[i] = 1;
        remaining -= level.size();
        partition.antichains.push_back(std::move(level));
    }
    return partition;
}

// --- SDR (Hall) ---

SetFamily SetFamily::from_labels(std::vector<std::string> universe,
                                 const std::vector<std::vector<std::string>>& members) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        auto [it, fresh] = index.emplace(universe[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate label '" + universe[i] + "'");
    }
    SetFamily f;
    f.universe = std::move(universe);
    for (const auto& member : members) {
        std::vector<std::size_t> idx;
        for (const auto& label : member) {
            auto it = index.find(label);
            if (it == index.end()) throw std::invalid_argument("unknown label '" + label + "'");
            idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        f.members.push_back(std::move(idx));
    }
    return f;
}

SdrResult find_sdr(const SetFamily& family) {
    const std::size_t sets = family.members.size();
    const std::size_t elems = family.universe.size();
    std::vector<std::size_t> match_elem(elems, NIL);  // element -> set
    std::vector<std::size_t> rep(sets, NIL);          // set -> element
    std::vector<char> visited(elems);

    auto augment = [&](auto&& self, std::size_t s) -> bool {
        for (std::size_t e : family.members[s]) {
            if (visited[e]) continue;
            visited[e] = 1;
            if (match_elem[e] == NIL || self(self, match_elem[e])) {
                match_elem[e] = s;
                rep[s] = e;
                return true;
            }
        }
        return false;
    };

    std::size_t matched = 0;
    for (std::size_t s = 0; s < sets; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(augment, s)) ++matched;
    }

    SdrResult result;
    if (matched == sets) {
        result.representatives = rep;
        return result;
    }

    // Hall violator: alternating reachability from an unmatched set gives a
    // subfamily whose union is one element short.
    std::size_t unmatched = 0;
    while (rep[unmatched] != NIL) ++unmatched;
    std::vector<char> in_sets(sets, 0), in_elems(elems, 0);
    std::vector<std::size_t> queue{unmatched};
    in_sets[unmatched] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t e : family.members[queue[qi]]) {
            if (in_elems[e]) continue;
            in_elems[e] = 1;
            std::size_t owner = match_elem[e];
            if (owner != NIL && !in_sets[owner]) {
                in_sets[owner] = 1;
                queue.push_back(owner);
            }
        }
    }
    for (std::size_t s = 0; s < sets; ++s)
        if (in_sets[s]) result.violating_subfamily.push_back(s);
    return result;
}

// --- bounded lattice ---

namespace {

// least element of the candidate bit-row, i.e. the candidate below all others;
// NIL when no such element exists
std::size_t least_of(const FinitePoset& p, const std::uint64_t* candidates, std::size_t n) {
    const std::size_t words = p.row_words();
    for (std::size_t c = 0; c < n; ++c) {
        if (!((candidates[c / 64] >> (c % 64)) & 1u)) continue;
        if (subset_of(candidates, p.up_row(c), words)) return c;
    }
    return NIL;
}

std::size_t greatest_of(const FinitePoset& p, const std::uint64_t* candidates, std::size_t n) {
    const std::size_t words = p.row_words();
    for (std::size_t c = 0; c < n; ++c) {
        if (!((candidates[c / 64] >> (c % 64)) & 1u)) continue;
        if (subset_of(candidates, p.down_row(c), words)) return c;
    }
    return NIL;
}

}  // namespace

BoundedLattice BoundedLattice::derive(FinitePoset poset) {
    const std::size_t n = poset.size();
    if (n == 0) throw std::invalid_argument("lattice: empty poset");
    std::vector<std::uint32_t> join(n * n), meet(n * n);
    const std::size_t words = poset.row_words();
    std::vector<std::uint64_t> cand(words);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            and_rows(poset.up_row(i), poset.up_row(j), cand.data(), words);
            std::size_t lub = least_of(poset, cand.data(), n);
            if (lub == NIL)
                throw std::invalid_argument("not a lattice: no join for {" + poset.label(i) + ", " +
                                            poset.label(j) + "}");
            and_rows(poset.down_row(i), poset.down_row(j), cand.data(), words);
            std::size_t glb = greatest_of(poset, cand.data(), n);
            if (glb == NIL)
                throw std::invalid_argument("not a lattice: no meet for {" + poset.label(i) + ", " +
                                            poset.label(j) + "}");
            join[i * n + j] = join[j * n + i] = static_cast<std::uint32_t>(lub);
            meet[i * n + j] = meet[j * n + i] = static_cast<std::uint32_t>(glb);
        }
    }
    return from_tables(std::move(poset), std::move(join), std::move(meet));
}

BoundedLattice BoundedLattice::from_tables(FinitePoset poset,
                                           std::vector<std::uint32_t> join_table,
                                           std::vector<std::uint32_t> meet_table) {
    const std::size_t n = poset.size();
    if (n == 0) throw std::invalid_argument("lattice: empty poset");
    if (join_table.size() != n * n || meet_table.size() != n * n)
        throw std::invalid_argument("lattice: join/meet tables must be total");

    const std::size_t words = poset.row_words();
    std::vector<std::uint64_t> cand(words);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::size_t lub = join_table[i * n + j];
            std::size_t glb = meet_table[i * n + j];
            if (lub >= n || glb >= n || join_table[j * n + i] != lub || meet_table[j * n + i] != glb)
                throw std::invalid_argument("lattice: malformed table entry for {" + poset.label(i) +
                                            ", " + poset.label(j) + "}");
            and_rows(poset.up_row(i), poset.up_row(j), cand.data(), words);
            bool lub_in = (cand[lub / 64] >> (lub % 64)) & 1u;
            if (!lub_in || !subset_of(cand.data(), poset.up_row(lub), words))
                throw std::invalid_argument("lattice: join table disagrees with the order at {" +
                                            poset.label(i) + ", " + poset.label(j) + "}");
            and_rows(poset.down_row(i), poset.down_row(j), cand.data(), words);
            bool glb_in = (cand[glb / 64] >> (glb % 64)) & 1u;
            if (!glb_in || !subset_of(cand.data(), poset.down_row(glb), words))
                throw std::invalid_argument("lattice: meet table disagrees with the order at {" +
                                            poset.label(i) + ", " + poset.label(j) + "}");
        }
    }

    auto bottom = poset.bottom();
    auto top = poset.top();
    if (!bottom || !top) throw std::invalid_argument("lattice: not bounded");

    BoundedLattice l;
    l.bottom_ = *bottom;
    l.top_ = *top;
    l.poset_ = std::move(poset);
    l.join_ = std::move(join_table);
    l.meet_ = std::move(meet_table);
    return l;
}

std::vector<std::size_t> sublattice_closure(const BoundedLattice& l,
                                            const std::vector<std::size_t>& seed,
                                            bool include_bounds) {
    const std::size_t n = l.size();
    std::vector<char> in(n, 0);
    std::vector<std::size_t> members;
    auto push = [&](std::size_t x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    for (std::size_t x : seed) {
        if (x >= n) throw std::invalid_argument("sublattice_closure: index out of range");
        push(x);
    }
    if (include_bounds) {
        push(l.bottom());
        push(l.top());
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            push(l.join(members[i], members[j]));
            push(l.meet(members[i], members[j]));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::size_t> branching_points(const FinitePoset& p) {
    std::vector<std::size_t> up_degree(p.size(), 0), down_degree(p.size(), 0);
    for (const auto& [a, b] : p.covers()) {
        ++up_degree[a];    // a is covered by b
        ++down_degree[b];  // b covers a
    }
    std::vector<std::size_t> points;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (up_degree[i] > 1 || down_degree[i] > 1) points.push_back(i);
    return points;
}

std::vector<std::size_t> extremal(const FinitePoset& p,
                                  const std::vector<std::size_t>& subset,
                                  Direction direction) {
    for (std::size_t i : subset)
        if (i >= p.size()) throw std::invalid_argument("extremal: index out of range");
    std::vector<char> in(p.size(), 0);
    for (std::size_t i : subset) in[i] = 1;

    std::vector<std::size_t> result;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!in[x]) continue;
        bool extreme = true;
        for (std::size_t y = 0; y < p.size() && extreme; ++y) {
            if (!in[y]) continue;
            if (direction == Direction::maximal ? p.less(x, y) : p.less(y, x)) extreme = false;
        }
        if (extreme) result.push_back(x);
    }
    return result;
}

}  // namespace roughspace::order
