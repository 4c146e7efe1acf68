#include "roughspace/oracle_suite.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace roughspace::oracle {

OracleVerdict make_verdict(std::string production, std::string oracle, std::string witness) {
    OracleVerdict v;
    v.agrees = production == oracle;
    v.production = std::move(production);
    v.oracle = std::move(oracle);
    if (!v.agrees) v.witness = std::move(witness);
    return v;
}

std::optional<std::uint64_t> oracle_chain_feasibility(chains::Regime regime, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("oracle_chain_feasibility: n must be positive");
    if (regime != chains::Regime::pwc && regime != chains::Regime::wdc)
        throw std::invalid_argument("oracle_chain_feasibility: pwc or wdc only");
    for (std::uint64_t k = 1; k <= n && k * k <= n; ++k) {
        std::uint64_t rhs = regime == chains::Regime::pwc ? k * k : k * k - k;
        if (n - k == rhs) return k;
    }
    return std::nullopt;
}

namespace {

bool mask_is_chain(const order::FinitePoset& p, unsigned mask) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (!(mask >> j & 1)) continue;
            if (!p.leq(i, j) && !p.leq(j, i)) return false;
        }
    }
    return true;
}

bool mask_is_antichain(const order::FinitePoset& p, unsigned mask) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (!(mask >> j & 1)) continue;
            if (p.leq(i, j) || p.leq(j, i)) return false;
        }
    }
    return true;
}

// minimum number of blocks from `admissible` partitioning `mask`
std::size_t min_partition(unsigned mask, const std::vector<char>& admissible,
                          std::vector<std::size_t>& memo) {
    if (mask == 0) return 0;
    if (memo[mask] != SIZE_MAX) return memo[mask];
    unsigned low = mask & (~mask + 1u);  // lowest element must sit in some block
    std::size_t best = SIZE_MAX;
    for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
        if (!(sub & low) || !admissible[sub]) continue;
        std::size_t rest = min_partition(mask & ~sub, admissible, memo);
        if (rest != SIZE_MAX) best = std::min(best, rest + 1);
    }
    memo[mask] = best;
    return best;
}

}  // namespace

PosetExtrema oracle_poset(const order::FinitePoset& p) {
    if (p.empty()) throw std::invalid_argument("oracle_poset: empty poset");
    if (p.size() > 8) throw std::invalid_argument("oracle_poset: more than 8 elements");
    const unsigned full = (1u << p.size()) - 1;

    PosetExtrema e;
    std::vector<char> chain(full + 1), antichain(full + 1);
    for (unsigned mask = 0; mask <= full; ++mask) {
        chain[mask] = mask_is_chain(p, mask);
        antichain[mask] = mask_is_antichain(p, mask);
        if (chain[mask])
            e.longest_chain = std::max<std::size_t>(e.longest_chain, std::popcount(mask));
        if (antichain[mask])
            e.max_antichain = std::max<std::size_t>(e.max_antichain, std::popcount(mask));
    }

    std::vector<std::size_t> memo(full + 1, SIZE_MAX);
    e.min_chain_cover = min_partition(full, chain, memo);
    std::fill(memo.begin(), memo.end(), SIZE_MAX);
    e.min_antichain_partition = min_partition(full, antichain, memo);
    return e;
}

std::vector<std::size_t> oracle_terms(const order::BoundedLattice& l,
                                      const std::vector<std::size_t>& granules, unsigned depth) {
    if (depth > 6) throw std::invalid_argument("oracle_terms: depth above 6");
    std::vector<char> in(l.size(), 0);
    std::vector<std::size_t> values;
    auto push = [&](std::size_t x) {
        if (!in[x]) {
            in[x] = 1;
            values.push_back(x);
        }
    };
    for (std::size_t g : granules) {
        if (g >= l.size()) throw std::invalid_argument("oracle_terms: index out of range");
        push(g);
    }
    push(l.bottom());
    push(l.top());

    for (unsigned d = 0; d < depth; ++d) {
        std::vector<std::size_t> snapshot = values;
        for (std::size_t x : snapshot)
            for (std::size_t y : snapshot) {
                push(l.join(x, y));
                push(l.meet(x, y));
            }
    }
    std::sort(values.begin(), values.end());
    return values;
}

namespace {

void rbc_enumerate(std::uint64_t remaining, std::uint64_t parts_left, std::uint64_t a,
                   std::uint64_t cap, bool distinct, const BigCount& product, BigCount& total,
                   BigCount& seen_vectors) {
    if (parts_left == 0) {
        if (remaining == 0) total += product;
        return;
    }
    std::uint64_t hi = std::min<std::uint64_t>(cap, remaining);
    for (std::uint64_t part = hi + 1; part-- > a;) {
        ++seen_vectors;
        if (seen_vectors > 50'000'000)
            throw std::invalid_argument("oracle_rbc: enumeration budget exceeded");
        std::uint64_t next_cap = distinct ? (part == 0 ? 0 : part - 1) : part;
        rbc_enumerate(remaining - part, parts_left - 1, a, next_cap, distinct,
                      product * part, total, seen_vectors);
    }
}

}  // namespace

BigCount oracle_rbc(const chains::RbcProblem& p) {
    const BigInt r_big = p.r();
    const BigInt g_big = p.g();
    if (g_big == 0) return r_big == 0 ? 1 : 0;
    if (r_big > 60 || g_big > 40) throw std::invalid_argument("oracle_rbc: size guard exceeded");
    BigCount total = 0, seen = 0;
    rbc_enumerate(static_cast<std::uint64_t>(r_big), static_cast<std::uint64_t>(g_big), p.a, p.b,
                  p.distinct_parts, 1, total, seen);
    return total;
}

BigCount oracle_choice_functions(const std::vector<dist::ScopePair>& scope_pairs) {
    if (scope_pairs.size() > 6)
        throw std::invalid_argument("oracle_choice_functions: more than 6 objects");

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates;
    BigCount joint = 1;
    for (const auto& sp : scope_pairs) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a : sp.lower_scope)
            for (std::size_t b : sp.upper_scope)
                if (a != b) pairs.emplace_back(a, b);
        joint *= pairs.size();
        if (joint > 10'000'000)
            throw std::invalid_argument("oracle_choice_functions: selection budget exceeded");
        candidates.push_back(std::move(pairs));
    }

    // walk the whole cartesian product with an odometer
    if (scope_pairs.empty()) return 1;
    for (const auto& pairs : candidates)
        if (pairs.empty()) return 0;
    std::vector<std::size_t> odometer(candidates.size(), 0);
    BigCount count = 0;
    for (;;) {
        ++count;
        std::size_t i = 0;
        while (i < odometer.size()) {
            if (++odometer[i] < candidates[i].size()) break;
            odometer[i] = 0;
            ++i;
        }
        if (i == odometer.size()) break;
    }
    return count;
}

}  // namespace roughspace::oracle
