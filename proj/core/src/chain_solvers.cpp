#include "roughspace/chain_solvers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace roughspace::chains {

namespace {

std::size_t thread_budget() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("ROUGHSPACE_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return std::min<std::size_t>(v, hw * 4);
    }
    return hw;
}

// contiguous index chunks, one thread each; workers write disjoint slots
void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& work) {
    std::size_t threads = std::min(thread_budget(), total == 0 ? std::size_t{1} : total);
    if (threads <= 1 || total < 4096) {
        work(0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (total + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}

BigCount power(const BigInt& base, const BigInt& exp) {
    if (exp == 0) return 1;  // 0^0 = 1 by the empty-product convention
    BigCount result = 1;
    for (BigInt i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace

std::optional<BigInt> pwc_feasible(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("pwc_feasible: n must be positive");
    BigInt root;
    if (!is_perfect_square(1 + 4 * n, &root)) return std::nullopt;
    if ((root - 1) % 2 != 0) return std::nullopt;
    BigInt k = (root - 1) / 2;
    if (k < 1 || k * k + k != n) return std::nullopt;
    return k;
}

std::optional<BigInt> wdc_feasible(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("wdc_feasible: n must be positive");
    BigInt k;
    if (!is_perfect_square(n, &k)) return std::nullopt;
    return k;
}

std::vector<BooleanModel> boolean_wdc_models(const BigInt& limit, bool include_x_zero) {
    if (limit < 1) throw std::invalid_argument("boolean_wdc_models: limit must be positive");
    std::vector<BooleanModel> models;
    unsigned m = include_x_zero ? 0u : 1u;
    BigInt n = include_x_zero ? BigInt(1) : BigInt(4);
    for (; n <= limit; ++m, n *= 4) {
        BooleanModel model;
        model.exponent = 2 * m;
        model.k = BigInt(1) << m;
        model.n = n;
        models.push_back(std::move(model));
    }
    return models;
}

RdcPi rdc_pi(const BigInt& n, const BigInt& k) {
    if (k < 2) throw std::invalid_argument("rdc_pi: k must be at least 2");
    if (k > n) throw std::invalid_argument("rdc_pi: k exceeds n");
    RdcPi out;
    out.pi = ExactRatio(n - k, k * k - k);
    out.admissible = out.pi > 0 && out.pi <= 1;
    return out;
}

std::optional<BigInt> rdc_k(const BigInt& n, const ExactRatio& pi) {
    if (pi <= 0) throw std::invalid_argument("rdc_k: pi must be positive");
    if (n < 1) throw std::invalid_argument("rdc_k: n must be positive");
    const BigInt p = ratio_num(pi);
    const BigInt q = ratio_den(pi);
    const BigInt m = (q - p) * (q - p) + 4 * n * p * q;
    BigInt s;
    if (!is_perfect_square(m, &s)) return std::nullopt;
    const BigInt numerator = p - q + s;
    if (numerator <= 0 || numerator % (2 * p) != 0) return std::nullopt;
    BigInt k = numerator / (2 * p);
    if (k < 2) return std::nullopt;
    if ((n - k) * q != p * (k * k - k)) return std::nullopt;
    return k;
}

std::string to_string(BoundMode m) {
    switch (m) {
        case BoundMode::sqrt_n: return "sqrt-n";
        case BoundMode::sqrt_n_over_alpha: return "sqrt-n-over-alpha";
        case BoundMode::unbounded: return "unbounded";
    }
    return "?";
}

std::optional<BoundMode> bound_mode_from_string(const std::string& tag) {
    for (BoundMode m : {BoundMode::sqrt_n, BoundMode::sqrt_n_over_alpha, BoundMode::unbounded})
        if (to_string(m) == tag) return m;
    return std::nullopt;
}

BigInt rdc_scan_bound(const BigInt& n, const ExactRatio& alpha, BoundMode mode) {
    if (n < 1) throw std::invalid_argument("rdc_scan_bound: n must be positive");
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("alpha must lie in (0, 1]");
    switch (mode) {
        case BoundMode::sqrt_n: return isqrt_floor(n);
        case BoundMode::sqrt_n_over_alpha:
            return isqrt_ratio_floor(n * ratio_den(alpha), ratio_num(alpha));
        case BoundMode::unbounded: return n - 1;  // pi_k > 0 needs k < n
    }
    return 0;
}

namespace {

// pi_k relates to alpha without building rationals: (n-k)*qa vs pa*(k^2-k)
template <typename Visit>
void scan_admissible(const BigInt& n, const ExactRatio& alpha, BoundMode mode,
                     AdmissibleReading reading, Visit&& visit) {
    const BigInt bound = rdc_scan_bound(n, alpha, mode);
    const BigInt pa = ratio_num(alpha);
    const BigInt qa = ratio_den(alpha);
    for (BigInt k = 2; k <= bound; ++k) {
        if (k >= n) break;  // pi_k <= 0 from here on
        const BigInt lhs = (n - k) * qa;
        const BigInt rhs = pa * (k * k - k);
        const bool ok = reading == AdmissibleReading::at_most_alpha ? lhs <= rhs : lhs >= rhs;
        if (ok) visit(k);
    }
}

}  // namespace

std::vector<std::pair<BigInt, ExactRatio>> rdc_admissible_set(const BigInt& n,
                                                              const ExactRatio& alpha,
                                                              BoundMode mode) {
    std::vector<std::pair<BigInt, ExactRatio>> out;
    scan_admissible(n, alpha, mode, AdmissibleReading::at_most_alpha,
                    [&](const BigInt& k) { out.emplace_back(k, rdc_pi(n, k).pi); });
    return out;
}

BigCount rdc_admissible_count(const BigInt& n, const ExactRatio& alpha, BoundMode mode,
                              AdmissibleReading reading) {
    BigCount count = 0;
    scan_admissible(n, alpha, mode, reading, [&](const BigInt&) { ++count; });
    return count;
}

std::optional<ExactRatio> rdc_refine(const BigInt& n, const AlphaPredicate& accept,
                                     unsigned grid, unsigned max_depth) {
    if (grid < 2) throw std::invalid_argument("rdc_refine: grid must be at least 2");
    BigInt denom = grid;
    for (unsigned depth = 1; depth <= max_depth; ++depth, denom *= grid) {
        for (BigInt i = 1; i < denom; ++i) {
            if (depth > 1 && i % grid == 0) continue;  // seen at a shallower depth
            ExactRatio alpha(i, denom);
            if (accept(n, alpha)) return alpha;
        }
        if (depth == 1) {
            ExactRatio one = 1;  // the grid lives in the open interval; probe the endpoint once
            if (accept(n, one)) return one;
        }
    }
    return std::nullopt;
}

namespace {

bool feasible_tail(std::uint64_t r, std::uint64_t g, std::uint64_t a, std::uint64_t cap,
                   bool distinct) {
    if (g == 0) return r == 0;
    if (cap < a) return false;
    if (distinct) {
        if (cap - a + 1 < g) return false;  // not enough distinct values
        // smallest/largest sums of g distinct values in [a, cap]
        using u128 = unsigned __int128;
        u128 lo = u128(a) * g + u128(g) * (g - 1) / 2;
        u128 hi = u128(cap) * g - u128(g) * (g - 1) / 2;
        return lo <= r && r <= hi;
    }
    using u128 = unsigned __int128;
    return u128(a) * g <= r && r <= u128(cap) * g;
}

void enumerate_rec(std::uint64_t r, std::uint64_t g, std::uint64_t a, std::uint64_t cap,
                   bool distinct, std::vector<std::uint64_t>& parts, bool& keep_going,
                   const std::function<bool(std::span<const std::uint64_t>)>& visit) {
    if (!keep_going) return;
    if (g == 0) {
        if (r == 0) keep_going = visit(parts);
        return;
    }
    std::uint64_t hi = std::min<std::uint64_t>(cap, r);
    for (std::uint64_t part = hi + 1; part-- > a;) {
        std::uint64_t next_cap = distinct ? (part == 0 ? 0 : part - 1) : part;
        if (!feasible_tail(r - part, g - 1, a, next_cap, distinct)) continue;
        parts.push_back(part);
        enumerate_rec(r - part, g - 1, a, next_cap, distinct, parts, keep_going, visit);
        parts.pop_back();
        if (!keep_going) return;
    }
}

}  // namespace

void enumerate_bounded_partitions(std::uint64_t r, std::uint64_t g, std::uint64_t a,
                                  std::uint64_t b, bool distinct,
                                  const std::function<bool(std::span<const std::uint64_t>)>& visit) {
    if (a > b) throw std::invalid_argument("bounded partitions: a must not exceed b");
    std::vector<std::uint64_t> parts;
    parts.reserve(g);
    bool keep_going = true;
    enumerate_rec(r, g, a, b, distinct, parts, keep_going, visit);
}

namespace {

using PartKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

BigCount count_rec(std::uint64_t r, std::uint64_t g, std::uint64_t a, std::uint64_t cap,
                   bool distinct, std::map<PartKey, BigCount>& memo) {
    if (g == 0) return r == 0 ? 1 : 0;
    if (!feasible_tail(r, g, a, cap, distinct)) return 0;
    PartKey key{r, g, cap};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigCount total = 0;
    std::uint64_t hi = std::min<std::uint64_t>(cap, r);
    for (std::uint64_t part = a; part <= hi; ++part) {
        std::uint64_t next_cap = distinct ? (part == 0 ? 0 : part - 1) : part;
        total += count_rec(r - part, g - 1, a, next_cap, distinct, memo);
        if (part == hi) break;  // hi may be UINT64_MAX-safe guard
    }
    memo[key] = total;
    return total;
}

// sum over partitions of the product of parts; zero parts kill the product,
// so parts start at max(a, 1)
BigCount product_sum_rec(std::uint64_t r, std::uint64_t g, std::uint64_t a, std::uint64_t cap,
                         bool distinct, std::map<PartKey, BigCount>& memo) {
    if (g == 0) return r == 0 ? 1 : 0;
    if (!feasible_tail(r, g, a, cap, distinct)) return 0;
    PartKey key{r, g, cap};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigCount total = 0;
    std::uint64_t hi = std::min<std::uint64_t>(cap, r);
    for (std::uint64_t part = a; part <= hi; ++part) {
        std::uint64_t next_cap = distinct ? part - 1 : part;
        total += BigCount(part) * product_sum_rec(r - part, g - 1, a, next_cap, distinct, memo);
        if (part == hi) break;
    }
    memo[key] = total;
    return total;
}

}  // namespace

BigCount count_bounded_partitions(std::uint64_t r, std::uint64_t g, std::uint64_t a,
                                  std::uint64_t b, bool distinct) {
    if (a > b) throw std::invalid_argument("bounded partitions: a must not exceed b");
    std::map<PartKey, BigCount> memo;
    return count_rec(r, g, a, b, distinct, memo);
}

RbcProblem RbcProblem::make(BigInt n, BigInt k, std::uint64_t a, std::uint64_t b,
                            bool distinct_parts) {
    if (k < 1) throw std::invalid_argument("rbc: k must be positive");
    if (n < k) throw std::invalid_argument("rbc: n must be at least k");
    if (a > b) throw std::invalid_argument("rbc: a must not exceed b");
    if (BigInt(b) > n - k) throw std::invalid_argument("rbc: b must not exceed n - k");
    RbcProblem p;
    p.n = std::move(n);
    p.k = std::move(k);
    p.a = a;
    p.b = b;
    p.distinct_parts = distinct_parts;
    return p;
}

RbcCount rbc_count(const RbcProblem& p) {
    const BigInt r_big = p.r();
    const BigInt g_big = p.g();
    RbcCount out{0, 0, 0, 0};
    if (g_big == 0) {
        if (r_big == 0) out = {1, 1, 1, 1};
        return out;  // g = 0 with rough objects left over: no model
    }
    if (r_big * g_big > 10'000'000)
        throw std::invalid_argument("rbc: problem too large for exact counting");
    const auto g = static_cast<std::uint64_t>(g_big);
    const auto r = static_cast<std::uint64_t>(r_big);

    const std::uint64_t lo = std::max<std::uint64_t>(p.a, 1);
    {
        std::map<PartKey, BigCount> memo;
        out.models = product_sum_rec(r, g, lo, p.b, p.distinct_parts, memo);
    }
    if (p.a > 0) {
        out.partitions = count_bounded_partitions(r, g, p.a, p.b, p.distinct_parts);
    } else if (p.distinct_parts) {
        // strictly decreasing parts admit at most one zero
        out.partitions = count_bounded_partitions(r, g, 1, p.b, true);
        if (g >= 1) out.partitions += count_bounded_partitions(r, g - 1, 1, p.b, true);
    } else {
        // zeros pad freely: m nonzero parts, g - m zeros
        std::uint64_t max_nonzero = std::min<std::uint64_t>(g, r);
        for (std::uint64_t m2 = 0; m2 <= max_nonzero; ++m2)
            out.partitions += count_bounded_partitions(r, m2, 1, p.b, false);
    }
    if (out.partitions > 0) {
        out.lower = out.partitions * power(p.a, g_big);
        out.upper = out.partitions * power(p.b, g_big);
    }
    return out;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::pwc: return "pwc";
        case Regime::wdc: return "wdc";
        case Regime::boolean_wdc: return "boolean";
        case Regime::rdc: return "rdc";
    }
    return "?";
}

std::optional<Regime> regime_from_string(const std::string& tag) {
    for (Regime r : {Regime::pwc, Regime::wdc, Regime::boolean_wdc, Regime::rdc})
        if (to_string(r) == tag) return r;
    return std::nullopt;
}

std::vector<FeasibilityRow> sequence_scan(Regime regime, const ScanRange& range,
                                          const ScanParams& params) {
    if (range.lo < 1 || range.hi < range.lo)
        throw std::invalid_argument("sequence_scan: empty or invalid range");

    std::vector<FeasibilityRow> rows;
    switch (regime) {
        case Regime::pwc:
        case Regime::wdc: {
            const BigInt count_big = range.hi - range.lo + 1;
            if (count_big > 100'000'000)
                throw std::invalid_argument("sequence_scan: range too large");
            const auto total = static_cast<std::size_t>(count_big);
            rows.resize(total);
            parallel_chunks(total, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t i = lo; i < hi; ++i) {
                    BigInt n = range.lo + BigInt(i);
                    FeasibilityRow row;
                    row.regime = regime;
                    row.n = n;
                    row.k = regime == Regime::pwc ? pwc_feasible(n) : wdc_feasible(n);
                    row.feasible = row.k.has_value();
                    rows[i] = std::move(row);
                }
            });
            break;
        }
        case Regime::boolean_wdc: {
            for (const auto& model : boolean_wdc_models(range.hi, params.include_x_zero)) {
                if (model.n < range.lo) continue;
                FeasibilityRow row;
                row.regime = regime;
                row.n = model.n;
                row.k = model.k;
                row.exponent = model.exponent;
                row.feasible = true;
                rows.push_back(std::move(row));
            }
            break;
        }
        case Regime::rdc: {
            for (BigInt n = range.lo; n <= range.hi; ++n) {
                const BigInt bound = rdc_scan_bound(n, params.alpha, params.mode);
                for (BigInt k = 2; k <= bound && k < n; ++k) {
                    FeasibilityRow row;
                    row.regime = regime;
                    row.n = n;
                    row.k = k;
                    RdcPi pi = rdc_pi(n, k);
                    row.pi = pi.pi;
                    row.feasible = pi.pi > 0 && pi.pi <= params.alpha;
                    rows.push_back(std::move(row));
                }
            }
            break;
        }
    }
    return rows;
}

}  // namespace roughspace::chains
