#include "roughspace/poset_distribution.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughspace::dist {

ScopePair scopes(const space::HigherGranularSpace& s,
                 const std::vector<std::size_t>& crisp, std::size_t x) {
    const order::FinitePoset& p = s.poset();
    if (x >= p.size()) throw std::invalid_argument("scopes: element index out of range");
    std::vector<std::size_t> below, above;
    for (std::size_t c : crisp) {
        if (c >= p.size()) throw std::invalid_argument("scopes: crisp index out of range");
        if (p.leq(c, x)) below.push_back(c);
        if (p.leq(x, c)) above.push_back(c);
    }
    ScopePair sp;
    sp.x = x;
    sp.lower_scope = order::extremal(p, below, order::Direction::maximal);
    sp.upper_scope = order::extremal(p, above, order::Direction::minimal);
    return sp;
}

ChoiceCount choice_count(const space::HigherGranularSpace& s,
                         const std::vector<std::size_t>& crisp,
                         const std::vector<std::size_t>& rough) {
    ChoiceCount out;
    for (std::size_t x : rough) {
        ScopePair sp = scopes(s, crisp, x);
        std::size_t diagonal = 0;
        for (std::size_t a : sp.lower_scope)
            if (std::find(sp.upper_scope.begin(), sp.upper_scope.end(), a) != sp.upper_scope.end())
                ++diagonal;
        ChoiceFactor factor;
        factor.x = x;
        factor.lower_choices = sp.c();
        factor.upper_choices = sp.v();
        factor.candidates = sp.c() * sp.v() - diagonal;
        if (factor.candidates == 0 && !out.unrepresentable) out.unrepresentable = x;
        out.factors.push_back(factor);
    }
    if (out.unrepresentable) {
        out.total = 0;
    } else {
        for (const auto& factor : out.factors) out.total *= factor.candidates;
    }
    return out;
}

namespace {

// deterministic maximal chain through `chain`: walk down then up along covers,
// taking the first neighbour in element input order
std::vector<std::size_t> extend_to_maximal(const order::FinitePoset& p,
                                           const std::vector<std::size_t>& chain) {
    const auto& covers = p.covers();
    std::vector<std::size_t> extension = chain;
    for (;;) {
        std::size_t cur = extension.front();
        std::size_t pick = p.size();
        for (const auto& [a, b] : covers)
            if (b == cur && a < pick) pick = a;
        if (pick == p.size()) break;
        extension.insert(extension.begin(), pick);
    }
    for (;;) {
        std::size_t cur = extension.back();
        std::size_t pick = p.size();
        for (const auto& [a, b] : covers)
            if (a == cur && b < pick) pick = b;
        if (pick == p.size()) break;
        extension.push_back(pick);
    }
    return extension;
}

BigCount slot_count(std::size_t h) {
    BigInt hh = h;
    return hh * hh - hh;
}

}  // namespace

CoverPlan cover_plan(const order::FinitePoset& crisp) {
    if (crisp.empty()) throw std::invalid_argument("cover_plan: empty crisp poset");
    auto bottom = crisp.bottom();
    auto top = crisp.top();
    if (!bottom || !top) throw std::invalid_argument("cover_plan: crisp poset is not bounded");

    auto width = order::width_with_cover(crisp);
    CoverPlan plan;
    plan.chains = width.cover;

    // the chain through the bottom element leads; the rest keep input order
    auto holds_bottom = [&](const std::vector<std::size_t>& chain) {
        return std::find(chain.begin(), chain.end(), *bottom) != chain.end();
    };
    std::stable_partition(plan.chains.chains.begin(), plan.chains.chains.end(), holds_bottom);

    plan.branch_points = order::branching_points(crisp);

    std::vector<char> counted(crisp.size(), 0);
    for (const auto& chain : plan.chains.chains) {
        ChainSlots slots;
        slots.chain = chain;
        slots.extension = extend_to_maximal(crisp, chain);
        slots.h = slots.extension.size();
        for (std::size_t e : slots.extension)
            if (counted[e]) slots.excluded.push_back(e);
        slots.h_o = slots.excluded.size();
        slots.counted_slots = slot_count(slots.h) - slot_count(slots.h_o);
        for (std::size_t e : slots.extension) counted[e] = 1;
        plan.per_chain.push_back(std::move(slots));
    }
    return plan;
}

BigCount n_r_h(std::uint64_t r, std::uint64_t h, const SlotModel& model) {
    BigInt slots = BigInt(h) * h - h;
    switch (model.kind) {
        case SlotModel::Kind::stars_and_bars:
            if (slots == 0) return r == 0 ? 1 : 0;
            return binomial(BigInt(r) + slots - 1, slots - 1);
        case SlotModel::Kind::distinct_parts: {
            if (slots == 0) return r == 0 ? 1 : 0;
            if (slots > 1'000'000) throw std::invalid_argument("n_r_h: too many slots");
            return chains::count_bounded_partitions(r, static_cast<std::uint64_t>(slots), 0, r, true);
        }
        case SlotModel::Kind::bounded: {
            if (slots == 0) return r == 0 ? 1 : 0;
            if (slots > 1'000'000) throw std::invalid_argument("n_r_h: too many slots");
            return chains::count_bounded_partitions(r, static_cast<std::uint64_t>(slots), model.a,
                                                    model.b, false);
        }
    }
    return 0;
}

BigCount branch_adjusted_count(std::uint64_t r, std::uint64_t h, std::uint64_t h_o,
                               const SlotModel& model) {
    if (h_o > h) throw std::invalid_argument("branch_adjusted_count: h_o exceeds h");
    BigCount full = n_r_h(r, h, model);
    BigCount omitted = n_r_h(r, h_o, model);
    if (omitted > full)
        throw std::logic_error("branch_adjusted_count: model is not monotone in h");
    return full - omitted;
}

RboReport rbo_consistency(const BigInt& n, const BigInt& k, const BigInt& t) {
    if (k < 2) throw std::invalid_argument("rbo_consistency: k must be at least 2");
    if (n < k) throw std::invalid_argument("rbo_consistency: n must be at least k");
    if (t < 0) throw std::invalid_argument("rbo_consistency: t must be nonnegative");
    const BigInt g = k * k - k;
    RboReport report;
    report.profile.n = n;
    report.profile.k = k;
    report.profile.t = t;
    report.profile.alpha = ExactRatio(n - k, g);
    report.profile.beta = ExactRatio(t, g);
    report.t_within_bound = t <= n - k;
    report.beta_le_alpha = report.profile.beta <= report.profile.alpha;
    return report;
}

}  // namespace roughspace::dist
