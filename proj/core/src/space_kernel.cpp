#include "roughspace/space_kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughspace::space {

namespace {

std::string pair_witness(const order::FinitePoset& p, std::size_t a, std::size_t b) {
    return "(" + p.label(a) + ", " + p.label(b) + ")";
}

void require_total_map(const std::vector<std::size_t>& map, std::size_t n, const char* name) {
    if (map.size() != n) throw std::invalid_argument(std::string(name) + " map is not total");
    for (std::size_t v : map)
        if (v >= n) throw std::invalid_argument(std::string(name) + " map leaves the element set");
}

}  // namespace

HigherRoughSpace HigherRoughSpace::make(order::FinitePoset poset,
                                        std::vector<std::size_t> lower,
                                        std::vector<std::size_t> upper,
                                        std::optional<std::size_t> bottom,
                                        std::optional<std::size_t> top) {
    const std::size_t n = poset.size();
    if (n == 0) throw std::invalid_argument("rough space: empty carrier");
    require_total_map(lower, n, "lower");
    require_total_map(upper, n, "upper");
    if (!bottom) bottom = poset.bottom();
    if (!top) top = poset.top();
    if (!bottom || !top) throw std::invalid_argument("rough space: poset is not bounded");
    if (*bottom >= n || *top >= n) throw std::invalid_argument("rough space: bad bound index");

    HigherRoughSpace s;
    s.poset = std::move(poset);
    s.bottom = *bottom;
    s.top = *top;
    s.lower = std::move(lower);
    s.upper = std::move(upper);
    return s;
}

HigherGranularSpace HigherGranularSpace::make(order::BoundedLattice lattice,
                                              std::vector<std::size_t> lower,
                                              std::vector<std::size_t> upper,
                                              std::vector<std::size_t> granulation) {
    const std::size_t n = lattice.size();
    require_total_map(lower, n, "lower");
    require_total_map(upper, n, "upper");
    for (std::size_t g : granulation)
        if (g >= n) throw std::invalid_argument("granulation leaves the element set");
    std::sort(granulation.begin(), granulation.end());
    granulation.erase(std::unique(granulation.begin(), granulation.end()), granulation.end());

    HigherGranularSpace s;
    s.lattice = std::move(lattice);
    s.lower = std::move(lower);
    s.upper = std::move(upper);
    s.granulation = std::move(granulation);
    return s;
}

std::string to_string(Crispness c) {
    switch (c) {
        case Crispness::lower_definite: return "lower-definite";
        case Crispness::upper_definite: return "upper-definite";
        case Crispness::definite: return "definite";
        case Crispness::weakly_upper_definite: return "weakly-upper-definite";
        case Crispness::weakly_definite: return "weakly-definite";
    }
    return "?";
}

std::string to_string(Roughness r) {
    switch (r) {
        case Roughness::lower_rough: return "lower-rough";
        case Roughness::upper_rough: return "upper-rough";
        case Roughness::weakly_upper_rough: return "weakly-upper-rough";
        case Roughness::rough: return "rough";
        case Roughness::definite_pair: return "definite-pair";
        case Roughness::lu_pair: return "lu-pair";
        case Roughness::lu_interval: return "lu-interval";
        case Roughness::definite_interval: return "definite-interval";
    }
    return "?";
}

std::optional<Crispness> crispness_from_string(const std::string& tag) {
    for (Crispness c : all_crispness)
        if (to_string(c) == tag) return c;
    return std::nullopt;
}

std::optional<Roughness> roughness_from_string(const std::string& tag) {
    for (Roughness r : all_roughness)
        if (to_string(r) == tag) return r;
    return std::nullopt;
}

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

namespace {

// The rough-space axioms over an arbitrary bounded carrier; shared by both
// verifiers.
void check_rough_axioms(AxiomReport& report,
                        const order::FinitePoset& p,
                        std::size_t bottom,
                        std::size_t top,
                        const std::vector<std::size_t>& lower,
                        const std::vector<std::size_t>& upper) {
    const std::size_t n = p.size();
    auto check = [&](const char* axiom, auto&& fn) {
        AxiomCheck c;
        c.axiom = axiom;
        fn(c);
        report.checks.push_back(std::move(c));
    };

    check("lower-contraction", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            if (!p.leq(lower[a], a)) {
                c.passed = false;
                c.witness = p.label(a);
                return;
            }
    });
    check("lower-idempotence", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            if (lower[lower[a]] != lower[a]) {
                c.passed = false;
                c.witness = p.label(a);
                return;
            }
    });
    check("upper-iteration", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            if (!p.leq(upper[a], upper[upper[a]])) {
                c.passed = false;
                c.witness = p.label(a);
                return;
            }
    });
    check("lower-monotone", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (p.leq(a, b) && !p.leq(lower[a], lower[b])) {
                    c.passed = false;
                    c.witness = pair_witness(p, a, b);
                    return;
                }
    });
    check("upper-monotone", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (p.leq(a, b) && !p.leq(upper[a], upper[b])) {
                    c.passed = false;
                    c.witness = pair_witness(p, a, b);
                    return;
                }
    });
    check("bottom-lower-fixed", [&](AxiomCheck& c) {
        if (lower[bottom] != bottom) {
            c.passed = false;
            c.witness = p.label(bottom);
        }
    });
    check("bottom-upper-fixed", [&](AxiomCheck& c) {
        if (upper[bottom] != bottom) {
            c.passed = false;
            c.witness = p.label(bottom);
        }
    });
    check("top-lower-below", [&](AxiomCheck& c) {
        if (!p.leq(lower[top], top)) {
            c.passed = false;
            c.witness = p.label(top);
        }
    });
    check("top-upper-below", [&](AxiomCheck& c) {
        if (!p.leq(upper[top], top)) {
            c.passed = false;
            c.witness = p.label(top);
        }
    });
    check("bounded", [&](AxiomCheck& c) {
        for (std::size_t a = 0; a < n; ++a)
            if (!p.leq(bottom, a) || !p.leq(a, top)) {
                c.passed = false;
                c.witness = p.label(a);
                return;
            }
    });
}

}  // namespace

AxiomReport verify_rough_space(const HigherRoughSpace& s) {
    AxiomReport report;
    check_rough_axioms(report, s.poset, s.bottom, s.top, s.lower, s.upper);
    return report;
}

AxiomReport verify_granular_space(const HigherGranularSpace& s) {
    AxiomReport report;
    const order::FinitePoset& p = s.poset();
    const std::size_t n = s.size();

    // join/meet tables were validated exhaustively at construction
    report.checks.push_back({"join-table", true, ""});
    report.checks.push_back({"meet-table", true, ""});

    check_rough_axioms(report, p, s.lattice.bottom(), s.lattice.top(), s.lower, s.upper);

    {
        AxiomCheck c;
        c.axiom = "wra";
        auto closure = order::sublattice_closure(s.lattice, s.granulation, true);
        std::vector<char> in(n, 0);
        for (std::size_t x : closure) in[x] = 1;
        for (std::size_t x = 0; x < n && c.passed; ++x) {
            if (!in[s.lower[x]]) {
                c.passed = false;
                c.witness = p.label(x) + "^l = " + p.label(s.lower[x]) + " not granule-generated";
            } else if (!in[s.upper[x]]) {
                c.passed = false;
                c.witness = p.label(x) + "^u = " + p.label(s.upper[x]) + " not granule-generated";
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.axiom = "lower-stability";
        for (std::size_t y : s.granulation) {
            for (std::size_t x = 0; x < n; ++x) {
                if (p.leq(y, x) && !p.leq(y, s.lower[x])) {
                    c.passed = false;
                    c.witness = pair_witness(p, y, x);
                    break;
                }
            }
            if (!c.passed) break;
        }
        report.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c;
        c.axiom = "full-underlap";
        std::vector<char> definite(n, 0);
        for (std::size_t z = 0; z < n; ++z)
            definite[z] = s.lower[z] == z && s.upper[z] == z;
        for (std::size_t y1 : s.granulation) {
            for (std::size_t y2 : s.granulation) {
                bool found = false;
                for (std::size_t z = 0; z < n && !found; ++z)
                    found = definite[z] && p.less(y1, z) && p.less(y2, z);
                if (!found) {
                    c.passed = false;
                    c.witness = pair_witness(p, y1, y2);
                    break;
                }
            }
            if (!c.passed) break;
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

HigherGranularSpace from_partition(const std::vector<std::string>& universe,
                                   const std::vector<std::vector<std::string>>& blocks) {
    const std::size_t m = universe.size();
    if (m > 12) throw std::invalid_argument("from_partition: universe larger than 12 elements");
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) {
        auto [it, fresh] = pos.emplace(universe[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate label '" + universe[i] + "'");
    }

    std::vector<std::size_t> owner(m, SIZE_MAX);
    std::vector<std::uint32_t> block_masks;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("from_partition: empty block");
        std::uint32_t mask = 0;
        for (const auto& label : blocks[b]) {
            auto it = pos.find(label);
            if (it == pos.end()) throw std::invalid_argument("unknown label '" + label + "'");
            if (owner[it->second] != SIZE_MAX)
                throw std::invalid_argument("blocks overlap at '" + label + "'");
            owner[it->second] = b;
            mask |= std::uint32_t{1} << it->second;
        }
        block_masks.push_back(mask);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (owner[i] == SIZE_MAX)
            throw std::invalid_argument("element '" + universe[i] + "' not covered by any block");

    const std::size_t n = std::size_t{1} << m;
    std::vector<std::string> labels(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::string label = "{";
        bool first = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            if (!first) label += ",";
            label += universe[i];
            first = false;
        }
        label += "}";
        labels[mask] = std::move(label);
    }

    order::detail::BitMatrix up(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if ((a & b) == a) up.set(a, b);
    auto poset = order::FinitePoset::from_closure(std::move(labels), std::move(up));

    std::vector<std::uint32_t> join(n * n), meet(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            join[a * n + b] = static_cast<std::uint32_t>(a | b);
            meet[a * n + b] = static_cast<std::uint32_t>(a & b);
        }
    auto lattice = order::BoundedLattice::from_tables(std::move(poset), std::move(join), std::move(meet));

    std::vector<std::size_t> lower(n), upper(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::uint32_t lo = 0, hi = 0;
        for (std::uint32_t bm : block_masks) {
            if ((bm & x) == bm) lo |= bm;  // block inside x
            if (bm & x) hi |= bm;          // block meets x
        }
        lower[x] = lo;
        upper[x] = hi;
    }

    std::vector<std::size_t> granulation(block_masks.begin(), block_masks.end());
    return HigherGranularSpace::make(std::move(lattice), std::move(lower), std::move(upper),
                                     std::move(granulation));
}

std::vector<std::size_t> crisp_set(const HigherGranularSpace& s, Crispness concept_tag) {
    const std::size_t n = s.size();
    std::vector<std::size_t> result;
    for (std::size_t x = 0; x < n; ++x) {
        bool crisp = false;
        switch (concept_tag) {
            case Crispness::lower_definite: crisp = s.lower[x] == x; break;
            case Crispness::upper_definite: crisp = s.upper[x] == x; break;
            case Crispness::definite: crisp = s.lower[x] == x && s.upper[x] == x; break;
            case Crispness::weakly_upper_definite: crisp = s.upper[s.upper[x]] == s.upper[x]; break;
            case Crispness::weakly_definite:
                crisp = s.upper[s.upper[x]] == s.upper[x] && s.lower[x] == x;
                break;
        }
        if (crisp) result.push_back(x);
    }
    return result;
}

RoughCatalog rough_catalog(const HigherGranularSpace& s, Roughness tag) {
    const order::FinitePoset& p = s.poset();
    const std::size_t n = s.size();
    RoughCatalog catalog;
    catalog.tag = tag;

    auto elements_failing = [&](auto&& equal) {
        for (std::size_t x = 0; x < n; ++x)
            if (!equal(x)) catalog.members.push_back(x);
    };

    switch (tag) {
        case Roughness::lower_rough:
            elements_failing([&](std::size_t x) { return s.lower[x] == x; });
            break;
        case Roughness::upper_rough:
            elements_failing([&](std::size_t x) { return s.upper[x] == x; });
            break;
        case Roughness::weakly_upper_rough:
            elements_failing([&](std::size_t x) { return s.upper[s.upper[x]] == s.upper[x]; });
            break;
        case Roughness::rough:
            elements_failing([&](std::size_t x) { return s.lower[x] == s.upper[x]; });
            break;
        case Roughness::definite_pair: {
            catalog.pair_shaped = true;
            auto definite = crisp_set(s, Crispness::definite);
            for (std::size_t a : definite)
                for (std::size_t b : definite)
                    if (p.less(a, b)) catalog.pair_members.emplace_back(a, b);
            break;
        }
        case Roughness::lu_pair: {
            catalog.pair_shaped = true;
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t x = 0; x < n; ++x)
                if (s.lower[x] != s.upper[x]) seen.emplace(s.lower[x], s.upper[x]);
            catalog.pair_members.assign(seen.begin(), seen.end());
            break;
        }
        case Roughness::lu_interval: {
            // strictly between x^l and x^u for some x; endpoints excluded
            std::vector<char> in(n, 0);
            for (std::size_t x = 0; x < n; ++x) {
                std::size_t lo = s.lower[x], hi = s.upper[x];
                if (!p.less(lo, hi)) continue;
                for (std::size_t z = 0; z < n; ++z)
                    if (p.less(lo, z) && p.less(z, hi)) in[z] = 1;
            }
            for (std::size_t z = 0; z < n; ++z)
                if (in[z]) catalog.members.push_back(z);
            break;
        }
        case Roughness::definite_interval: {
            // strictly between two comparable definite elements
            std::vector<char> definite(n, 0);
            for (std::size_t z : crisp_set(s, Crispness::definite)) definite[z] = 1;
            for (std::size_t z = 0; z < n; ++z) {
                bool below = false, above = false;
                for (std::size_t d = 0; d < n && !(below && above); ++d) {
                    if (!definite[d]) continue;
                    if (p.less(d, z)) below = true;
                    if (p.less(z, d)) above = true;
                }
                if (below && above) catalog.members.push_back(z);
            }
            break;
        }
    }
    return catalog;
}

std::vector<ClassificationCell> classification_matrix(const HigherGranularSpace& s) {
    std::vector<std::size_t> crisp_counts;
    for (Crispness c : all_crispness) crisp_counts.push_back(crisp_set(s, c).size());
    std::vector<std::size_t> rough_counts;
    for (Roughness r : all_roughness) rough_counts.push_back(rough_catalog(s, r).count());

    std::vector<ClassificationCell> cells;
    for (std::size_t ci = 0; ci < std::size(all_crispness); ++ci)
        for (std::size_t ri = 0; ri < std::size(all_roughness); ++ri)
            cells.push_back({all_crispness[ci], all_roughness[ri], crisp_counts[ci], rough_counts[ri]});
    return cells;
}

std::string to_string(Assumption a) {
    switch (a) {
        case Assumption::F1: return "F1";
        case Assumption::F2: return "F2";
        case Assumption::C1: return "C1";
        case Assumption::C2: return "C2";
        case Assumption::R1: return "R1";
        case Assumption::R2: return "R2";
        case Assumption::R3: return "R3";
        case Assumption::RC1: return "RC1";
        case Assumption::RC2: return "RC2";
    }
    return "?";
}

std::optional<Assumption> assumption_from_string(const std::string& tag) {
    for (Assumption a : {Assumption::F1, Assumption::F2, Assumption::C1, Assumption::C2,
                         Assumption::R1, Assumption::R2, Assumption::R3, Assumption::RC1,
                         Assumption::RC2})
        if (to_string(a) == tag) return a;
    return std::nullopt;
}

AxiomReport verify_assumptions(const HigherGranularSpace& s, const AssumptionProfile& profile) {
    const order::FinitePoset& p = s.poset();
    const std::size_t n = s.size();
    std::vector<char> in_c(n, 0), in_r(n, 0);
    for (std::size_t c : profile.crisp) {
        if (c >= n) throw std::invalid_argument("profile: crisp index out of range");
        in_c[c] = 1;
    }
    for (std::size_t r : profile.rough) {
        if (r >= n) throw std::invalid_argument("profile: rough index out of range");
        in_r[r] = 1;
    }

    AxiomReport report;
    auto add = [&](Assumption flag, bool passed, std::string witness) {
        if (profile.flags.count(flag))
            report.checks.push_back({to_string(flag), passed, passed ? "" : std::move(witness)});
    };

    add(Assumption::F1, verify_granular_space(s).all_passed(), "granular-space axioms fail");
    add(Assumption::F2, profile.n == n,
        "asserted n = " + std::to_string(profile.n) + ", carrier has " + std::to_string(n));
    add(Assumption::C1, true, "");  // C validated against the carrier above
    add(Assumption::C2, profile.k == profile.crisp.size(),
        "asserted k = " + std::to_string(profile.k) + ", C has " +
            std::to_string(profile.crisp.size()));
    {
        bool proper = profile.rough.size() < n;
        add(Assumption::R1, proper, "R is the whole carrier");
    }
    {
        bool covers = true;
        std::string witness;
        for (std::size_t x = 0; x < n && covers; ++x)
            if (!in_c[x] && !in_r[x]) {
                covers = false;
                witness = p.label(x);
            }
        add(Assumption::R2, covers, witness + " in neither R nor C");
    }
    {
        bool total = true;
        std::string witness;
        for (std::size_t r : profile.rough) {
            auto it = profile.phi.find(r);
            if (it == profile.phi.end()) {
                total = false;
                witness = p.label(r) + " has no phi value";
                break;
            }
            auto [a, b] = it->second;
            if (a >= n || b >= n || !in_c[a] || !in_c[b]) {
                total = false;
                witness = "phi(" + p.label(r) + ") leaves C x C";
                break;
            }
        }
        add(Assumption::R3, total, witness);
    }
    {
        bool disjoint = true;
        std::string witness;
        for (std::size_t x = 0; x < n && disjoint; ++x)
            if (in_c[x] && in_r[x]) {
                disjoint = false;
                witness = p.label(x);
            }
        add(Assumption::RC1, disjoint, witness + " in both R and C");
    }
    {
        bool strict = true;
        std::string witness;
        for (std::size_t r : profile.rough) {
            auto it = profile.phi.find(r);
            if (it == profile.phi.end()) {
                strict = false;
                witness = p.label(r) + " has no phi value";
                break;
            }
            auto [a, b] = it->second;
            if (a >= n || b >= n || !in_c[a] || !in_c[b] || !p.less(a, b)) {
                strict = false;
                witness = "phi(" + p.label(r) + ") is not a strictly ordered crisp pair";
                break;
            }
        }
        add(Assumption::RC2, strict, witness);
    }
    if (!profile.phi.empty()) {
        bool off_diagonal = true;
        std::string witness;
        for (const auto& [x, ab] : profile.phi)
            if (ab.first == ab.second) {
                off_diagonal = false;
                witness = "phi(" + p.label(x) + ") hits the diagonal at " + p.label(ab.first);
                break;
            }
        report.checks.push_back(
            {"image-off-diagonal", off_diagonal, off_diagonal ? "" : witness});
    }
    return report;
}

RepresentationMap canonical_representation(const HigherGranularSpace& s,
                                           const std::vector<std::size_t>& crisp,
                                           const std::vector<std::size_t>& rough) {
    const order::FinitePoset& p = s.poset();
    const std::size_t n = s.size();
    std::vector<char> in_c(n, 0);
    for (std::size_t c : crisp) {
        if (c >= n) throw std::invalid_argument("canonical_representation: crisp index out of range");
        in_c[c] = 1;
    }

    RepresentationMap result;
    std::set<std::pair<std::size_t, std::size_t>> image;
    for (std::size_t x : rough) {
        if (x >= n) throw std::invalid_argument("canonical_representation: rough index out of range");
        std::size_t lo = s.lower[x], hi = s.upper[x];
        if (in_c[lo] && in_c[hi] && p.less(lo, hi)) {
            result.assignments[x] = {lo, hi};
            image.emplace(lo, hi);
            continue;
        }
        // scope fallback: maximal crisp below x, minimal crisp above x
        std::vector<std::size_t> below, above;
        for (std::size_t c = 0; c < n; ++c) {
            if (!in_c[c]) continue;
            if (p.leq(c, x)) below.push_back(c);
            if (p.leq(x, c)) above.push_back(c);
        }
        auto sl = order::extremal(p, below, order::Direction::maximal);
        auto su = order::extremal(p, above, order::Direction::minimal);
        bool assigned = false;
        for (std::size_t a : sl) {
            for (std::size_t b : su) {
                if (a != b) {  // a <= x <= b, so distinct scopes are strictly ordered
                    result.assignments[x] = {a, b};
                    image.emplace(a, b);
                    assigned = true;
                    break;
                }
            }
            if (assigned) break;
        }
        if (!assigned) result.unrepresentable.push_back(x);
    }
    result.image.assign(image.begin(), image.end());
    return result;
}

}  // namespace roughspace::space
