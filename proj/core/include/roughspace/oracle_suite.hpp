#pragma once

#include "roughspace/chain_solvers.hpp"
#include "roughspace/order_core.hpp"
#include "roughspace/poset_distribution.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Naive reference implementations, deliberately separate from the production
// code paths. Size guards are hard errors. Performance is a non-goal.
namespace roughspace::oracle {

struct OracleVerdict {
    bool agrees = false;
    std::string production;
    std::string oracle;
    std::string witness;  // empty when agreeing
};

OracleVerdict make_verdict(std::string production, std::string oracle, std::string witness);

// scans k = 1.. directly against n-k = k^2 (pwc) or n-k = k^2-k (wdc)
std::optional<std::uint64_t> oracle_chain_feasibility(chains::Regime regime, std::uint64_t n);

struct PosetExtrema {
    std::size_t max_antichain = 0;
    std::size_t longest_chain = 0;
    std::size_t min_chain_cover = 0;
    std::size_t min_antichain_partition = 0;
};

// exhaustive subset/partition search; at most 8 elements
PosetExtrema oracle_poset(const order::FinitePoset& p);

// all join/meet term values over granules and the bounds, to the given depth
// (depth 0 is the generators); depth at most 6
std::vector<std::size_t> oracle_terms(const order::BoundedLattice& l,
                                      const std::vector<std::size_t>& granules, unsigned depth);

// explicit part-vector enumeration summing the products; r <= 60, g <= 40
BigCount oracle_rbc(const chains::RbcProblem& p);

// explicit joint-selection enumeration over SL(x) x SU(x) minus the diagonal;
// at most 6 scope pairs and 10^7 joint selections
BigCount oracle_choice_functions(const std::vector<dist::ScopePair>& scope_pairs);

}  // namespace roughspace::oracle
