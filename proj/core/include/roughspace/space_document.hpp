#pragma once

#include "roughspace/space_kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace roughspace::cli {

struct ParsedSpace {
    space::HigherGranularSpace space;
    std::optional<space::AssumptionProfile> profile;
};

// JSON space document:
//   {
//     "elements": ["a", "b", ...],
//     "order": {"mode": "covers" | "full", "pairs": [["a","b"], ...]},
//     "lattice": {"derive": true} | {"join": [["a","b","lub"],...], "meet": [...]},   (optional; default derive)
//     "lower": {"a": "a", ...},          (total map)
//     "upper": {"a": "a", ...},
//     "granulation": ["a", ...],
//     "profile": {"C": [...], "R": [...], "phi": {"x": ["a","b"]}, "flags": ["F1",...]}   (optional)
//   }
// Unknown keys are rejected. Profile n and k default to the carrier size and #C.
ParsedSpace parse_space_document(const std::string& json_text);

// Space document for the partition space over the given universe; with_profile
// adds C = definite elements, R = the rest, phi = (lower, upper), all flags.
std::string make_pawlak_document(const std::vector<std::string>& universe,
                                 const std::vector<std::vector<std::string>>& blocks,
                                 bool with_profile);

}  // namespace roughspace::cli
