#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace roughspace::cli {

inline constexpr int exit_ok = 0;          // success / feasible
inline constexpr int exit_infeasible = 1;  // infeasible, axiom failure, oracle disagreement
inline constexpr int exit_usage = 2;       // usage, parse or document error

// Parsed command state. Numeric parameters cross the CLI boundary as exact
// strings ("p/q" for rationals); no locale-dependent parsing anywhere.
struct RunConfig {
    std::string subcommand;

    std::string n, k, t, limit;
    std::string min_n = "1", max_n;
    std::string alpha = "1", pi;
    std::uint64_t a = 0, b = 0;

    std::string regime;
    std::string bound_mode = "sqrt-n";
    std::string model = "stars-and-bars";
    bool multiset = false;
    bool include_x_zero = false;
    bool refine = false;
    unsigned grid = 10;
    unsigned max_depth = 6;

    std::string space_path;
    std::string x_label;
    std::string crisp_concept = "definite";
    std::string crisp_tag, rough_tag;

    std::string universe, blocks;
    bool with_profile = false;

    unsigned trials = 50;
    std::uint64_t seed = 1;
    unsigned depth = 6;
    std::uint64_t max_elems = 6;

    std::string output_path;
    std::string format = "table";
};

// Parses args (without the program name) and executes one subcommand.
// Reports and tables go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughspace::cli
