#pragma once

#include "roughspace/exact.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roughspace::chains {

// n = k^2 + k (every crisp pair, diagonal included, represents rough objects)
std::optional<BigInt> pwc_feasible(const BigInt& n);

// n = k^2 (diagonal excluded); k = 1 passes only for the degenerate n = 1
std::optional<BigInt> wdc_feasible(const BigInt& n);

struct BooleanModel {
    unsigned exponent = 0;  // x with carrier size 2^x
    BigInt k;
    BigInt n;
};

// All (x, k, n = 2^x) with 2^x = k^2 and n <= limit, ascending. The trivial
// one-element lattice (x = 0) is excluded unless asked for.
std::vector<BooleanModel> boolean_wdc_models(const BigInt& limit, bool include_x_zero = false);

struct RdcPi {
    ExactRatio pi;
    bool admissible = false;  // 0 < pi <= 1
};

// exact (n-k)/(k^2-k); requires 2 <= k <= n
RdcPi rdc_pi(const BigInt& n, const BigInt& k);

// Inverts pi = (n-k)/(k^2-k): the positive root of pi k^2 + (1-pi) k - n.
// Present iff the discriminant is a rational square and the root is an
// integer >= 2. Requires pi > 0; values above 1 invert fine but are outside
// the admissibility window.
std::optional<BigInt> rdc_k(const BigInt& n, const ExactRatio& pi);

enum class BoundMode { sqrt_n, sqrt_n_over_alpha, unbounded };
std::string to_string(BoundMode m);
std::optional<BoundMode> bound_mode_from_string(const std::string& tag);

// top of the k scan range for a mode (k starts at 2)
BigInt rdc_scan_bound(const BigInt& n, const ExactRatio& alpha, BoundMode mode);

// all k in the mode's range with 0 < pi_k <= alpha, ascending
std::vector<std::pair<BigInt, ExactRatio>> rdc_admissible_set(const BigInt& n,
                                                              const ExactRatio& alpha,
                                                              BoundMode mode);

enum class AdmissibleReading { at_most_alpha, at_least_alpha };

// count without materializing; the at_least_alpha reading counts 0 < alpha <= pi_k
BigCount rdc_admissible_count(const BigInt& n, const ExactRatio& alpha, BoundMode mode,
                              AdmissibleReading reading = AdmissibleReading::at_most_alpha);

using AlphaPredicate = std::function<bool(const BigInt& n, const ExactRatio& alpha)>;

// Grid refinement over (0,1): depth d tests the grid^-d spaced rationals not
// seen at shallower depths, ascending; alpha = 1 is probed once after the
// depth-1 scan. Returns the first accepted value, or nothing after max_depth.
std::optional<ExactRatio> rdc_refine(const BigInt& n, const AlphaPredicate& accept,
                                     unsigned grid, unsigned max_depth);

// Partitions of r into exactly g parts with a <= part <= b, non-increasing
// (strictly decreasing when distinct). The visitor may return false to stop.
void enumerate_bounded_partitions(std::uint64_t r, std::uint64_t g, std::uint64_t a,
                                  std::uint64_t b, bool distinct,
                                  const std::function<bool(std::span<const std::uint64_t>)>& visit);

BigCount count_bounded_partitions(std::uint64_t r, std::uint64_t g, std::uint64_t a,
                                  std::uint64_t b, bool distinct);

struct RbcProblem {
    BigInt n;
    BigInt k;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool distinct_parts = true;

    BigInt r() const { return n - k; }
    BigInt g() const { return k * k - k; }

    // validates k >= 1, k <= n, 0 <= a <= b <= n-k
    static RbcProblem make(BigInt n, BigInt k, std::uint64_t a, std::uint64_t b,
                           bool distinct_parts = true);
};

struct RbcCount {
    BigCount models;      // B = sum over admissible partitions of the part product
    BigCount partitions;  // n_o
    BigCount lower;       // n_o * a^g  (0^0 = 1)
    BigCount upper;       // n_o * b^g
};

RbcCount rbc_count(const RbcProblem& p);

enum class Regime { pwc, wdc, boolean_wdc, rdc };
std::string to_string(Regime r);
std::optional<Regime> regime_from_string(const std::string& tag);

struct FeasibilityRow {
    Regime regime = Regime::pwc;
    BigInt n;
    std::optional<BigInt> k;
    std::optional<ExactRatio> pi;
    std::optional<unsigned> exponent;  // boolean regime only
    bool feasible = false;
    std::string notes;
};

struct ScanRange {
    BigInt lo;
    BigInt hi;  // inclusive
};

struct ScanParams {
    ExactRatio alpha = 1;
    BoundMode mode = BoundMode::sqrt_n;
    bool include_x_zero = false;
};

// One row per n (pwc/wdc), per model (boolean), or per scanned k and n (rdc,
// with the admissible flag in `feasible`). Deterministic ascending output;
// large pwc/wdc ranges fan out over threads, capped by ROUGHSPACE_THREADS.
std::vector<FeasibilityRow> sequence_scan(Regime regime, const ScanRange& range,
                                          const ScanParams& params = {});

}  // namespace roughspace::chains
