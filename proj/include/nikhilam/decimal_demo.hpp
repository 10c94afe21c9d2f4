#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nikhilam {

/// Base for the single-step radix-10 demonstrator: either a plain power of
/// ten 10^k, or a modified base w * 10^j with 2 <= w <= 9.
struct DecimalBase {
    std::int64_t value = 0;
    int exponent = 0;    // k, or j for a modified base
    int multiplier = 1;  // 1 for a power of ten, else w

    bool modified() const { return multiplier != 1; }

    static DecimalBase power_of_ten(int k);
    static DecimalBase modified_base(int w, int j);

    /// "100" -> 10^2; "5x10" -> 5 * 10^1. Throws std::invalid_argument.
    static DecimalBase parse(std::string_view text);
};

/// One application of n1*n2 = x*((x-a) + (x-b) - x) + a*b with base x.
/// diff_a = x - n1 and diff_b = x - n2 (differences from the base, so values
/// below the base have positive differences). lhs is scaled by w for a
/// modified base; rhs = a*b may be negative and is borrowed from the lhs slot.
struct DecimalNikhilamStep {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    DecimalBase base;
    std::int64_t diff_a = 0;
    std::int64_t diff_b = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::int64_t result = 0;
};

/// Throws std::invalid_argument on a non-positive base, a multiplier outside
/// 2..9, operands outside [0, 10^8), or base > n1 + n2 (negative lhs).
DecimalNikhilamStep nikhilam_decimal(std::int64_t n1, std::int64_t n2,
                                     const DecimalBase& base);

/// Three-column table (Number / Difference / Base) ending in
/// "Hence answer = N", with a borrow note when rhs is negative.
std::string render_decimal_step(const DecimalNikhilamStep& step);

struct DecimalCase {
    std::int64_t n1;
    std::int64_t n2;
    DecimalBase base;
    std::int64_t expected;
};

/// The four classic worked cases: 99x98, 49x48 (base 5x10), 102x101, 101x99.
const std::vector<DecimalCase>& reference_cases();

}  // namespace nikhilam
