#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nikhilam/bitnat.hpp"

namespace nikhilam {

enum class BaseRule {
    second_msb_one,   // base = 2^bit_len(x)
    second_msb_zero,  // base = 2^(bit_len(x) - 1)
};

struct BaseSelection {
    std::size_t exponent = 0;  // base = 2^exponent
    BaseRule rule = BaseRule::second_msb_zero;
};

/// Picks the base from the smaller operand's second MSB.
/// Throws std::invalid_argument when x < 2.
BaseSelection select_base(const BitNat& x);

/// One recursion level. Operands are magnitudes (x <= y); sign_x/sign_y carry
/// the signs of the differences that produced them at the level above.
struct TraceLevel {
    BitNat x;
    BitNat y;
    bool sign_x = false;
    bool sign_y = false;
    std::size_t base_exponent = 0;
    SignedInt diff_x;      // x - 2^base_exponent
    SignedInt diff_y;      // y - 2^base_exponent
    SignedInt partial_sum; // x + diff_y, never negative under this base rule
};

struct RecursionTrace {
    std::vector<TraceLevel> levels;  // outermost first; may be empty
    SignedInt terminal_x;            // |terminal_x| <= 1 or |terminal_y| <= 1
    SignedInt terminal_y;
    SignedInt terminal_product;
    SignedInt final_product;
};

/// Builds one level for 2 <= x <= y: base from select_base(x), both
/// differences, and the partial sum x + diff_y.
TraceLevel decompose_level(const BitNat& x, const BitNat& y);

struct MulResult {
    BitNat product;
    RecursionTrace trace;
};

/// Recursive base-subtraction multiplication with a full per-level trace.
MulResult nikhilam_mul(const BitNat& x, const BitNat& y);

/// Signed shift-add reassembly, innermost-out:
///   running = partial_sum * 2^base_exponent + running,
/// negated at each level whose operand signs differ.
SignedInt merge_trace(const RecursionTrace& trace);

/// Same recurrence started at level `first_level`; yields the signed product
/// of that level's signed operands.
SignedInt merge_from_level(const RecursionTrace& trace, std::size_t first_level);

/// Product sign is the XOR of the operand signs; zero stays non-negative.
SignedInt nikhilam_mul_signed(const SignedInt& x, const SignedInt& y);

/// Columnar text: one column per level (larger operand, smaller operand
/// zero-padded to the column width, partial sum), a terminal column, then
/// "result <binary>" and "<x> × <y> = <product>" in decimal. A trace with no
/// levels renders the verification line only.
std::string render_trace(const RecursionTrace& trace);

/// Machine-readable form: one JSON object per line (one per level, then a
/// terminal record and a final record).
std::string trace_records(const RecursionTrace& trace);

}  // namespace nikhilam
