#include "nikhilam/multiply.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace nikhilam {

namespace {

const BitNat kOne = BitNat::from_u64(1);

BitNat power_of_two(std::size_t exponent) { return shl(kOne, exponent); }

}  // namespace

BaseSelection select_base(const BitNat& x) {
    if (x.bit_len() < 2)
        throw std::invalid_argument("select_base: operand must be at least 2");
    if (second_msb(x)) return {x.bit_len(), BaseRule::second_msb_one};
    return {x.bit_len() - 1, BaseRule::second_msb_zero};
}

TraceLevel decompose_level(const BitNat& x, const BitNat& y) {
    if (cmp(x, y) == std::strong_ordering::greater)
        throw std::invalid_argument("decompose_level: requires x <= y");
    BaseSelection base = select_base(x);  // rejects x < 2
    BitNat base_value = power_of_two(base.exponent);

    TraceLevel level;
    level.x = x;
    level.y = y;
    level.base_exponent = base.exponent;
    level.diff_x = sub_signed(x, base_value);
    level.diff_y = sub_signed(y, base_value);
    level.partial_sum = add(SignedInt::from_parts(false, x), level.diff_y);
    // x + y >= base holds under both selection rules, so the partial result
    // never goes negative
    assert(!level.partial_sum.negative);
    return level;
}

MulResult nikhilam_mul(const BitNat& x, const BitNat& y) {
    RecursionTrace trace;

    // current operand pair as sign + magnitude; ties keep the first operand
    // in the smaller slot
    SignedInt a = SignedInt::from_parts(false, x);
    SignedInt b = SignedInt::from_parts(false, y);

    for (;;) {
        bool a_is_smaller = cmp(a.magnitude, b.magnitude) != std::strong_ordering::greater;
        SignedInt& small = a_is_smaller ? a : b;
        SignedInt& large = a_is_smaller ? b : a;

        if (small.magnitude.bit_len() <= 1) {
            trace.terminal_x = small;
            trace.terminal_y = large;
            BitNat product = small.magnitude.is_zero() ? BitNat{} : large.magnitude;
            trace.terminal_product =
                SignedInt::from_parts(small.negative != large.negative, std::move(product));
            break;
        }

        TraceLevel level = decompose_level(small.magnitude, large.magnitude);
        level.sign_x = small.negative;
        level.sign_y = large.negative;
        // descend on the differences; their own signs ride along
        a = level.diff_x;
        b = level.diff_y;
        trace.levels.push_back(std::move(level));
    }

    trace.final_product = merge_trace(trace);
    assert(!trace.final_product.negative);
    return {trace.final_product.magnitude, std::move(trace)};
}

SignedInt merge_from_level(const RecursionTrace& trace, std::size_t first_level) {
    SignedInt running = trace.terminal_product;
    for (std::size_t i = trace.levels.size(); i-- > first_level;) {
        const TraceLevel& level = trace.levels[i];
        // running holds diff_x * diff_y of this level; lift it to the
        // magnitude product, then restore the operand signs
        running = add(shl(level.partial_sum, level.base_exponent), running);
        if (level.sign_x != level.sign_y) running = negated(std::move(running));
    }
    return running;
}

SignedInt merge_trace(const RecursionTrace& trace) { return merge_from_level(trace, 0); }

SignedInt nikhilam_mul_signed(const SignedInt& x, const SignedInt& y) {
    MulResult result = nikhilam_mul(x.magnitude, y.magnitude);
    return SignedInt::from_parts(x.negative != y.negative, std::move(result.product));
}

}  // namespace nikhilam
