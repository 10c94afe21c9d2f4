#include "nikhilam/schoolbook.hpp"

namespace nikhilam {

BitNat schoolbook_mul(const BitNat& x, const BitNat& y) {
    BitNat acc;
    BitNat shifted = x;
    std::size_t m = y.bit_len();
    for (std::size_t i = 0; i < m; ++i) {
        if (y.bit(i)) acc = add(acc, shifted);
        shifted = shl(shifted, 1);
    }
    return acc;
}

}  // namespace nikhilam
