#pragma once

#include "nikhilam/bitnat.hpp"

namespace nikhilam {

/// Shift-and-add multiplication over the bits of y. Verification oracle:
/// shares nothing with the recursive engine beyond BitNat and its primitives.
BitNat schoolbook_mul(const BitNat& x, const BitNat& y);

}  // namespace nikhilam
