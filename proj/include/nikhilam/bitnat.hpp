#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nikhilam {

/// Arbitrary-width unsigned integer, stored as 64-bit limbs least significant
/// first. Canonical form: no high zero limbs; zero is the empty limb vector,
/// so bit_len(0) == 0.
class BitNat {
public:
    BitNat() = default;

    static BitNat from_u64(std::uint64_t v);
    /// Takes ownership and strips high zero limbs.
    static BitNat from_limbs(std::vector<std::uint64_t> limbs);

    bool is_zero() const { return limbs_.empty(); }

    /// Smallest m with value < 2^m; 0 for zero.
    std::size_t bit_len() const;

    /// Number of set bits.
    std::size_t popcount() const;

    /// Bit at position i (LSB = 0); false beyond bit_len.
    bool bit(std::size_t i) const;

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if bit_len > 64

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

    friend std::strong_ordering operator<=>(const BitNat& a, const BitNat& b);
    friend bool operator==(const BitNat& a, const BitNat& b) = default;

private:
    std::vector<std::uint64_t> limbs_;
};

/// Sign-magnitude integer. Zero is never negative.
struct SignedInt {
    bool negative = false;
    BitNat magnitude;

    static SignedInt from_parts(bool negative, BitNat magnitude);
    static SignedInt from_i64(std::int64_t v);

    bool is_zero() const { return magnitude.is_zero(); }
};

BitNat add(const BitNat& x, const BitNat& y);

/// x - y with the sign of the true difference.
SignedInt sub_signed(const BitNat& x, const BitNat& y);

/// x * 2^k.
BitNat shl(const BitNat& x, std::size_t k);

std::size_t bit_len(const BitNat& x);
std::size_t popcount(const BitNat& x);

/// Bit just below the most significant set bit.
/// Throws std::invalid_argument when bit_len(x) < 2.
bool second_msb(const BitNat& x);

std::strong_ordering cmp(const BitNat& x, const BitNat& y);

/// Parses a non-negative numeral. Radix must be 2, 10 or 16; "0b"/"0x"
/// prefixes are accepted for the matching radix. Throws std::invalid_argument
/// on empty input, bad digits, or an unsupported radix.
BitNat parse(std::string_view text, int radix);

/// Canonical numeral, lowercase hex, no leading zeros ("0" for zero).
std::string format(const BitNat& x, int radix);

SignedInt add(const SignedInt& x, const SignedInt& y);
SignedInt negated(SignedInt x);
SignedInt shl(const SignedInt& x, std::size_t k);
SignedInt parse_signed(std::string_view text, int radix);
std::string format(const SignedInt& x, int radix);

}  // namespace nikhilam
