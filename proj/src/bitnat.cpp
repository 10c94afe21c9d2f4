#include "nikhilam/bitnat.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace nikhilam {

namespace {

void strip_high_zeros(std::vector<std::uint64_t>& limbs) {
    while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

// |x| >= |y| required; limb-wise subtraction with borrow.
std::vector<std::uint64_t> sub_magnitudes(const std::vector<std::uint64_t>& x,
                                          const std::vector<std::uint64_t>& y) {
    std::vector<std::uint64_t> out(x.size());
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t yi = i < y.size() ? y[i] : 0;
        std::uint64_t d = x[i] - yi;
        std::uint64_t b1 = x[i] < yi;
        std::uint64_t d2 = d - borrow;
        std::uint64_t b2 = d < borrow;
        out[i] = d2;
        borrow = b1 | b2;
    }
    strip_high_zeros(out);
    return out;
}

// in-place x = x * m + a for small m, a; used by decimal parsing.
void mul_add_small(std::vector<std::uint64_t>& limbs, std::uint64_t m,
                   std::uint64_t a) {
    unsigned __int128 carry = a;
    for (auto& limb : limbs) {
        unsigned __int128 t = static_cast<unsigned __int128>(limb) * m + carry;
        limb = static_cast<std::uint64_t>(t);
        carry = t >> 64;
    }
    while (carry != 0) {
        limbs.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
}

// in-place x /= d, returns remainder; used by decimal formatting.
std::uint64_t divmod_small(std::vector<std::uint64_t>& limbs, std::uint64_t d) {
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs[i];
        limbs[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    strip_high_zeros(limbs);
    return static_cast<std::uint64_t>(rem);
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitNat BitNat::from_u64(std::uint64_t v) {
    BitNat n;
    if (v != 0) n.limbs_.push_back(v);
    return n;
}

BitNat BitNat::from_limbs(std::vector<std::uint64_t> limbs) {
    strip_high_zeros(limbs);
    BitNat n;
    n.limbs_ = std::move(limbs);
    return n;
}

std::size_t BitNat::bit_len() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 64 + std::bit_width(limbs_.back());
}

std::size_t BitNat::popcount() const {
    std::size_t total = 0;
    for (auto limb : limbs_) total += static_cast<std::size_t>(std::popcount(limb));
    return total;
}

bool BitNat::bit(std::size_t i) const {
    std::size_t word = i / 64;
    if (word >= limbs_.size()) return false;
    return (limbs_[word] >> (i % 64)) & 1;
}

std::uint64_t BitNat::to_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("BitNat::to_u64: value exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

std::strong_ordering operator<=>(const BitNat& a, const BitNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

SignedInt SignedInt::from_parts(bool negative, BitNat magnitude) {
    SignedInt s;
    s.magnitude = std::move(magnitude);
    s.negative = negative && !s.magnitude.is_zero();
    return s;
}

SignedInt SignedInt::from_i64(std::int64_t v) {
    bool neg = v < 0;
    std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    return from_parts(neg, BitNat::from_u64(mag));
}

BitNat add(const BitNat& x, const BitNat& y) {
    const auto& a = x.limbs().size() >= y.limbs().size() ? x.limbs() : y.limbs();
    const auto& b = x.limbs().size() >= y.limbs().size() ? y.limbs() : x.limbs();
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t bi = i < b.size() ? b[i] : 0;
        std::uint64_t s = a[i] + bi;
        std::uint64_t c1 = s < a[i];
        std::uint64_t s2 = s + carry;
        std::uint64_t c2 = s2 < s;
        out.push_back(s2);
        carry = c1 | c2;
    }
    if (carry) out.push_back(1);
    return BitNat::from_limbs(std::move(out));
}

SignedInt sub_signed(const BitNat& x, const BitNat& y) {
    auto order = cmp(x, y);
    if (order == std::strong_ordering::equal) return SignedInt{};
    if (order == std::strong_ordering::greater)
        return SignedInt::from_parts(false, BitNat::from_limbs(sub_magnitudes(x.limbs(), y.limbs())));
    return SignedInt::from_parts(true, BitNat::from_limbs(sub_magnitudes(y.limbs(), x.limbs())));
}

BitNat shl(const BitNat& x, std::size_t k) {
    if (x.is_zero() || k == 0) return x;
    std::size_t words = k / 64;
    std::size_t bits = k % 64;
    std::vector<std::uint64_t> out(words, 0);
    const auto& src = x.limbs();
    if (bits == 0) {
        out.insert(out.end(), src.begin(), src.end());
    } else {
        std::uint64_t carry = 0;
        for (auto limb : src) {
            out.push_back((limb << bits) | carry);
            carry = limb >> (64 - bits);
        }
        if (carry) out.push_back(carry);
    }
    return BitNat::from_limbs(std::move(out));
}

std::size_t bit_len(const BitNat& x) { return x.bit_len(); }
std::size_t popcount(const BitNat& x) { return x.popcount(); }

bool second_msb(const BitNat& x) {
    std::size_t m = x.bit_len();
    if (m < 2) throw std::invalid_argument("second_msb: operand has fewer than 2 bits");
    return x.bit(m - 2);
}

std::strong_ordering cmp(const BitNat& x, const BitNat& y) { return x <=> y; }

BitNat parse(std::string_view text, int radix) {
    if (radix != 2 && radix != 10 && radix != 16)
        throw std::invalid_argument("parse: radix must be 2, 10 or 16");
    if (text.size() >= 2 && text[0] == '0') {
        char p = text[1];
        if ((p == 'b' || p == 'B') && radix == 2) text.remove_prefix(2);
        else if ((p == 'x' || p == 'X') && radix == 16) text.remove_prefix(2);
    }
    if (text.empty()) throw std::invalid_argument("parse: empty numeral");

    std::vector<std::uint64_t> limbs;
    if (radix == 10) {
        for (char c : text) {
            int d = digit_value(c);
            if (d < 0 || d > 9)
                throw std::invalid_argument(std::string("parse: invalid decimal digit '") + c + "'");
            mul_add_small(limbs, 10, static_cast<std::uint64_t>(d));
        }
        return BitNat::from_limbs(std::move(limbs));
    }

    // radix 2 and 16: fixed bits per digit, packed from the low end
    int bits_per_digit = radix == 2 ? 1 : 4;
    std::size_t total_bits = text.size() * static_cast<std::size_t>(bits_per_digit);
    limbs.assign((total_bits + 63) / 64, 0);
    std::size_t pos = 0;  // bit position of the current least significant digit
    for (std::size_t i = text.size(); i-- > 0;) {
        int d = digit_value(text[i]);
        if (d < 0 || d >= radix)
            throw std::invalid_argument(std::string("parse: invalid digit '") + text[i] + "'");
        limbs[pos / 64] |= static_cast<std::uint64_t>(d) << (pos % 64);
        if (bits_per_digit == 4 && pos % 64 > 60)
            limbs[pos / 64 + 1] |= static_cast<std::uint64_t>(d) >> (64 - pos % 64);
        pos += static_cast<std::size_t>(bits_per_digit);
    }
    return BitNat::from_limbs(std::move(limbs));
}

std::string format(const BitNat& x, int radix) {
    if (radix != 2 && radix != 10 && radix != 16)
        throw std::invalid_argument("format: radix must be 2, 10 or 16");
    if (x.is_zero()) return "0";

    std::string out;
    if (radix == 2) {
        std::size_t m = x.bit_len();
        out.reserve(m);
        for (std::size_t i = m; i-- > 0;) out.push_back(x.bit(i) ? '1' : '0');
        return out;
    }
    if (radix == 16) {
        static constexpr char digits[] = "0123456789abcdef";
        std::size_t nibbles = (x.bit_len() + 3) / 4;
        out.reserve(nibbles);
        for (std::size_t i = nibbles; i-- > 0;) {
            std::size_t word = (i * 4) / 64, shift = (i * 4) % 64;
            out.push_back(digits[(x.limbs()[word] >> shift) & 0xF]);
        }
        return out;
    }
    // decimal: peel 19 digits at a time
    auto limbs = x.limbs();
    constexpr std::uint64_t chunk = 10000000000000000000ULL;  // 10^19
    std::vector<std::uint64_t> groups;
    while (!limbs.empty()) groups.push_back(divmod_small(limbs, chunk));
    out = std::to_string(groups.back());
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out.append(19 - part.size(), '0');
        out += part;
    }
    return out;
}

SignedInt add(const SignedInt& x, const SignedInt& y) {
    if (x.negative == y.negative)
        return SignedInt::from_parts(x.negative, add(x.magnitude, y.magnitude));
    // opposite signs: subtract the smaller magnitude from the larger
    SignedInt diff = sub_signed(x.magnitude, y.magnitude);
    // diff carries the sign of (|x| - |y|); the result sign follows whichever
    // operand had the larger magnitude
    bool result_negative = diff.negative ? y.negative : x.negative;
    return SignedInt::from_parts(result_negative, std::move(diff.magnitude));
}

SignedInt negated(SignedInt x) {
    x.negative = !x.negative && !x.magnitude.is_zero();
    return x;
}

SignedInt shl(const SignedInt& x, std::size_t k) {
    return SignedInt::from_parts(x.negative, shl(x.magnitude, k));
}

SignedInt parse_signed(std::string_view text, int radix) {
    bool neg = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    return SignedInt::from_parts(neg, parse(text, radix));
}

std::string format(const SignedInt& x, int radix) {
    std::string mag = format(x.magnitude, radix);
    return x.negative ? "-" + mag : mag;
}

}  // namespace nikhilam
