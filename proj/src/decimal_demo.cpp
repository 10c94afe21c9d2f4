#include "nikhilam/decimal_demo.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>
#include <string>

namespace nikhilam {

namespace {

constexpr std::int64_t kOperandLimit = 100000000;  // demo scale, 8 digits

std::int64_t pow10(int k) {
    std::int64_t v = 1;
    while (k-- > 0) v *= 10;
    return v;
}

// exponent k if v == 10^k with k >= 1, else -1
int power_of_ten_exponent(std::int64_t v) {
    if (v < 10) return -1;
    int k = 0;
    while (v % 10 == 0) {
        v /= 10;
        ++k;
    }
    return v == 1 ? k : -1;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("base: invalid number '" + std::string(text) + "'");
    return value;
}

// sign + magnitude zero-padded to `digits`
std::string signed_padded(std::int64_t v, int digits) {
    std::string mag = std::to_string(v < 0 ? -v : v);
    if (mag.size() < static_cast<std::size_t>(digits))
        mag.insert(0, static_cast<std::size_t>(digits) - mag.size(), '0');
    return (v < 0 ? "-" : "+") + mag;
}

std::string padded(std::int64_t v, int digits) {
    if (v < 0) return signed_padded(v, digits);
    std::string mag = std::to_string(v);
    if (mag.size() < static_cast<std::size_t>(digits))
        mag.insert(0, static_cast<std::size_t>(digits) - mag.size(), '0');
    return mag;
}

}  // namespace

DecimalBase DecimalBase::power_of_ten(int k) {
    if (k < 1 || k > 9) throw std::invalid_argument("base: power-of-ten exponent must be in 1..9");
    return {pow10(k), k, 1};
}

DecimalBase DecimalBase::modified_base(int w, int j) {
    if (w < 2 || w > 9) throw std::invalid_argument("base: multiplier must be in 2..9");
    if (j < 1 || j > 9) throw std::invalid_argument("base: working-base exponent must be in 1..9");
    return {w * pow10(j), j, w};
}

DecimalBase DecimalBase::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("base: empty specification");
    if (auto sep = text.find('x'); sep != std::string_view::npos) {
        std::int64_t w = parse_int(text.substr(0, sep));
        std::int64_t p = parse_int(text.substr(sep + 1));
        if (w < 2 || w > 9) throw std::invalid_argument("base: multiplier must be in 2..9");
        int j = power_of_ten_exponent(p);
        if (j < 0)
            throw std::invalid_argument("base: '" + std::string(text) +
                                        "' needs the form WxP with P a power of ten");
        return modified_base(static_cast<int>(w), j);
    }
    std::int64_t v = parse_int(text);
    if (v == 0) throw std::invalid_argument("base: must be positive");
    int k = power_of_ten_exponent(v);
    if (k < 0)
        throw std::invalid_argument("base: " + std::string(text) +
                                    " is not a power of ten; use WxP for a modified base");
    return power_of_ten(k);
}

DecimalNikhilamStep nikhilam_decimal(std::int64_t n1, std::int64_t n2,
                                     const DecimalBase& base) {
    if (base.value <= 0) throw std::invalid_argument("base: must be positive");
    if (base.multiplier != 1 && (base.multiplier < 2 || base.multiplier > 9))
        throw std::invalid_argument("base: multiplier must be in 2..9");
    if (n1 < 0 || n2 < 0 || n1 >= kOperandLimit || n2 >= kOperandLimit)
        throw std::invalid_argument("operands must be in [0, 10^8)");
    if (base.value > n1 + n2)
        throw std::invalid_argument("base exceeds n1 + n2; the left-hand term would go negative");

    DecimalNikhilamStep step;
    step.n1 = n1;
    step.n2 = n2;
    step.base = base;
    step.diff_a = base.value - n1;
    step.diff_b = base.value - n2;
    step.lhs = (n1 + n2 - base.value) * base.multiplier;
    step.rhs = step.diff_a * step.diff_b;
    step.result = step.lhs * pow10(base.exponent) + step.rhs;
    assert(step.result == n1 * n2);
    return step;
}

std::string render_decimal_step(const DecimalNikhilamStep& step) {
    const int digits = step.base.exponent;

    std::string lhs_label = step.base.modified()
        ? "{(x - a) + (x - b) - x} * " + std::to_string(step.base.multiplier)
        : "(x - a) + (x - b) - x";
    std::string base_text = step.base.modified()
        ? std::to_string(pow10(step.base.exponent)) + " × " +
              std::to_string(step.base.multiplier) + " = " + std::to_string(step.base.value)
        : std::to_string(step.base.value);

    std::string col1[3] = {
        "(x - a)  " + std::to_string(step.n1),
        "(x - b)  " + std::to_string(step.n2),
        lhs_label + "  " + std::to_string(step.lhs),
    };
    std::string col2[3] = {
        "a " + signed_padded(step.diff_a, digits),
        "b " + signed_padded(step.diff_b, digits),
        "ab " + padded(step.rhs, digits),
    };

    std::size_t w1 = std::max({col1[0].size(), col1[1].size(), col1[2].size(),
                               std::string("Number").size()});
    std::size_t w2 = std::max({col2[0].size(), col2[1].size(), col2[2].size(),
                               std::string("Difference").size()});

    auto pad_to = [](std::string s, std::size_t w) {
        s.append(w - s.size(), ' ');
        return s;
    };

    std::string out;
    out += pad_to("Number", w1) + "   " + pad_to("Difference", w2) + "   Base x\n";
    out += pad_to(col1[0], w1) + "   " + pad_to(col2[0], w2) + "   " + base_text + "\n";
    out += pad_to(col1[1], w1) + "   " + col2[1] + "\n";
    out += pad_to(col1[2], w1) + "   " + col2[2] + "\n";
    if (step.rhs < 0)
        out += "ab negative: subtract " + std::to_string(-step.rhs) + " from " +
               std::to_string(step.lhs * pow10(digits)) + "\n";
    out += "Hence answer = " + std::to_string(step.result) + "\n";
    return out;
}

const std::vector<DecimalCase>& reference_cases() {
    static const std::vector<DecimalCase> cases = {
        {99, 98, DecimalBase::power_of_ten(2), 9702},
        {49, 48, DecimalBase::modified_base(5, 1), 2352},
        {102, 101, DecimalBase::power_of_ten(2), 10302},
        {101, 99, DecimalBase::power_of_ten(2), 9999},
    };
    return cases;
}

}  // namespace nikhilam
