#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nikhilam/bitnat.hpp"
#include "nikhilam/decimal_demo.hpp"
#include "nikhilam/multiply.hpp"
#include "nikhilam/profiler.hpp"
#include "nikhilam/schoolbook.hpp"

namespace {

using namespace nikhilam;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// output sink: file when -o was given, stdout otherwise
struct Sink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

std::uint64_t corpus_cap_from_env() {
    if (const char* env = std::getenv("NIKHILAM_CORPUS_CAP")) {
        char* end = nullptr;
        std::uint64_t cap = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || cap == 0)
            throw std::runtime_error("NIKHILAM_CORPUS_CAP: invalid value");
        return cap;
    }
    return ProfileOptions{}.corpus_cap;
}

// random value with exactly `bits` significant bits
BitNat random_bits(std::mt19937_64& rng, std::size_t bits) {
    if (bits == 0) return BitNat{};
    std::vector<std::uint64_t> limbs((bits + 63) / 64);
    for (auto& limb : limbs) limb = rng();
    std::size_t top = (bits - 1) % 64;
    limbs.back() &= (top == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (top + 1)) - 1);
    limbs.back() |= std::uint64_t{1} << top;
    return BitNat::from_limbs(std::move(limbs));
}

int cmd_mul(const std::vector<std::string>& operands, int radix, bool is_signed) {
    if (is_signed) {
        SignedInt x = parse_signed(operands[0], radix);
        SignedInt y = parse_signed(operands[1], radix);
        std::cout << format(nikhilam_mul_signed(x, y), radix) << "\n";
    } else {
        BitNat x = parse(operands[0], radix);
        BitNat y = parse(operands[1], radix);
        std::cout << format(nikhilam_mul(x, y).product, radix) << "\n";
    }
    return 0;
}

int cmd_trace(const std::vector<std::string>& operands, int radix,
              const std::string& fmt, Sink& sink) {
    BitNat x = parse(operands[0], radix);
    BitNat y = parse(operands[1], radix);
    MulResult result = nikhilam_mul(x, y);
    sink.out() << (fmt == "records" ? trace_records(result.trace)
                                    : render_trace(result.trace));
    return 0;
}

int cmd_verify_exhaustive(unsigned bits, Sink& sink) {
    std::uint64_t side = std::uint64_t{1} << bits;
    for (std::uint64_t x = 0; x < side; ++x) {
        BitNat bx = BitNat::from_u64(x);
        for (std::uint64_t y = 0; y < side; ++y) {
            BitNat by = BitNat::from_u64(y);
            BitNat got = nikhilam_mul(bx, by).product;
            BitNat expected = schoolbook_mul(bx, by);
            if (got != expected) {
                sink.out() << "mismatch: " << x << " * " << y << " -> "
                           << format(got, 10) << ", oracle says "
                           << format(expected, 10) << "\n";
                return kExitVerificationFailure;
            }
        }
    }
    sink.out() << side * side << " pairs OK\n";
    return 0;
}

int cmd_verify_random(std::uint64_t trials, std::size_t max_bits,
                      std::uint64_t seed, Sink& sink) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        BitNat x = random_bits(rng, rng() % (max_bits + 1));
        BitNat y = random_bits(rng, rng() % (max_bits + 1));
        BitNat got = nikhilam_mul(x, y).product;
        BitNat expected = schoolbook_mul(x, y);
        if (got != expected) {
            sink.out() << "mismatch at trial " << t << ": " << format(x, 10)
                       << " * " << format(y, 10) << " -> " << format(got, 10)
                       << ", oracle says " << format(expected, 10) << "\n";
            return kExitVerificationFailure;
        }
    }
    sink.out() << trials << " pairs OK\n";
    return 0;
}

int cmd_profile(const std::string& lo_text, const std::string& hi_text,
                unsigned jobs, Sink& sink) {
    BitNat lo = parse(lo_text, 10);
    BitNat hi = parse(hi_text, 10);
    if (cmp(lo, hi) == std::strong_ordering::greater)
        throw std::invalid_argument("profile: lo exceeds hi");

    std::uint64_t cap = corpus_cap_from_env();
    SignedInt span = sub_signed(hi, lo);
    if (span.magnitude.bit_len() > 64 ||
        (!span.magnitude.is_zero() && span.magnitude.to_u64() + 1 > cap) ||
        (!span.magnitude.is_zero() && span.magnitude.to_u64() + 1 == 0))
        throw std::invalid_argument("profile: range exceeds corpus cap of " +
                                    std::to_string(cap) + " values");

    // stream in chunks so large ranges never materialize at once
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;
    std::uint64_t remaining = span.magnitude.is_zero() ? 1 : span.magnitude.to_u64() + 1;
    ProfileOptions options{.corpus_cap = kChunk, .jobs = jobs};
    BitNat chunk_lo = lo;
    bool first = true;
    while (remaining > 0) {
        std::uint64_t n = std::min(remaining, kChunk);
        BitNat chunk_hi = add(chunk_lo, BitNat::from_u64(n - 1));
        auto records = profile_range(chunk_lo, chunk_hi, options);
        emit_csv(records, sink.out(), first);
        first = false;
        remaining -= n;
        if (remaining > 0) chunk_lo = add(chunk_hi, BitNat::from_u64(1));
    }
    return 0;
}

int cmd_census(std::size_t b_max, unsigned jobs, Sink& sink) {
    ProfileOptions options{.corpus_cap = corpus_cap_from_env(), .jobs = jobs};
    auto rows = census(b_max, options);
    emit_csv(rows, sink.out());
    return 0;
}

int cmd_demo_decimal(const std::vector<std::string>& operands,
                     const std::string& base_text, bool all_cases) {
    if (all_cases) {
        bool ok = true;
        for (const DecimalCase& c : reference_cases()) {
            DecimalNikhilamStep step = nikhilam_decimal(c.n1, c.n2, c.base);
            std::cout << render_decimal_step(step) << "\n";
            ok = ok && step.result == c.expected;
        }
        return ok ? 0 : kExitVerificationFailure;
    }
    if (operands.size() != 2 || base_text.empty())
        throw std::invalid_argument("demo-decimal: need two operands and --base, or --all-paper-cases");
    std::int64_t n1 = std::stoll(operands[0]);
    std::int64_t n2 = std::stoll(operands[1]);
    DecimalNikhilamStep step = nikhilam_decimal(n1, n2, DecimalBase::parse(base_text));
    std::cout << render_decimal_step(step);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive base-subtraction binary multiplication toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> operands;
    int radix = 10;
    bool is_signed = false;
    std::string trace_format = "text";
    std::string output_path;
    unsigned exhaustive_bits = 0;
    std::uint64_t random_trials = 0;
    std::size_t max_bits = 256;
    std::uint64_t seed = 0;
    std::string lo_text, hi_text;
    unsigned jobs = 1;
    std::size_t b_max = 16;
    std::string base_text;
    bool all_cases = false;

    auto* mul = app.add_subcommand("mul", "Multiply two integers");
    mul->add_option("operands", operands, "Two numerals")->expected(2)->required();
    mul->add_option("--radix", radix, "Numeral radix (2, 10 or 16)")
        ->check(CLI::IsMember({2, 10, 16}))
        ->capture_default_str();
    mul->add_flag("--signed", is_signed, "Sign-magnitude operands (use -- before negatives)");

    auto* trace = app.add_subcommand("trace", "Multiply and print the recursion trace");
    trace->add_option("operands", operands, "Two numerals")->expected(2)->required();
    trace->add_option("--radix", radix, "Numeral radix (2, 10 or 16)")
        ->check(CLI::IsMember({2, 10, 16}))
        ->capture_default_str();
    trace->add_option("--format", trace_format, "Trace format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
    trace->add_option("-o,--output", output_path, "Write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check the multiplier against the shift-add oracle");
    auto* exbits = verify->add_option("--exhaustive-bits", exhaustive_bits,
                                      "All pairs below 2^bits")
                       ->check(CLI::Range(1u, 12u));
    auto* rnd = verify->add_option("--random", random_trials, "Number of random pairs");
    verify->add_option("--max-bits", max_bits, "Largest random operand width")
        ->capture_default_str();
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("-o,--output", output_path, "Write to file instead of stdout");
    exbits->excludes(rnd);

    auto* profile = app.add_subcommand("profile", "Per-value recursion statistics as CSV");
    profile->add_option("--lo", lo_text, "Range start (decimal, inclusive)")->required();
    profile->add_option("--hi", hi_text, "Range end (decimal, inclusive)")->required();
    profile->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    profile->add_option("-o,--output", output_path, "Write to file instead of stdout");

    auto* census_cmd = app.add_subcommand("census", "Worst-case recursion census as CSV");
    census_cmd->add_option("--b-max", b_max, "Largest bit length (2..24)")
        ->check(CLI::Range(std::size_t{2}, kCensusMaxBits))
        ->capture_default_str();
    census_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    census_cmd->add_option("-o,--output", output_path, "Write to file instead of stdout");

    auto* demo = app.add_subcommand("demo-decimal", "Single-step radix-10 worked example");
    demo->add_option("operands", operands, "Two non-negative integers")->expected(0, 2);
    demo->add_option("--base", base_text, "Base: a power of ten, or WxP (e.g. 5x10)");
    demo->add_flag("--all-paper-cases", all_cases,
                   "Run the four reference cases (99x98, 49x48, 102x101, 101x99)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Sink sink;
        sink.open(output_path);
        if (*mul) return cmd_mul(operands, radix, is_signed);
        if (*trace) return cmd_trace(operands, radix, trace_format, sink);
        if (*verify) {
            if (*exbits) return cmd_verify_exhaustive(exhaustive_bits, sink);
            if (*rnd) return cmd_verify_random(random_trials, max_bits, seed, sink);
            throw std::invalid_argument("verify: need --exhaustive-bits or --random");
        }
        if (*profile) return cmd_profile(lo_text, hi_text, jobs, sink);
        if (*census_cmd) return cmd_census(b_max, jobs, sink);
        if (*demo) return cmd_demo_decimal(operands, base_text, all_cases);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
