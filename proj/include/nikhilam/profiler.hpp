#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "nikhilam/bitnat.hpp"

namespace nikhilam {

/// Statistics for one value profiled as the smaller multiplicand.
struct ProfileRecord {
    BitNat n;
    std::size_t bit_count = 0;
    std::size_t ones = 0;
    std::size_t zeros = 0;  // bit_count - ones
    std::size_t recursion_count = 0;

    bool ratio_infinite() const { return zeros == 0; }
    double ratio() const;  // ones/zeros; +inf when zeros == 0
};

struct CensusRow {
    std::size_t bit_count = 0;         // b
    std::uint64_t corpus_size = 0;     // 2^(b-1)
    std::size_t worst_case_depth = 0;
    std::uint64_t worst_case_cardinality = 0;
};

struct RatioBucket {
    double lo = 0.0;
    double hi = 0.0;
    bool overflow = false;  // zeros == 0 bucket
    std::size_t samples = 0;
    double mean_depth = 0.0;
};

struct ProfileOptions {
    /// Maximum number of values one call may enumerate.
    std::uint64_t corpus_cap = std::uint64_t{1} << 24;
    /// Worker threads; output is identical for any value.
    unsigned jobs = 1;
};

inline constexpr std::size_t kCensusMaxBits = 24;

/// Base selections on the chain n -> |n - 2^select_base(n).exponent|;
/// 0 for n <= 1. A selection whose difference is 0 or 1 still counts.
std::size_t recursion_depth(const BitNat& n);

/// One record per n in [lo, hi] (inclusive), ascending. Throws
/// std::invalid_argument when lo > hi or the range exceeds the corpus cap.
std::vector<ProfileRecord> profile_range(const BitNat& lo, const BitNat& hi,
                                         const ProfileOptions& options = {});

/// Exhaustive worst-case census for each bit length b in 2..b_max.
/// Throws std::invalid_argument unless 2 <= b_max <= kCensusMaxBits.
std::vector<CensusRow> census(std::size_t b_max,
                              const ProfileOptions& options = {});

/// Partitions records by ones/zeros ratio clamped to [0, 2] into
/// bucket_count equal buckets plus a final overflow bucket for zeros == 0.
/// Throws std::invalid_argument on empty input or bucket_count < 2.
std::vector<RatioBucket> ratio_buckets(std::span<const ProfileRecord> records,
                                       std::size_t bucket_count);

/// CSV, header "n,bit_len,ones,zeros,ratio,recursion_count"; ratio with up
/// to 6 fractional digits, "inf" when zeros == 0. LF line endings. Pass
/// header = false to append rows when streaming a range in chunks.
void emit_csv(std::span<const ProfileRecord> records, std::ostream& out,
              bool header = true);

/// CSV, header "b,corpus_size,worst_case_depth,worst_case_cardinality".
void emit_csv(std::span<const CensusRow> rows, std::ostream& out,
              bool header = true);

}  // namespace nikhilam
