#include "nikhilam/profiler.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nikhilam/kernels.hpp"
#include "nikhilam/multiply.hpp"

namespace nikhilam {

namespace {

constexpr std::size_t kU64FastPathBits = 63;

std::size_t depth_u64(std::uint64_t n) {
    std::size_t depth = 0;
    while (n >= 2) {
        unsigned width = static_cast<unsigned>(std::bit_width(n));
        std::uint64_t msb = std::uint64_t{1} << (width - 1);
        n = (n & (msb >> 1)) ? (msb << 1) - n : n - msb;
        ++depth;
    }
    return depth;
}

unsigned effective_jobs(unsigned requested, std::uint64_t work_items) {
    unsigned jobs = requested == 0 ? 1 : requested;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw != 0) jobs = std::min(jobs, hw);
    if (work_items < 1024) jobs = 1;  // not worth spawning for
    return std::max(jobs, 1u);
}

// runs fn(shard_index, begin, end) over contiguous shards of [0, total)
template <typename Fn>
void parallel_shards(std::uint64_t total, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || total == 0) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::uint64_t chunk = (total + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        std::uint64_t begin = std::min<std::uint64_t>(chunk * j, total);
        std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
        if (begin >= end) break;
        workers.emplace_back([&fn, j, begin, end] { fn(j, begin, end); });
    }
    for (auto& w : workers) w.join();
}

ProfileRecord make_record_u64(std::uint64_t n, std::size_t depth) {
    ProfileRecord r;
    r.n = BitNat::from_u64(n);
    r.bit_count = static_cast<std::size_t>(std::bit_width(n));
    r.ones = static_cast<std::size_t>(std::popcount(n));
    r.zeros = r.bit_count - r.ones;
    r.recursion_count = depth;
    return r;
}

std::string ratio_text(const ProfileRecord& r) {
    if (r.ratio_infinite()) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", r.ratio());
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

double ProfileRecord::ratio() const {
    if (zeros == 0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(ones) / static_cast<double>(zeros);
}

std::size_t recursion_depth(const BitNat& n) {
    if (n.bit_len() <= kU64FastPathBits) return depth_u64(n.is_zero() ? 0 : n.to_u64());
    BitNat cur = n;
    std::size_t depth = 0;
    while (cur.bit_len() >= 2) {
        BaseSelection base = select_base(cur);
        cur = sub_signed(cur, shl(BitNat::from_u64(1), base.exponent)).magnitude;
        ++depth;
    }
    return depth;
}

std::vector<ProfileRecord> profile_range(const BitNat& lo, const BitNat& hi,
                                         const ProfileOptions& options) {
    if (cmp(lo, hi) == std::strong_ordering::greater)
        throw std::invalid_argument("profile_range: lo exceeds hi");
    SignedInt span = sub_signed(hi, lo);
    if (span.magnitude.bit_len() > 64)
        throw std::invalid_argument("profile_range: range exceeds corpus cap of " +
                                    std::to_string(options.corpus_cap) + " values");
    std::uint64_t count = span.magnitude.is_zero() ? 1 : span.magnitude.to_u64() + 1;
    if (count == 0 || count > options.corpus_cap)  // count wraps only at 2^64
        throw std::invalid_argument("profile_range: range exceeds corpus cap of " +
                                    std::to_string(options.corpus_cap) + " values");

    std::vector<ProfileRecord> records(count);
    unsigned jobs = effective_jobs(options.jobs, count);

    if (hi.bit_len() <= 31) {
        std::uint32_t lo_u = static_cast<std::uint32_t>(lo.is_zero() ? 0 : lo.to_u64());
        parallel_shards(count, jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
            std::vector<std::uint32_t> depths(end - begin);
            kernels::depth_range(lo_u + static_cast<std::uint32_t>(begin),
                                 static_cast<std::uint32_t>(end - begin), depths.data());
            for (std::uint64_t i = begin; i < end; ++i)
                records[i] = make_record_u64(lo_u + i, depths[i - begin]);
        });
        return records;
    }

    parallel_shards(count, jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        BitNat n = add(lo, BitNat::from_u64(begin));
        const BitNat one = BitNat::from_u64(1);
        for (std::uint64_t i = begin; i < end; ++i) {
            ProfileRecord r;
            r.n = n;
            r.bit_count = n.bit_len();
            r.ones = n.popcount();
            r.zeros = r.bit_count - r.ones;
            r.recursion_count = recursion_depth(n);
            records[i] = std::move(r);
            n = add(n, one);
        }
    });
    return records;
}

std::vector<CensusRow> census(std::size_t b_max, const ProfileOptions& options) {
    if (b_max < 2 || b_max > kCensusMaxBits)
        throw std::invalid_argument("census: b_max must be in 2.." +
                                    std::to_string(kCensusMaxBits));

    std::vector<CensusRow> rows;
    rows.reserve(b_max - 1);
    for (std::size_t b = 2; b <= b_max; ++b) {
        std::uint32_t first = std::uint32_t{1} << (b - 1);
        std::uint64_t total = std::uint64_t{1} << (b - 1);
        unsigned jobs = effective_jobs(options.jobs, total);

        std::vector<std::size_t> shard_worst(jobs, 0);
        std::vector<std::uint64_t> shard_count(jobs, 0);
        parallel_shards(total, jobs, [&](unsigned shard, std::uint64_t begin, std::uint64_t end) {
            constexpr std::uint64_t kBlock = 1 << 16;
            std::vector<std::uint32_t> depths(std::min(end - begin, kBlock));
            std::size_t worst = 0;
            std::uint64_t achievers = 0;
            for (std::uint64_t at = begin; at < end; at += kBlock) {
                std::uint32_t n = static_cast<std::uint32_t>(std::min(end - at, kBlock));
                kernels::depth_range(first + static_cast<std::uint32_t>(at), n, depths.data());
                for (std::uint32_t i = 0; i < n; ++i) {
                    if (depths[i] > worst) {
                        worst = depths[i];
                        achievers = 1;
                    } else if (depths[i] == worst) {
                        ++achievers;
                    }
                }
            }
            shard_worst[shard] = worst;
            shard_count[shard] = achievers;
        });

        CensusRow row;
        row.bit_count = b;
        row.corpus_size = total;
        row.worst_case_depth = *std::max_element(shard_worst.begin(), shard_worst.end());
        for (unsigned j = 0; j < jobs; ++j)
            if (shard_worst[j] == row.worst_case_depth)
                row.worst_case_cardinality += shard_count[j];
        rows.push_back(row);
    }
    return rows;
}

std::vector<RatioBucket> ratio_buckets(std::span<const ProfileRecord> records,
                                       std::size_t bucket_count) {
    if (records.empty()) throw std::invalid_argument("ratio_buckets: no records");
    if (bucket_count < 2) throw std::invalid_argument("ratio_buckets: need at least 2 buckets");

    const double width = 2.0 / static_cast<double>(bucket_count);
    std::vector<RatioBucket> buckets(bucket_count + 1);
    std::vector<double> sums(bucket_count + 1, 0.0);
    for (std::size_t i = 0; i < bucket_count; ++i) {
        buckets[i].lo = width * static_cast<double>(i);
        buckets[i].hi = width * static_cast<double>(i + 1);
    }
    buckets[bucket_count].overflow = true;
    buckets[bucket_count].lo = buckets[bucket_count].hi =
        std::numeric_limits<double>::infinity();

    for (const ProfileRecord& r : records) {
        std::size_t idx;
        if (r.ratio_infinite()) {
            idx = bucket_count;
        } else {
            double ratio = std::clamp(r.ratio(), 0.0, 2.0);
            idx = std::min(static_cast<std::size_t>(ratio / width), bucket_count - 1);
        }
        sums[idx] += static_cast<double>(r.recursion_count);
        ++buckets[idx].samples;
    }
    for (std::size_t i = 0; i <= bucket_count; ++i)
        if (buckets[i].samples > 0)
            buckets[i].mean_depth = sums[i] / static_cast<double>(buckets[i].samples);
    return buckets;
}

void emit_csv(std::span<const ProfileRecord> records, std::ostream& out,
              bool header) {
    if (header) out << "n,bit_len,ones,zeros,ratio,recursion_count\n";
    for (const ProfileRecord& r : records) {
        out << format(r.n, 10) << ',' << r.bit_count << ',' << r.ones << ','
            << r.zeros << ',' << ratio_text(r) << ',' << r.recursion_count << '\n';
    }
}

void emit_csv(std::span<const CensusRow> rows, std::ostream& out, bool header) {
    if (header) out << "b,corpus_size,worst_case_depth,worst_case_cardinality\n";
    for (const CensusRow& row : rows) {
        out << row.bit_count << ',' << row.corpus_size << ',' << row.worst_case_depth
            << ',' << row.worst_case_cardinality << '\n';
    }
}

}  // namespace nikhilam
