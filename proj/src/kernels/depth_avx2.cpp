#include <cstdint>

#include "nikhilam/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace nikhilam::kernels {

// 8 values per vector; each lane runs the chain n -> |n - base(n)| until it
// drops below 2, masked out once done. Valid for values below 2^31.
void depth_range_avx2(std::uint32_t first, std::uint32_t count,
                      std::uint32_t* out) {
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i exp_bias = _mm256_set1_epi32(127);
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

    std::uint32_t i = 0;
    for (; i + 8 <= count; i += 8) {
        __m256i v = _mm256_add_epi32(
            _mm256_set1_epi32(static_cast<int>(first + i)), lane);
        __m256i depth = zero;
        __m256i active = _mm256_cmpgt_epi32(v, one);

        while (_mm256_movemask_epi8(active)) {
            // floor(log2 v) via the float exponent: exact below 2^24, at most
            // one too high after rounding above that, fixed by the overshoot
            // halving
            __m256i fbits = _mm256_castps_si256(_mm256_cvtepi32_ps(v));
            __m256i k = _mm256_sub_epi32(_mm256_srli_epi32(fbits, 23), exp_bias);
            __m256i msb = _mm256_sllv_epi32(one, k);
            __m256i overshoot = _mm256_cmpgt_epi32(msb, v);
            msb = _mm256_blendv_epi8(msb, _mm256_srli_epi32(msb, 1), overshoot);

            __m256i second = _mm256_and_si256(v, _mm256_srli_epi32(msb, 1));
            __m256i second_set = _mm256_cmpgt_epi32(second, zero);
            // base 2^width = msb*2 when the second MSB is set (modular wrap at
            // 2^31 still yields the right difference), else base = msb
            __m256i next_hi = _mm256_sub_epi32(_mm256_slli_epi32(msb, 1), v);
            __m256i next_lo = _mm256_sub_epi32(v, msb);
            __m256i next = _mm256_blendv_epi8(next_lo, next_hi, second_set);

            v = _mm256_blendv_epi8(v, next, active);
            depth = _mm256_sub_epi32(depth, active);  // active lanes are -1
            active = _mm256_cmpgt_epi32(v, one);
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), depth);
    }
    if (i < count) depth_range_scalar(first + i, count - i, out + i);
}

}  // namespace nikhilam::kernels

#else  // !__x86_64__

#include <stdexcept>

namespace nikhilam::kernels {

void depth_range_avx2(std::uint32_t, std::uint32_t, std::uint32_t*) {
    throw std::runtime_error("depth_range_avx2: not built for this architecture");
}

}  // namespace nikhilam::kernels

#endif
