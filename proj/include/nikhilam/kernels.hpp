#pragma once

#include <cstdint>

namespace nikhilam::kernels {

/// Recursion-depth range kernels: out[i] = number of base selections on the
/// chain n -> |n - base(n)| for n = first + i. Valid for values below 2^31.
/// The scalar kernel is the reference; SIMD variants must match it bit for
/// bit and are checked against it in the test suite.

void depth_range_scalar(std::uint32_t first, std::uint32_t count,
                        std::uint32_t* out);

bool avx2_available();

/// AVX2 variant, 8 lanes per step. Only callable when avx2_available().
void depth_range_avx2(std::uint32_t first, std::uint32_t count,
                      std::uint32_t* out);

enum class Backend { scalar, avx2 };

/// Backend the dispatcher resolved at first use: AVX2 when the CPU supports
/// it, unless NIKHILAM_KERNEL=scalar (or =avx2) overrides.
Backend active_backend();

const char* backend_name(Backend backend);

/// Dispatched entry point.
void depth_range(std::uint32_t first, std::uint32_t count, std::uint32_t* out);

}  // namespace nikhilam::kernels
