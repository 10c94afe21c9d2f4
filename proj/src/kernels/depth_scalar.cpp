#include <bit>
#include <cstdint>

#include "nikhilam/kernels.hpp"

namespace nikhilam::kernels {

void depth_range_scalar(std::uint32_t first, std::uint32_t count,
                        std::uint32_t* out) {
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uint32_t n = first + i;
        std::uint32_t depth = 0;
        while (n >= 2) {
            unsigned width = static_cast<unsigned>(std::bit_width(n));
            std::uint32_t msb = std::uint32_t{1} << (width - 1);
            // second MSB set: base 2^width overshoots; clear otherwise
            n = (n & (msb >> 1)) ? (msb << 1) - n : n - msb;
            ++depth;
        }
        out[i] = depth;
    }
}

}  // namespace nikhilam::kernels
