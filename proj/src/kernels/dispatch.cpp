#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "nikhilam/kernels.hpp"

namespace nikhilam::kernels {

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

Backend resolve_backend() {
    if (const char* env = std::getenv("NIKHILAM_KERNEL")) {
        std::string_view want(env);
        if (want == "scalar") return Backend::scalar;
        if (want == "avx2") {
            if (!avx2_available())
                throw std::runtime_error("NIKHILAM_KERNEL=avx2: CPU lacks AVX2");
            return Backend::avx2;
        }
        throw std::runtime_error("NIKHILAM_KERNEL: unknown backend '" + std::string(want) + "'");
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

Backend active_backend() {
    static const Backend backend = resolve_backend();
    return backend;
}

const char* backend_name(Backend backend) {
    return backend == Backend::avx2 ? "avx2" : "scalar";
}

void depth_range(std::uint32_t first, std::uint32_t count, std::uint32_t* out) {
    static const auto fn =
        active_backend() == Backend::avx2 ? depth_range_avx2 : depth_range_scalar;
    fn(first, count, out);
}

}  // namespace nikhilam::kernels
