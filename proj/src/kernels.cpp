#include "rydgate/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace rydgate::kern {

#if defined(RYDGATE_BUILD_AVX2)
const Ops* avx2_ops_impl();
#endif

bool avx2_available() {
#if defined(RYDGATE_BUILD_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* avx2_ops() {
#if defined(RYDGATE_BUILD_AVX2)
    if (avx2_available()) return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {

std::atomic<const Ops*> g_active{nullptr};

const Ops* select_default() {
    const char* env = std::getenv("RYDGATE_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
    if (env && std::strcmp(env, "avx2") == 0) {
        if (const Ops* ops = avx2_ops()) return ops;
        throw std::runtime_error("RYDGATE_SIMD=avx2 requested but AVX2 is unavailable");
    }
    if (const Ops* ops = avx2_ops()) return ops;
    return &scalar_ops();
}

}  // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = select_default();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force(const char* name) {
    if (std::strcmp(name, "scalar") == 0) {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return;
    }
    if (std::strcmp(name, "avx2") == 0) {
        if (const Ops* ops = avx2_ops()) {
            g_active.store(ops, std::memory_order_release);
            return;
        }
        throw std::runtime_error("AVX2 kernels unavailable on this machine");
    }
    if (std::strcmp(name, "auto") == 0) {
        g_active.store(nullptr, std::memory_order_release);
        return;
    }
    throw std::invalid_argument("unknown kernel set: " + std::string(name));
}

}  // namespace rydgate::kern
