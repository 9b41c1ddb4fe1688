#include <atomic>
#include <cstdlib>
#include <cstring>

#include "wahkon/simd/simd.hpp"

namespace wahkon::simd {
namespace {

std::atomic<const Ops*> g_active{nullptr};

const Ops* select_default() {
    if (const char* env = std::getenv("WAHKON_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return &avx2_ops();
        // anything else (including "auto") falls through to detection
    }
    return avx2_available() ? &avx2_ops() : &scalar_ops();
}

}  // namespace

const Ops& ops() {
    const Ops* p = g_active.load(std::memory_order_acquire);
    if (!p) {
        p = select_default();
        g_active.store(p, std::memory_order_release);
    }
    return *p;
}

void set_backend(Backend b) {
    switch (b) {
        case Backend::scalar:
            g_active.store(&scalar_ops(), std::memory_order_release);
            break;
        case Backend::avx2:
            g_active.store(avx2_available() ? &avx2_ops() : &scalar_ops(),
                           std::memory_order_release);
            break;
    }
}

}  // namespace wahkon::simd
