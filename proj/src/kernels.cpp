#include "hypermatch/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace hypermatch::kernels {

#if defined(HYPERMATCH_HAVE_AVX2)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(HYPERMATCH_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
    return nullptr;
}

namespace {

const Ops* startup_selection() {
    const char* env = std::getenv("HYPERMATCH_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
    if (env && std::strcmp(env, "avx2") == 0) {
        if (const Ops* v = avx2_ops()) return v;
        return &scalar_ops();  // requested but unavailable
    }
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
}

std::atomic<const Ops*> g_forced{nullptr};

}  // namespace

const Ops& active_ops() {
    if (const Ops* f = g_forced.load(std::memory_order_relaxed)) return *f;
    static const Ops* selected = startup_selection();
    return *selected;
}

void force_ops(const Ops* ops) { g_forced.store(ops, std::memory_order_relaxed); }

}  // namespace hypermatch::kernels
