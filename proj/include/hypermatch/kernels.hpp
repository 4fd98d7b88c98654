#pragma once

#include <cstddef>
#include <cstdint>

namespace hypermatch::kernels {

// Bulk predicates over packed edge bitmasks. `masks` holds `count` edges of
// `stride` words each, laid out contiguously; `key` is one mask of `stride`
// words. These are the inner loops of degree counting and matching search,
// so they exist in a scalar reference form and a runtime-selected AVX2 form.
struct Ops {
    // #i with (masks[i] & key) == key
    std::size_t (*count_supersets)(const uint64_t* masks, std::size_t count,
                                   std::size_t stride, const uint64_t* key);
    // #i with popcount(masks[i] & key) >= 2
    std::size_t (*count_intersect_ge2)(const uint64_t* masks, std::size_t count,
                                       std::size_t stride, const uint64_t* key);
    // #i with (masks[i] & key) == 0
    std::size_t (*count_disjoint)(const uint64_t* masks, std::size_t count,
                                  std::size_t stride, const uint64_t* key);
    const char* name;
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported by CPU or build

// The implementation selected at startup: AVX2 when the CPU supports it,
// overridable with HYPERMATCH_KERNELS=scalar|avx2.
const Ops& active_ops();

// Test hook; pass nullptr to restore startup selection.
void force_ops(const Ops* ops);

inline std::size_t count_supersets(const uint64_t* masks, std::size_t count,
                                   std::size_t stride, const uint64_t* key) {
    return active_ops().count_supersets(masks, count, stride, key);
}
inline std::size_t count_intersect_ge2(const uint64_t* masks, std::size_t count,
                                       std::size_t stride, const uint64_t* key) {
    return active_ops().count_intersect_ge2(masks, count, stride, key);
}
inline std::size_t count_disjoint(const uint64_t* masks, std::size_t count,
                                  std::size_t stride, const uint64_t* key) {
    return active_ops().count_disjoint(masks, count, stride, key);
}

}  // namespace hypermatch::kernels
