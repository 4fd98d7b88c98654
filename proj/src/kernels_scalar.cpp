#include "hypermatch/kernels.hpp"

#include <bit>

namespace hypermatch::kernels {

namespace {

std::size_t count_supersets_scalar(const uint64_t* masks, std::size_t count,
                                   std::size_t stride, const uint64_t* key) {
    std::size_t c = 0;
    if (stride == 1) {
        const uint64_t k0 = key[0];
        for (std::size_t i = 0; i < count; ++i) c += (masks[i] & k0) == k0;
        return c;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const uint64_t* m = masks + i * stride;
        bool ok = true;
        for (std::size_t w = 0; w < stride; ++w) ok &= (m[w] & key[w]) == key[w];
        c += ok;
    }
    return c;
}

std::size_t count_intersect_ge2_scalar(const uint64_t* masks, std::size_t count,
                                       std::size_t stride, const uint64_t* key) {
    std::size_t c = 0;
    if (stride == 1) {
        const uint64_t k0 = key[0];
        for (std::size_t i = 0; i < count; ++i)
            c += std::popcount(masks[i] & k0) >= 2;
        return c;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const uint64_t* m = masks + i * stride;
        int pc = 0;
        for (std::size_t w = 0; w < stride; ++w) pc += std::popcount(m[w] & key[w]);
        c += pc >= 2;
    }
    return c;
}

std::size_t count_disjoint_scalar(const uint64_t* masks, std::size_t count,
                                  std::size_t stride, const uint64_t* key) {
    std::size_t c = 0;
    if (stride == 1) {
        const uint64_t k0 = key[0];
        for (std::size_t i = 0; i < count; ++i) c += (masks[i] & k0) == 0;
        return c;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const uint64_t* m = masks + i * stride;
        uint64_t acc = 0;
        for (std::size_t w = 0; w < stride; ++w) acc |= m[w] & key[w];
        c += acc == 0;
    }
    return c;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{count_supersets_scalar, count_intersect_ge2_scalar,
                         count_disjoint_scalar, "scalar"};
    return ops;
}

}  // namespace hypermatch::kernels
