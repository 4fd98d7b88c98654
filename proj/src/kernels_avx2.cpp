#if defined(HYPERMATCH_HAVE_AVX2)

#include <immintrin.h>

#include "hypermatch/kernels.hpp"

namespace hypermatch::kernels {

namespace {

// Per-64-bit-lane popcount via the nibble lookup trick.
inline __m256i popcount64x4(__m256i v) {
    const __m256i lookup =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt8 = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                   _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt8, _mm256_setzero_si256());
}

std::size_t count_supersets_avx2(const uint64_t* masks, std::size_t count,
                                 std::size_t stride, const uint64_t* key) {
    if (stride != 1) return scalar_ops().count_supersets(masks, count, stride, key);
    const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key[0]));
    std::size_t c = 0, i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(m, k), k);
        c += std::size_t(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)))));
    }
    const uint64_t k0 = key[0];
    for (; i < count; ++i) c += (masks[i] & k0) == k0;
    return c;
}

std::size_t count_intersect_ge2_avx2(const uint64_t* masks, std::size_t count,
                                     std::size_t stride, const uint64_t* key) {
    if (stride != 1)
        return scalar_ops().count_intersect_ge2(masks, count, stride, key);
    const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key[0]));
    const __m256i one = _mm256_set1_epi64x(1);
    std::size_t c = 0, i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        __m256i pc = popcount64x4(_mm256_and_si256(m, k));
        __m256i ge2 = _mm256_cmpgt_epi64(pc, one);
        c += std::size_t(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(ge2)))));
    }
    const uint64_t k0 = key[0];
    for (; i < count; ++i) c += __builtin_popcountll(masks[i] & k0) >= 2;
    return c;
}

std::size_t count_disjoint_avx2(const uint64_t* masks, std::size_t count,
                                std::size_t stride, const uint64_t* key) {
    if (stride != 1) return scalar_ops().count_disjoint(masks, count, stride, key);
    const __m256i k = _mm256_set1_epi64x(static_cast<long long>(key[0]));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t c = 0, i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + i));
        __m256i eq = _mm256_cmpeq_epi64(_mm256_and_si256(m, k), zero);
        c += std::size_t(__builtin_popcount(
            static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)))));
    }
    const uint64_t k0 = key[0];
    for (; i < count; ++i) c += (masks[i] & k0) == 0;
    return c;
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{count_supersets_avx2, count_intersect_ge2_avx2,
                         count_disjoint_avx2, "avx2"};
    return &ops;
}

}  // namespace hypermatch::kernels

#endif  // HYPERMATCH_HAVE_AVX2
