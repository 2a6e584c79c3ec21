#include "tscm/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TSCM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define TSCM_HAVE_AVX2_KERNELS 0
#endif

namespace tscm::kernels {

#if TSCM_HAVE_AVX2_KERNELS
namespace {

// Per-lane attribute difference for four attributes starting at the masks.
__attribute__((target("avx2"))) inline __m256d lane_difference(__m256d va, __m256d vb,
                                                               __m256d num_mask,
                                                               __m256d bin_mask) {
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d num = _mm256_sub_pd(va, vb);
    const __m256d both_set =
        _mm256_and_pd(_mm256_cmp_pd(va, ones, _CMP_EQ_OQ), _mm256_cmp_pd(vb, ones, _CMP_EQ_OQ));
    const __m256d bin = _mm256_andnot_pd(both_set, ones);
    const __m256d cat = _mm256_andnot_pd(_mm256_cmp_pd(va, vb, _CMP_EQ_OQ), ones);
    return _mm256_blendv_pd(_mm256_blendv_pd(cat, bin, bin_mask), num, num_mask);
}

__attribute__((target("avx2"))) double weighted_sq_distance_avx2(const double* a,
                                                                 const double* b,
                                                                 const double* w,
                                                                 const DiffLayout& layout) {
    const std::size_t r = layout.size();
    const double* num_mask = layout.numerical_mask();
    const double* bin_mask = layout.binary_mask();

    __m256d acc = _mm256_setzero_pd();
    std::size_t t = 0;
    for (; t + 4 <= r; t += 4) {
        const __m256d d =
            lane_difference(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t),
                            _mm256_loadu_pd(num_mask + t), _mm256_loadu_pd(bin_mask + t));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + t), _mm256_mul_pd(d, d)));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    double sum = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));

    for (; t < r; ++t) {
        const double d = attribute_difference(layout.kind(t), a[t], b[t]);
        sum += w[t] * d * d;
    }
    return sum;
}

__attribute__((target("avx2"))) void accumulate_sq_diff_avx2(const double* a, const double* b,
                                                             const DiffLayout& layout,
                                                             double* acc) {
    const std::size_t r = layout.size();
    const double* num_mask = layout.numerical_mask();
    const double* bin_mask = layout.binary_mask();

    std::size_t t = 0;
    for (; t + 4 <= r; t += 4) {
        const __m256d d =
            lane_difference(_mm256_loadu_pd(a + t), _mm256_loadu_pd(b + t),
                            _mm256_loadu_pd(num_mask + t), _mm256_loadu_pd(bin_mask + t));
        _mm256_storeu_pd(acc + t, _mm256_add_pd(_mm256_loadu_pd(acc + t), _mm256_mul_pd(d, d)));
    }
    for (; t < r; ++t) {
        const double d = attribute_difference(layout.kind(t), a[t], b[t]);
        acc[t] += d * d;
    }
}

}  // namespace

const KernelTable* avx2_table() {
    static const bool supported = __builtin_cpu_supports("avx2");
    static const KernelTable table{Isa::avx2, "avx2", &weighted_sq_distance_avx2,
                                   &accumulate_sq_diff_avx2};
    return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace tscm::kernels
