// Compiled with -mavx2; only reached when the dispatcher has confirmed support.

#include "flagbetti/kernels.hpp"

#if defined(FLAGBETTI_HAVE_AVX2_TU)

#include <immintrin.h>

namespace flagbetti::kernels::avx2 {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

// x = dst + factor*src stays below 2^24 for p <= 4093, so x is exact in float
// and the float quotient is off by at most one; the two compares fix that up.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    if (p > kSimdModulusLimit) {
        scalar::axpy_mod(dst, src, factor, p);
        return;
    }
    const std::size_t n = dst.size();
    const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
    const __m256i zero = _mm256_setzero_si256();
    const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        __m256i x = _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(_mm256_loadu_si256(s), vf));
        __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), vinv));
        __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), vp));
        r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
        r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
        _mm256_storeu_si256(d, r);
    }
    const std::uint64_t f = factor;
    for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
}

} // namespace flagbetti::kernels::avx2

#endif
