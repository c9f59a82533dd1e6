#include "sf/simd_kernels.hpp"

#if defined(SF_HAVE_AVX2_TU) && defined(__x86_64__)

#include <immintrin.h>

namespace sf::kern {

namespace {

// Barrett step: r = v mod p for v < 2^31, using m = floor(2^32 / p).
// qhat = mulhi(v, m) is floor(v/p) or one less, so one conditional
// subtract finishes the reduction. All lanes stay below 2^31, which keeps
// the signed 32-bit compare valid.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i lo = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  const __m256i hi_masked =
      _mm256_and_si256(hi, _mm256_set1_epi64x((long long)0xFFFFFFFF00000000ULL));
  return _mm256_blend_epi32(lo, hi_masked, 0b10101010);
}

inline __m256i barrett_mod(__m256i v, __m256i pv, __m256i mv) {
  __m256i q = mulhi_epu32(v, mv);
  __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, pv));
  __m256i ge = _mm256_cmpgt_epi32(pv, r);       // r < p ?
  __m256i adj = _mm256_andnot_si256(ge, pv);    // subtract p where r >= p
  return _mm256_sub_epi32(r, adj);
}

void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  const uint32_t m = uint32_t(0x100000000ULL / p);
  const __m256i cv = _mm256_set1_epi32(int(c));
  const __m256i pv = _mm256_set1_epi32(int(p));
  const __m256i mv = _mm256_set1_epi32(int(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i xv = _mm256_loadu_si256((const __m256i*)(x + i));
    __m256i yv = _mm256_loadu_si256((const __m256i*)(y + i));
    __m256i v = _mm256_add_epi32(yv, _mm256_mullo_epi32(cv, xv));
    _mm256_storeu_si256((__m256i*)(y + i), barrett_mod(v, pv, mv));
  }
  for (; i < n; ++i) y[i] = (y[i] + c * x[i]) % p;
}

void scale_avx2(uint32_t* y, uint32_t c, size_t n, uint32_t p) {
  const uint32_t m = uint32_t(0x100000000ULL / p);
  const __m256i cv = _mm256_set1_epi32(int(c));
  const __m256i pv = _mm256_set1_epi32(int(p));
  const __m256i mv = _mm256_set1_epi32(int(m));
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i yv = _mm256_loadu_si256((const __m256i*)(y + i));
    __m256i v = _mm256_mullo_epi32(cv, yv);
    _mm256_storeu_si256((__m256i*)(y + i), barrett_mod(v, pv, mv));
  }
  for (; i < n; ++i) y[i] = (c * y[i]) % p;
}

}  // namespace

const Kernels* avx2_kernels() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Kernels k = {"avx2", axpy_avx2, scale_avx2};
  return &k;
}

}  // namespace sf::kern

#else

namespace sf::kern {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace sf::kern

#endif
