#include "modhowe/simd/kernels.hpp"

#if defined(MODHOWE_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace modhowe::simd::avx2 {

#if defined(MODHOWE_HAVE_AVX2)

bool available() {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return ok;
}

std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target) {
  const std::uint16_t* ptr = values.data();
  const std::size_t n = values.size();
  const __m256i needle = _mm256_set1_epi16(static_cast<short>(target));
  std::uint64_t total = 0;
  std::size_t i = 0;
  // 16 lanes per load; the movemask has two bits per 16-bit lane.
  for (; i + 64 <= n; i += 64) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr + i + 16));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr + i + 32));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr + i + 48));
    const auto ma = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, needle)));
    const auto mb = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(b, needle)));
    const auto mc = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(c, needle)));
    const auto md = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(d, needle)));
    total += static_cast<std::uint64_t>(__builtin_popcount(ma) + __builtin_popcount(mb) +
                                        __builtin_popcount(mc) + __builtin_popcount(md)) >> 1;
  }
  for (; i + 16 <= n; i += 16) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr + i));
    const auto m = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, needle)));
    total += static_cast<std::uint64_t>(__builtin_popcount(m)) >> 1;
  }
  for (; i < n; ++i) total += (ptr[i] == target);
  return total;
}

void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p) {
  const std::size_t n = dst.size();
  std::uint8_t* out = dst.data();
  const std::uint8_t* in = src.data();
  // v = dst + factor*src <= 15 + 15*15 < 2^8, computed in 16-bit lanes.
  // floor(v / p) = (v * ceil(2^16 / p)) >> 16 is exact for v < 256 and p < 16.
  const __m256i vf = _mm256_set1_epi16(factor);
  const __m256i vp = _mm256_set1_epi16(p);
  const __m256i magic = _mm256_set1_epi16(static_cast<short>((65536 + p - 1) / p));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i d = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(out + i)));
    const __m256i s = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i)));
    const __m256i v = _mm256_add_epi16(d, _mm256_mullo_epi16(s, vf));
    const __m256i quot = _mm256_mulhi_epu16(v, magic);
    const __m256i rem = _mm256_sub_epi16(v, _mm256_mullo_epi16(quot, vp));
    const __m256i packed = _mm256_packus_epi16(rem, rem);
    const __m256i ordered = _mm256_permute4x64_epi64(packed, 0b1000);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm256_castsi256_si128(ordered));
  }
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>((out[i] + factor * in[i]) % p);
}

#else

bool available() { return false; }

std::uint64_t count_equal(std::span<const std::uint16_t> values, std::uint16_t target) {
  return scalar::count_equal(values, target);
}

void axpy_mod(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src,
              std::uint8_t factor, std::uint8_t p) {
  scalar::axpy_mod(dst, src, factor, p);
}

#endif

}  // namespace modhowe::simd::avx2
