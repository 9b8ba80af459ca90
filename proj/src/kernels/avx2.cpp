// Compiled with -mavx2 -mfma. Only reached through the dispatch table after a
// runtime CPU check.
#include "qtop/kernels.hpp"

#include <immintrin.h>

namespace qtop::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

// Two complex values per register, interleaved [re0, im0, re1, im1].
//   acc_re lanes hold ar*br and ai*bi, which all add into the real part.
//   acc_im lanes hold ar*bi and ai*br; imag = sum(odd) - sum(even).
cplx conj_dot(const cplx* a, const cplx* b, std::size_t n) noexcept {
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);

  __m256d acc_re0 = _mm256_setzero_pd();
  __m256d acc_im0 = _mm256_setzero_pd();
  __m256d acc_re1 = _mm256_setzero_pd();
  __m256d acc_im1 = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
    acc_re0 = _mm256_fmadd_pd(va0, vb0, acc_re0);
    acc_re1 = _mm256_fmadd_pd(va1, vb1, acc_re1);
    acc_im0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), acc_im0);
    acc_im1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), acc_im1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re0 = _mm256_fmadd_pd(va, vb, acc_re0);
    acc_im0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im0);
  }

  const __m256d acc_re = _mm256_add_pd(acc_re0, acc_re1);
  const __m256d acc_im = _mm256_add_pd(acc_im0, acc_im1);
  const __m256d sign = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);

  double re = hsum(acc_re);
  double im = hsum(_mm256_mul_pd(acc_im, sign));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
  }
  return {re, im};
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

}  // namespace qtop::kernels::avx2
