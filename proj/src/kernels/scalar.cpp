#include "qtop/kernels.hpp"

namespace qtop::kernels::scalar {

cplx conj_dot(const cplx* a, const cplx* b, std::size_t n) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

}  // namespace qtop::kernels::scalar
