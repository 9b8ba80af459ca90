#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qtop::kernels {

using cplx = std::complex<double>;

/// Sum of a[i] * conj(b[i]) over the common length.
using ConjDotFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
/// dst[i] ^= src[i] for i < words.
using XorFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

struct KernelTable {
  std::string_view name;
  ConjDotFn conj_dot;
  XorFn xor_words;
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table() noexcept;

/// Table chosen once per process: AVX2 when available, scalar otherwise.
/// Setting QTOP_KERNELS=scalar in the environment forces the reference path.
const KernelTable& active() noexcept;

inline cplx conj_dot(std::span<const cplx> a, std::span<const cplx> b) noexcept {
  return active().conj_dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
  active().xor_words(dst.data(), src.data(), dst.size() < src.size() ? dst.size() : src.size());
}

namespace scalar {
cplx conj_dot(const cplx* a, const cplx* b, std::size_t n) noexcept;
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
}  // namespace scalar

#if defined(QTOP_HAVE_AVX2)
namespace avx2 {
cplx conj_dot(const cplx* a, const cplx* b, std::size_t n) noexcept;
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) noexcept;
}  // namespace avx2
#endif

}  // namespace qtop::kernels
