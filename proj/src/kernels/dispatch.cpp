#include "qtop/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qtop::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(QTOP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && \
    (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable kScalar{"scalar", &scalar::conj_dot, &scalar::xor_words};

#if defined(QTOP_HAVE_AVX2)
const KernelTable kAvx2{"avx2", &avx2::conj_dot, &avx2::xor_words};
#endif

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("QTOP_KERNELS"); forced && std::strcmp(forced, "scalar") == 0) {
    return kScalar;
  }
  if (const KernelTable* t = avx2_table()) return *t;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(QTOP_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace qtop::kernels
