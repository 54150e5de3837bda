#include <atomic>

#include "kernels_internal.hpp"

namespace vitushkin::kernels {

namespace {

std::atomic<KernelLevel> g_level{KernelLevel::Auto};

bool cpu_has_avx2() {
#if defined(VITUSHKIN_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(VITUSHKIN_WITH_AVX2)
  static const bool available = cpu_has_avx2();
  return available ? &avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  switch (g_level.load(std::memory_order_relaxed)) {
    case KernelLevel::Scalar:
      return scalar_kernels();
    case KernelLevel::Auto:
    case KernelLevel::Avx2:
      if (const KernelTable* t = avx2_kernels()) return *t;
      return scalar_kernels();
  }
  return scalar_kernels();
}

void set_kernel_level(KernelLevel level) { g_level.store(level, std::memory_order_relaxed); }

}  // namespace vitushkin::kernels
