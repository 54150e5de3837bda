#include <immintrin.h>

#include "kernels_internal.hpp"

namespace vitushkin::kernels {

namespace {

bool eval_poly_avx2(const PolyView& poly, const double* const* coords, std::size_t count, double* out) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d pole = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d acc = zero;
    for (std::size_t t = 0; t < poly.terms; ++t) {
      __m256d v = _mm256_set1_pd(poly.coeff[t]);
      const std::int32_t* e = poly.exps + t * poly.n;
      for (std::size_t j = 0; j < poly.n; ++j) {
        if (e[j] == 0) continue;
        const __m256d x = _mm256_loadu_pd(coords[j] + i);
        const std::int32_t k = e[j] < 0 ? -e[j] : e[j];
        __m256d pw = x;
        for (std::int32_t r = 1; r < k; ++r) pw = _mm256_mul_pd(pw, x);
        if (e[j] > 0) {
          v = _mm256_mul_pd(v, pw);
        } else {
          pole = _mm256_or_pd(pole, _mm256_cmp_pd(x, zero, _CMP_EQ_OQ));
          v = _mm256_div_pd(v, pw);
        }
      }
      acc = _mm256_add_pd(acc, v);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  bool ok = _mm256_movemask_pd(pole) == 0;
  for (; i < count; ++i) ok = detail::eval_poly_point(poly, coords, i, out[i]) && ok;
  return ok;
}

void threshold_avx2(const double* values, std::size_t count, double rho, std::uint8_t* mask) {
  const __m256d r = _mm256_set1_pd(rho);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(values + i), r, _CMP_LE_OQ));
    mask[i] = static_cast<std::uint8_t>(bits & 1);
    mask[i + 1] = static_cast<std::uint8_t>((bits >> 1) & 1);
    mask[i + 2] = static_cast<std::uint8_t>((bits >> 2) & 1);
    mask[i + 3] = static_cast<std::uint8_t>((bits >> 3) & 1);
  }
  for (; i < count; ++i) mask[i] = values[i] <= rho ? 1 : 0;
}

}  // namespace

const KernelTable& avx2_kernels_unchecked() {
  static const KernelTable table{"avx2", eval_poly_avx2, threshold_avx2};
  return table;
}

}  // namespace vitushkin::kernels
