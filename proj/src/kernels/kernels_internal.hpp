#pragma once

#include "vitushkin/kernels/kernels.hpp"

namespace vitushkin::kernels {

#if defined(VITUSHKIN_WITH_AVX2)
const KernelTable& avx2_kernels_unchecked();
#endif

namespace detail {

// Reference evaluation of one point. The AVX2 kernel mirrors this operation
// sequence lane by lane and uses it for tails.
// Internal linkage: each translation unit keeps a copy built for its own ISA.
static inline bool eval_poly_point(const PolyView& poly, const double* const* coords, std::size_t i, double& out) {
  bool ok = true;
  double acc = 0.0;
  for (std::size_t t = 0; t < poly.terms; ++t) {
    double v = poly.coeff[t];
    const std::int32_t* e = poly.exps + t * poly.n;
    for (std::size_t j = 0; j < poly.n; ++j) {
      if (e[j] == 0) continue;
      const double x = coords[j][i];
      const std::int32_t k = e[j] < 0 ? -e[j] : e[j];
      double pw = x;
      for (std::int32_t r = 1; r < k; ++r) pw = pw * x;
      if (e[j] > 0) {
        v = v * pw;
      } else {
        if (x == 0.0) ok = false;
        v = v / pw;
      }
    }
    acc = acc + v;
  }
  out = acc;
  return ok;
}

}  // namespace detail
}  // namespace vitushkin::kernels
