#include "kernels_internal.hpp"

namespace vitushkin::kernels {

namespace {

bool eval_poly_scalar(const PolyView& poly, const double* const* coords, std::size_t count, double* out) {
  bool ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    ok = detail::eval_poly_point(poly, coords, i, out[i]) && ok;
  }
  return ok;
}

void threshold_scalar(const double* values, std::size_t count, double rho, std::uint8_t* mask) {
  for (std::size_t i = 0; i < count; ++i) mask[i] = values[i] <= rho ? 1 : 0;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", eval_poly_scalar, threshold_scalar};
  return table;
}

}  // namespace vitushkin::kernels
