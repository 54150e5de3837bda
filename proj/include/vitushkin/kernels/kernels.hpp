#pragma once

// Data-parallel inner loops of the sampling engine.
//
// Every kernel exists as a portable scalar reference and, where the build and
// the CPU allow it, an AVX2 variant. Variants perform the same IEEE operations
// in the same order (no FMA contraction), so their outputs are bit-identical;
// the test suite checks this directly.

#include <cstddef>
#include <cstdint>

namespace vitushkin::kernels {

/// A monomial sum flattened for evaluation: `terms` rows of `n` exponents.
struct PolyView {
  std::size_t n = 0;
  std::size_t terms = 0;
  const double* coeff = nullptr;
  const std::int32_t* exps = nullptr;  // row-major, terms x n
};

/// Evaluates the polynomial at `count` points given as n coordinate arrays
/// (coords[v][i] is coordinate v of point i). Returns false when a negative
/// exponent met a zero coordinate; `out` is then unspecified at those points.
using EvalPolyFn = bool (*)(const PolyView& poly, const double* const* coords, std::size_t count, double* out);

/// mask[i] = values[i] <= rho ? 1 : 0 (NaN compares false).
using ThresholdFn = void (*)(const double* values, std::size_t count, double rho, std::uint8_t* mask);

struct KernelTable {
  const char* name;
  EvalPolyFn eval_poly;
  ThresholdFn threshold;
};

enum class KernelLevel { Auto, Scalar, Avx2 };

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table selected by the current level (Auto picks the widest available).
const KernelTable& active_kernels();

/// Pins the dispatch level; requesting an unavailable level falls back to scalar.
void set_kernel_level(KernelLevel level);

}  // namespace vitushkin::kernels
