#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vitushkin/polytope.hpp"
#include "vitushkin/rational.hpp"

namespace vitushkin {

/// A component-count constant in two flavours.
///
/// `paper_bound` is the printed closed form; `safe_bound` comes from the
/// classical counting theorem behind it and is the one verification gates
/// on. `degenerate` marks inputs where the printed form falls below a known
/// witness (it evaluates to something smaller than a count that is realised
/// by an explicit function of the class).
struct BoundPair {
  Rational paper_bound;
  Rational safe_bound;
  bool degenerate = false;

  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

struct PolyDiagram {
  std::size_t n = 1;
  unsigned degree = 1;
};

struct MultiDegreeDiagram {
  std::size_t n = 1;
  unsigned degree = 1;  // per-variable bound
};

struct LaurentDiagram {
  std::size_t n = 1;
  LatticePolytope newton;
  bool laurent = false;  // true if some exponent is negative

  /// Clip shifted hulls to the nonnegative orthant; defaults to !laurent.
  bool orthant_clip() const { return clip_override.value_or(!laurent); }
  std::optional<bool> clip_override;
};

LaurentDiagram make_laurent_diagram(const LatticePolytope& newton);

struct QuasiPolyDiagram {
  std::size_t n = 1;
  std::size_t k = 1;
  std::vector<unsigned> degrees;            // d_j per exponential term
  std::vector<std::vector<double>> freq;    // b_j, one n-vector per term
  std::size_t kappa = 1;                    // k(k+1)/2
  double lambda = 0.0;                      // max_{i,j} |b_i - b_j|
  Rational lambda_squared;                  // exact square of lambda from the binary inputs

  /// Optional per-equation degree sums m_r for the product term. When absent
  /// (or shorter than s) each missing entry defaults to 2 max_j d_j.
  std::vector<unsigned> equation_degree_sums;

  unsigned pair_degree_sum(std::size_t i, std::size_t j) const { return degrees.at(i) + degrees.at(j); }
  unsigned max_degree() const;
};

/// Fills k, kappa, lambda and lambda_squared from degrees and frequencies.
QuasiPolyDiagram make_quasi_diagram(std::size_t n, std::vector<unsigned> degrees,
                                    std::vector<std::vector<double>> freq);

struct ExpoPolyDiagram {
  std::size_t n = 1;
  unsigned m = 0;
  double lambda_hat = 0.0;
  bool real_coeffs = false;
};

struct SemialgebraicDiagram {
  std::size_t n = 1;
  std::vector<std::vector<unsigned>> degs;  // row i holds d_ij, j < j_i

  std::size_t k() const { return degs.size(); }
};

/// Bezout-type constant for a degree-d polynomial: (d-s)^s printed, (d-1)^s safe.
BoundPair chat_bezout(const PolyDiagram& diag, std::size_t s);

/// Multi-degree d: d^s/s! printed, s! d^s safe.
BoundPair chat_multidegree(const MultiDegreeDiagram& diag, std::size_t s);

/// Newton polytope form: C_s(N)/s! printed, s! C_s(N) safe.
BoundPair chat_newton(const LaurentDiagram& diag, std::size_t s);

/// n! Vol_n(N); zero for lower-dimensional N.
Rational bk_count_bound(const LatticePolytope& n);

/// m_1...m_n (sum m_i + p + 1)^(p+k) 2^(p + (p+k)(p+k-1)/2), exactly.
BigInt khovanskii_system_bound(std::span<const unsigned> m, unsigned k, unsigned p);

/// Critical-point constant for |quasi-polynomial|^2 on a cube of side `cube_side`.
/// The printed variant contains 2/pi and sqrt(s) and is stored as the exact value of
/// its double-precision evaluation; the safe variant is an exact integer.
BoundPair chat_quasipoly(const QuasiPolyDiagram& diag, std::size_t s, double cube_side);

/// Zero count for a univariate exponential polynomial on an interval.
BoundPair chat_exponential(const ExpoPolyDiagram& diag, double interval_length);

/// (1/2) sum_i (d_i + 2)(d_i + 1)^(l-1) with d_i the row sums.
Rational chat_semialgebraic(const SemialgebraicDiagram& diag, std::size_t l);

}  // namespace vitushkin
