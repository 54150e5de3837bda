#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "vitushkin/diagram.hpp"
#include "vitushkin/polytope.hpp"
#include "vitushkin/rational.hpp"

namespace vitushkin {

struct Monomial {
  Rational coeff;
  std::vector<std::int32_t> exps;
};

/// Finite sum of (Laurent) monomials with exact coefficients. Terms are kept
/// merged, nonzero and sorted by exponent vector.
class MonomialSum {
 public:
  explicit MonomialSum(std::size_t n = 1);
  MonomialSum(std::size_t n, std::vector<Monomial> terms);

  static MonomialSum constant(std::size_t n, const Rational& c);
  /// The coordinate function x_i (0-based).
  static MonomialSum variable(std::size_t n, std::size_t i);

  std::size_t n() const { return n_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_negative_exponents() const;
  unsigned total_degree() const;
  unsigned max_variable_degree() const;

  /// Double-precision value; throws DomainError at a pole.
  double eval(std::span<const double> x) const;

  friend MonomialSum operator+(const MonomialSum& a, const MonomialSum& b);
  friend MonomialSum operator-(const MonomialSum& a, const MonomialSum& b);
  friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b);
  friend MonomialSum operator*(const Rational& c, const MonomialSum& a);
  friend bool operator==(const MonomialSum& a, const MonomialSum& b);

 private:
  void normalize();

  std::size_t n_;
  std::vector<Monomial> terms_;
};

/// Flattened copy of a MonomialSum in the layout the evaluation kernels expect.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MonomialSum& p);
  std::size_t n() const { return n_; }
  std::size_t terms() const { return coeff_.size(); }
  const double* coeff() const { return coeff_.data(); }
  const std::int32_t* exps() const { return exps_.data(); }

 private:
  std::size_t n_;
  std::vector<double> coeff_;
  std::vector<std::int32_t> exps_;
};

/// One summand p_j(x) e^{<a_j, x>} (cos <b_j, x> + i sin <b_j, x>).
struct QuasiTerm {
  MonomialSum poly;
  std::vector<double> a;
  std::vector<double> b;
};

class QuasiPoly {
 public:
  QuasiPoly(std::size_t n, std::vector<QuasiTerm> terms);
  std::size_t n() const { return n_; }
  const std::vector<QuasiTerm>& terms() const { return terms_; }
  std::complex<double> eval(std::span<const double> x) const;
  /// (Re p)^2 + (Im p)^2
  double squared_modulus(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<QuasiTerm> terms_;
};

struct ExpoTerm {
  std::complex<double> c;
  std::complex<double> lambda;
};

/// Univariate sum of c_k e^{lambda_k t}.
class ExpoPoly {
 public:
  explicit ExpoPoly(std::vector<ExpoTerm> terms);
  const std::vector<ExpoTerm>& terms() const { return terms_; }
  std::complex<double> eval(double t) const;
  bool real_coefficients() const;

 private:
  std::vector<ExpoTerm> terms_;
};

/// A real-valued function on a unit cube together with its sub-level threshold.
///
/// The cube is [origin, origin + 1]^n; origin is 0 except for Laurent
/// polynomials, which are sampled on a cube shifted off the coordinate
/// hyperplanes.
class RealFunction {
 public:
  using Custom = std::function<double(std::span<const double>)>;

  static RealFunction polynomial(MonomialSum p, double rho);
  static RealFunction quasi_squared_modulus(QuasiPoly p, double rho);
  static RealFunction expo_modulus(ExpoPoly p, double rho);
  static RealFunction custom(std::size_t n, Custom f, double rho);

  std::size_t n() const { return n_; }
  double rho() const { return rho_; }
  double origin() const { return origin_; }
  void set_origin(double origin) { origin_ = origin; }

  const MonomialSum* polynomial_part() const;

  double eval(std::span<const double> x) const;

  /// Evaluates at `count` points given as n coordinate arrays. Monomial sums
  /// go through the active SIMD kernel; other kinds are evaluated pointwise.
  void eval_batch(const double* const* coords, std::size_t count, double* out) const;

 private:
  struct QuasiModulus {
    QuasiPoly p;
  };
  struct ExpoModulus {
    ExpoPoly p;
  };
  struct Poly {
    MonomialSum p;
    std::shared_ptr<const CompiledPoly> compiled;
  };

  RealFunction(std::size_t n, double rho) : n_(n), rho_(rho) {}

  std::size_t n_;
  double rho_;
  double origin_ = 0.0;
  std::variant<Poly, QuasiModulus, ExpoModulus, Custom> body_;
};

/// Default cube offset for functions with negative exponents.
inline constexpr double kLaurentOrigin = 0.125;

LatticePolytope newton_polytope(const MonomialSum& p);

QuasiPolyDiagram derive_q_diagram(const QuasiPoly& p);

struct ExpoDegree {
  unsigned m = 0;
  double lambda_hat = 0.0;
};

ExpoDegree degree(const ExpoPoly& p);

ExpoPolyDiagram make_expo_diagram(const ExpoPoly& p);

}  // namespace vitushkin
