#include "vitushkin/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "vitushkin/errors.hpp"

namespace vitushkin {

namespace {

void check_section_dim(std::size_t s, std::size_t n) {
  if (s < 1 || s > n) {
    throw InputError("section dimension s=" + std::to_string(s) + " outside 1.." + std::to_string(n));
  }
}

// pi > 3.141592653589793238
const Rational& pi_lower() {
  static const Rational value = parse_rational("3141592653589793238/1000000000000000000");
  return value;
}

// Smallest integer c >= 0 with c^2 >= q.
BigInt ceil_sqrt(const Rational& q) {
  if (q <= 0) return 0;
  BigInt floor_q = q.get_num() / q.get_den();
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), floor_q.get_mpz_t());
  if (Rational(r * r) == q) return r;
  while (Rational(r * r) < q) ++r;
  return r;
}

BigInt two_pow(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace

LaurentDiagram make_laurent_diagram(const LatticePolytope& newton) {
  bool laurent = false;
  for (const auto& v : newton.vertices())
    for (auto c : v.coords)
      if (c < 0) laurent = true;
  return LaurentDiagram{newton.ambient_dim(), newton, laurent, std::nullopt};
}

unsigned QuasiPolyDiagram::max_degree() const {
  return degrees.empty() ? 0u : *std::max_element(degrees.begin(), degrees.end());
}

QuasiPolyDiagram make_quasi_diagram(std::size_t n, std::vector<unsigned> degrees,
                                    std::vector<std::vector<double>> freq) {
  if (n < 1) throw InputError("dimension must be positive");
  if (degrees.empty()) throw InputError("quasi-polynomial needs at least one term");
  if (degrees.size() != freq.size()) throw InputError("degrees and frequencies have different lengths");
  for (const auto& b : freq) {
    if (b.size() != n) throw InputError("frequency vector has the wrong dimension");
    for (double x : b)
      if (!std::isfinite(x)) throw InputError("non-finite frequency");
  }
  QuasiPolyDiagram d;
  d.n = n;
  d.k = degrees.size();
  d.kappa = d.k * (d.k + 1) / 2;
  d.degrees = std::move(degrees);
  d.freq = std::move(freq);
  d.lambda_squared = 0;
  for (std::size_t i = 0; i < d.k; ++i) {
    for (std::size_t j = i + 1; j < d.k; ++j) {
      Rational sq = 0;
      for (std::size_t c = 0; c < n; ++c) {
        Rational diff = exact_from_double(d.freq[i][c]) - exact_from_double(d.freq[j][c]);
        sq += diff * diff;
      }
      d.lambda_squared = std::max(d.lambda_squared, sq);
    }
  }
  d.lambda = std::sqrt(d.lambda_squared.get_d());
  return d;
}

BoundPair chat_bezout(const PolyDiagram& diag, std::size_t s) {
  check_section_dim(s, diag.n);
  if (diag.degree < 1) throw InputError("degree must be positive");
  const unsigned us = static_cast<unsigned>(s);
  BoundPair b;
  b.paper_bound = diag.degree > s ? Rational(pow(BigInt(diag.degree - us), us)) : Rational(0);
  b.safe_bound = Rational(pow(BigInt(diag.degree - 1), us));
  b.degenerate = b.paper_bound == 0 && b.paper_bound < b.safe_bound;
  return b;
}

BoundPair chat_multidegree(const MultiDegreeDiagram& diag, std::size_t s) {
  check_section_dim(s, diag.n);
  if (diag.degree < 1) throw InputError("degree must be positive");
  const unsigned us = static_cast<unsigned>(s);
  BigInt ds = pow(BigInt(diag.degree), us);
  BigInt fact = factorial(us);
  BoundPair b;
  b.paper_bound = Rational(ds, fact);
  b.paper_bound.canonicalize();
  b.safe_bound = Rational(fact * ds);
  // A nondegenerate quadratic (x^2, or the all-pairs multilinear form for s >= 2)
  // realises one critical point, so a printed value below 1 is contradicted.
  b.degenerate = b.paper_bound < 1 && b.safe_bound >= 1;
  return b;
}

BoundPair chat_newton(const LaurentDiagram& diag, std::size_t s) {
  check_section_dim(s, diag.n);
  if (diag.newton.ambient_dim() != diag.n) throw InputError("Newton polytope dimension differs from n");
  Rational cs = c_s_profile(diag.newton, s, diag.orthant_clip()).value;
  Rational fact(factorial(static_cast<unsigned>(s)));
  BoundPair b;
  b.paper_bound = cs / fact;
  b.safe_bound = cs * fact;
  return b;
}

Rational bk_count_bound(const LatticePolytope& n) {
  return Rational(factorial(static_cast<unsigned>(n.ambient_dim()))) * ambient_volume(n);
}

BigInt khovanskii_system_bound(std::span<const unsigned> m, unsigned k, unsigned p) {
  BigInt product = 1;
  unsigned long sum = 0;
  for (unsigned mi : m) {
    product *= mi;
    sum += mi;
  }
  const unsigned long pk = static_cast<unsigned long>(p) + k;
  BigInt base = BigInt(static_cast<unsigned long>(sum + p + 1));
  return product * pow(base, static_cast<unsigned>(pk)) * two_pow(p + pk * (pk == 0 ? 0 : pk - 1) / 2);
}

BoundPair chat_quasipoly(const QuasiPolyDiagram& diag, std::size_t s, double cube_side) {
  check_section_dim(s, diag.n);
  if (!(cube_side >= 0.0) || !std::isfinite(cube_side)) throw InputError("cube side must be a nonnegative number");
  const unsigned us = static_cast<unsigned>(s);
  const unsigned long kappa = diag.kappa;

  // (sum + 2 kappa + 1)^(2 kappa) * 2^(kappa + 2 kappa (2 kappa - 1) / 2)
  auto khovanskii_tail = [&](const std::vector<unsigned>& m) -> BigInt {
    BigInt product = 1;
    unsigned long sum = 0;
    for (unsigned x : m) {
      product *= x;
      sum += x;
    }
    BigInt base(sum + 2 * kappa + 1);
    return product * pow(base, static_cast<unsigned>(2 * kappa)) * two_pow(kappa + kappa * (2 * kappa - 1));
  };

  const unsigned default_sum = 2 * diag.max_degree();
  std::vector<unsigned> paper_m(s, default_sum);
  for (std::size_t r = 0; r < s && r < diag.equation_degree_sums.size(); ++r) paper_m[r] = diag.equation_degree_sums[r];
  std::vector<unsigned> safe_m(s, default_sum + 1);

  const double cover = std::pow(2.0 / std::numbers::pi * std::sqrt(static_cast<double>(s)) * cube_side * diag.lambda,
                                static_cast<double>(s));

  // Rigorous ceiling of (2/pi) sqrt(s) side lambda via its square and a lower bound on pi.
  Rational side = exact_from_double(cube_side);
  Rational cover_sq_upper = Rational(4 * s) * side * side * diag.lambda_squared / (pi_lower() * pi_lower());
  BigInt safe_cover = pow(ceil_sqrt(cover_sq_upper), us);
  if (safe_cover < 1) safe_cover = 1;

  BoundPair b;
  b.paper_bound = exact_from_double(cover) * Rational(khovanskii_tail(paper_m));
  b.safe_bound = Rational(safe_cover * khovanskii_tail(safe_m));
  b.degenerate = diag.lambda_squared == 0 ||
                 std::any_of(paper_m.begin(), paper_m.end(), [](unsigned x) { return x == 0; });
  return b;
}

BoundPair chat_exponential(const ExpoPolyDiagram& diag, double interval_length) {
  if (diag.n != 1) throw InputError("exponential polynomials are univariate (n must be 1)");
  if (!(interval_length > 0.0) || !std::isfinite(interval_length)) throw InputError("interval length must be positive");
  if (!(diag.lambda_hat >= 0.0) || !std::isfinite(diag.lambda_hat)) throw InputError("lambda_hat must be nonnegative");
  BoundPair b;
  if (diag.real_coeffs) {
    b.paper_bound = diag.m;
  } else {
    b.paper_bound = Rational(4 * diag.m) + 7 * exact_from_double(diag.lambda_hat) * exact_from_double(interval_length);
  }
  b.safe_bound = b.paper_bound;
  return b;
}

Rational chat_semialgebraic(const SemialgebraicDiagram& diag, std::size_t l) {
  check_section_dim(l, diag.n);
  if (diag.degs.empty()) throw InputError("semialgebraic diagram needs at least one union member");
  Rational sum = 0;
  for (const auto& row : diag.degs) {
    if (row.empty()) throw InputError("every union member needs at least one inequality");
    unsigned long d = 0;
    for (unsigned x : row) {
      if (x < 1) throw InputError("inequality degrees must be positive");
      d += x;
    }
    sum += Rational(BigInt(d + 2) * pow(BigInt(d + 1), static_cast<unsigned>(l - 1)));
  }
  return sum / 2;
}

}  // namespace vitushkin
