#include "vitushkin/funceval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "vitushkin/errors.hpp"
#include "vitushkin/kernels/kernels.hpp"

namespace vitushkin {

// MonomialSum

MonomialSum::MonomialSum(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxDimension) throw InputError("polynomial dimension must be between 1 and 8");
}

MonomialSum::MonomialSum(std::size_t n, std::vector<Monomial> terms) : MonomialSum(n) {
  for (const auto& t : terms) {
    if (t.exps.size() != n) throw InputError("monomial exponent vector has the wrong length");
  }
  terms_ = std::move(terms);
  normalize();
}

void MonomialSum::normalize() {
  std::map<std::vector<std::int32_t>, Rational> merged;
  for (auto& t : terms_) merged[t.exps] += t.coeff;
  terms_.clear();
  for (auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({c, e});
  }
}

MonomialSum MonomialSum::constant(std::size_t n, const Rational& c) {
  return MonomialSum(n, {{c, std::vector<std::int32_t>(n, 0)}});
}

MonomialSum MonomialSum::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw InputError("variable index out of range");
  std::vector<std::int32_t> e(n, 0);
  e[i] = 1;
  return MonomialSum(n, {{Rational(1), e}});
}

bool MonomialSum::has_negative_exponents() const {
  for (const auto& t : terms_)
    for (auto e : t.exps)
      if (e < 0) return true;
  return false;
}

unsigned MonomialSum::total_degree() const {
  long best = 0;
  for (const auto& t : terms_) {
    long d = 0;
    for (auto e : t.exps) d += e;
    best = std::max(best, d);
  }
  return static_cast<unsigned>(best);
}

unsigned MonomialSum::max_variable_degree() const {
  std::int32_t best = 0;
  for (const auto& t : terms_)
    for (auto e : t.exps) best = std::max(best, e);
  return static_cast<unsigned>(best);
}

double MonomialSum::eval(std::span<const double> x) const {
  if (x.size() != n_) throw InputError("evaluation point has the wrong dimension");
  CompiledPoly compiled(*this);
  std::vector<const double*> coords(n_);
  for (std::size_t j = 0; j < n_; ++j) coords[j] = &x[j];
  kernels::PolyView view{n_, compiled.terms(), compiled.coeff(), compiled.exps()};
  double out = 0.0;
  if (!kernels::scalar_kernels().eval_poly(view, coords.data(), 1, &out)) {
    throw DomainError("Laurent polynomial evaluated on a coordinate hyperplane");
  }
  return out;
}

MonomialSum operator+(const MonomialSum& a, const MonomialSum& b) {
  if (a.n_ != b.n_) throw InputError("adding polynomials of different dimension");
  std::vector<Monomial> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return MonomialSum(a.n_, std::move(t));
}

MonomialSum operator-(const MonomialSum& a, const MonomialSum& b) { return a + Rational(-1) * b; }

MonomialSum operator*(const Rational& c, const MonomialSum& a) {
  std::vector<Monomial> t = a.terms_;
  for (auto& m : t) m.coeff *= c;
  return MonomialSum(a.n_, std::move(t));
}

MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
  if (a.n_ != b.n_) throw InputError("multiplying polynomials of different dimension");
  std::vector<Monomial> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Monomial m{x.coeff * y.coeff, x.exps};
      for (std::size_t j = 0; j < a.n_; ++j) m.exps[j] += y.exps[j];
      t.push_back(std::move(m));
    }
  }
  return MonomialSum(a.n_, std::move(t));
}

bool operator==(const MonomialSum& a, const MonomialSum& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].exps != b.terms_[i].exps) return false;
  }
  return true;
}

CompiledPoly::CompiledPoly(const MonomialSum& p) : n_(p.n()) {
  coeff_.reserve(p.terms().size());
  exps_.reserve(p.terms().size() * n_);
  for (const auto& t : p.terms()) {
    coeff_.push_back(t.coeff.get_d());
    exps_.insert(exps_.end(), t.exps.begin(), t.exps.end());
  }
}

// QuasiPoly

QuasiPoly::QuasiPoly(std::size_t n, std::vector<QuasiTerm> terms) : n_(n), terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("quasi-polynomial needs at least one term");
  for (const auto& t : terms_) {
    if (t.poly.n() != n || t.a.size() != n || t.b.size() != n) {
      throw InputError("quasi-polynomial term has the wrong dimension");
    }
    if (t.poly.has_negative_exponents()) throw InputError("quasi-polynomial coefficients must be ordinary polynomials");
  }
}

std::complex<double> QuasiPoly::eval(std::span<const double> x) const {
  if (x.size() != n_) throw InputError("evaluation point has the wrong dimension");
  double re = 0.0;
  double im = 0.0;
  for (const auto& t : terms_) {
    double ax = 0.0;
    double bx = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      ax += t.a[j] * x[j];
      bx += t.b[j] * x[j];
    }
    const double mag = t.poly.eval(x) * std::exp(ax);
    re += mag * std::cos(bx);
    im += mag * std::sin(bx);
  }
  return {re, im};
}

double QuasiPoly::squared_modulus(std::span<const double> x) const {
  const std::complex<double> v = eval(x);
  return v.real() * v.real() + v.imag() * v.imag();
}

// ExpoPoly

ExpoPoly::ExpoPoly(std::vector<ExpoTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("exponential polynomial needs at least one term");
}

std::complex<double> ExpoPoly::eval(double t) const {
  std::complex<double> acc = 0.0;
  for (const auto& term : terms_) acc += term.c * std::exp(term.lambda * t);
  return acc;
}

bool ExpoPoly::real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const ExpoTerm& t) { return t.c.imag() == 0.0 && t.lambda.imag() == 0.0; });
}

// RealFunction

RealFunction RealFunction::polynomial(MonomialSum p, double rho) {
  RealFunction f(p.n(), rho);
  if (p.has_negative_exponents()) f.origin_ = kLaurentOrigin;
  auto compiled = std::make_shared<const CompiledPoly>(p);
  f.body_ = Poly{std::move(p), std::move(compiled)};
  return f;
}

RealFunction RealFunction::quasi_squared_modulus(QuasiPoly p, double rho) {
  RealFunction f(p.n(), rho);
  f.body_ = QuasiModulus{std::move(p)};
  return f;
}

RealFunction RealFunction::expo_modulus(ExpoPoly p, double rho) {
  RealFunction f(1, rho);
  f.body_ = ExpoModulus{std::move(p)};
  return f;
}

RealFunction RealFunction::custom(std::size_t n, Custom fn, double rho) {
  if (n < 1 || n > kMaxDimension) throw InputError("dimension must be between 1 and 8");
  RealFunction f(n, rho);
  f.body_ = std::move(fn);
  return f;
}

const MonomialSum* RealFunction::polynomial_part() const {
  if (auto* p = std::get_if<Poly>(&body_)) return &p->p;
  return nullptr;
}

double RealFunction::eval(std::span<const double> x) const {
  if (x.size() != n_) throw InputError("evaluation point has the wrong dimension");
  return std::visit(
      [&](const auto& body) -> double {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Poly>) {
          return body.p.eval(x);
        } else if constexpr (std::is_same_v<T, QuasiModulus>) {
          return body.p.squared_modulus(x);
        } else if constexpr (std::is_same_v<T, ExpoModulus>) {
          return std::abs(body.p.eval(x[0]));
        } else {
          return body(x);
        }
      },
      body_);
}

void RealFunction::eval_batch(const double* const* coords, std::size_t count, double* out) const {
  if (const auto* poly = std::get_if<Poly>(&body_)) {
    const CompiledPoly& c = *poly->compiled;
    kernels::PolyView view{c.n(), c.terms(), c.coeff(), c.exps()};
    if (!kernels::active_kernels().eval_poly(view, coords, count, out)) {
      throw DomainError("Laurent polynomial evaluated on a coordinate hyperplane");
    }
    return;
  }
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n_; ++j) x[j] = coords[j][i];
    out[i] = eval(x);
  }
}

// Diagram extraction

LatticePolytope newton_polytope(const MonomialSum& p) {
  if (p.is_zero()) throw InputError("zero polynomial has no Newton polytope");
  std::vector<LatticePoint> pts;
  pts.reserve(p.terms().size());
  for (const auto& t : p.terms()) pts.emplace_back(std::vector<std::int64_t>(t.exps.begin(), t.exps.end()));
  return convex_hull(pts);
}

QuasiPolyDiagram derive_q_diagram(const QuasiPoly& p) {
  std::vector<unsigned> degrees;
  std::vector<std::vector<double>> freq;
  for (const auto& t : p.terms()) {
    degrees.push_back(t.poly.total_degree());
    freq.push_back(t.b);
  }
  return make_quasi_diagram(p.n(), std::move(degrees), std::move(freq));
}

ExpoDegree degree(const ExpoPoly& p) {
  ExpoDegree d;
  d.m = static_cast<unsigned>(p.terms().size() - 1);
  for (const auto& t : p.terms()) d.lambda_hat = std::max(d.lambda_hat, std::abs(t.lambda));
  return d;
}

ExpoPolyDiagram make_expo_diagram(const ExpoPoly& p) {
  ExpoDegree d = degree(p);
  ExpoPolyDiagram diag;
  diag.n = 1;
  diag.m = d.m;
  diag.lambda_hat = d.lambda_hat;
  diag.real_coeffs = p.real_coefficients();
  return diag;
}

}  // namespace vitushkin
