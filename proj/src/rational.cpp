#include "vitushkin/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "vitushkin/errors.hpp"

namespace vitushkin {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("not an integer: '" + std::string(s) + "'");
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    BigInt ez = parse_integer(s.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 4096) throw InputError("exponent out of range: " + std::string(s));
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw InputError("malformed number: " + std::string(s));
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("malformed number: " + std::string(s));
    }
  }
  if (digits.empty()) throw InputError("malformed number: " + std::string(s));
  Rational q{BigInt(digits, 10)};
  long shift = exponent - frac_digits;
  BigInt ten = 10;
  if (shift >= 0) {
    q *= pow(ten, static_cast<unsigned>(shift));
  } else {
    q /= pow(ten, static_cast<unsigned>(-shift));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator: " + std::string(text));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value");
  Rational q(x);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) {
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 40);
  if (digits.empty()) return 0.0;
  bool negative = digits.front() == '-';
  if (negative) digits.erase(0, 1);
  std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace vitushkin
