#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thick {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);

/// A monomial in named variables. Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::map<std::string, int>& exponents);
  static Monomial var(const std::string& name, int exp = 1);

  int degree(const std::string& var) const;
  int total_degree() const;
  bool is_one() const { return exps_.empty(); }
  const std::map<std::string, int>& exponents() const { return exps_; }
  std::set<std::string> support() const;

  bool divides(const Monomial& other) const;
  /// Exact quotient; requires divides(other) where *this = other * result.
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;
  Monomial without(const std::string& var) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string str() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::map<std::string, int> exps_;
};

/// Sparse polynomial over the rationals. No zero coefficients are stored.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT
  Poly(const Monomial& m, const Rational& c = 1);

  static Poly var(const std::string& name) { return Poly(Monomial::var(name)); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::set<std::string> variables() const;
  std::size_t size() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly pow(int k) const;
  Poly scaled(const Rational& c) const;

  /// Substitute polynomials for variables; unlisted variables stay.
  Poly substitute(const std::map<std::string, Poly>& images) const;
  Poly rename(const std::map<std::string, std::string>& names) const;

  /// Terms not involving `var` (i.e. the polynomial at var = 0).
  Poly at_zero(const std::string& var) const;
  /// Smallest exponent of `var` over the terms; 0 for the zero polynomial.
  int order_in(const std::string& var) const;
  int degree_in(const std::string& var) const;
  /// Largest monomial dividing every term (restricted to `vars` when given).
  Monomial monomial_content() const;
  Monomial monomial_content(const std::set<std::string>& vars) const;
  bool divisible_by(const Monomial& m) const;
  /// Termwise exact division; returns nullopt when some term is not divisible.
  std::optional<Poly> divide(const Monomial& m) const;
  Poly multiply(const Monomial& m) const;

  /// The single (coefficient, monomial) pair when this is a nonzero monomial.
  std::optional<std::pair<Rational, Monomial>> as_term() const;

  std::string str() const;

  bool operator==(const Poly&) const = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Parses the textual polynomial grammar: sums of `coeff*var^exp` products,
/// with rational coefficients `p/q` and parentheses.
Poly parse_poly(const std::string& text);

/// Quotient of two polynomials, kept with the common monomial and integer
/// content removed. Only monomial cancellation is performed.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The numerator divided by the (constant) denominator; only valid when is_polynomial().
  Poly as_poly() const;

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator+(const RationalFunction& o) const;

  std::string str() const;

  /// Equality as elements of the fraction field.
  bool operator==(const RationalFunction& o) const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

RationalFunction parse_rational_function(const std::string& text);

/// t-adic valuation: order_t(numerator) - order_t(denominator).
int valuation(const RationalFunction& a, const std::string& t);

}  // namespace thick
