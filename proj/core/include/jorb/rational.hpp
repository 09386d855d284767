#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace jorb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always normalized with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT implicit
  Rational(BigInt n, BigInt d);

  /// "3", "-4/7", "2.5"
  static Rational parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const;

private:
  BigInt num_;
  BigInt den_;
};

/// Dense polynomial in s over the rationals; trailing zero coefficients are
/// trimmed. The zero polynomial has empty coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(Rational c);
  static Poly monomial(Rational c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  int low_order() const;
  Poly shifted_down(int k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly scaled(const Rational& c) const;
  Rational eval(const Rational& s) const;
  std::string str() const;

private:
  std::vector<Rational> coeffs_;
};

/// Remainder-based gcd, normalized monic. gcd of anything with zero is the
/// other argument.
Poly poly_gcd(Poly a, Poly b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Z(s) = s^prefactor * num(s) / den(s) with num(0) != 0, den(0) != 0,
/// num/den coprime, and a positive leading denominator coefficient.
class RationalZ {
public:
  RationalZ() : prefactor_(0), num_(Poly::constant(Rational(0))), den_(Poly::constant(Rational(1))) {}
  static RationalZ make(int prefactor, Poly num, Poly den);
  static RationalZ constant(const Rational& c) { return make(0, Poly::constant(c), Poly::constant(1)); }

  bool is_zero() const { return num_.is_zero(); }
  int prefactor() const { return prefactor_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  RationalZ reciprocal() const;
  friend RationalZ operator+(const RationalZ& a, const RationalZ& b);
  friend RationalZ operator-(const RationalZ& a, const RationalZ& b);
  friend RationalZ operator*(const RationalZ& a, const RationalZ& b);
  friend RationalZ operator/(const RationalZ& a, const RationalZ& b);
  friend bool operator==(const RationalZ& a, const RationalZ& b);

  Rational eval(const Rational& s) const;
  std::string str() const;

private:
  int prefactor_;
  Poly num_;
  Poly den_;
};

/// Tiny arithmetic-expression evaluator for parameter maps: numbers,
/// variables, + - * /, parentheses.
Rational eval_expression(const std::string& text, const std::map<std::string, Rational>& vars);

}  // namespace jorb
