#include "jorb/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace jorb {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = big_gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("Rational: empty literal");
  auto slash = t.find('/');
  if (slash != std::string::npos)
    return Rational(BigInt(t.substr(0, slash)), BigInt(t.substr(slash + 1)));
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < t.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  }
  return Rational(BigInt(t), 1);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

Poly Poly::monomial(Rational c, int power) {
  std::vector<Rational> v(static_cast<size_t>(power) + 1);
  v[static_cast<size_t>(power)] = std::move(c);
  return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

int Poly::low_order() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Poly Poly::shifted_down(int k) const {
  if (k == 0) return *this;
  std::vector<Rational> v(coeffs_.begin() + k, coeffs_.end());
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x = x * c;
  return Poly(std::move(v));
}

Rational Poly::eval(const Rational& s) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i].str();
    if (i == 1) os << "*s";
    if (i > 1) os << "*s^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0);
  Rational lead = b.coeff(b.degree());
  for (int d = a.degree(); d >= b.degree(); --d) {
    Rational c = (static_cast<size_t>(d) < rem.size() ? rem[static_cast<size_t>(d)] : Rational(0)) / lead;
    if (c.is_zero()) continue;
    quot[static_cast<size_t>(d - b.degree())] = c;
    for (int i = 0; i <= b.degree(); ++i)
      rem[static_cast<size_t>(d - b.degree() + i)] =
          rem[static_cast<size_t>(d - b.degree() + i)] - c * b.coeff(i);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.coeff(a.degree()));
}

RationalZ RationalZ::make(int prefactor, Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("RationalZ: zero denominator");
  if (num.is_zero()) {
    RationalZ z;
    return z;
  }
  int ln = num.low_order();
  int ld = den.low_order();
  prefactor += ln - ld;
  num = num.shifted_down(ln);
  den = den.shifted_down(ld);
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = poly_divmod(num, g).first;
    den = poly_divmod(den, g).first;
  }
  // monic denominator
  Rational inv = Rational(1) / den.coeff(den.degree());
  num = num.scaled(inv);
  den = den.scaled(inv);
  RationalZ z;
  z.prefactor_ = prefactor;
  z.num_ = std::move(num);
  z.den_ = std::move(den);
  return z;
}

RationalZ RationalZ::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("RationalZ: reciprocal of zero");
  return make(-prefactor_, den_, num_);
}

RationalZ operator+(const RationalZ& a, const RationalZ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int p = std::min(a.prefactor_, b.prefactor_);
  Poly sa = Poly::monomial(Rational(1), a.prefactor_ - p);
  Poly sb = Poly::monomial(Rational(1), b.prefactor_ - p);
  return RationalZ::make(p, a.num_ * sa * b.den_ + b.num_ * sb * a.den_, a.den_ * b.den_);
}

RationalZ operator-(const RationalZ& a, const RationalZ& b) {
  return a + RationalZ::make(b.prefactor_, b.num_.scaled(Rational(-1)), b.den_);
}

RationalZ operator*(const RationalZ& a, const RationalZ& b) {
  if (a.is_zero() || b.is_zero()) return RationalZ();
  return RationalZ::make(a.prefactor_ + b.prefactor_, a.num_ * b.num_, a.den_ * b.den_);
}

RationalZ operator/(const RationalZ& a, const RationalZ& b) { return a * b.reciprocal(); }

bool operator==(const RationalZ& a, const RationalZ& b) {
  return a.prefactor_ == b.prefactor_ && a.num_ == b.num_ && a.den_ == b.den_;
}

Rational RationalZ::eval(const Rational& s) const {
  Rational v = num_.eval(s) / den_.eval(s);
  int p = prefactor_;
  Rational sp(1);
  for (int i = 0; i < std::abs(p); ++i) sp = sp * s;
  return p >= 0 ? v * sp : v / sp;
}

std::string RationalZ::str() const {
  std::ostringstream os;
  if (prefactor_ != 0) os << "s^" << prefactor_ << " * ";
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

namespace {

struct ExprParser {
  const std::string& text;
  const std::map<std::string, Rational>& vars;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Rational parse_sum() {
    Rational v = parse_product();
    for (;;) {
      if (eat('+')) v = v + parse_product();
      else if (eat('-')) v = v - parse_product();
      else return v;
    }
  }

  Rational parse_product() {
    Rational v = parse_atom();
    for (;;) {
      if (eat('*')) v = v * parse_atom();
      else if (eat('/')) v = v / parse_atom();
      else return v;
    }
  }

  Rational parse_atom() {
    skip();
    if (eat('(')) {
      Rational v = parse_sum();
      if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
      return v;
    }
    if (eat('-')) return -parse_atom();
    size_t start = pos;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
        ++pos;
      return Rational::parse(text.substr(start, pos - start));
    }
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    if (start == pos) throw std::invalid_argument("expression: unexpected character");
    std::string name = text.substr(start, pos - start);
    auto it = vars.find(name);
    if (it == vars.end()) throw std::invalid_argument("expression: unknown variable " + name);
    return it->second;
  }
};

}  // namespace

Rational eval_expression(const std::string& text, const std::map<std::string, Rational>& vars) {
  ExprParser p{text, vars};
  Rational v = p.parse_sum();
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("expression: trailing characters");
  return v;
}

}  // namespace jorb
