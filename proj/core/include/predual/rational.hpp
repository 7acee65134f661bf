#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace predual {

/// Exact rational scalar. Every quantity on a result path (norms, bounds,
/// radii, orbit displacements) is a Rational; no floating point enters core
/// computations. Stored in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT: implicit by design
  Rational(long n) : v_(n) {}   // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("invalid rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p" or "p/q" (optional sign on either part). Throws
  /// std::invalid_argument on malformed text or zero denominator.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational abs() const {
    Rational r(*this);
    if (sign() < 0) r.v_ = -r.v_;
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("invalid rational: division by zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  /// Exact serialization: "p/q", or "p" when the denominator is 1.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Display-only decimal approximation; never used in computations.
  double approx() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("invalid rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

inline Rational Rational::parse(const std::string& text) {
  // Validate shape by hand so error messages stay crisp; GMP would accept
  // whitespace and other bases.
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(text)) throw std::invalid_argument("invalid rational: '" + text + "'");
    return Rational(mpq_class(mpz_class(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("invalid rational: '" + text + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("invalid rational: '" + text + "' has zero denominator");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rational(q);
}

}  // namespace predual
