#pragma once

#include <map>
#include <ostream>
#include <string>

#include "intgeo/rational.hpp"

namespace intgeo {

// Element of Q[pi, 1/pi]: finite sum of rational multiples of integer powers
// of a formal pi. No zero coefficients are stored.
class Scalar {
 public:
  using TermMap = std::map<int, Rational>;

  Scalar() = default;
  Scalar(const Rational& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
  Scalar(long c) : Scalar(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Scalar(int c) : Scalar(Rational(c)) {}    // NOLINT(google-explicit-constructor)

  static Scalar pi_power(int m, const Rational& c = Rational(1));

  const TermMap& terms() const { return terms_; }
  Rational coefficient(int pi_pow) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_single_term() const { return terms_.size() == 1; }
  // Requires is_single_term().
  int single_pi_pow() const;
  const Rational& single_coefficient() const;
  // Rational value; throws unless is_rational().
  Rational to_rational() const;

  Scalar inverse() const;
  double to_double() const;
  std::string to_string() const;
  std::string to_latex() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const Rational& r);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const Rational& b) { return a *= b; }
  friend Scalar operator*(const Rational& b, Scalar a) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

  Scalar pow(int e) const;

 private:
  void set(int m, const Rational& c);
  void add_term(int m, const Rational& c);
  TermMap terms_;
};

// Polynomial in a formal curvature variable lambda over Scalar.
class LambdaScalar {
 public:
  using TermMap = std::map<int, Scalar>;

  LambdaScalar() = default;
  LambdaScalar(const Scalar& c);    // NOLINT(google-explicit-constructor)
  LambdaScalar(const Rational& c) : LambdaScalar(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  LambdaScalar(long c) : LambdaScalar(Scalar(c)) {}   // NOLINT(google-explicit-constructor)
  LambdaScalar(int c) : LambdaScalar(Scalar(c)) {}    // NOLINT(google-explicit-constructor)

  static LambdaScalar lambda_power(int k, const Scalar& c = Scalar(1));

  const TermMap& terms() const { return terms_; }
  Scalar coefficient(int lambda_pow) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  Scalar evaluate(const Rational& lambda) const;
  // Drops every lambda power above max_pow.
  LambdaScalar truncated(int max_pow) const;
  std::string to_string() const;
  std::string to_latex() const;

  // Only single-term lambda^0 values are invertible.
  LambdaScalar inverse() const;

  LambdaScalar operator-() const;
  LambdaScalar& operator+=(const LambdaScalar& o);
  LambdaScalar& operator-=(const LambdaScalar& o);
  LambdaScalar& operator*=(const LambdaScalar& o);
  LambdaScalar& operator*=(const Rational& r);

  friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
  friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar& b) { return a -= b; }
  friend LambdaScalar operator*(LambdaScalar a, const LambdaScalar& b) { return a *= b; }
  friend LambdaScalar operator*(LambdaScalar a, const Rational& b) { return a *= b; }
  friend LambdaScalar operator*(const Rational& b, LambdaScalar a) { return a *= b; }

  friend bool operator==(const LambdaScalar& a, const LambdaScalar& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const LambdaScalar& s) { return os << s.to_string(); }

 private:
  void add_term(int k, const Scalar& c);
  TermMap terms_;
};

// Volume of the unit k-ball, pi^(k/2)/Gamma(1+k/2), an element of Q*pi^floor(k/2).
Scalar omega(int k);
// (k+1) * omega(k+1).
Scalar alpha(int k);

}  // namespace intgeo
