#include "intgeo/scalar.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "intgeo/errors.hpp"

namespace intgeo {

namespace {

// Renders c * base^m with base "π" or "\pi".
std::string render_term(const Rational& c, int m, const std::string& base, bool latex) {
  std::string power;
  int am = std::abs(m);
  if (am == 1) {
    power = base;
  } else if (am > 1) {
    power = latex ? base + "^{" + std::to_string(am) + "}" : base + "^" + std::to_string(am);
  }
  Rational a = c.sign() < 0 ? -c : c;
  std::string sign = c.sign() < 0 ? "-" : "";
  std::string num = a.num().get_str();
  std::string den = a.den().get_str();
  if (m >= 0) {
    if (m == 0) {
      if (latex && !a.is_integer()) return sign + "\\frac{" + num + "}{" + den + "}";
      return sign + a.to_string();
    }
    if (a.is_one()) return sign + power;
    if (a.is_integer()) return sign + num + power;
    if (latex) return sign + "\\frac{" + num + "}{" + den + "}" + power;
    return sign + "(" + a.to_string() + ")" + power;
  }
  std::string d = den == "1" ? power : den + power;
  if (latex) return sign + "\\frac{" + num + "}{" + d + "}";
  if (den == "1" && am == 1) return sign + num + "/" + power;
  return sign + num + "/(" + d + ")";
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (!p.empty() && p[0] == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::pi_power(int m, const Rational& c) {
  Scalar s;
  s.set(m, c);
  return s;
}

void Scalar::set(int m, const Rational& c) {
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void Scalar::add_term(int m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Scalar::coefficient(int pi_pow) const {
  auto it = terms_.find(pi_pow);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Scalar::single_pi_pow() const {
  if (!is_single_term()) throw UnsupportedInverse("scalar is not a single pi-power term: " + to_string());
  return terms_.begin()->first;
}

const Rational& Scalar::single_coefficient() const {
  if (!is_single_term()) throw UnsupportedInverse("scalar is not a single pi-power term: " + to_string());
  return terms_.begin()->second;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + to_string());
  return coefficient(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!is_single_term()) throw UnsupportedInverse("inverse of multi-term scalar " + to_string());
  return pi_power(-terms_.begin()->first, terms_.begin()->second.inverse());
}

double Scalar::to_double() const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c.to_double() * std::pow(std::numbers::pi, m);
  return acc;
}

std::string Scalar::to_string() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    parts.push_back(render_term(it->second, it->first, "π", false));
  }
  return join_terms(parts);
}

std::string Scalar::to_latex() const {
  std::vector<std::string> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    parts.push_back(render_term(it->second, it->first, "\\pi", true));
  }
  return join_terms(parts);
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

LambdaScalar::LambdaScalar(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LambdaScalar LambdaScalar::lambda_power(int k, const Scalar& c) {
  if (k < 0) throw DomainError("negative lambda power");
  LambdaScalar r;
  r.add_term(k, c);
  return r;
}

void LambdaScalar::add_term(int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar LambdaScalar::coefficient(int lambda_pow) const {
  auto it = terms_.find(lambda_pow);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar LambdaScalar::evaluate(const Rational& lambda) const {
  Scalar acc;
  for (const auto& [k, c] : terms_) acc += c * lambda.pow(k);
  return acc;
}

LambdaScalar LambdaScalar::truncated(int max_pow) const {
  LambdaScalar r;
  for (const auto& [k, c] : terms_) {
    if (k <= max_pow) r.terms_.emplace(k, c);
  }
  return r;
}

LambdaScalar LambdaScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (terms_.size() != 1 || terms_.begin()->first != 0) {
    throw UnsupportedInverse("inverse of non-constant lambda polynomial " + to_string());
  }
  return LambdaScalar(terms_.begin()->second.inverse());
}

namespace {

std::string lambda_factor(int k, bool latex) {
  if (k == 0) return "";
  std::string l = latex ? "\\lambda" : "λ";
  if (k == 1) return l;
  return latex ? l + "^{" + std::to_string(k) + "}" : l + "^" + std::to_string(k);
}

}  // namespace

std::string LambdaScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string part = k == 0 ? c.to_string() : "(" + c.to_string() + ")" + lambda_factor(k, false);
    out += out.empty() ? part : " + " + part;
  }
  return out;
}

std::string LambdaScalar::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string part = k == 0 ? c.to_latex() : "\\left(" + c.to_latex() + "\\right)" + lambda_factor(k, true);
    out += out.empty() ? part : " + " + part;
  }
  return out;
}

LambdaScalar LambdaScalar::operator-() const {
  LambdaScalar r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LambdaScalar& LambdaScalar::operator-=(const LambdaScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LambdaScalar& LambdaScalar::operator*=(const LambdaScalar& o) {
  LambdaScalar r;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1 + k2, c1 * c2);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

LambdaScalar& LambdaScalar::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= r;
  return *this;
}

Scalar omega(int k) {
  if (k < 0) throw DomainError("omega of negative dimension");
  int m = k / 2;
  if (k % 2 == 0) return Scalar::pi_power(m, Rational(mpz_class(1), factorial(m)));
  // omega_{2m+1} = 2^(2m+1) m! pi^m / (2m+1)!
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m + 1));
  return Scalar::pi_power(m, Rational(two_pow * factorial(m), factorial(2 * m + 1)));
}

Scalar alpha(int k) { return Scalar(Rational(k + 1)) * omega(k + 1); }

}  // namespace intgeo
