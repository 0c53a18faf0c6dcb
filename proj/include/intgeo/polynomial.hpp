#pragma once

#include <map>
#include <string>
#include <vector>

#include "intgeo/errors.hpp"
#include "intgeo/rational.hpp"
#include "intgeo/scalar.hpp"

namespace intgeo {

// Exponent vector aligned with a GeneratorSet.
using Monomial = std::vector<int>;

struct GeneratorSet {
  std::vector<std::string> names;
  std::vector<int> weights;

  GeneratorSet() = default;
  GeneratorSet(std::vector<std::string> n, std::vector<int> w);

  std::size_t size() const { return names.size(); }
  int degree(const Monomial& m) const;
  int max_weight() const;
  Monomial unit() const { return Monomial(names.size(), 0); }
  Monomial generator(std::size_t i) const;
  // All monomials of weighted degree d, heaviest generators first in
  // descending exponent order (the elimination order).
  std::vector<Monomial> monomials_of_degree(int d) const;
  std::string render(const Monomial& m, bool latex = false) const;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

// Sparse commutative polynomial with coefficients in C (Rational, Scalar or
// LambdaScalar). No zero coefficients are stored.
template <class C>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, C>;

  Polynomial() = default;
  static Polynomial monomial(const Monomial& m, const C& c = C(1)) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }
  static Polynomial constant(std::size_t ngens, const C& c) { return monomial(Monomial(ngens, 0), c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Polynomial homogeneous_part(const GeneratorSet& g, int d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (g.degree(m) == d) r.terms_.emplace(m, c);
    }
    return r;
  }
  // Drops all monomials of degree above d.
  Polynomial truncated(const GeneratorSet& g, int d) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (g.degree(m) <= d) r.terms_.emplace(m, c);
    }
    return r;
  }
  int max_degree(const GeneratorSet& g) const {
    int d = -1;
    for (const auto& kv : terms_) d = std::max(d, g.degree(kv.first));
    return d;
  }
  int min_degree(const GeneratorSet& g) const {
    int d = -1;
    for (const auto& kv : terms_) {
      int e = g.degree(kv.first);
      d = d < 0 ? e : std::min(d, e);
    }
    return d;
  }
  bool is_homogeneous(const GeneratorSet& g) const { return terms_.empty() || min_degree(g) == max_degree(g); }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    TermMap r;
    for (auto& [m, c] : terms_) {
      C v = c * s;
      if (!v.is_zero()) r.emplace(m, std::move(v));
    }
    terms_ = std::move(r);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
    }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    if (terms_.empty()) return Polynomial();  // 0^0 needs a generator count; callers avoid it
    Polynomial r = constant(terms_.begin()->first.size(), C(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  template <class D, class F>
  Polynomial<D> map_coefficients(F f) const {
    Polynomial<D> r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string to_string(const GeneratorSet& g) const;

 private:
  TermMap terms_;
};

template <class C>
std::string coefficient_string(const C& c) {
  return c.to_string();
}

template <class C>
std::string Polynomial<C>::to_string(const GeneratorSet& g) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono = g.render(m);
    std::string coef = coefficient_string(c);
    std::string part = mono == "1" ? coef : "(" + coef + ")" + mono;
    out += out.empty() ? part : " + " + part;
  }
  return out;
}

template <class D>
Polynomial<D> lift(const Polynomial<Rational>& p) {
  return p.template map_coefficients<D>([](const Rational& c) { return D(c); });
}

}  // namespace intgeo
