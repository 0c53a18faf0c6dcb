#include "intgeo/euclid_so.hpp"

#include <cmath>

namespace intgeo {

std::string to_string(Normalization n) { return n == Normalization::standard ? "standard" : "unit"; }

std::string to_string(SOBasis b) {
  switch (b) {
    case SOBasis::t: return "t";
    case SOBasis::mu: return "mu";
    case SOBasis::psi: return "psi";
    case SOBasis::nijenhuis: return "nijenhuis";
  }
  return "?";
}

Normalization parse_normalization(const std::string& s) {
  if (s == "standard") return Normalization::standard;
  if (s == "unit") return Normalization::unit;
  throw DomainError("unknown normalization '" + s + "'");
}

SOBasis parse_so_basis(const std::string& s) {
  if (s == "t") return SOBasis::t;
  if (s == "mu") return SOBasis::mu;
  if (s == "psi") return SOBasis::psi;
  if (s == "nijenhuis" || s == "theta") return SOBasis::nijenhuis;
  throw DomainError("unknown SO(n) basis '" + s + "'");
}

TemplateBody TemplateBody::ball(const Rational& r) {
  if (r.sign() <= 0) throw DomainError("ball radius must be positive");
  TemplateBody b;
  b.kind = Kind::ball;
  b.radius = r;
  return b;
}

TemplateBody TemplateBody::box(std::vector<Rational> sides) {
  for (const auto& s : sides) {
    if (s.sign() <= 0) throw DomainError("box sides must be positive");
  }
  TemplateBody b;
  b.kind = Kind::box;
  b.sides = std::move(sides);
  return b;
}

TemplateBody TemplateBody::segment(const Rational& length) {
  if (length.sign() <= 0) throw DomainError("segment length must be positive");
  TemplateBody b;
  b.kind = Kind::segment;
  b.sides = {length};
  return b;
}

TemplateBody TemplateBody::point() { return TemplateBody{}; }

namespace {

Polynomial<Rational> t_monomial(int i) { return Polynomial<Rational>::monomial(Monomial{i}, Rational(1)); }

Scalar ball_mu(int n, int i) { return Scalar(binomial_q(n, i)) * omega(n) / omega(n - i); }

// Elementary symmetric polynomial sigma_i of the entries.
Rational elementary_symmetric(const std::vector<Rational>& x, int i) {
  std::vector<Rational> e(x.size() + 1, Rational(0));
  e[0] = Rational(1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = k + 1; j > 0; --j) e[j] += e[j - 1] * x[k];
  }
  return i < 0 || static_cast<std::size_t>(i) > x.size() ? Rational(0) : e[i];
}

}  // namespace

EuclideanAlgebra::EuclideanAlgebra(int n) : n_(n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  algebra_ = QuotientAlgebra::from_relations(GeneratorSet({"t"}, {1}), {t_monomial(n + 1)}, n);
}

GradedElement EuclideanAlgebra::t_power(int i) const {
  if (i < 0 || i > n_) throw DomainError("degree out of range");
  return lift<Scalar>(t_monomial(i));
}

Scalar EuclideanAlgebra::scale(SOBasis b, int i) const {
  if (i < 0 || i > n_) throw DomainError("degree out of range");
  switch (b) {
    case SOBasis::t: return Scalar(1);
    case SOBasis::mu: return Scalar::pi_power(i) / (Scalar(Rational(factorial(i))) * omega(i));
    case SOBasis::psi: return scale(SOBasis::mu, i) / ball_mu(n_, i);
    case SOBasis::nijenhuis: break;
  }
  throw DomainError("the Nijenhuis basis is not defined over Q[pi]; use nijenhuis_report");
}

GradedElement EuclideanAlgebra::basis_element(SOBasis b, int i) const { return t_power(i) * scale(b, i); }

GradedElement EuclideanAlgebra::mu(int i) const { return basis_element(SOBasis::mu, i); }
GradedElement EuclideanAlgebra::psi(int i) const { return basis_element(SOBasis::psi, i); }

std::string EuclideanAlgebra::label(SOBasis b, int i) const {
  if (i == 0) return "\\chi";
  switch (b) {
    case SOBasis::t: return i == 1 ? "t" : "t^{" + std::to_string(i) + "}";
    case SOBasis::mu: return "\\mu_{" + std::to_string(i) + "}";
    case SOBasis::psi: return "\\psi_{" + std::to_string(i) + "}";
    case SOBasis::nijenhuis: return "\\theta_{" + std::to_string(i) + "}";
  }
  return "?";
}

LinearFunctional EuclideanAlgebra::volume_functional() const {
  return LinearFunctional({{n_, {scale(SOBasis::mu, n_).inverse()}}});
}

GradedElement EuclideanAlgebra::fourier(const GradedElement& x) const {
  GradedElement out;
  for (int i = 0; i <= n_; ++i) {
    Scalar c = algebra_.coordinates(x, i)[0];
    if (c.is_zero()) continue;
    out += t_power(n_ - i) * (c * scale(SOBasis::mu, n_ - i) / scale(SOBasis::mu, i));
  }
  return out;
}

Tensor EuclideanAlgebra::kinematic(const GradedElement& phi, Normalization norm) const {
  Scalar k = norm == Normalization::standard ? alpha(n_) / Scalar(pow2(n_ + 1))
                                             : Scalar(1);
  Tensor out;
  for (int c = 0; c <= n_; ++c) {
    Scalar x = algebra_.coordinates(phi, c)[0];
    if (x.is_zero()) continue;
    for (int a = c; a <= n_; ++a) out.add(a, n_ + c - a, 1, 1, 0, 0, x * k);
  }
  out.prune();
  return out;
}

Tensor EuclideanAlgebra::kinematic_by_pairing(const GradedElement& phi) const {
  auto nu = [this](int k) { return std::vector<GradedElement>{t_power(k)}; };
  auto dual = [this](int k) { return std::vector<GradedElement>{t_power(n_ - k)}; };
  Tensor chi_image = kinematic_chi_by_pairing(algebra_, volume_functional(), nu, dual);
  return multiply_tensor(algebra_, phi, chi(), chi_image);
}

Tensor EuclideanAlgebra::additive(const GradedElement& phi) const {
  Tensor out;
  for (int k = 0; k <= n_; ++k) {
    Scalar x = algebra_.coordinates(phi, k)[0];
    if (x.is_zero()) continue;
    Scalar inv_k = scale(SOBasis::psi, k).inverse();
    for (int i = 0; i <= k; ++i) {
      Scalar c = x * inv_k * Scalar(binomial_q(k, i)) * scale(SOBasis::psi, i) * scale(SOBasis::psi, k - i);
      out.add(i, k - i, 1, 1, 0, 0, c);
    }
  }
  out.prune();
  return out;
}

Tensor EuclideanAlgebra::additive_by_fourier(const GradedElement& phi) const {
  Tensor k = kinematic(fourier(phi), Normalization::standard);
  LegMap<Scalar> leg = [this](int d) {
    ScalarMatrix m(1, 1);
    m(0, 0) = scale(SOBasis::mu, n_ - d) / scale(SOBasis::mu, d);
    return std::make_pair(n_ - d, m);
  };
  return map_legs(k, leg, leg);
}

FormulaTable EuclideanAlgebra::to_table(const Tensor& t, SOBasis b, const std::string& op, Normalization norm,
                                        int k) const {
  FormulaTable tab;
  tab.group = "SO(" + std::to_string(n_) + ")";
  tab.dimension = n_;
  tab.normalization = to_string(norm);
  tab.basis = to_string(b);
  tab.operator_name = op;
  tab.input_label = label(b, k);
  tab.input_degree = k;
  for (const auto& [key, block] : t.blocks()) {
    Scalar c = block(0, 0) / (scale(b, key.first) * scale(b, key.second));
    if (c.is_zero()) continue;
    tab.terms.push_back({0, 0, key.first, key.second, 0, label(b, key.first), label(b, key.second), c});
  }
  return tab;
}

FormulaTable EuclideanAlgebra::table(const std::string& op, SOBasis b, int k, Normalization norm) const {
  if (b == SOBasis::nijenhuis) {
    NijenhuisReport r = nijenhuis_report(n_);
    FormulaTable tab = op == "kinematic" ? r.kinematic_theta.at(k) : r.additive_theta.at(k);
    if (op == "kinematic" && norm == Normalization::unit) {
      Scalar f = Scalar(pow2(n_ + 1)) / alpha(n_);
      for (auto& term : tab.terms) term.coefficient *= f;
      tab.normalization = to_string(norm);
    }
    return tab;
  }
  GradedElement x = basis_element(b, k);
  if (op == "kinematic") return to_table(kinematic(x, norm), b, op, norm, k);
  if (op == "additive") {
    FormulaTable tab = to_table(additive(x), b, op, Normalization::standard, k);
    return tab;
  }
  throw DomainError("unknown operator '" + op + "'");
}

Scalar intrinsic_volume(const TemplateBody& body, int n, int i) {
  if (i < 0 || i > n) throw DomainError("intrinsic volume index out of range");
  switch (body.kind) {
    case TemplateBody::Kind::ball:
      return ball_mu(n, i) * Scalar(body.radius.pow(i));
    case TemplateBody::Kind::box:
    case TemplateBody::Kind::segment:
      if (static_cast<int>(body.sides.size()) > n) throw DomainError("body does not fit in R^n");
      return Scalar(elementary_symmetric(body.sides, i));
    case TemplateBody::Kind::point:
      return Scalar(i == 0 ? 1 : 0);
  }
  return Scalar();
}

std::vector<Scalar> steiner_polynomial(const TemplateBody& body, int n) {
  std::vector<Scalar> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[n - i] = omega(n - i) * intrinsic_volume(body, n, i);
  return coeffs;
}

Scalar crofton_constant(int n, int k) {
  if (k < 0 || k > n - 1) throw DomainError("crofton_constant needs 0 <= k <= n-1");
  return Scalar(binomial_q(n, k)) * omega(n) / (omega(n - k) * omega(k));
}

Scalar mu_product_coefficient(int n, int i, int j) {
  if (i < 0 || j < 0 || i + j > n) throw DomainError("mu_i * mu_j needs i + j <= n");
  return Scalar(binomial_q(i + j, i)) * omega(i + j) / (omega(i) * omega(j));
}

Scalar mu_product_coefficient_via_t(const EuclideanAlgebra& a, int i, int j) {
  if (i < 0 || j < 0 || i + j > a.n()) throw DomainError("mu_i * mu_j needs i + j <= n");
  GradedElement p = a.algebra().multiply(a.mu(i), a.mu(j));
  Scalar c = a.algebra().coordinates(p, i + j)[0];
  return c / a.scale(SOBasis::mu, i + j);
}

Scalar cauchy_constant(int n) {
  if (n < 2) throw DomainError("cauchy_constant needs n >= 2");
  return Scalar(Rational(n, 2)) * omega(n) / omega(n - 1);
}

NijenhuisReport nijenhuis_report(int n) {
  EuclideanAlgebra a(n);
  NijenhuisReport r;
  r.n = n;
  r.pkf_constant = alpha(n) / Scalar(pow2(n + 1));
  // theta'_i = psi_i / i! = gamma_i t^i.
  std::vector<Scalar> gamma(n + 1);
  for (int i = 0; i <= n; ++i) gamma[i] = a.scale(SOBasis::psi, i) * Scalar(Rational(mpz_class(1), factorial(i)));
  r.c = r.pkf_constant * gamma[0] / (gamma[0] * gamma[n]);
  r.c_float = r.c.to_double();
  for (int i = 0; i <= n; ++i) {
    r.theta_scalings.push_back(std::pow(r.c_float, static_cast<double>(i) / n) / std::tgamma(i + 1.0));
  }
  Scalar c_inv = r.c.inverse();
  r.kinematic_unit = true;
  r.additive_unit = true;
  auto make = [&](const std::string& op, int k) {
    FormulaTable tab;
    tab.group = "SO(" + std::to_string(n) + ")";
    tab.dimension = n;
    tab.normalization = "standard";
    tab.basis = "nijenhuis";
    tab.operator_name = op;
    tab.input_label = a.label(SOBasis::nijenhuis, k);
    tab.input_degree = k;
    return tab;
  };
  for (int k = 0; k <= n; ++k) {
    FormulaTable kin = make("kinematic", k);
    Tensor kt = a.kinematic(a.t_power(k), Normalization::standard);
    for (const auto& [key, block] : kt.blocks()) {
      // theta coefficient = theta' coefficient * c^((k - a - b)/n), and a + b = n + k.
      Scalar prime = gamma[k] * block(0, 0) / (gamma[key.first] * gamma[key.second]);
      Scalar coef = prime * c_inv;
      if (!(coef == Scalar(1))) {
        r.kinematic_unit = false;
        r.kinematic_deviations.push_back("k(theta_" + std::to_string(k) + "): theta_" + std::to_string(key.first) +
                                          " (x) theta_" + std::to_string(key.second) + " = " + coef.to_string());
      }
      kin.terms.push_back({0, 0, key.first, key.second, 0, a.label(SOBasis::nijenhuis, key.first),
                           a.label(SOBasis::nijenhuis, key.second), coef});
    }
    r.kinematic_theta.push_back(kin);

    FormulaTable add = make("additive", k);
    Tensor at = a.additive(a.t_power(k));
    for (const auto& [key, block] : at.blocks()) {
      // a + b = k, so the c^(i/n) factors cancel exactly.
      Scalar coef = gamma[k] * block(0, 0) / (gamma[key.first] * gamma[key.second]);
      if (!(coef == Scalar(1))) r.additive_unit = false;
      add.terms.push_back({0, 0, key.first, key.second, 0, a.label(SOBasis::nijenhuis, key.first),
                           a.label(SOBasis::nijenhuis, key.second), coef});
    }
    r.additive_theta.push_back(add);
  }
  return r;
}

}  // namespace intgeo
