#include "intgeo/hermitian_u.hpp"

#include <cmath>
#include <sstream>

namespace intgeo {

std::string to_string(UnBasis b) {
  switch (b) {
    case UnBasis::monomial: return "monomial";
    case UnBasis::tasaki: return "tasaki";
    case UnBasis::hermitian: return "hermitian";
    case UnBasis::fourier_tasaki: return "fourier-tasaki";
  }
  return "?";
}

UnBasis parse_un_basis(const std::string& s) {
  if (s == "monomial") return UnBasis::monomial;
  if (s == "tasaki") return UnBasis::tasaki;
  if (s == "hermitian") return UnBasis::hermitian;
  if (s == "fourier-tasaki" || s == "fourier_tasaki") return UnBasis::fourier_tasaki;
  throw DomainError("unknown U(n) basis '" + s + "'");
}

GeneratorSet unitary_generators() { return GeneratorSet({"s", "t"}, {2, 1}); }

std::vector<Polynomial<Rational>> fk_polynomials(int max_k) {
  if (max_k < 1) throw DomainError("fk_polynomials needs max_k >= 1");
  // log(1+x) = sum (-1)^{m+1} x^m / m with x = s + t; s^a t^b has weight 2a + b.
  std::vector<Polynomial<Rational>> f(max_k);
  for (int m = 1; m <= max_k; ++m) {
    Rational sign = m % 2 == 1 ? Rational(1) : Rational(-1);
    for (int a = 0; a <= m; ++a) {
      int b = m - a;
      int w = 2 * a + b;
      if (w > max_k) continue;
      f[w - 1].add_term({a, b}, sign * Rational(binomial(m, a)) / Rational(m));
    }
  }
  return f;
}

namespace {

int floor_half(int k) { return k / 2; }

// kappa_{k,q} with Kl(t^{k-2q} u^q) = kappa sigma_{p,q}.
Scalar kappa(int k, int q) {
  return omega(k) * Scalar(Rational(mpz_class(factorial(k - 2 * q) * factorial(2 * q)))) * Scalar::pi_power(-k);
}

// Even polynomial in s,t written in the variables T = t^2 and u.
using TU = std::map<std::pair<int, int>, Rational>;

TU to_tu(const Polynomial<Rational>& x) {
  TU out;
  for (const auto& [m, c] : x.terms()) {
    int a = m[0], b = m[1];
    if (b % 2 != 0) throw DomainError("iota is defined on even degrees only");
    Rational scale = c / Rational(pow2(2 * a));
    for (int j = 0; j <= a; ++j) {
      out[{a - j + b / 2, j}] += scale * Rational(binomial(a, j));
    }
  }
  return out;
}

Polynomial<Rational> from_tu(const TU& x) {
  Polynomial<Rational> out;
  Polynomial<Rational> u = Polynomial<Rational>::monomial({1, 0}, Rational(4)) - Polynomial<Rational>::monomial({0, 2});
  for (const auto& [key, c] : x) {
    if (c.is_zero()) continue;
    Polynomial<Rational> term = Polynomial<Rational>::monomial({0, 2 * key.first}, c);
    for (int i = 0; i < key.second; ++i) term = term * u;
    out += term;
  }
  return out;
}

}  // namespace

Polynomial<Rational> iota_polynomial(const Polynomial<Rational>& x) {
  TU tu = to_tu(x);
  TU swapped;
  for (const auto& [key, c] : tu) swapped[{key.second, key.first}] += c;
  return from_tu(swapped);
}

Scalar KlainPolynomial::at_vertex(int l) const {
  int ones = complement ? l - (degree - n) : l;
  if (ones < 0 || ones > p) throw DomainError("no orbit E^{k,l} for this l");
  Scalar acc;
  for (int q = 0; q <= p; ++q) acc += coeffs[q] * Scalar(binomial_q(ones, q));
  return acc;
}

double KlainPolynomial::evaluate(const std::vector<double>& cos2) const {
  if (static_cast<int>(cos2.size()) != p) throw DomainError("wrong number of Kahler angle variables");
  std::vector<double> e(p + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j > 0; --j) e[j] += e[j - 1] * cos2[i];
  }
  double acc = 0.0;
  for (int q = 0; q <= p; ++q) acc += coeffs[q].to_double() * e[q];
  return acc;
}

std::string KlainPolynomial::to_latex(const std::string& var) const {
  std::string out;
  for (int q = 0; q <= p; ++q) {
    if (coeffs[q].is_zero()) continue;
    std::string part = "\\left(" + coeffs[q].to_latex() + "\\right)\\sigma_{" + std::to_string(p) + "," +
                       std::to_string(q) + "}(" + var + ")";
    out += out.empty() ? part : " + " + part;
  }
  return out.empty() ? "0" : out;
}

std::string BiKlain::to_string() const {
  std::ostringstream os;
  os << "U(" << n << ") bidegree (" << k << "," << l << "): rows sigma_{" << p_left << ",i}("
     << (left_complement ? "cos^2 Theta(E^perp)" : "cos^2 Theta(E)") << "), cols sigma_{" << p_right << ",j}("
     << (right_complement ? "cos^2 Theta(F^perp)" : "cos^2 Theta(F)") << ")\n";
  for (std::size_t i = 0; i < coefficients.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < coefficients.cols(); ++j) os << (j ? ", " : "") << coefficients(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

UnitaryAlgebra::UnitaryAlgebra(int n, UnPresentation pres) : n_(n) {
  if (n < 1) throw DomainError("U(n) needs n >= 1");
  GeneratorSet g = unitary_generators();
  if (pres == UnPresentation::relations) {
    auto f = fk_polynomials(n + 2);
    algebra_ = QuotientAlgebra::from_relations(g, {f[n], f[n + 1]}, 2 * n);
  } else {
    // Ideal in degree d = kernel of x -> (m' -> ev(m' x)) over all monomials m'
    // of degree 2n - d, with ev(s^a t^{2n-2a}) proportional to C(2n-2a, n-a).
    std::vector<RationalMatrix> ideal;
    for (int d = 0; d <= 2 * n; ++d) {
      auto cols = g.monomials_of_degree(d);
      auto rows = g.monomials_of_degree(2 * n - d);
      RationalMatrix e(rows.size(), cols.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          Monomial m = monomial_product(rows[i], cols[j]);
          e(i, j) = Rational(binomial(2 * n - 2 * m[0], n - m[0]));
        }
      }
      ideal.push_back(nullspace(e));
    }
    algebra_ = QuotientAlgebra::from_subspaces(g, ideal, 2 * n);
  }
  if (!algebra_.vanishes_above() || algebra_.dim(2 * n) != 1) {
    throw ConsistencyError("Val^{U(n)} model does not have a one-dimensional top degree 2n");
  }
  for (int k = 0; k <= 2 * n; ++k) {
    klain_.push_back(klain_matrix(k));
    klain_inv_.push_back(invert_exact(klain_.back()));
  }
}

GradedElement UnitaryAlgebra::s() const { return GradedElement::monomial({1, 0}, Scalar(1)); }
GradedElement UnitaryAlgebra::t() const { return GradedElement::monomial({0, 1}, Scalar(1)); }
GradedElement UnitaryAlgebra::u() const { return s() * Scalar(4) - t() * t(); }
GradedElement UnitaryAlgebra::chi() const { return GradedElement::monomial({0, 0}, Scalar(1)); }

GradedElement UnitaryAlgebra::euclidean_mu(int d) const {
  if (d < 0 || d > 2 * n_) throw DomainError("degree out of range");
  return GradedElement::monomial({0, d}, Scalar::pi_power(d) / (Scalar(Rational(factorial(d))) * omega(d)));
}

GradedElement UnitaryAlgebra::volume() const { return algebra_.normal_form(euclidean_mu(2 * n_)); }

GradedElement UnitaryAlgebra::tasaki(int k, int q) const {
  if (k < 0 || k > 2 * n_ || q < 0 || 2 * q > k) throw DomainError("tau_{k,q} index out of range");
  GradedElement x = t().pow(k - 2 * q) * u().pow(q);
  if (k - 2 * q == 0 && q == 0) x = chi();
  Scalar c = Scalar::pi_power(k) / (omega(k) * Scalar(Rational(mpz_class(factorial(k - 2 * q) * factorial(2 * q)))));
  return algebra_.normal_form(x * c);
}

GradedElement UnitaryAlgebra::hermitian(int k, int q) const {
  if (k < 0 || k > 2 * n_) throw DomainError("mu_{k,q} degree out of range");
  if (k <= n_) {
    int p = floor_half(k);
    if (q < 0 || q > p) throw DomainError("mu_{k,q} index out of range");
    KlainPolynomial kp{n_, k, p, false, std::vector<Scalar>(p + 1)};
    for (int j = q; j <= p; ++j) kp.coeffs[j] = Scalar(Rational((j - q) % 2 == 0 ? 1 : -1) * binomial_q(j, q));
    return from_klain(kp);
  }
  if (q < k - n_ || 2 * q > k) throw DomainError("mu_{k,q} index out of range");
  return fourier(hermitian(2 * n_ - k, q - (k - n_)));
}

LinearFunctional UnitaryAlgebra::ev_disk() const {
  std::vector<Scalar> v;
  Scalar norm = Scalar::pi_power(-n_, Rational(factorial(n_)));
  for (const Monomial& m : algebra_.basis(2 * n_)) {
    v.push_back(norm * Scalar(binomial_q(2 * n_ - 2 * m[0], n_ - m[0])));
  }
  return LinearFunctional({{2 * n_, v}});
}

int UnitaryAlgebra::klain_vars(int k) const { return k <= n_ ? floor_half(k) : floor_half(2 * n_ - k); }

ScalarMatrix UnitaryAlgebra::klain_matrix(int k) const {
  const int p = floor_half(k);
  const int pv = klain_vars(k);
  auto mons = algebra_.basis(k);
  ScalarMatrix km(pv + 1, mons.size());
  for (std::size_t col = 0; col < mons.size(); ++col) {
    int a = mons[col][0];
    // s^a t^b = 4^{-a} sum_q C(a,q) t^{k-2q} u^q.
    for (int q = 0; q <= a && q <= p; ++q) {
      Scalar c = kappa(k, q) * Scalar(Rational(binomial(a, q)) / Rational(pow2(2 * a)));
      if (k <= n_) {
        km(q, col) += c;
      } else {
        // sigma_{p,q}(1^m, y) = sum_j C(m, q-j) sigma_{p',j}(y).
        int m = k - n_;
        for (int j = 0; j <= pv; ++j) km(j, col) += c * Scalar(binomial_q(m, q - j));
      }
    }
  }
  return km;
}

const ScalarMatrix& UnitaryAlgebra::klain_inverse(int k) const { return klain_inv_.at(k); }

KlainPolynomial UnitaryAlgebra::klain(const GradedElement& x, int k) const {
  if (k < 0 || k > 2 * n_) throw DomainError("degree out of range");
  GradedElement nf = algebra_.normal_form(x);
  for (const auto& kv : nf.terms()) {
    if (algebra_.generators().degree(kv.first) != k) throw DomainError("klain needs a homogeneous element of degree k");
  }
  std::vector<Scalar> c = algebra_.coordinates(nf, k);
  KlainPolynomial kp{n_, k, klain_vars(k), k > n_, std::vector<Scalar>(klain_vars(k) + 1)};
  const ScalarMatrix& km = klain_[k];
  for (std::size_t i = 0; i < km.rows(); ++i) {
    for (std::size_t j = 0; j < km.cols(); ++j) kp.coeffs[i] += km(i, j) * c[j];
  }
  return kp;
}

GradedElement UnitaryAlgebra::from_klain(const KlainPolynomial& kp) const {
  const ScalarMatrix& inv = klain_inverse(kp.degree);
  if (kp.coeffs.size() != inv.cols()) throw DomainError("Klain polynomial has wrong size");
  std::vector<Scalar> c(inv.rows());
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    for (std::size_t j = 0; j < inv.cols(); ++j) c[i] += inv(i, j) * kp.coeffs[j];
  }
  return algebra_.from_coordinates(kp.degree, c);
}

GradedElement UnitaryAlgebra::fourier(const GradedElement& x) const {
  GradedElement out;
  GradedElement nf = algebra_.normal_form(x);
  for (int k = 0; k <= 2 * n_; ++k) {
    GradedElement part = nf.homogeneous_part(algebra_.generators(), k);
    if (part.is_zero()) continue;
    KlainPolynomial kp = klain(part, k);
    // Kl of the transform is Kl o perp: same coordinates, complementary degree.
    KlainPolynomial hat{n_, 2 * n_ - k, kp.p, 2 * n_ - k > n_, kp.coeffs};
    out += from_klain(hat);
  }
  return out;
}

GradedElement UnitaryAlgebra::iota(const GradedElement& x) const {
  GradedElement out;
  GradedElement nf = algebra_.normal_form(x);
  // Split by pi-power so that iota acts on rational polynomials.
  std::map<int, Polynomial<Rational>> by_pi;
  for (const auto& [m, c] : nf.terms()) {
    if (algebra_.generators().degree(m) % 2 != 0) throw DomainError("iota is defined on even degrees only");
    for (const auto& [e, r] : c.terms()) by_pi[e].add_term(m, r);
  }
  for (const auto& [e, poly] : by_pi) {
    out += lift<Scalar>(iota_polynomial(poly)) * Scalar::pi_power(e);
  }
  return algebra_.normal_form(out);
}

std::vector<GradedElement> UnitaryAlgebra::basis(int d, UnBasis b) const {
  std::vector<GradedElement> out;
  if (d < 0 || d > 2 * n_) throw DomainError("degree out of range");
  switch (b) {
    case UnBasis::monomial:
      return basis_elements(algebra_, d);
    case UnBasis::tasaki:
      if (d <= n_) {
        for (int q = 0; q <= floor_half(d); ++q) out.push_back(tasaki(d, q));
      } else {
        for (int q = 0; q <= floor_half(2 * n_ - d); ++q) out.push_back(fourier(tasaki(2 * n_ - d, q)));
      }
      return out;
    case UnBasis::hermitian:
      for (int q = std::max(0, d - n_); q <= floor_half(d); ++q) out.push_back(hermitian(d, q));
      return out;
    case UnBasis::fourier_tasaki:
      for (const auto& x : basis(2 * n_ - d, UnBasis::tasaki)) out.push_back(fourier(x));
      return out;
  }
  return out;
}

std::vector<std::string> UnitaryAlgebra::labels(int d, UnBasis b) const {
  std::vector<std::string> out;
  auto idx = [](int a, int c) { return "_{" + std::to_string(a) + "," + std::to_string(c) + "}"; };
  switch (b) {
    case UnBasis::monomial:
      for (const Monomial& m : algebra_.basis(d)) out.push_back(d == 0 ? "\\chi" : algebra_.generators().render(m, true));
      return out;
    case UnBasis::tasaki:
      if (d <= n_) {
        for (int q = 0; q <= floor_half(d); ++q) out.push_back("\\tau" + idx(d, q));
      } else {
        for (int q = 0; q <= floor_half(2 * n_ - d); ++q) out.push_back("\\hat\\tau" + idx(2 * n_ - d, q));
      }
      return out;
    case UnBasis::hermitian:
      for (int q = std::max(0, d - n_); q <= floor_half(d); ++q) out.push_back("\\mu" + idx(d, q));
      return out;
    case UnBasis::fourier_tasaki:
      if (d >= n_) {
        for (int q = 0; q <= floor_half(2 * n_ - d); ++q) out.push_back("\\hat\\tau" + idx(2 * n_ - d, q));
      } else {
        for (int q = 0; q <= floor_half(d); ++q) out.push_back("\\tau" + idx(d, q));
      }
      return out;
  }
  return out;
}

ScalarMatrix UnitaryAlgebra::basis_matrix(int d, UnBasis b) const {
  auto elems = basis(d, b);
  ScalarMatrix m(algebra_.dim(d), elems.size());
  for (std::size_t j = 0; j < elems.size(); ++j) {
    auto c = algebra_.coordinates(elems[j], d);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m;
}

std::vector<Scalar> UnitaryAlgebra::coordinates(const GradedElement& x, int d, UnBasis b) const {
  ScalarMatrix inv = invert_exact(basis_matrix(d, b));
  auto c = algebra_.coordinates(x, d);
  std::vector<Scalar> out(inv.rows());
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    for (std::size_t j = 0; j < inv.cols(); ++j) out[i] += inv(i, j) * c[j];
  }
  return out;
}

ScalarMatrix UnitaryAlgebra::basis_change(int d, UnBasis from, UnBasis to) const {
  return invert_exact(basis_matrix(d, to)) * basis_matrix(d, from);
}

ScalarMatrix UnitaryAlgebra::tasaki_pairing(int k) const {
  auto left = basis(k, UnBasis::tasaki);
  std::vector<GradedElement> right;
  for (const auto& x : left) right.push_back(fourier(x));
  return pairing_matrix(algebra_, ev_disk(), left, right);
}

Tensor UnitaryAlgebra::kinematic_chi() const {
  if (!kchi_ready_) {
    auto nu = [this](int k) { return basis(k, UnBasis::tasaki); };
    auto phi = [this](int k) {
      std::vector<GradedElement> r;
      for (const auto& x : basis(k, UnBasis::tasaki)) r.push_back(fourier(x));
      return r;
    };
    kchi_ = kinematic_chi_by_pairing(algebra_, ev_disk(), nu, phi);
    kchi_ready_ = true;
  }
  return kchi_;
}

Tensor UnitaryAlgebra::kinematic(const GradedElement& phi) const {
  return multiply_tensor(algebra_, phi, chi(), kinematic_chi());
}

Tensor UnitaryAlgebra::additive(const GradedElement& phi) const {
  Tensor k = kinematic(fourier(phi));
  LegMap<Scalar> leg = [this](int d) { return std::make_pair(2 * n_ - d, klain_inverse(2 * n_ - d) * klain_[d]); };
  return map_legs(k, leg, leg);
}

std::vector<TasakiMatrix> UnitaryAlgebra::tasaki_matrices() const {
  std::vector<TasakiMatrix> out;
  Tensor k = kinematic_chi();
  for (int d = 0; d <= 2 * n_; ++d) {
    ScalarMatrix left = invert_exact(basis_matrix(d, UnBasis::tasaki));
    ScalarMatrix right = invert_exact(basis_matrix(2 * n_ - d, UnBasis::tasaki));
    auto it = k.blocks().find({d, 2 * n_ - d});
    if (it == k.blocks().end()) throw ConsistencyError("k(chi) has no block in bidegree (d, 2n-d)");
    out.push_back({n_, d, left * it->second * right.transpose()});
  }
  return out;
}

BiKlain UnitaryAlgebra::bi_klain(const Tensor& t, int k, int l) const {
  BiKlain b;
  b.n = n_;
  b.k = k;
  b.l = l;
  b.p_left = klain_vars(k);
  b.p_right = klain_vars(l);
  b.left_complement = k > n_;
  b.right_complement = l > n_;
  auto it = t.blocks().find({k, l});
  if (it == t.blocks().end()) {
    b.coefficients = ScalarMatrix(b.p_left + 1, b.p_right + 1);
  } else {
    b.coefficients = klain_[k] * it->second * klain_[l].transpose();
  }
  Scalar cp = Scalar::pi_power(-n_, Rational(factorial(n_)));
  b.cp_coefficients = b.coefficients;
  for (std::size_t i = 0; i < b.cp_coefficients.rows(); ++i) {
    for (std::size_t j = 0; j < b.cp_coefficients.cols(); ++j) b.cp_coefficients(i, j) *= cp;
  }
  return b;
}

BiKlain UnitaryAlgebra::first_order(int k, int l) const {
  if (k < 0 || l < 0 || k > 2 * n_ || l > 2 * n_ || k + l < 2 * n_) {
    throw DomainError("first-order formula needs k,l <= 2n and k + l >= 2n");
  }
  return bi_klain(kinematic(euclidean_mu(k + l - 2 * n_)), k, l);
}

BiKlain UnitaryAlgebra::additive_first_order(int k, int l) const {
  if (k < 0 || l < 0 || k + l > 2 * n_) throw DomainError("additive first-order formula needs k + l <= 2n");
  return bi_klain(additive(euclidean_mu(k + l)), k, l);
}

FormulaTable UnitaryAlgebra::table(const Tensor& t, UnBasis b, const std::string& op, const std::string& input_label,
                                   int input_degree, int input_index) const {
  FormulaTable tab;
  tab.group = "U(" + std::to_string(n_) + ")";
  tab.dimension = n_;
  tab.normalization = "standard";
  tab.basis = to_string(b);
  tab.operator_name = op;
  tab.input_label = input_label;
  tab.input_degree = input_degree;
  tab.input_index = input_index;
  for (const auto& [key, block] : t.blocks()) {
    auto [k, l] = key;
    ScalarMatrix c = invert_exact(basis_matrix(k, b)) * block * invert_exact(basis_matrix(l, b)).transpose();
    auto ll = labels(k, b);
    auto rl = labels(l, b);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (c(i, j).is_zero()) continue;
        tab.terms.push_back({static_cast<int>(i), static_cast<int>(j), k, l, 0, ll[i], rl[j], c(i, j)});
      }
    }
  }
  return tab;
}

std::vector<FormulaTable> UnitaryAlgebra::tables(const std::string& op, UnBasis b, int k) const {
  std::vector<FormulaTable> out;
  auto elems = basis(k, b);
  auto lab = labels(k, b);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Tensor t;
    if (op == "kinematic") {
      t = kinematic(elems[i]);
    } else if (op == "additive") {
      t = additive(elems[i]);
    } else {
      throw DomainError("unknown operator '" + op + "'");
    }
    out.push_back(table(t, b, op, lab[i], k, static_cast<int>(i)));
  }
  return out;
}

Rational pfaff_saalschutz_residual(int n, int k) {
  if (k < 0 || k > n) throw DomainError("pfaff_saalschutz needs 0 <= k <= n");
  Rational lhs;
  for (int i = 0; i <= (n + 1) / 2; ++i) {
    Rational term = Rational(binomial(n + 1 - i, i)) * Rational(binomial(2 * n - 2 * k - 2 * i, n - k - i)) /
                    Rational(n + 1 - i);
    lhs += i % 2 == 0 ? term : -term;
  }
  Rational rhs = Rational(binomial(k, n - k)) / Rational(n + 1);
  if ((n - k) % 2 != 0) rhs = -rhs;
  return lhs - rhs;
}

Scalar mu_k0_constant(const UnitaryAlgebra& a, int k) {
  if (k < 1 || k > a.n()) throw DomainError("mu_k0_constant needs 1 <= k <= n");
  GradedElement mu = a.hermitian(k, 0);
  GradedElement f = a.algebra().normal_form(lift<Scalar>(fk_polynomials(k)[k - 1]));
  if (f.is_zero()) throw ConsistencyError("f_k vanishes in degree k <= n");
  const auto& [m0, c0] = *f.terms().begin();
  Scalar c = mu.coefficient(m0) / c0;
  if (!(mu == f * c)) throw ConsistencyError("mu_{k,0} is not proportional to f_k");
  return c;
}

}  // namespace intgeo
