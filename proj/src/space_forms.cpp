#include "intgeo/space_forms.hpp"

#include <sstream>

#include "intgeo/hermitian_u.hpp"

namespace intgeo {

// ---------------------------------------------------------------------------
// FormalSeries

FormalSeries::FormalSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

FormalSeries FormalSeries::constant(int order, const Rational& c) {
  FormalSeries s(order);
  s.c_[0] = c;
  return s;
}

FormalSeries FormalSeries::variable(int order) {
  FormalSeries s(order);
  if (order >= 1) s.c_[1] = Rational(1);
  return s;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  int n = std::min(a.order(), b.order());
  FormalSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

FormalSeries operator*(FormalSeries a, const Rational& r) {
  for (auto& c : a.c_) c *= r;
  return a;
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
  if (!inner[0].is_zero()) throw DomainError("series composition needs an inner series without constant term");
  int n = std::min(order(), inner.order());
  FormalSeries r = constant(n, c_[n]);
  for (int k = n - 1; k >= 0; --k) r = r * inner + constant(n, c_[k]);
  return r;
}

FormalSeries FormalSeries::log() const {
  if (!c_[0].is_one()) throw DomainError("series log needs constant term 1");
  int n = order();
  FormalSeries l(n);
  for (int k = 1; k <= n; ++k) {
    Rational acc = c_[k] * Rational(k);
    for (int j = 1; j < k; ++j) acc -= Rational(j) * l.c_[j] * c_[k - j];
    l.c_[k] = acc / Rational(k);
  }
  return l;
}

FormalSeries FormalSeries::pow(const Rational& e) const {
  if (!c_[0].is_one()) throw DomainError("series power needs constant term 1");
  int n = order();
  FormalSeries a(n);
  a.c_[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += ((e + Rational(1)) * Rational(j) - Rational(k)) * c_[j] * a.c_[k - j];
    a.c_[k] = acc / Rational(k);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Real space forms

namespace {

LambdaScalar lam(int k, const Rational& c = Rational(1)) { return LambdaScalar::lambda_power(k, Scalar(c)); }
LambdaScalar quarter_lambda_pow(int j) { return lam(j, Rational(1) / Rational(pow2(2 * j))); }

}  // namespace

RealSpaceForm::RealSpaceForm(int n) : n_(n) {
  if (n < 1) throw DomainError("space form needs n >= 1");
}

RealElement RealSpaceForm::tau(int i) const {
  RealElement x = zero();
  if (i >= 0 && i <= n_) x[i] = LambdaScalar(1);
  return x;
}

RealElement RealSpaceForm::phi_power(int k) const {
  RealElement x = zero();
  for (int j = 0; k + 2 * j <= n_; ++j) x[k + 2 * j] = quarter_lambda_pow(j);
  return x;
}

RealElement RealSpaceForm::chi() const { return phi_power(0); }

RealElement RealSpaceForm::multiply(const RealElement& x, const RealElement& y) const {
  RealElement r = zero();
  const LambdaScalar q = -quarter_lambda_pow(1);
  for (int i = 0; i <= n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; i + j <= n_; ++j) {
      if (y[j].is_zero()) continue;
      LambdaScalar c = x[i] * y[j];
      r[i + j] += c;
      if (i + j + 2 <= n_) r[i + j + 2] += c * q;
    }
  }
  return r;
}

RealElement RealSpaceForm::to_phi(const RealElement& x) const {
  // tau_i = phi^i - (lambda/4) phi^{i+2}
  RealElement p = zero();
  for (int i = 0; i <= n_; ++i) {
    p[i] += x[i];
    if (i + 2 <= n_) p[i + 2] -= x[i] * quarter_lambda_pow(1);
  }
  return p;
}

RealElement RealSpaceForm::from_phi(const RealElement& p) const {
  RealElement x = zero();
  for (int k = 0; k <= n_; ++k) {
    if (p[k].is_zero()) continue;
    RealElement pk = phi_power(k);
    for (int i = 0; i <= n_; ++i) x[i] += p[k] * pk[i];
  }
  return x;
}

RealElement RealSpaceForm::multiply_via_phi(const RealElement& x, const RealElement& y) const {
  RealElement a = to_phi(x), b = to_phi(y), c = zero();
  for (int i = 0; i <= n_; ++i) {
    for (int j = 0; i + j <= n_; ++j) c[i + j] += a[i] * b[j];
  }
  return from_phi(c);
}

RealElement RealSpaceForm::power(const RealElement& x, int e) const {
  RealElement r = chi();
  for (int i = 0; i < e; ++i) r = multiply(r, x);
  return r;
}

RealElement RealSpaceForm::substitute(const std::vector<LambdaScalar>& series, const RealElement& x) const {
  RealElement r = zero();
  RealElement xp = chi();
  for (std::size_t k = 0; k < series.size(); ++k) {
    if (k > 0) xp = multiply(xp, x);
    if (series[k].is_zero()) continue;
    for (int i = 0; i <= n_; ++i) r[i] += series[k] * xp[i];
  }
  return r;
}

namespace {

// c(x) = (1 + sign x/4)^{-1/2}; returns sum_m c_m lambda^m y^{2m+1} coefficients on y^k.
std::vector<LambdaScalar> odd_inverse_sqrt_series(int n, int sign) {
  FormalSeries base = FormalSeries::constant(n, Rational(1)) + FormalSeries::variable(n) * Rational(sign, 4);
  FormalSeries h = base.pow(Rational(-1, 2));
  std::vector<LambdaScalar> out(n + 1);
  for (int m = 0; 2 * m + 1 <= n; ++m) out[2 * m + 1] = lam(m, h[m]);
  return out;
}

}  // namespace

RealElement RealSpaceForm::t() const { return substitute(odd_inverse_sqrt_series(n_, -1), phi()); }

RealElement RealSpaceForm::phi_via_t() const { return substitute(odd_inverse_sqrt_series(n_, 1), t()); }

Scalar RealSpaceForm::evaluate_sphere(const RealElement& x, int j, const Rational& lambda) const {
  if (!lambda.is_one()) throw DomainError("sphere evaluation is only available at lambda = 1");
  if (j < 0 || j > n_) throw DomainError("sphere dimension out of range");
  return x[j].evaluate(lambda) * Scalar(pow2(j + 1));
}

LambdaMatrix RealSpaceForm::kinematic_transfer(const RealElement& psi, bool unit) const {
  LambdaScalar c = unit ? LambdaScalar(1) : LambdaScalar(alpha(n_) * Scalar(Rational(1) / pow2(n_ + 1)));
  LambdaMatrix m(n_ + 1, n_ + 1);
  for (int l = 0; l <= n_; ++l) {
    if (psi[l].is_zero()) continue;
    for (int i = l; i <= n_; ++i) m(i, n_ + l - i) += psi[l] * c;
  }
  return m;
}

LambdaMatrix RealSpaceForm::kinematic_phi_form(const RealElement& psi, bool unit) const {
  LambdaScalar c = unit ? LambdaScalar(1) : LambdaScalar(alpha(n_) * Scalar(Rational(1) / pow2(n_ + 1)));
  LambdaMatrix m(n_ + 1, n_ + 1);
  RealElement t0 = tau(0);
  for (int i = 0; i <= n_; ++i) {
    RealElement left = multiply(psi, phi_power(i));
    RealElement right = multiply(t0, phi_power(n_ - i));
    for (int a = 0; a <= n_; ++a) {
      if (left[a].is_zero()) continue;
      for (int b = 0; b <= n_; ++b) {
        if (!right[b].is_zero()) m(a, b) += left[a] * right[b] * c;
      }
    }
  }
  return m;
}

LambdaMatrix RealSpaceForm::kinematic(const RealElement& psi, bool unit) const {
  LambdaMatrix a = kinematic_transfer(psi, unit);
  if (!(a == kinematic_phi_form(psi, unit))) {
    throw ConsistencyError("space form kinematic formula: transfer and phi routes disagree");
  }
  return a;
}

FormulaTable RealSpaceForm::table(const RealElement& psi, const std::string& input_label, int input_degree,
                                  bool unit) const {
  FormulaTable tab;
  tab.group = "M^" + std::to_string(n_) + "_lambda";
  tab.dimension = n_;
  tab.normalization = unit ? "unit" : "standard";
  tab.basis = "tau";
  tab.operator_name = "kinematic";
  tab.input_label = input_label;
  tab.input_degree = input_degree;
  tab.input_index = 0;
  LambdaMatrix m = kinematic(psi, unit);
  for (int i = 0; i <= n_; ++i) {
    for (int j = 0; j <= n_; ++j) {
      for (const auto& [k, c] : m(i, j).terms()) {
        tab.terms.push_back({0, 0, i, j, k, "\\tau_{" + std::to_string(i) + "}", "\\tau_{" + std::to_string(j) + "}", c});
      }
    }
  }
  return tab;
}

RealElement evaluate_lambda(const RealElement& x, const Rational& lambda) {
  RealElement r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = LambdaScalar(x[i].evaluate(lambda));
  return r;
}

std::string to_string(const RealElement& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << x[i].to_string() << ")tau_" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Complex space forms

Rational cp_value(int n, int a, int b) {
  if (b % 2 != 0 || a > n) return Rational(0);
  return Rational(mpz_class(binomial(b, b / 2) * binomial(n - a + 1, b / 2 + 1)));
}

bool is_weighted_homogeneous(const LambdaElement& x, int weight) {
  for (const auto& [m, c] : x.terms()) {
    for (const auto& kv : c.terms()) {
      if (2 * m[0] + m[1] - 2 * kv.first != weight) return false;
    }
  }
  return true;
}

LambdaElement substitute_t(const Polynomial<Rational>& f, const LambdaElement& g, int max_degree) {
  GeneratorSet gens = unitary_generators();
  std::vector<LambdaElement> gp{LambdaElement::constant(2, LambdaScalar(1))};
  LambdaElement out;
  for (const auto& [m, c] : f.terms()) {
    while (static_cast<int>(gp.size()) <= m[1]) gp.push_back((gp.back() * g).truncated(gens, max_degree));
    LambdaElement term = gp[m[1]] * LambdaElement::monomial({m[0], 0}, LambdaScalar(c));
    out += term.truncated(gens, max_degree);
  }
  return out;
}

namespace {

int sigma_total(int n) {
  int total = 0;
  for (int k = 0; k <= 2 * n; ++k) total += std::min(k, 2 * n - k) / 2 + 1;
  return total;
}

}  // namespace

ComplexSpaceForm::ComplexSpaceForm(int n) : n_(n) {
  if (n < 1) throw DomainError("complex space form needs n >= 1");
  GeneratorSet g = unitary_generators();
  auto f = fk_polynomials(n + 2);
  flat_ = QuotientAlgebra::from_relations(g, {f[n], f[n + 1]}, 2 * n);
  // (1 + lambda t^2/4)^{-1/2} through the binomial series.
  FormalSeries h = (FormalSeries::constant(n, Rational(1)) + FormalSeries::variable(n) * Rational(1, 4)).pow(Rational(-1, 2));
  for (int m = 0; 2 * m + 1 <= 2 * n; ++m) {
    t_lambda_.add_term({0, 2 * m + 1}, LambdaScalar::lambda_power(m, Scalar(h[m])));
  }
  for (int k : {n + 1, n + 2}) {
    gens_.push_back(substitute_t(f[k - 1], t_lambda_, 2 * n));
    if (!is_weighted_homogeneous(gens_.back(), k)) throw ConsistencyError("deformed relation is not weighted homogeneous");
  }
  for (int d = 0; d <= 2 * n; ++d) {
    for (const Monomial& m : g.monomials_of_degree(d)) all_.push_back(m);
  }
  if (quotient_dimension(Rational(1)) != sigma_total(n) || quotient_dimension(Rational(-1)) != sigma_total(n)) {
    throw ConsistencyError("complex space form quotient has the wrong dimension");
  }
}

LambdaElement ComplexSpaceForm::normal_form(const LambdaElement& x) const {
  const GeneratorSet& g = flat_.generators();
  LambdaElement cur = x.truncated(g, 2 * n_);
  LambdaElement out;
  for (int d = 0; d <= 2 * n_; ++d) {
    LambdaElement part = cur.homogeneous_part(g, d);
    if (part.is_zero()) continue;
    const auto& dd = flat_.degree_data(d);
    std::vector<bool> is_basis(dd.monomials.size(), false);
    for (std::size_t b : dd.basis) is_basis[b] = true;
    for (const auto& [m, c] : part.terms()) {
      std::size_t row = dd.index.at(m);
      if (is_basis[row]) continue;
      // m - NF(m) = sum_k T_k multiple_k; replace each multiple by its deformed version.
      LambdaElement corr;
      for (std::size_t k = 0; k < dd.multiples.size(); ++k) {
        const Rational& cf = dd.cofactors(row, k);
        if (cf.is_zero()) continue;
        const auto& [mult, gi] = dd.multiples[k];
        corr += (gens_[gi] * LambdaElement::monomial(mult, LambdaScalar(cf))).truncated(g, 2 * n_);
      }
      cur -= corr * c;
    }
    LambdaElement done = cur.homogeneous_part(g, d);
    for (const auto& [m, c] : done.terms()) {
      if (!is_basis[dd.index.at(m)]) throw ConsistencyError("lifted normal form left a non-basis monomial");
    }
    out += done;
    cur -= done;
  }
  return out;
}

RationalMatrix ComplexSpaceForm::ideal_rows(const Rational& lambda) const {
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < all_.size(); ++i) col[all_[i]] = i;
  const GeneratorSet& g = flat_.generators();
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d <= 2 * n_; ++d) {
    for (const auto& [mult, gi] : flat_.degree_data(d).multiples) {
      LambdaElement p = (gens_[gi] * LambdaElement::monomial(mult, LambdaScalar(1))).truncated(g, 2 * n_);
      std::vector<Rational> row(all_.size());
      for (const auto& [m, c] : p.terms()) row[col.at(m)] = c.evaluate(lambda).to_rational();
      rows.push_back(std::move(row));
    }
  }
  RationalMatrix out(rows.size(), all_.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < all_.size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

RationalMatrix ComplexSpaceForm::cp_kernel_rows() const {
  RationalMatrix e(all_.size(), all_.size());
  for (std::size_t i = 0; i < all_.size(); ++i) {
    for (std::size_t j = 0; j < all_.size(); ++j) {
      e(i, j) = cp_value(n_, all_[i][0] + all_[j][0], all_[i][1] + all_[j][1]);
    }
  }
  return nullspace(e);
}

int ComplexSpaceForm::quotient_dimension(const Rational& lambda) const {
  return static_cast<int>(all_.size()) - static_cast<int>(rank(ideal_rows(lambda)));
}

BfsComparison compare_bfs_with_cp_kernel(int n) {
  ComplexSpaceForm c(n);
  RationalMatrix a = c.ideal_rows(Rational(1));
  RationalMatrix b = c.cp_kernel_rows();
  RationalMatrix joint(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) joint(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) joint(a.rows() + i, j) = b(i, j);
  }
  BfsComparison r;
  r.n = n;
  r.bfs_rank = static_cast<int>(rank(a));
  r.kernel_rank = static_cast<int>(rank(b));
  r.joint_rank = static_cast<int>(rank(joint));
  r.expected_quotient_dim = sigma_total(n);
  return r;
}

std::vector<Rational> conjecture_coefficients(int max_m) {
  if (max_m < 0) throw DomainError("max_m must be non-negative");
  std::vector<Rational> c;
  for (int m = 0; m <= max_m; ++m) {
    c.push_back(Rational(binomial(4 * m + 1, m + 1)) - Rational(9) * Rational(binomial(4 * m + 1, m - 1)));
  }
  return c;
}

bool ChapotonResult::ok() const {
  for (const auto& r : residuals) {
    if (!r.is_zero()) return false;
  }
  return true;
}

ChapotonResult chapoton_check(int order) {
  if (order < 1) throw DomainError("chapoton_check needs order >= 1");
  FormalSeries one = FormalSeries::constant(order, Rational(1));
  FormalSeries x = FormalSeries::variable(order);
  FormalSeries f(order);
  // Each pass fixes one more coefficient of f = x (1 + f)^4.
  for (int i = 0; i <= order; ++i) f = x * (one + f).pow(Rational(4));
  ChapotonResult r;
  r.f = f;
  r.g = f * (one - f - f * f);
  auto c = conjecture_coefficients(order);
  for (int m = 1; m <= order; ++m) r.residuals.push_back(r.g[m] - c[m]);
  return r;
}

std::vector<LambdaElement> fbar_polynomials(int max_k, int max_degree) {
  if (max_k < 1 || max_degree < 0) throw DomainError("fbar_polynomials needs max_k >= 1");
  // Work in Q[s, t, L]; a monomial s^a t^b L^c carries x-weight 2a + b - 2c.
  const int max_l = max_degree / 2;
  auto keep = [&](const Polynomial<Rational>& p) {
    Polynomial<Rational> r;
    for (const auto& [m, c] : p.terms()) {
      if (2 * m[0] + m[1] <= max_degree && m[2] <= max_l) r.add_term(m, c);
    }
    return r;
  };
  auto c = conjecture_coefficients(max_l);
  Polynomial<Rational> y = Polynomial<Rational>::monomial({1, 0, 0}) + Polynomial<Rational>::monomial({0, 1, 0});
  for (int m = 1; m <= max_l; ++m) y.add_term({0, 0, m}, c[m]);
  Polynomial<Rational> log_sum;
  Polynomial<Rational> yp = Polynomial<Rational>::constant(3, Rational(1));
  const int max_j = max_degree + max_l + 1;
  for (int j = 1; j <= max_j; ++j) {
    yp = keep(yp * y);
    if (yp.is_zero()) break;
    Rational w = Rational(1) / Rational(j);
    log_sum += yp * (j % 2 == 1 ? w : -w);
  }
  std::vector<LambdaElement> out(max_k);
  for (const auto& [m, coef] : log_sum.terms()) {
    int w = 2 * m[0] + m[1] - 2 * m[2];
    if (w < 1 || w > max_k) continue;
    out[w - 1].add_term({m[0], m[1]}, LambdaScalar::lambda_power(m[2], Scalar(coef)));
  }
  return out;
}

std::vector<FbarResidual> fbar_relations_check(int n, int max_i) {
  ComplexSpaceForm c(n);
  auto fb = fbar_polynomials(max_i, 2 * n);
  std::vector<FbarResidual> out;
  for (int i = n + 1; i <= max_i; ++i) out.push_back({i, c.normal_form(fb[i - 1])});
  return out;
}

}  // namespace intgeo
