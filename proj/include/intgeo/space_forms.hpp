#pragma once

#include <string>
#include <vector>

#include "intgeo/formula_table.hpp"
#include "intgeo/graded_algebra.hpp"
#include "intgeo/matrix.hpp"
#include "intgeo/polynomial.hpp"
#include "intgeo/scalar.hpp"

namespace intgeo {

// Truncated univariate power series with rational coefficients.
class FormalSeries {
 public:
  explicit FormalSeries(int order = 0) : c_(order + 1) {}
  FormalSeries(int order, std::vector<Rational> coeffs);
  static FormalSeries constant(int order, const Rational& c);
  // x itself.
  static FormalSeries variable(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(k); }
  Rational& operator[](int k) { return c_.at(k); }
  const std::vector<Rational>& coefficients() const { return c_; }

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(FormalSeries a, const Rational& r);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) { return a.c_ == b.c_; }

  // this(inner(x)); inner must have zero constant term.
  FormalSeries compose(const FormalSeries& inner) const;
  // Constant term must be 1.
  FormalSeries log() const;
  FormalSeries pow(const Rational& e) const;

 private:
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Real space forms M^n_lambda. Elements are coordinate vectors on tau_0..tau_n.

using RealElement = std::vector<LambdaScalar>;
using LambdaMatrix = Matrix<LambdaScalar>;

class RealSpaceForm {
 public:
  explicit RealSpaceForm(int n);

  int n() const { return n_; }
  RealElement zero() const { return RealElement(n_ + 1); }
  RealElement tau(int i) const;
  RealElement chi() const;
  RealElement phi() const { return phi_power(1); }
  RealElement phi_power(int k) const;
  // t = phi (1 - lambda phi^2 / 4)^{-1/2}.
  RealElement t() const;
  // phi recovered from t through phi = t (1 + lambda t^2 / 4)^{-1/2}.
  RealElement phi_via_t() const;

  // Product from tau_i tau_j = tau_{i+j} - (lambda/4) tau_{i+j+2}.
  RealElement multiply(const RealElement& x, const RealElement& y) const;
  // Product through the presentation Q[lambda][phi]/(phi^{n+1}).
  RealElement multiply_via_phi(const RealElement& x, const RealElement& y) const;
  RealElement power(const RealElement& x, int e) const;
  // Coordinates on phi^0..phi^n and back.
  RealElement to_phi(const RealElement& x) const;
  RealElement from_phi(const RealElement& p) const;
  // Sum_k c_k x^k for a series c with zero constant term allowed.
  RealElement substitute(const std::vector<LambdaScalar>& series, const RealElement& x) const;

  // Value on the totally geodesic sphere S^j in S^n(lambda); only lambda = 1.
  Scalar evaluate_sphere(const RealElement& x, int j, const Rational& lambda = Rational(1)) const;

  // Kinematic tables as matrices on tau_i (x) tau_j.
  // Standard normalization carries alpha_n / 2^{n+1}; unit normalization drops it.
  LambdaMatrix kinematic_transfer(const RealElement& psi, bool unit = false) const;
  LambdaMatrix kinematic_phi_form(const RealElement& psi, bool unit = false) const;
  // Both routes, compared; throws ConsistencyError on mismatch.
  LambdaMatrix kinematic(const RealElement& psi, bool unit = false) const;

  FormulaTable table(const RealElement& psi, const std::string& input_label, int input_degree, bool unit = false) const;

 private:
  int n_;
};

RealElement evaluate_lambda(const RealElement& x, const Rational& lambda);
std::string to_string(const RealElement& x);

// ---------------------------------------------------------------------------
// Complex space forms of holomorphic curvature 4 lambda, presented through
// f_{n+1}, f_{n+2} evaluated at (s, t (1 + lambda t^2/4)^{-1/2}).

using LambdaElement = Polynomial<LambdaScalar>;

class ComplexSpaceForm {
 public:
  explicit ComplexSpaceForm(int n);

  int n() const { return n_; }
  // Euclidean model Val^{U(n)} that provides the normal-form basis.
  const QuotientAlgebra& flat() const { return flat_; }
  // t_lambda truncated at degree 2n.
  const LambdaElement& t_lambda() const { return t_lambda_; }
  // Deformed ideal generators f_{n+1}(s, t_lambda), f_{n+2}(s, t_lambda).
  const std::vector<LambdaElement>& generators() const { return gens_; }

  // Degree-by-degree lift of the flat cofactors; exact over Q[lambda].
  LambdaElement normal_form(const LambdaElement& x) const;
  LambdaElement multiply(const LambdaElement& x, const LambdaElement& y) const { return normal_form(x * y); }

  // Ideal of the truncated polynomial ring Q[s,t]/(deg > 2n) at a fixed
  // lambda, as rows over all_monomials().
  RationalMatrix ideal_rows(const Rational& lambda) const;
  // Kernel of the CP^n evaluation pairing (lambda = 1).
  RationalMatrix cp_kernel_rows() const;
  const std::vector<Monomial>& all_monomials() const { return all_; }

  int quotient_dimension(const Rational& lambda) const;

 private:
  int n_;
  QuotientAlgebra flat_;
  LambdaElement t_lambda_;
  std::vector<LambdaElement> gens_;
  std::vector<Monomial> all_;
};

// s^a t^b on CP^n of holomorphic curvature 4.
Rational cp_value(int n, int a, int b);
// Each term s^a t^b lambda^c satisfies 2a + b - 2c = weight.
bool is_weighted_homogeneous(const LambdaElement& x, int weight);
// f(s, g) for g a lambda polynomial, truncated at degree max_degree.
LambdaElement substitute_t(const Polynomial<Rational>& f, const LambdaElement& g, int max_degree);

struct BfsComparison {
  int n = 0;
  int bfs_rank = 0;
  int kernel_rank = 0;
  int joint_rank = 0;
  int expected_quotient_dim = 0;
  bool equal() const { return bfs_rank == kernel_rank && joint_rank == bfs_rank; }
};
BfsComparison compare_bfs_with_cp_kernel(int n);

// C(4m+1, m+1) - 9 C(4m+1, m-1) for m = 0..max_m.
std::vector<Rational> conjecture_coefficients(int max_m);

struct ChapotonResult {
  FormalSeries f;
  FormalSeries g;
  std::vector<Rational> residuals;  // g_m - c_m for m = 1..N
  bool ok() const;
};
ChapotonResult chapoton_check(int order);

// Weight-k parts of log(1 + s x^2 + t x + sum_m c_m lambda^m x^{-2m}), keeping
// terms of (s,t)-degree at most max_degree.
std::vector<LambdaElement> fbar_polynomials(int max_k, int max_degree);

struct FbarResidual {
  int i = 0;
  LambdaElement residual;
};
std::vector<FbarResidual> fbar_relations_check(int n, int max_i);

}  // namespace intgeo
