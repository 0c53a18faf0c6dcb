#pragma once

#include <string>
#include <vector>

#include "intgeo/formula_table.hpp"
#include "intgeo/graded_algebra.hpp"

namespace intgeo {

enum class Normalization { standard, unit };
enum class SOBasis { t, mu, psi, nijenhuis };

std::string to_string(Normalization n);
std::string to_string(SOBasis b);
Normalization parse_normalization(const std::string& s);
SOBasis parse_so_basis(const std::string& s);

struct TemplateBody {
  enum class Kind { ball, box, segment, point };
  Kind kind = Kind::point;
  Rational radius;             // ball
  std::vector<Rational> sides; // box; segment stores its length here

  static TemplateBody ball(const Rational& r);
  static TemplateBody box(std::vector<Rational> sides);
  static TemplateBody segment(const Rational& length);
  static TemplateBody point();
};

// Val^{SO(n)} = R[t]/(t^{n+1}) with the intrinsic-volume bases.
class EuclideanAlgebra {
 public:
  explicit EuclideanAlgebra(int n);

  int n() const { return n_; }
  const QuotientAlgebra& algebra() const { return algebra_; }

  GradedElement t_power(int i) const;
  GradedElement mu(int i) const;
  GradedElement psi(int i) const;
  GradedElement chi() const { return t_power(0); }
  GradedElement volume() const { return mu(n_); }

  // gamma with basis element = gamma * t^i. Defined for t, mu, psi; the
  // Nijenhuis basis involves c^(i/n) and is handled by nijenhuis_report().
  Scalar scale(SOBasis b, int i) const;
  GradedElement basis_element(SOBasis b, int i) const;
  std::string label(SOBasis b, int i) const;

  // Top-degree functional with vol ~ 1.
  LinearFunctional volume_functional() const;
  // Klain-complement rule mu_k -> mu_{n-k}.
  GradedElement fourier(const GradedElement& x) const;

  // Closed form (alpha_n / 2^{n+1}) sum t^a (x) t^b, extended linearly.
  Tensor kinematic(const GradedElement& phi, Normalization norm = Normalization::standard) const;
  // Pairing-matrix inversion for k(chi) followed by multiplicativity.
  Tensor kinematic_by_pairing(const GradedElement& phi) const;
  // Template computation a(psi_k) = sum C(k,i) psi_i (x) psi_{k-i}.
  Tensor additive(const GradedElement& phi) const;
  // (^ (x) ^) o k o ^ with the standard normalization.
  Tensor additive_by_fourier(const GradedElement& phi) const;

  // Output of an operator applied to the degree-k element of basis b.
  FormulaTable table(const std::string& op, SOBasis b, int k, Normalization norm) const;

 private:
  FormulaTable to_table(const Tensor& t, SOBasis b, const std::string& op, Normalization norm, int k) const;

  int n_;
  QuotientAlgebra algebra_;
};

Scalar intrinsic_volume(const TemplateBody& body, int n, int i);
// Coefficients of r^0..r^n of vol(A_r) = sum omega_{n-i} mu_i(A) r^{n-i}.
std::vector<Scalar> steiner_polynomial(const TemplateBody& body, int n);
Scalar crofton_constant(int n, int k);
// Closed-form C(i+j,i) omega_{i+j} / (omega_i omega_j).
Scalar mu_product_coefficient(int n, int i, int j);
// The same coefficient read off from multiplication in the t basis.
Scalar mu_product_coefficient_via_t(const EuclideanAlgebra& a, int i, int j);
// Cauchy normalization n omega_n / (2 omega_{n-1}).
Scalar cauchy_constant(int n);

struct NijenhuisReport {
  int n = 0;
  // Kinematic constant before any rescaling, alpha_n / 2^{n+1}.
  Scalar pkf_constant;
  // c read off k(theta'_0) at theta'_0 (x) theta'_n; theta_i = c^(i/n) theta'_i.
  Scalar c;
  double c_float = 0.0;
  std::vector<double> theta_scalings;  // c^(i/n) / i! relative to psi_i
  // Coefficient tables in the theta basis (exact; c^(i/n) factors cancel to
  // integer powers of c in every entry).
  std::vector<FormulaTable> kinematic_theta;
  std::vector<FormulaTable> additive_theta;
  bool kinematic_unit = false;
  bool additive_unit = false;
  // Kinematic coefficients that differ from 1, as "k(theta_c): theta_a (x) theta_b = value".
  std::vector<std::string> kinematic_deviations;
};

NijenhuisReport nijenhuis_report(int n);

}  // namespace intgeo
