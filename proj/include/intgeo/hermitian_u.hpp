#pragma once

#include <string>
#include <vector>

#include "intgeo/euclid_so.hpp"
#include "intgeo/formula_table.hpp"
#include "intgeo/graded_algebra.hpp"

namespace intgeo {

enum class UnPresentation { relations, evaluation_kernel };
enum class UnBasis { monomial, tasaki, hermitian, fourier_tasaki };

std::string to_string(UnBasis b);
UnBasis parse_un_basis(const std::string& s);

// Symmetric polynomial in cos^2 of the multiple Kahler angles, stored on the
// elementary symmetric functions sigma_{p,0..p}. For degree k <= n the
// variables belong to E itself; for k > n they belong to E^perp and the
// remaining k - n angles of E are zero.
struct KlainPolynomial {
  int n = 0;
  int degree = 0;
  int p = 0;
  bool complement = false;
  std::vector<Scalar> coeffs;

  // Value on the orbit E^{k,l}: l complex lines plus an isotropic complement.
  Scalar at_vertex(int l) const;
  double evaluate(const std::vector<double>& cos2) const;
  std::string to_latex(const std::string& var) const;
  friend bool operator==(const KlainPolynomial&, const KlainPolynomial&) = default;
};

struct TasakiMatrix {
  int n = 0;
  int k = 0;
  ScalarMatrix entries;
};

// Bidegree (k,l) component of an operator with each leg expanded in Klain
// coordinates; rows index sigma_{p_left, i}, columns sigma_{p_right, j}.
struct BiKlain {
  int n = 0;
  int k = 0;
  int l = 0;
  int p_left = 0;
  int p_right = 0;
  bool left_complement = false;
  bool right_complement = false;
  ScalarMatrix coefficients;
  // Same kernel for the transfer to CP^n, i.e. divided by vol(CP^n) = pi^n/n!.
  ScalarMatrix cp_coefficients;
  std::string to_string() const;
};

// Weighted components f_1..f_max of log(1+s+t) over generators (s:2, t:1).
std::vector<Polynomial<Rational>> fk_polynomials(int max_k);
GeneratorSet unitary_generators();

// Even polynomial in s,t: rewrite in t^2 and u = 4s - t^2, swap them, expand back.
Polynomial<Rational> iota_polynomial(const Polynomial<Rational>& x);

class UnitaryAlgebra {
 public:
  explicit UnitaryAlgebra(int n, UnPresentation p = UnPresentation::relations);

  int n() const { return n_; }
  const QuotientAlgebra& algebra() const { return algebra_; }

  GradedElement s() const;
  GradedElement t() const;
  GradedElement u() const;
  GradedElement chi() const;
  GradedElement volume() const;  // mu_{2n,n}, the Lebesgue volume
  // Euclidean intrinsic volume mu_d = pi^d / (d! omega_d) t^d.
  GradedElement euclidean_mu(int d) const;
  GradedElement tasaki(int k, int q) const;
  GradedElement hermitian(int k, int q) const;

  LinearFunctional ev_disk() const;
  Scalar evaluate_top(const GradedElement& x) const { return ev_disk().apply(algebra_, x); }

  KlainPolynomial klain(const GradedElement& x, int k) const;
  GradedElement from_klain(const KlainPolynomial& kp) const;
  GradedElement fourier(const GradedElement& x) const;
  // Even-degree involution t^2 <-> u.
  GradedElement iota(const GradedElement& x) const;

  // Basis of degree d in the given display family, as elements.
  std::vector<GradedElement> basis(int d, UnBasis b) const;
  std::vector<std::string> labels(int d, UnBasis b) const;
  // Columns: NF coordinates of basis(d, b).
  ScalarMatrix basis_matrix(int d, UnBasis b) const;
  // Coordinates of x's degree-d part in basis b.
  std::vector<Scalar> coordinates(const GradedElement& x, int d, UnBasis b) const;
  // Matrix taking b_from coordinates to b_to coordinates in degree d.
  ScalarMatrix basis_change(int d, UnBasis from, UnBasis to) const;

  // M_ij = ev(nu_i * fourier(nu_j)) with nu the Tasaki basis in degree k.
  ScalarMatrix tasaki_pairing(int k) const;

  Tensor kinematic_chi() const;
  Tensor kinematic(const GradedElement& phi) const;
  Tensor additive(const GradedElement& phi) const;
  std::vector<TasakiMatrix> tasaki_matrices() const;

  BiKlain bi_klain(const Tensor& t, int k, int l) const;
  BiKlain first_order(int k, int l) const;
  // Bidegree (k,l) of a(mu_{k+l}), the Minkowski-sum counterpart.
  BiKlain additive_first_order(int k, int l) const;

  FormulaTable table(const Tensor& t, UnBasis b, const std::string& op, const std::string& input_label,
                     int input_degree, int input_index) const;
  // The operator applied to every element of basis b in degree k.
  std::vector<FormulaTable> tables(const std::string& op, UnBasis b, int k) const;

 private:
  int klain_vars(int k) const;
  ScalarMatrix klain_matrix(int k) const;
  const ScalarMatrix& klain_inverse(int k) const;

  int n_;
  QuotientAlgebra algebra_;
  std::vector<ScalarMatrix> klain_;
  std::vector<ScalarMatrix> klain_inv_;
  mutable Tensor kchi_;
  mutable bool kchi_ready_ = false;
};

// Residual of the special Pfaff-Saalschutz identity; zero when it holds.
Rational pfaff_saalschutz_residual(int n, int k);

// c with mu_{k,0} = c f_k in Val^{U(n)}, for 1 <= k <= n.
Scalar mu_k0_constant(const UnitaryAlgebra& a, int k);

}  // namespace intgeo
