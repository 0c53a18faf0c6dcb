#include "intgeo/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "intgeo/euclid_so.hpp"
#include "intgeo/hermitian_u.hpp"
#include "intgeo/space_forms.hpp"

namespace intgeo {

namespace {

// Collects the first few failures of a check.
class Tally {
 public:
  Tally(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_.push_back(what);
  }

  CheckResult result(const std::string& pass_detail) const {
    CheckResult r{suite_, name_, failures_ == 0, pass_detail};
    if (failures_ > 0) {
      std::ostringstream os;
      os << failures_ << " of " << count_ << " checks failed";
      for (const auto& m : msgs_) os << "; " << m;
      r.detail = os.str();
    }
    return r;
  }

  int count() const { return count_; }

 private:
  std::string suite_, name_;
  int count_ = 0;
  int failures_ = 0;
  std::vector<std::string> msgs_;
};

std::string str(int v) { return std::to_string(v); }

std::string counted(const Tally& t, const std::string& what) { return str(t.count()) + " exact checks, " + what; }

}  // namespace

CheckResult check_nijenhuis_unity(int max_n) {
  Tally t("so", "nijenhuis-unity");
  for (int n = 1; n <= max_n; ++n) {
    NijenhuisReport r = nijenhuis_report(n);
    std::string dev = r.kinematic_deviations.empty() ? "" : " (" + r.kinematic_deviations.front() + ")";
    t.expect(r.kinematic_unit, "n=" + str(n) + " kinematic coefficients not all 1" + dev);
    t.expect(r.additive_unit, "n=" + str(n) + " additive coefficients not all 1");
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_unit_t_kinematic(int max_n) {
  Tally t("so", "unit-normalized-t-kinematic");
  for (int n = 1; n <= max_n; ++n) {
    EuclideanAlgebra a(n);
    for (int c = 0; c <= n; ++c) {
      FormulaTable tab = a.table("kinematic", SOBasis::t, c, Normalization::unit);
      t.expect(static_cast<int>(tab.terms.size()) == n - c + 1, "n=" + str(n) + " k(t^" + str(c) + ") term count");
      for (const auto& term : tab.terms) {
        t.expect(term.coefficient == Scalar(1), "n=" + str(n) + " k(t^" + str(c) + ") coefficient " +
                                                     term.coefficient.to_string());
      }
    }
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_planar_mu_formula() {
  Tally t("so", "planar-mu-formula");
  EuclideanAlgebra a(2);
  FormulaTable tab = a.table("kinematic", SOBasis::mu, 0, Normalization::standard);
  std::map<std::pair<int, int>, Scalar> got;
  for (const auto& term : tab.terms) got[{term.left_degree, term.right_degree}] = term.coefficient;
  std::map<std::pair<int, int>, Scalar> want{
      {{0, 2}, Scalar(1)}, {{2, 0}, Scalar(1)}, {{1, 1}, Scalar::pi_power(-1, Rational(2))}};
  t.expect(got == want, "k(chi) differs from chi(x)mu2 + mu2(x)chi + (2/pi) mu1(x)mu1");
  // Disk and unit square: pi + 5.
  Scalar pred;
  for (const auto& term : tab.terms) {
    pred += term.coefficient * intrinsic_volume(TemplateBody::ball(1), 2, term.left_degree) *
            intrinsic_volume(TemplateBody::box({1, 1}), 2, term.right_degree);
  }
  t.expect(pred == Scalar::pi_power(1) + Scalar(5), "disk/square value " + pred.to_string());
  return t.result("k(chi) = chi(x)mu2 + mu2(x)chi + (2/pi) mu1(x)mu1");
}

CheckResult check_so_routes(int max_n) {
  Tally t("so", "kinematic-and-additive-routes");
  for (int n = 1; n <= max_n; ++n) {
    EuclideanAlgebra a(n);
    for (int c = 0; c <= n; ++c) {
      t.expect(a.kinematic(a.mu(c)) == a.kinematic_by_pairing(a.mu(c)), "n=" + str(n) + " k(mu_" + str(c) + ")");
      t.expect(a.additive(a.mu(c)) == a.additive_by_fourier(a.mu(c)), "n=" + str(n) + " a(mu_" + str(c) + ")");
    }
  }
  return t.result(counted(t, "closed form vs pairing inversion, template vs Fourier route"));
}

CheckResult check_mu_products(int max_n) {
  Tally t("so", "mu-products");
  for (int n = 1; n <= max_n; ++n) {
    EuclideanAlgebra a(n);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        t.expect(mu_product_coefficient(n, i, j) == mu_product_coefficient_via_t(a, i, j),
                 "n=" + str(n) + " mu_" + str(i) + " mu_" + str(j));
      }
    }
  }
  return t.result(counted(t, "closed form vs t-basis product"));
}

CheckResult check_un_hilbert(int max_n) {
  Tally t("un", "hilbert-function");
  for (int n = 1; n <= max_n; ++n) {
    // Coefficients of (1-x^{n+1})(1-x^{n+2}) / ((1-x)(1-x^2)).
    std::vector<long> series(2 * n + 3, 0);
    for (int d = 0; d < static_cast<int>(series.size()); ++d) series[d] = d / 2 + 1;
    std::vector<long> num(2 * n + 3, 0);
    for (int d = 0; d < static_cast<int>(num.size()); ++d) {
      num[d] = series[d] - (d >= n + 1 ? series[d - n - 1] : 0) - (d >= n + 2 ? series[d - n - 2] : 0) +
               (d >= 2 * n + 3 ? series[d - 2 * n - 3] : 0);
    }
    auto h = UnitaryAlgebra(n).algebra().hilbert_series();
    t.expect(h.size() == static_cast<std::size_t>(2 * n + 1), "n=" + str(n) + " top degree");
    for (int d = 0; d < static_cast<int>(num.size()); ++d) {
      long got = d < static_cast<int>(h.size()) ? h[d] : 0;
      t.expect(got == num[d], "n=" + str(n) + " degree " + str(d));
    }
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_cpn_reduction(int max_n) {
  Tally t("un", "cpn-volume-reduction");
  for (int n = 1; n <= max_n; ++n) {
    UnitaryAlgebra a(n);
    for (int k = 0; k <= n; ++k) {
      GradedElement x = GradedElement::monomial({k, 2 * n - 2 * k}, Scalar(1));
      Scalar c = Scalar(Rational(binomial(2 * n - 2 * k, n - k)) / Rational(binomial(2 * n, n)));
      t.expect(a.algebra().normal_form(x) == GradedElement::monomial({0, 2 * n}, c),
               "n=" + str(n) + " s^" + str(k) + " t^" + str(2 * n - 2 * k));
    }
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_un_presentations(int max_n) {
  Tally t("un", "two-presentations");
  for (int n = 1; n <= max_n; ++n) {
    UnitaryAlgebra rel(n, UnPresentation::relations);
    UnitaryAlgebra ker(n, UnPresentation::evaluation_kernel);
    for (int d = 0; d <= 2 * n; ++d) {
      t.expect(rel.algebra().basis(d) == ker.algebra().basis(d), "n=" + str(n) + " basis in degree " + str(d));
      for (const auto& m : unitary_generators().monomials_of_degree(d)) {
        GradedElement x = GradedElement::monomial(m, Scalar(1));
        t.expect(rel.algebra().normal_form(x) == ker.algebra().normal_form(x), "n=" + str(n) + " normal form");
      }
    }
  }
  return t.result(counted(t, "relations vs evaluation kernel, n<=" + str(max_n)));
}

CheckResult check_pfaff_saalschutz(int max_n) {
  Tally t("un", "pfaff-saalschutz");
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      t.expect(pfaff_saalschutz_residual(n, k).is_zero(), "n=" + str(n) + " k=" + str(k));
    }
  }
  return t.result(counted(t, "residual 0 for 0<=k<=n<=" + str(max_n)));
}

CheckResult check_tasaki_matrices(int max_n) {
  Tally t("un", "tasaki-matrices");
  for (int n = 1; n <= max_n; ++n) {
    UnitaryAlgebra a(n);
    auto tms = a.tasaki_matrices();
    for (const auto& tm : tms) t.expect(tm.entries.is_symmetric(), "n=" + str(n) + " k=" + str(tm.k) + " symmetric");
    for (int l = 0; 2 * l <= n; ++l) {
      const ScalarMatrix& m = tms.at(2 * l).entries;
      t.expect(m.rows() == static_cast<std::size_t>(l + 1), "n=" + str(n) + " size in degree " + str(2 * l));
      if (m.rows() != static_cast<std::size_t>(l + 1)) continue;
      for (int i = 0; i <= l; ++i) {
        for (int j = 0; j <= l; ++j) {
          t.expect(m(i, j) == m(l - i, l - j), "n=" + str(n) + " palindrome in degree " + str(2 * l));
        }
      }
    }
  }
  return t.result(counted(t, "symmetric and palindromic, n<=" + str(max_n)));
}

CheckResult check_fourier_iota(int max_n) {
  Tally t("un", "fourier-involution");
  for (int n = 1; n <= max_n; ++n) {
    UnitaryAlgebra a(n);
    for (int d = 0; d <= 2 * n; ++d) {
      for (const auto& x : basis_elements(a.algebra(), d)) {
        t.expect(a.fourier(a.fourier(x)) == x, "n=" + str(n) + " fourier^2 in degree " + str(d));
        if (d % 2 == 0) {
          t.expect(a.fourier(a.iota(x)) == a.iota(a.fourier(x)), "n=" + str(n) + " fourier iota in degree " + str(d));
          t.expect(a.iota(a.iota(x)) == x, "n=" + str(n) + " iota^2 in degree " + str(d));
        }
      }
    }
  }
  return t.result(counted(t, "on full bases, n<=" + str(max_n)));
}

CheckResult check_u4_first_order() {
  Tally t("un", "u4-first-order");
  UnitaryAlgebra a(4);
  const long bracket[3][2] = {{30, -6}, {-3, 7}, {0, 0}};
  BiKlain cp = a.first_order(4, 5);
  BiKlain add = a.additive_first_order(4, 3);
  bool shape = cp.cp_coefficients.rows() == 3 && cp.cp_coefficients.cols() == 2 && add.coefficients.rows() == 3 &&
               add.coefficients.cols() == 2;
  t.expect(shape, "bracket shape");
  if (shape) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) {
        t.expect(cp.cp_coefficients(i, j) == Scalar::pi_power(-4, Rational(mpz_class(bracket[i][j]), mpz_class(5))),
                 "CP^4 entry " + cp.cp_coefficients(i, j).to_string());
        t.expect(add.coefficients(i, j) == Scalar(Rational(mpz_class(bracket[i][j]), mpz_class(120))),
                 "additive entry " + add.coefficients(i, j).to_string());
      }
    }
  }
  return t.result("(1/(5 pi^4))[30,-6,-3,7] and (1/120)[30,-6,-3,7]");
}

CheckResult check_real_space_forms(int max_n, int max_l) {
  Tally t("spaceform", "real-space-forms");
  for (int n = 1; n <= max_n; ++n) {
    RealSpaceForm a(n);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        t.expect(a.multiply(a.power(a.phi(), j), a.tau(i)) == a.tau(i + j),
                 "n=" + str(n) + " phi^" + str(j) + " tau_" + str(i));
      }
    }
    RealElement rhs = a.tau(0);
    RealElement p2 = a.multiply(a.phi(), a.phi());
    for (int k = 0; k <= n; ++k) rhs[k] += p2[k] * LambdaScalar::lambda_power(1, Scalar(Rational(1, 4)));
    t.expect(a.chi() == rhs, "n=" + str(n) + " chi = tau_0 + (lambda/4) phi^2");
    t.expect(a.phi_via_t() == a.phi(), "n=" + str(n) + " t-phi round trip");
    for (int c = 0; c <= n; ++c) {
      bool agree = true;
      try {
        a.kinematic(a.tau(c));
      } catch (const ConsistencyError&) {
        agree = false;
      }
      t.expect(agree, "n=" + str(n) + " kinematic routes for tau_" + str(c));
    }
  }
  RealSpaceForm s(2 * max_l);
  RealElement t2 = s.multiply(s.t(), s.t());
  for (int l = 0; l <= max_l; ++l) {
    t.expect(s.evaluate_sphere(t2, 2 * l) == Scalar(8 * l), "t^2(S^" + str(2 * l) + ")");
  }
  return t.result(counted(t, "n<=" + str(max_n) + ", t^2(S^{2l}) = 8l for l<=" + str(max_l)));
}

CheckResult check_bfs(int max_n) {
  Tally t("spaceform", "bfs-equals-cp-kernel");
  for (int n = 1; n <= max_n; ++n) {
    BfsComparison c = compare_bfs_with_cp_kernel(n);
    t.expect(c.equal(), "n=" + str(n) + " ranks " + str(c.bfs_rank) + "/" + str(c.kernel_rank) + "/" +
                            str(c.joint_rank));
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_chapoton(int max_m) {
  Tally t("spaceform", "chapoton");
  ChapotonResult r = chapoton_check(max_m);
  t.expect(r.ok(), "g differs from C(4m+1,m+1) - 9 C(4m+1,m-1)");
  if (max_m >= 3) {
    t.expect(r.g[1] == Rational(1) && r.g[2] == Rational(3) && r.g[3] == Rational(13), "leading terms 1, 3, 13");
  }
  return t.result(counted(t, "m<=" + str(max_m)));
}

CheckResult check_fbar(int max_n) {
  Tally t("spaceform", "fbar-relations");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& r : fbar_relations_check(n, 2 * n)) {
      t.expect(r.residual.is_zero(), "n=" + str(n) + " fbar_" + str(r.i));
    }
  }
  return t.result(counted(t, "n<=" + str(max_n)));
}

CheckResult check_mc_suite(const mc::RunOptions& opt, double max_abs_z, std::vector<mc::MCEstimate>* runs) {
  Tally t("mc", "default-suite");
  std::vector<mc::MCEstimate> out = mc::default_suite(opt);
  double worst = 0.0;
  for (const auto& e : out) {
    worst = std::max(worst, std::abs(e.z));
    std::ostringstream os;
    os << e.test << " z=" << e.z;
    t.expect(e.prediction.has_value() && std::abs(e.z) <= max_abs_z, os.str());
  }
  if (runs) *runs = out;
  std::ostringstream os;
  os << out.size() << " runs at " << opt.samples << " samples, max |z| = " << worst;
  return t.result(os.str());
}

std::vector<std::string> check_suite_names() { return {"so", "un", "spaceform", "mc"}; }

std::vector<CheckResult> run_suite(const std::string& suite, int max_dim, const mc::RunOptions& mc_opt) {
  if (max_dim < 1) throw DomainError("max dimension must be positive");
  if (suite == "so") {
    return {check_unit_t_kinematic(max_dim), check_planar_mu_formula(), check_so_routes(max_dim),
            check_mu_products(max_dim)};
  }
  if (suite == "un") {
    return {check_un_hilbert(max_dim),       check_cpn_reduction(max_dim),   check_un_presentations(max_dim),
            check_pfaff_saalschutz(40),      check_tasaki_matrices(max_dim), check_fourier_iota(max_dim),
            check_u4_first_order()};
  }
  if (suite == "spaceform") {
    return {check_real_space_forms(max_dim, max_dim), check_bfs(std::min(max_dim, 5)), check_chapoton(12),
            check_fbar(std::min(max_dim, 4))};
  }
  if (suite == "mc") return {check_mc_suite(mc_opt, 4.0)};
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace intgeo
