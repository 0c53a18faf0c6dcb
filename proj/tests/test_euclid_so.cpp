#include <functional>
#include <map>
#include <tuple>

#include "doctest.h"
#include "intgeo/euclid_so.hpp"
#include "test_support.hpp"

using namespace intgeo;

namespace {

Scalar pi(int m = 1, Rational c = Rational(1)) { return Scalar::pi_power(m, c); }
Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Scalar coef(const Tensor& t, int a, int b) { return t.coefficient(a, b, 0, 0); }

// Tube volume of a box by summing over faces: a face spanned by the
// coordinate directions S contributes prod_{i in S} a_i times the orthant
// fraction 2^{-(n-|S|)} of an (n-|S|)-ball, and there are 2^{n-|S|} such faces.
std::vector<Scalar> box_tube_by_faces(const std::vector<Rational>& sides, int n) {
  std::vector<Rational> a = sides;
  a.resize(n, Rational(0));
  std::vector<Scalar> out(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Rational prod(1);
    int k = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prod *= a[i];
        ++k;
      }
    }
    out[n - k] += omega(n - k) * Scalar(prod);
  }
  return out;
}

// omega_n (R + r)^n expanded in r.
std::vector<Scalar> ball_tube(const Rational& R, int n) {
  std::vector<Scalar> out(n + 1);
  for (int j = 0; j <= n; ++j) out[j] = omega(n) * Scalar(Rational(binomial(n, j)) * R.pow(n - j));
  return out;
}

}  // namespace

TEST_CASE("t and mu conversions") {
  EuclideanAlgebra a(3);
  CHECK(a.scale(SOBasis::mu, 1) == pi(1, q(1, 2)));  // mu_1 = (pi/2) t
  CHECK(a.scale(SOBasis::mu, 0) == Scalar(1));
  // t^2 = (2/pi) mu_2.
  CHECK(a.scale(SOBasis::mu, 2).inverse() == pi(-1, 2));
  for (int n = 1; n <= 8; ++n) {
    EuclideanAlgebra b(n);
    for (int i = 0; i <= n; ++i) {
      // psi_i(B_1) = 1.
      CHECK(b.scale(SOBasis::psi, i) * intrinsic_volume(TemplateBody::ball(1), n, i) == b.scale(SOBasis::mu, i));
    }
  }
}

TEST_CASE("intrinsic volumes of templates") {
  CHECK(intrinsic_volume(TemplateBody::ball(1), 2, 1) == pi());
  CHECK(intrinsic_volume(TemplateBody::ball(q(3, 2)), 3, 0) == Scalar(1));
  CHECK(intrinsic_volume(TemplateBody::box({1, 1}), 2, 1) == Scalar(2));
  CHECK(intrinsic_volume(TemplateBody::box({1, 1}), 2, 2) == Scalar(1));
  CHECK(intrinsic_volume(TemplateBody::segment(q(5, 2)), 3, 1) == Scalar(q(5, 2)));
  CHECK(intrinsic_volume(TemplateBody::segment(q(5, 2)), 3, 2) == Scalar(0));
  CHECK(intrinsic_volume(TemplateBody::point(), 4, 0) == Scalar(1));
  CHECK_THROWS_AS(intrinsic_volume(TemplateBody::point(), 2, 3), DomainError);
  CHECK_THROWS_AS(intrinsic_volume(TemplateBody::box({1, 1, 1}), 2, 1), DomainError);
  // mu_1(B_1 in R^2) is half the perimeter.
  CHECK(intrinsic_volume(TemplateBody::ball(1), 2, 1) == Scalar(q(1, 2)) * pi(1, 2));
}

TEST_CASE("Steiner polynomials") {
  auto sq = steiner_polynomial(TemplateBody::box({1, 1}), 2);
  CHECK(sq[0] == Scalar(1));
  CHECK(sq[1] == Scalar(4));
  CHECK(sq[2] == pi());
  auto pt = steiner_polynomial(TemplateBody::point(), 3);
  CHECK(pt[3] == pi(1, q(4, 3)));
  CHECK(pt[0].is_zero());
  testing_support::Gen g(42);
  for (int n = 1; n <= 8; ++n) {
    for (int it = 0; it < 5; ++it) {
      Rational R(mpz_class(g.integer(1, 9)), mpz_class(g.integer(1, 9)));
      CHECK(steiner_polynomial(TemplateBody::ball(R), n) == ball_tube(R, n));
      std::vector<Rational> sides;
      for (int i = 0; i < n; ++i) sides.emplace_back(mpz_class(g.integer(1, 9)), mpz_class(g.integer(1, 9)));
      CHECK(steiner_polynomial(TemplateBody::box(sides), n) == box_tube_by_faces(sides, n));
    }
  }
}

TEST_CASE("planar principal kinematic formula in the mu basis") {
  EuclideanAlgebra a(2);
  FormulaTable t = a.table("kinematic", SOBasis::mu, 0, Normalization::standard);
  REQUIRE(t.terms.size() == 3);
  std::map<std::pair<int, int>, Scalar> got;
  for (const auto& term : t.terms) got[{term.left_degree, term.right_degree}] = term.coefficient;
  CHECK(got[{0, 2}] == Scalar(1));
  CHECK(got[{2, 0}] == Scalar(1));
  CHECK(got[{1, 1}] == pi(-1, 2));
  // Classical oracle: area(A) + area(B) + P_A P_B / (2 pi) for disk and unit square.
  Scalar pred;
  for (const auto& term : t.terms) {
    pred += term.coefficient * intrinsic_volume(TemplateBody::ball(1), 2, term.left_degree) *
            intrinsic_volume(TemplateBody::box({1, 1}), 2, term.right_degree);
  }
  CHECK(pred == pi() + Scalar(5));
}

TEST_CASE("kinematic of volume is vol (x) vol") {
  for (int n = 1; n <= 8; ++n) {
    EuclideanAlgebra a(n);
    Tensor k = a.kinematic(a.volume());
    CHECK(k == tensor_product(a.algebra(), a.volume(), a.volume()));
  }
}

TEST_CASE("closed form agrees with pairing inversion") {
  for (int n = 1; n <= 8; ++n) {
    EuclideanAlgebra a(n);
    for (int c = 0; c <= n; ++c) {
      CHECK(a.kinematic(a.t_power(c)) == a.kinematic_by_pairing(a.t_power(c)));
    }
  }
}

TEST_CASE("unit normalization makes the t-basis constants one") {
  for (int n = 1; n <= 10; ++n) {
    EuclideanAlgebra a(n);
    for (int c = 0; c <= n; ++c) {
      FormulaTable t = a.table("kinematic", SOBasis::t, c, Normalization::unit);
      CHECK(static_cast<int>(t.terms.size()) == n - c + 1);
      for (const auto& term : t.terms) {
        CHECK(term.coefficient == Scalar(1));
        CHECK(term.left_degree + term.right_degree == n + c);
      }
    }
  }
}

TEST_CASE("additive template formula and the Fourier route") {
  EuclideanAlgebra a(4);
  Tensor t = a.additive(a.psi(2));
  CHECK(t == tensor_product(a.algebra(), a.psi(0), a.psi(2)) + tensor_product(a.algebra(), a.psi(1), a.psi(1)) * Scalar(2) +
                 tensor_product(a.algebra(), a.psi(2), a.psi(0)));
  CHECK(a.additive(a.psi(0)) == tensor_product(a.algebra(), a.chi(), a.chi()));
  for (int n = 1; n <= 8; ++n) {
    EuclideanAlgebra b(n);
    for (int k = 0; k <= n; ++k) CHECK(b.additive(b.t_power(k)) == b.additive_by_fourier(b.t_power(k)));
    for (int k = 0; k <= n; ++k) CHECK(b.fourier(b.fourier(b.t_power(k))) == b.t_power(k));
  }
  // n = 2 in volumes: vol(A) + vol(B) + P_A P_B / (2 pi).
  EuclideanAlgebra p(2);
  FormulaTable tab = p.table("additive", SOBasis::mu, 2, Normalization::standard);
  std::map<std::pair<int, int>, Scalar> got;
  for (const auto& term : tab.terms) got[{term.left_degree, term.right_degree}] = term.coefficient;
  CHECK(got[{0, 2}] == Scalar(1));
  CHECK(got[{2, 0}] == Scalar(1));
  CHECK(got[{1, 1}] == pi(-1, 2));  // (2/pi) mu_1 mu_1 = P_A P_B / (2 pi)
}

TEST_CASE("coassociativity, cocommutativity, grading and multiplicativity") {
  for (int n = 1; n <= 6; ++n) {
    EuclideanAlgebra a(n);
    for (auto op : {0, 1}) {
      auto apply = [&](int c) { return op == 0 ? a.kinematic(a.t_power(c)) : a.additive(a.t_power(c)); };
      for (int c = 0; c <= n; ++c) {
        Tensor k = apply(c);
        CHECK(k.swapped() == k);
        for (const auto& [key, block] : k.blocks()) {
          if (op == 0) CHECK(key.first + key.second == n + c);
          if (op == 1) CHECK(key.first + key.second == c);
        }
        // (k (x) id) k versus (id (x) k) k as maps into degree triples.
        std::map<std::tuple<int, int, int>, Scalar> left, right;
        for (const auto& [key, block] : k.blocks()) {
          Tensor kl = apply(key.first);
          for (const auto& [k2, b2] : kl.blocks()) left[{k2.first, k2.second, key.second}] += block(0, 0) * b2(0, 0);
          Tensor kr = apply(key.second);
          for (const auto& [k2, b2] : kr.blocks()) right[{key.first, k2.first, k2.second}] += block(0, 0) * b2(0, 0);
        }
        CHECK(left == right);
      }
    }
    testing_support::Gen g(static_cast<unsigned long long>(n));
    for (int it = 0; it < 5; ++it) {
      GradedElement phi, psi;
      for (int i = 0; i <= n; ++i) {
        phi += a.t_power(i) * Scalar(g.rational());
        psi += a.t_power(i) * Scalar(g.rational());
      }
      Tensor lhs = a.kinematic(a.algebra().multiply(phi, psi));
      Tensor rhs = multiply_tensor(a.algebra(), phi, a.chi(), a.kinematic(psi));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("mu product coefficients by two routes") {
  CHECK(mu_product_coefficient(2, 1, 1) == pi(1, q(1, 2)));
  CHECK(mu_product_coefficient(3, 0, 2) == Scalar(1));
  CHECK(mu_product_coefficient(3, 1, 2) == Scalar(2));
  CHECK_THROWS_AS(mu_product_coefficient(2, 2, 1), DomainError);
  for (int n = 1; n <= 10; ++n) {
    EuclideanAlgebra a(n);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) CHECK(mu_product_coefficient(n, i, j) == mu_product_coefficient_via_t(a, i, j));
    }
  }
}

TEST_CASE("Crofton and Cauchy constants") {
  CHECK(crofton_constant(2, 1) == pi(1, q(1, 2)));
  CHECK(crofton_constant(3, 2) == Scalar(2));
  CHECK(crofton_constant(5, 0) == Scalar(1));
  // Ball template: mu_k(B_1) = c * omega_k (measure of (n-k)-flats meeting B_1).
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      CHECK(crofton_constant(n, k) * omega(k) == intrinsic_volume(TemplateBody::ball(1), n, k));
    }
    // Ball: projection volume omega_{n-1} reproduces mu_{n-1}(B_1).
    CHECK(cauchy_constant(n) * omega(n - 1) == intrinsic_volume(TemplateBody::ball(1), n, n - 1));
  }
  CHECK(cauchy_constant(2) == pi(1, q(1, 2)));
  CHECK(cauchy_constant(3) == Scalar(2));
}

TEST_CASE("Nijenhuis constants") {
  auto r1 = nijenhuis_report(1);
  CHECK(r1.pkf_constant == pi(1, q(1, 2)));
  CHECK(r1.kinematic_unit);
  CHECK(r1.additive_unit);
  auto r2 = nijenhuis_report(2);
  CHECK(r2.kinematic_unit);
  CHECK(r2.additive_unit);
  // From n = 3 on, one rescaling cannot make both coproducts unit: in
  // k(theta_1) the coefficients of theta_1 (x) theta_3 and theta_2 (x) theta_2
  // have ratio pi^2 / 8.
  auto r3 = nijenhuis_report(3);
  CHECK(r3.additive_unit);
  CHECK_FALSE(r3.kinematic_unit);
  Scalar c13, c22;
  for (const auto& term : r3.kinematic_theta[1].terms) {
    if (term.left_degree == 1) c13 = term.coefficient;
    if (term.left_degree == 2) c22 = term.coefficient;
  }
  CHECK(c22 / c13 == pi(2, q(1, 8)));
  for (int n = 1; n <= 10; ++n) {
    auto r = nijenhuis_report(n);
    CHECK(r.pkf_constant == alpha(n) / Scalar(pow2(n + 1)));
    CHECK(r.additive_unit);
  }
}
