#include "doctest.h"
#include "intgeo/graded_algebra.hpp"
#include "test_support.hpp"

using namespace intgeo;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }
using P = Polynomial<Rational>;

GeneratorSet st() { return GeneratorSet({"s", "t"}, {2, 1}); }
P mono(int s, int t, Rational c = Rational(1)) { return P::monomial({s, t}, c); }

// Weighted components of log(1+s+t), computed here independently of the
// library by expanding sum (-1)^{m+1}(s+t)^m/m with binomials.
P log_component(int k) {
  P out;
  for (int m = 1; m <= k; ++m) {
    for (int a = 0; a <= m; ++a) {
      int b = m - a;
      if (2 * a + b != k) continue;
      Rational c = Rational(binomial(m, a)) / Rational(m);
      if (m % 2 == 0) c = -c;
      out.add_term({a, b}, c);
    }
  }
  return out;
}

std::vector<int> sigma_coefficients(int n) {
  // (1-x^{n+1})(1-x^{n+2}) / ((1-x)(1-x^2)) by long division on integers.
  std::vector<long> num(2 * n + 4, 0);
  num[0] = 1;
  num[n + 1] -= 1;
  num[n + 2] -= 1;
  num[2 * n + 3] += 1;
  // divide by (1-x): prefix sums; by (1-x^2): stride-2 prefix sums.
  for (std::size_t i = 1; i < num.size(); ++i) num[i] += num[i - 1];
  for (std::size_t i = 2; i < num.size(); ++i) num[i] += num[i - 2];
  return std::vector<int>(num.begin(), num.begin() + 2 * n + 1);
}

}  // namespace

TEST_CASE("monomial enumeration prefers heavy generators first") {
  auto m = st().monomials_of_degree(4);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == Monomial{2, 0});
  CHECK(m[1] == Monomial{1, 2});
  CHECK(m[2] == Monomial{0, 4});
  CHECK(st().degree({1, 3}) == 5);
  CHECK(st().render({1, 2}) == "st^2");
}

TEST_CASE("truncated polynomial ring") {
  GeneratorSet g({"t"}, {1});
  auto a = QuotientAlgebra::from_relations(g, {P::monomial({3})}, 4);
  CHECK(a.hilbert_series() == std::vector<int>{1, 1, 1, 0, 0});
  CHECK(a.vanishes_above());
  CHECK(a.normal_form(P::monomial({3})).is_zero());
  CHECK(a.multiply(P::monomial({2}), P::monomial({1})).is_zero());
}

TEST_CASE("non-homogeneous generator rejected") {
  CHECK_THROWS_AS(QuotientAlgebra::from_relations(st(), {mono(1, 0) + mono(0, 1)}, 4), DomainError);
}

TEST_CASE("unitary quotient n=2 by independent log expansion") {
  P f3 = log_component(3), f4 = log_component(4);
  CHECK(f3 == mono(0, 3, q(1, 3)) - mono(1, 1));
  CHECK(f4 == mono(2, 0, q(-1, 2)) + mono(1, 2) - mono(0, 4, q(1, 4)));
  auto a = QuotientAlgebra::from_relations(st(), {f3, f4}, 4);
  CHECK(a.hilbert_series() == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(a.vanishes_above());
  // Alesker basis: low powers of s.
  CHECK(a.basis(2) == std::vector<Monomial>{{0, 2}, {1, 0}});
  CHECK(a.basis(4) == std::vector<Monomial>{{0, 4}});
  CHECK(a.normal_form(mono(1, 1)) == mono(0, 3, q(1, 3)));
  CHECK(a.normal_form(mono(0, 2)) == mono(0, 2));
  // s^2 = 2 s t^2 - t^4/2 = 2 t^4/3 - t^4/2 = t^4/6.
  CHECK(a.multiply(mono(1, 0), mono(1, 0)) == mono(0, 4, q(1, 6)));
  CHECK(a.multiply(mono(0, 1), mono(0, 2)) == mono(0, 3));
  CHECK(a.multiply(P::constant(2, Rational(1)), mono(1, 0)) == mono(1, 0));
}

TEST_CASE("Hilbert functions against the Poincare series") {
  for (int n = 1; n <= 8; ++n) {
    auto a = QuotientAlgebra::from_relations(st(), {log_component(n + 1), log_component(n + 2)}, 2 * n);
    auto h = a.hilbert_series();
    CHECK(h == sigma_coefficients(n));
    for (int k = 0; k <= 2 * n; ++k) CHECK(h[k] == h[2 * n - k]);
    CHECK(a.vanishes_above());
  }
  auto a3 = QuotientAlgebra::from_relations(st(), {log_component(4), log_component(5)}, 6);
  CHECK(a3.hilbert_series() == std::vector<int>{1, 1, 2, 2, 2, 1, 1});
}

TEST_CASE("reduction is idempotent and multiplication associative") {
  testing_support::Gen g(99);
  for (int n = 2; n <= 5; ++n) {
    auto a = QuotientAlgebra::from_relations(st(), {log_component(n + 1), log_component(n + 2)}, 2 * n);
    for (int d = 0; d <= 2 * n; ++d) {
      for (const Monomial& m : a.degree_data(d).monomials) {
        P nf = a.normal_form(P::monomial(m));
        CHECK(a.normal_form(nf) == nf);
      }
      for (const Monomial& b : a.basis(d)) CHECK(a.normal_form(P::monomial(b)) == P::monomial(b));
    }
    for (int it = 0; it < 40; ++it) {
      auto pick = [&]() {
        int d = static_cast<int>(g.integer(0, n));
        auto b = a.basis(d);
        return P::monomial(b[g.integer(0, static_cast<long>(b.size()) - 1)], g.rational());
      };
      P x = pick(), y = pick(), z = pick();
      CHECK(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)));
      CHECK(a.multiply(x, y) == a.multiply(y, x));
    }
    // Ideal elements reduce to zero.
    CHECK(a.normal_form(log_component(n + 1) * mono(1, 0)).is_zero());
  }
}

TEST_CASE("cofactors reconstruct m - NF(m)") {
  int n = 3;
  std::vector<P> ideal = {log_component(n + 1), log_component(n + 2)};
  auto a = QuotientAlgebra::from_relations(st(), ideal, 2 * n);
  for (int d = 0; d <= 2 * n; ++d) {
    const auto& dd = a.degree_data(d);
    for (std::size_t i = 0; i < dd.monomials.size(); ++i) {
      P lhs = P::monomial(dd.monomials[i]) - a.normal_form(P::monomial(dd.monomials[i]));
      P rhs;
      for (std::size_t k = 0; k < dd.multiples.size(); ++k) {
        Rational c = dd.cofactors(i, k);
        if (c.is_zero()) continue;
        rhs += P::monomial(dd.multiples[k].first) * ideal[dd.multiples[k].second] * c;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("truncation overflow when the quotient does not vanish") {
  GeneratorSet g({"t"}, {1});
  auto a = QuotientAlgebra::from_relations(g, {P::monomial({5})}, 2);
  CHECK_FALSE(a.vanishes_above());
  CHECK_THROWS_AS(a.normal_form(P::monomial({3})), TruncationOverflow);
}

TEST_CASE("exact inversion") {
  CHECK(invert_exact(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
  ScalarMatrix m(1, 1);
  m(0, 0) = Scalar::pi_power(-1, 2);
  CHECK(invert_exact(m)(0, 0) == Scalar::pi_power(1, q(1, 2)));
  testing_support::Gen g(5);
  int tested = 0;
  while (tested < 30) {
    RationalMatrix r(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) r(i, j) = g.rational(9);
    }
    if (rank(r) < 4) {
      CHECK_THROWS_AS(invert_exact(r), SingularMatrix);
      continue;
    }
    RationalMatrix inv = invert_exact(r);
    CHECK(r * inv == RationalMatrix::identity(4));
    CHECK(inv * r == RationalMatrix::identity(4));
    ++tested;
  }
  RationalMatrix sing(2, 2);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK_THROWS_AS(invert_exact(sing), SingularMatrix);
  // pi-structured matrix: entries pi^(r_i + c_j).
  ScalarMatrix s(2, 2);
  s(0, 0) = Scalar::pi_power(-2, 12);
  s(0, 1) = Scalar::pi_power(-2, 4);
  s(1, 0) = Scalar::pi_power(-2, 4);
  s(1, 1) = Scalar::pi_power(-2, 2);
  ScalarMatrix si = invert_exact(s);
  CHECK(s * si == ScalarMatrix::identity(2));
  ScalarMatrix bad(2, 2);
  bad(0, 0) = Scalar::pi_power(1, 1);
  bad(0, 1) = Scalar::pi_power(0, 1);
  bad(1, 0) = Scalar::pi_power(0, 1);
  bad(1, 1) = Scalar::pi_power(0, 1);
  CHECK_THROWS_AS(invert_exact(bad), UnsupportedInverse);
}

TEST_CASE("pairing matrices") {
  // SO(2): t^2 = (2/pi) vol.
  GeneratorSet g({"t"}, {1});
  auto so2 = QuotientAlgebra::from_relations(g, {P::monomial({3})}, 2);
  LinearFunctional vol({{2, {Scalar::pi_power(-1, 2)}}});
  ScalarMatrix m = pairing_matrix(so2, 1, vol);
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == Scalar::pi_power(-1, 2));
  ScalarMatrix m0 = pairing_matrix(so2, 0, vol);
  CHECK(m0(0, 0) == Scalar::pi_power(-1, 2));
  CHECK(invert_exact(m)(0, 0) == Scalar::pi_power(1, q(1, 2)));

  // U(2) degree 2 on {t^2, s} with t^4 -> 12/pi^2.
  auto u2 = QuotientAlgebra::from_relations(st(), {log_component(3), log_component(4)}, 4);
  LinearFunctional ev({{4, {Scalar::pi_power(-2, 12)}}});
  ScalarMatrix p = pairing_matrix(u2, 2, ev);
  CHECK(p(0, 0) == Scalar::pi_power(-2, 12));
  CHECK(p(0, 1) == Scalar::pi_power(-2, 4));
  CHECK(p(1, 0) == Scalar::pi_power(-2, 4));
  CHECK(p(1, 1) == Scalar::pi_power(-2, 2));
  CHECK(p.is_symmetric());
}

TEST_CASE("tensor swap and products") {
  GeneratorSet g({"t"}, {1});
  auto a = QuotientAlgebra::from_relations(g, {P::monomial({3})}, 2);
  auto t1 = lift<Scalar>(P::monomial({1}));
  auto one = lift<Scalar>(P::monomial({0}));
  Tensor x = tensor_product(a, one, t1);
  CHECK(x.swapped() == tensor_product(a, t1, one));
  Tensor y = multiply_tensor(a, t1, one, x);
  CHECK(y == tensor_product(a, t1, t1));
  CHECK(multiply_tensor(a, t1, t1, y) == tensor_product(a, t1 * t1, t1 * t1));
  CHECK(multiply_tensor(a, t1 * t1, one, y).is_zero());
}
