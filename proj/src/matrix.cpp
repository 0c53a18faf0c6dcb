#include "intgeo/matrix.hpp"

#include <optional>
#include <queue>

namespace intgeo {

RrefResult rref(const RationalMatrix& input, bool track_transform) {
  RrefResult res;
  res.reduced = input;
  RationalMatrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (track_transform) res.transform = RationalMatrix::identity(rows);
  RationalMatrix& t = res.transform;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      if (track_transform) {
        for (std::size_t j = 0; j < rows; ++j) std::swap(t(p, j), t(r, j));
      }
    }
    Rational inv = a(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    if (track_transform) {
      for (std::size_t j = 0; j < rows; ++j) t(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
      if (track_transform) {
        for (std::size_t j = 0; j < rows; ++j) {
          if (!t(r, j).is_zero()) t(i, j) -= f * t(r, j);
        }
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix nullspace(const RationalMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  RationalMatrix basis(free_cols.size(), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis(k, f) = Rational(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(k, r.pivots[i]) = -r.reduced(i, f);
  }
  return basis;
}

RationalMatrix invert_exact(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("invert_exact: matrix not square");
  // Clear denominators row by row: m = diag(1/L) * a.
  std::vector<mpz_class> row_scale(n, 1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_class d = m(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    row_scale[i] = l;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    a[i][n + i] = 1;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw SingularMatrix("invert_exact: matrix is singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < 2 * n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  RationalMatrix x(n, n);
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t col = 0; col < n; ++col) {
      Rational acc(a[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (a[ii][j] != 0) acc -= Rational(a[ii][j]) * x(j, col);
      }
      x(ii, col) = acc / Rational(a[ii][ii]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x(i, j) *= Rational(row_scale[j]);
  }
  return x;
}

ScalarMatrix invert_exact(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("invert_exact: matrix not square");
  std::vector<std::optional<int>> r(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_zero() && !m(i, j).is_single_term()) {
        throw UnsupportedInverse("invert_exact: entry is not a single pi-power term");
      }
    }
  }
  // Propagate exponent offsets over the bipartite graph of nonzero entries.
  for (std::size_t root = 0; root < n; ++root) {
    if (r[root]) continue;
    r[root] = 0;
    std::queue<std::pair<bool, std::size_t>> q;
    q.push({true, root});
    while (!q.empty()) {
      auto [is_row, k] = q.front();
      q.pop();
      for (std::size_t o = 0; o < n; ++o) {
        const Scalar& e = is_row ? m(k, o) : m(o, k);
        if (e.is_zero()) continue;
        int p = e.single_pi_pow();
        if (is_row) {
          int want = p - *r[k];
          if (!c[o]) {
            c[o] = want;
            q.push({false, o});
          } else if (*c[o] != want) {
            throw UnsupportedInverse("invert_exact: pi exponents do not factor");
          }
        } else {
          int want = p - *c[k];
          if (!r[o]) {
            r[o] = want;
            q.push({true, o});
          } else if (*r[o] != want) {
            throw UnsupportedInverse("invert_exact: pi exponents do not factor");
          }
        }
      }
    }
  }
  RationalMatrix rat(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) rat(i, j) = m(i, j).single_coefficient();
    }
  }
  RationalMatrix inv = invert_exact(rat);
  ScalarMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Scalar::pi_power(-c[i].value_or(0) - r[j].value_or(0), inv(i, j));
    }
  }
  return out;
}

ScalarMatrix to_scalar(const RationalMatrix& m) {
  ScalarMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = Scalar(m(i, j));
  }
  return s;
}

}  // namespace intgeo
