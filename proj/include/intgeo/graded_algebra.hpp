#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "intgeo/matrix.hpp"
#include "intgeo/polynomial.hpp"

namespace intgeo {

using GradedElement = Polynomial<Scalar>;

// Weighted graded quotient k[gens]/I truncated at degree D, realized degree by
// degree through exact row reduction. Immutable once built.
class QuotientAlgebra {
 public:
  struct Degree {
    std::vector<Monomial> monomials;    // elimination order (heaviest first)
    std::vector<std::size_t> basis;     // positions into `monomials`, display order (lightest first)
    RationalMatrix reduction;           // basis.size() x monomials.size()
    // Relations route only: multiples (multiplier, ideal generator index) and,
    // for each monomial, the coefficients expressing m - NF(m) over them.
    std::vector<std::pair<Monomial, std::size_t>> multiples;
    RationalMatrix cofactors;           // monomials.size() x multiples.size()
    std::map<Monomial, std::size_t> index;
  };

  QuotientAlgebra() = default;

  // Quotient by the ideal generated by homogeneous `ideal` polynomials.
  static QuotientAlgebra from_relations(GeneratorSet gens, std::vector<Polynomial<Rational>> ideal, int max_degree);
  // Quotient by explicitly given per-degree ideal subspaces. ideal_rows[d] has
  // one row per spanning vector, columns aligned with monomials_of_degree(d).
  // The quotient is declared zero above max_degree.
  static QuotientAlgebra from_subspaces(GeneratorSet gens, const std::vector<RationalMatrix>& ideal_rows, int max_degree);

  const GeneratorSet& generators() const { return gens_; }
  const std::vector<Polynomial<Rational>>& ideal() const { return ideal_; }
  int max_degree() const { return max_degree_; }
  // True when every degree above max_degree is zero in the quotient.
  bool vanishes_above() const { return vanishes_above_; }
  const Degree& degree_data(int d) const;
  std::vector<int> hilbert_series() const;
  std::size_t dim(int d) const { return d < 0 || d > max_degree_ ? 0 : degrees_[d].basis.size(); }
  std::vector<Monomial> basis(int d) const;
  // Highest degree with a nonzero basis.
  int top_degree() const;

  template <class C>
  Polynomial<C> normal_form(const Polynomial<C>& x) const;
  template <class C>
  Polynomial<C> multiply(const Polynomial<C>& x, const Polynomial<C>& y) const {
    return normal_form(x * y);
  }
  // Coordinates of the degree-d part of NF(x) on basis(d).
  template <class C>
  std::vector<C> coordinates(const Polynomial<C>& x, int d) const;
  template <class C>
  Polynomial<C> from_coordinates(int d, const std::vector<C>& coords) const;
  Polynomial<Rational> basis_element(int d, std::size_t i) const;

 private:
  void finish_degree(int d, const RationalMatrix& rows, bool keep_transform);

  GeneratorSet gens_;
  std::vector<Polynomial<Rational>> ideal_;
  int max_degree_ = 0;
  bool vanishes_above_ = false;
  std::vector<Degree> degrees_;
};

template <class C>
Polynomial<C> QuotientAlgebra::normal_form(const Polynomial<C>& x) const {
  std::map<int, std::vector<C>> acc;
  for (const auto& [m, c] : x.terms()) {
    int d = gens_.degree(m);
    if (d > max_degree_) {
      if (vanishes_above_) continue;
      throw TruncationOverflow("degree " + std::to_string(d) + " exceeds truncation degree " + std::to_string(max_degree_));
    }
    const Degree& dd = degrees_[d];
    std::size_t col = dd.index.at(m);
    auto [it, inserted] = acc.try_emplace(d, std::vector<C>(dd.basis.size()));
    for (std::size_t i = 0; i < dd.basis.size(); ++i) {
      const Rational& r = dd.reduction(i, col);
      if (!r.is_zero()) it->second[i] += c * r;
    }
  }
  Polynomial<C> out;
  for (const auto& [d, v] : acc) {
    const Degree& dd = degrees_[d];
    for (std::size_t i = 0; i < v.size(); ++i) out.add_term(dd.monomials[dd.basis[i]], v[i]);
  }
  return out;
}

template <class C>
std::vector<C> QuotientAlgebra::coordinates(const Polynomial<C>& x, int d) const {
  std::vector<C> v(dim(d));
  if (v.empty()) return v;
  Polynomial<C> nf = normal_form(x.homogeneous_part(gens_, d));
  const Degree& dd = degrees_[d];
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = nf.coefficient(dd.monomials[dd.basis[i]]);
  return v;
}

template <class C>
Polynomial<C> QuotientAlgebra::from_coordinates(int d, const std::vector<C>& coords) const {
  if (coords.size() != dim(d)) throw DomainError("coordinate vector has wrong length");
  Polynomial<C> out;
  const Degree& dd = degrees_[d];
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(dd.monomials[dd.basis[i]], coords[i]);
  return out;
}

// Linear functional on a quotient algebra, given by values on basis
// monomials degree by degree.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(std::map<int, std::vector<Scalar>> values) : values_(std::move(values)) {}

  const std::map<int, std::vector<Scalar>>& values() const { return values_; }
  bool defined_on(int d) const { return values_.count(d) != 0; }
  Scalar apply(const QuotientAlgebra& a, const GradedElement& x) const;

 private:
  std::map<int, std::vector<Scalar>> values_;
};

// M_ij = f(left_i * right_j).
ScalarMatrix pairing_matrix(const QuotientAlgebra& a, const LinearFunctional& f,
                            const std::vector<GradedElement>& left, const std::vector<GradedElement>& right);
// Normal-form monomial bases in degree k and top-k.
ScalarMatrix pairing_matrix(const QuotientAlgebra& a, int k, const LinearFunctional& f);

std::vector<GradedElement> basis_elements(const QuotientAlgebra& a, int d);

// Element of A (x) A stored as coefficient blocks on normal-form bases,
// keyed by (left degree, right degree).
template <class C>
class TensorElement {
 public:
  using Block = Matrix<C>;

  const std::map<std::pair<int, int>, Block>& blocks() const { return blocks_; }
  bool is_zero() const {
    for (const auto& kv : blocks_) {
      for (std::size_t i = 0; i < kv.second.rows(); ++i) {
        for (std::size_t j = 0; j < kv.second.cols(); ++j) {
          if (!kv.second(i, j).is_zero()) return false;
        }
      }
    }
    return true;
  }
  C coefficient(int ld, int rd, std::size_t i, std::size_t j) const {
    auto it = blocks_.find({ld, rd});
    return it == blocks_.end() ? C() : it->second(i, j);
  }
  void add(int ld, int rd, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, const C& c) {
    if (c.is_zero()) return;
    auto it = blocks_.try_emplace({ld, rd}, Block(rows, cols)).first;
    it->second(i, j) += c;
  }
  void add_block(int ld, int rd, const Block& b) {
    auto it = blocks_.find({ld, rd});
    if (it == blocks_.end()) {
      blocks_.emplace(std::make_pair(ld, rd), b);
      return;
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) it->second(i, j) += b(i, j);
    }
  }
  // Removes blocks that are entirely zero.
  void prune() {
    for (auto it = blocks_.begin(); it != blocks_.end();) {
      bool zero = true;
      for (std::size_t i = 0; i < it->second.rows() && zero; ++i) {
        for (std::size_t j = 0; j < it->second.cols() && zero; ++j) zero = it->second(i, j).is_zero();
      }
      it = zero ? blocks_.erase(it) : std::next(it);
    }
  }
  TensorElement swapped() const {
    TensorElement r;
    for (const auto& [k, b] : blocks_) r.blocks_.emplace(std::make_pair(k.second, k.first), b.transpose());
    return r;
  }
  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, b] : o.blocks_) add_block(k.first, k.second, b);
    prune();
    return *this;
  }
  TensorElement& operator*=(const C& s) {
    for (auto& [k, b] : blocks_) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = b(i, j) * s;
      }
    }
    prune();
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator*(TensorElement a, const C& s) { return a *= s; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    TensorElement nb = b;
    nb *= C(-1);
    return a += nb;
  }
  friend bool operator==(TensorElement a, TensorElement b) {
    a.prune();
    b.prune();
    return a.blocks_ == b.blocks_;
  }

 private:
  std::map<std::pair<int, int>, Block> blocks_;
};

using Tensor = TensorElement<Scalar>;

// x (x) y with both factors reduced to normal form.
template <class C>
TensorElement<C> tensor_product(const QuotientAlgebra& a, const Polynomial<C>& x, const Polynomial<C>& y) {
  TensorElement<C> t;
  Polynomial<C> nx = a.normal_form(x);
  Polynomial<C> ny = a.normal_form(y);
  std::vector<int> dx, dy;
  for (int d = 0; d <= a.max_degree(); ++d) {
    if (a.dim(d) == 0) continue;
    if (!nx.homogeneous_part(a.generators(), d).is_zero()) dx.push_back(d);
    if (!ny.homogeneous_part(a.generators(), d).is_zero()) dy.push_back(d);
  }
  for (int k : dx) {
    std::vector<C> cx = a.coordinates(nx, k);
    for (int l : dy) {
      std::vector<C> cy = a.coordinates(ny, l);
      for (std::size_t i = 0; i < cx.size(); ++i) {
        if (cx[i].is_zero()) continue;
        for (std::size_t j = 0; j < cy.size(); ++j) {
          t.add(k, l, cx.size(), cy.size(), i, j, cx[i] * cy[j]);
        }
      }
    }
  }
  t.prune();
  return t;
}

// (phi (x) psi) * t in A (x) A.
template <class C>
TensorElement<C> multiply_tensor(const QuotientAlgebra& a, const Polynomial<C>& phi, const Polynomial<C>& psi,
                                 const TensorElement<C>& t) {
  TensorElement<C> out;
  for (const auto& [key, block] : t.blocks()) {
    auto [k, l] = key;
    std::vector<Polynomial<C>> left(block.rows()), right(block.cols());
    for (std::size_t i = 0; i < block.rows(); ++i) {
      left[i] = a.multiply(phi, lift<C>(a.basis_element(k, i)));
    }
    for (std::size_t j = 0; j < block.cols(); ++j) {
      right[j] = a.multiply(psi, lift<C>(a.basis_element(l, j)));
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        if (block(i, j).is_zero()) continue;
        TensorElement<C> piece = tensor_product(a, left[i], right[j]);
        piece *= block(i, j);
        out += piece;
      }
    }
  }
  out.prune();
  return out;
}

// Per-degree linear map on coordinates: returns target degree and a
// (dim target) x (dim source) matrix.
template <class C>
using LegMap = std::function<std::pair<int, Matrix<C>>(int)>;

template <class C>
TensorElement<C> map_legs(const TensorElement<C>& t, const LegMap<C>& left, const LegMap<C>& right) {
  TensorElement<C> out;
  for (const auto& [key, block] : t.blocks()) {
    auto [lk, lm] = left(key.first);
    auto [rk, rm] = right(key.second);
    out.add_block(lk, rk, lm * block * rm.transpose());
  }
  out.prune();
  return out;
}

}  // namespace intgeo

namespace intgeo {

using BasisProvider = std::function<std::vector<GradedElement>(int)>;

// k(chi) = sum_ij K_ij nu_i (x) phi_j with K = (M^{-1})^T and
// M_ij = f(nu_i phi_j); nu(k) spans degree k, phi(k) the complementary degree.
Tensor kinematic_chi_by_pairing(const QuotientAlgebra& a, const LinearFunctional& top, const BasisProvider& nu,
                                const BasisProvider& phi);

}  // namespace intgeo
