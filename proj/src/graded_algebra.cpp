#include "intgeo/graded_algebra.hpp"

#include <algorithm>

namespace intgeo {

namespace {

QuotientAlgebra::Degree reduce_degree(const GeneratorSet& gens, int d, const RationalMatrix& rows, bool keep_transform) {
  QuotientAlgebra::Degree dd;
  dd.monomials = gens.monomials_of_degree(d);
  for (std::size_t i = 0; i < dd.monomials.size(); ++i) dd.index.emplace(dd.monomials[i], i);
  const std::size_t nm = dd.monomials.size();
  RrefResult r = rows.rows() == 0 ? RrefResult{RationalMatrix(0, nm), {}, RationalMatrix(0, 0)}
                                  : rref(rows, keep_transform);
  std::vector<bool> is_pivot(nm, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t c = nm; c-- > 0;) {
    if (!is_pivot[c]) dd.basis.push_back(c);
  }
  dd.reduction = RationalMatrix(dd.basis.size(), nm);
  std::vector<long> basis_pos(nm, -1);
  for (std::size_t b = 0; b < dd.basis.size(); ++b) {
    basis_pos[dd.basis[b]] = static_cast<long>(b);
    dd.reduction(b, dd.basis[b]) = Rational(1);
  }
  for (std::size_t row = 0; row < r.pivots.size(); ++row) {
    std::size_t pc = r.pivots[row];
    for (std::size_t b = 0; b < dd.basis.size(); ++b) {
      dd.reduction(b, pc) = -r.reduced(row, dd.basis[b]);
    }
  }
  if (keep_transform) {
    dd.cofactors = RationalMatrix(nm, rows.rows());
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      for (std::size_t k = 0; k < rows.rows(); ++k) dd.cofactors(r.pivots[row], k) = r.transform(row, k);
    }
  }
  return dd;
}

}  // namespace

QuotientAlgebra QuotientAlgebra::from_relations(GeneratorSet gens, std::vector<Polynomial<Rational>> ideal, int max_degree) {
  if (max_degree < 0) throw DomainError("negative truncation degree");
  std::vector<int> gdeg;
  for (const auto& g : ideal) {
    if (g.is_zero()) throw DomainError("zero ideal generator");
    if (!g.is_homogeneous(gens)) throw DomainError("ideal generator is not homogeneous: " + g.to_string(gens));
    gdeg.push_back(g.max_degree(gens));
  }
  QuotientAlgebra a;
  a.gens_ = std::move(gens);
  a.ideal_ = std::move(ideal);
  a.max_degree_ = max_degree;
  const int probe = max_degree + a.gens_.max_weight();
  bool vanish = true;
  for (int d = 0; d <= probe; ++d) {
    std::vector<Monomial> mons = a.gens_.monomials_of_degree(d);
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < mons.size(); ++i) col.emplace(mons[i], i);
    std::vector<std::pair<Monomial, std::size_t>> multiples;
    for (std::size_t k = 0; k < a.ideal_.size(); ++k) {
      if (gdeg[k] > d) continue;
      for (const Monomial& m : a.gens_.monomials_of_degree(d - gdeg[k])) multiples.emplace_back(m, k);
    }
    RationalMatrix rows(multiples.size(), mons.size());
    for (std::size_t r = 0; r < multiples.size(); ++r) {
      for (const auto& [m, c] : a.ideal_[multiples[r].second].terms()) {
        rows(r, col.at(monomial_product(m, multiples[r].first))) += c;
      }
    }
    Degree dd = reduce_degree(a.gens_, d, rows, d <= max_degree);
    if (d <= max_degree) {
      dd.multiples = std::move(multiples);
      a.degrees_.push_back(std::move(dd));
    } else if (!dd.basis.empty()) {
      vanish = false;
    }
  }
  a.vanishes_above_ = vanish;
  return a;
}

QuotientAlgebra QuotientAlgebra::from_subspaces(GeneratorSet gens, const std::vector<RationalMatrix>& ideal_rows,
                                                int max_degree) {
  QuotientAlgebra a;
  a.gens_ = std::move(gens);
  a.max_degree_ = max_degree;
  a.vanishes_above_ = true;
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t nm = a.gens_.monomials_of_degree(d).size();
    RationalMatrix rows = static_cast<std::size_t>(d) < ideal_rows.size() ? ideal_rows[d] : RationalMatrix(0, nm);
    if (rows.cols() != nm && rows.rows() != 0) throw DomainError("ideal subspace has wrong column count");
    a.degrees_.push_back(reduce_degree(a.gens_, d, rows.rows() == 0 ? RationalMatrix(0, nm) : rows, false));
  }
  return a;
}

const QuotientAlgebra::Degree& QuotientAlgebra::degree_data(int d) const {
  if (d < 0 || d > max_degree_) throw DomainError("degree out of range: " + std::to_string(d));
  return degrees_[d];
}

std::vector<int> QuotientAlgebra::hilbert_series() const {
  std::vector<int> h;
  for (const auto& dd : degrees_) h.push_back(static_cast<int>(dd.basis.size()));
  return h;
}

std::vector<Monomial> QuotientAlgebra::basis(int d) const {
  std::vector<Monomial> out;
  if (d < 0 || d > max_degree_) return out;
  for (std::size_t i : degrees_[d].basis) out.push_back(degrees_[d].monomials[i]);
  return out;
}

int QuotientAlgebra::top_degree() const {
  for (int d = max_degree_; d >= 0; --d) {
    if (!degrees_[d].basis.empty()) return d;
  }
  return -1;
}

Polynomial<Rational> QuotientAlgebra::basis_element(int d, std::size_t i) const {
  const Degree& dd = degree_data(d);
  return Polynomial<Rational>::monomial(dd.monomials.at(dd.basis.at(i)), Rational(1));
}

Scalar LinearFunctional::apply(const QuotientAlgebra& a, const GradedElement& x) const {
  GradedElement nf = a.normal_form(x);
  Scalar acc;
  for (int d = 0; d <= a.max_degree(); ++d) {
    if (a.dim(d) == 0) continue;
    GradedElement part = nf.homogeneous_part(a.generators(), d);
    if (part.is_zero()) continue;
    auto it = values_.find(d);
    if (it == values_.end()) throw DomainError("functional undefined in degree " + std::to_string(d));
    std::vector<Scalar> c = a.coordinates(part, d);
    for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * it->second.at(i);
  }
  return acc;
}

ScalarMatrix pairing_matrix(const QuotientAlgebra& a, const LinearFunctional& f, const std::vector<GradedElement>& left,
                            const std::vector<GradedElement>& right) {
  ScalarMatrix m(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) m(i, j) = f.apply(a, a.multiply(left[i], right[j]));
  }
  return m;
}

std::vector<GradedElement> basis_elements(const QuotientAlgebra& a, int d) {
  std::vector<GradedElement> out;
  for (std::size_t i = 0; i < a.dim(d); ++i) out.push_back(lift<Scalar>(a.basis_element(d, i)));
  return out;
}

ScalarMatrix pairing_matrix(const QuotientAlgebra& a, int k, const LinearFunctional& f) {
  int top = a.top_degree();
  if (!f.defined_on(top)) throw DomainError("pairing needs a functional on the top degree");
  return pairing_matrix(a, f, basis_elements(a, k), basis_elements(a, top - k));
}

}  // namespace intgeo

namespace intgeo {

Tensor kinematic_chi_by_pairing(const QuotientAlgebra& a, const LinearFunctional& top, const BasisProvider& nu,
                                const BasisProvider& phi) {
  const int t = a.top_degree();
  Tensor out;
  for (int k = 0; k <= t; ++k) {
    if (a.dim(k) == 0) continue;
    std::vector<GradedElement> left = nu(k);
    std::vector<GradedElement> right = phi(k);
    ScalarMatrix m = pairing_matrix(a, top, left, right);
    ScalarMatrix kk = invert_exact(m).transpose();
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (kk(i, j).is_zero()) continue;
        Tensor piece = tensor_product(a, left[i], right[j]);
        piece *= kk(i, j);
        out += piece;
      }
    }
  }
  return out;
}

}  // namespace intgeo
