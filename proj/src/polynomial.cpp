#include "intgeo/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace intgeo {

GeneratorSet::GeneratorSet(std::vector<std::string> n, std::vector<int> w)
    : names(std::move(n)), weights(std::move(w)) {
  if (names.size() != weights.size()) throw DomainError("generator names and weights differ in length");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (weights[i] < 1) throw DomainError("generator weight must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw DomainError("duplicate generator name " + names[i]);
    }
  }
}

int GeneratorSet::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
  return d;
}

int GeneratorSet::max_weight() const {
  return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
}

Monomial GeneratorSet::generator(std::size_t i) const {
  Monomial m(names.size(), 0);
  m.at(i) = 1;
  return m;
}

std::vector<Monomial> GeneratorSet::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  // Generators ordered by weight descending, ties by position.
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] > weights[b]; });
  Monomial cur(names.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == order.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    std::size_t g = order[pos];
    for (int e = left / weights[g]; e >= 0; --e) {
      cur[g] = e;
      self(self, pos + 1, left - e * weights[g]);
    }
    cur[g] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::string GeneratorSet::render(const Monomial& m, bool latex) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += names[i];
    if (m[i] > 1) out += latex ? "^{" + std::to_string(m[i]) + "}" : "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace intgeo
