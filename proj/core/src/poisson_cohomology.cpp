#include "poissonkit/poisson_cohomology.hpp"

#include <set>
#include <stdexcept>

#include "poissonkit/ce_complex.hpp"
#include "poissonkit/errors.hpp"

namespace poissonkit {

GradedBasis::GradedBasis(std::size_t n, std::size_t k, std::size_t d)
    : n_(n), k_(k), d_(d), tuples_(k_subsets(n, k)), monomials_(monomials_of_degree(n, d)) {
  tuple_pos_ = poissonkit::index_of(tuples_);
  monomial_pos_ = poissonkit::index_of(monomials_);
}

std::size_t GradedBasis::index_of(const TermKey& key) const {
  auto t = tuple_pos_.find(key.indices);
  auto m = monomial_pos_.find(key.monomial);
  if (t == tuple_pos_.end() || m == monomial_pos_.end()) {
    throw std::invalid_argument("term lies outside the graded piece");
  }
  return t->second * monomials_.size() + m->second;
}

PolyMultivector GradedBasis::element(std::size_t i) const {
  const std::size_t per = monomials_.size();
  return PolyMultivector::term(n_, monomials_.at(i % per), tuples_.at(i / per), 1);
}

PolyMultivector GradedBasis::combine(const Vector& coords) const {
  if (coords.size() != size()) throw std::invalid_argument("coordinate length mismatch");
  PolyMultivector out(n_, k_);
  const std::size_t per = monomials_.size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) out.add_term(monomials_[i % per], tuples_[i / per], coords[i]);
  }
  return out;
}

Vector GradedBasis::coordinates(const PolyMultivector& a) const {
  if (a.ambient_dim() != n_ || a.degree() != k_) throw std::invalid_argument("field does not belong to this piece");
  Vector out(size());
  for (const auto& [key, c] : a.terms()) out[index_of(key)] = c;
  return out;
}

std::size_t homogeneity_degree(const PoissonStructure& p) {
  const PolyMultivector& pi = p.bivector();
  if (pi.is_zero()) return 1;
  const auto h = pi.homogeneous_degree();
  if (!h) throw NonHomogeneous();
  return *h;
}

SparseMatrix poisson_differential_matrix(const PoissonStructure& p, std::size_t k, std::size_t d) {
  const std::size_t n = p.ambient_dim();
  if (k > n) throw std::out_of_range("multivector degree exceeds ambient dimension");
  const std::size_t h = homogeneity_degree(p);
  const GradedBasis domain(n, k, d);
  if (d + h == 0) return SparseMatrix(0, domain.size());
  const GradedBasis codomain(n, k + 1, d + h - 1);

  SparseMatrixBuilder out(codomain.size(), domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const PolyMultivector image = schouten(domain.element(col), p.bivector());
    for (const auto& [key, c] : image.terms()) out.add(codomain.index_of(key), col, c);
  }
  return out.build();
}

std::vector<GradedCohomology> formal_poisson_cohomology(const PoissonStructure& p, std::size_t k,
                                                        std::size_t d_max) {
  const std::size_t n = p.ambient_dim();
  if (k > n) throw std::out_of_range("multivector degree exceeds ambient dimension");
  const std::size_t h = homogeneity_degree(p);

  std::vector<GradedCohomology> out;
  for (std::size_t d = 0; d <= d_max; ++d) {
    const GradedBasis piece(n, k, d);
    const SparseMatrix outgoing = poisson_differential_matrix(p, k, d);
    // The incoming map starts at polynomial degree d + 1 - h.
    SparseMatrix incoming(piece.size(), 0);
    if (k > 0 && d + 1 >= h) incoming = poisson_differential_matrix(p, k - 1, d + 1 - h);

    GradedCohomology g{d, 0, {}};
    for (const auto& v : cohomology_representatives(outgoing, incoming)) {
      g.representatives.push_back(piece.combine(v));
    }
    g.dim = g.representatives.size();
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<PolyMultivector> exactness_witness(const PoissonStructure& p, std::size_t degree_cap) {
  const std::size_t n = p.ambient_dim();
  const PolyMultivector& pi = p.bivector();

  std::vector<PolyMultivector> unknowns;
  for (std::size_t d = 0; d <= degree_cap; ++d) {
    for (const auto& mono : monomials_of_degree(n, d)) {
      for (std::size_t i = 0; i < n; ++i) unknowns.push_back(PolyMultivector::term(n, mono, {i}, 1));
    }
  }
  std::vector<PolyMultivector> images;
  images.reserve(unknowns.size());
  std::set<TermKey> keys;
  for (const auto& [key, c] : pi.terms()) keys.insert(key);
  for (const auto& x : unknowns) {
    images.push_back(schouten(x, pi));
    for (const auto& [key, c] : images.back().terms()) keys.insert(key);
  }
  const std::vector<TermKey> rows(keys.begin(), keys.end());
  const auto row_of = index_of(rows);

  SparseMatrixBuilder system(rows.size(), unknowns.size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [key, c] : images[col].terms()) system.add(row_of.at(key), col, c);
  }
  Vector rhs(rows.size());
  for (const auto& [key, c] : pi.terms()) rhs[row_of.at(key)] = c;

  const auto solution = solve(system.build(), rhs);
  if (!solution) return std::nullopt;
  PolyMultivector x(n, 1);
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    if ((*solution)[col] != 0) x += (*solution)[col] * unknowns[col];
  }
  if (schouten(x, pi) != pi) throw InvariantBreach("exactness witness failed re-substitution");
  return x;
}

PolyMultivector negative_euler_field(std::size_t n) {
  PolyMultivector e(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents m(n, 0);
    m[i] = 1;
    e.add_term(std::move(m), {i}, -1);
  }
  return e;
}

}  // namespace poissonkit
