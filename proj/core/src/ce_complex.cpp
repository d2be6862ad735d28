#include "poissonkit/ce_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace poissonkit {

CeCochain::CeCochain(std::size_t algebra_dim, std::size_t degree) : dim_(algebra_dim), degree_(degree) {
  if (degree > algebra_dim) throw std::out_of_range("cochain degree exceeds algebra dimension");
}

CeCochain CeCochain::from_vector(std::size_t algebra_dim, std::size_t degree, const Vector& coords) {
  CeCochain c(algebra_dim, degree);
  const auto basis = k_subsets(algebra_dim, degree);
  if (coords.size() != basis.size()) throw std::invalid_argument("cochain coordinate length mismatch");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords[i] != 0) c.coeffs_.emplace(basis[i], coords[i]);
  }
  return c;
}

Vector CeCochain::to_vector() const {
  const auto basis = k_subsets(dim_, degree_);
  Vector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (auto it = coeffs_.find(basis[i]); it != coeffs_.end()) out[i] = it->second;
  }
  return out;
}

void CeCochain::set(IndexTuple indices, const Rational& value) {
  if (indices.size() != degree_) throw std::invalid_argument("index tuple length does not match cochain degree");
  for (auto i : indices) {
    if (i >= dim_) throw std::out_of_range("cochain index out of range");
  }
  const int sign = sort_with_sign(indices);
  if (sign == 0) {
    if (value != 0) throw std::invalid_argument("repeated index in alternating cochain");
    return;
  }
  if (value == 0) {
    coeffs_.erase(indices);
  } else {
    coeffs_[indices] = sign > 0 ? value : Rational(-value);
  }
}

Rational CeCochain::coefficient(const IndexTuple& sorted_indices) const {
  auto it = coeffs_.find(sorted_indices);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational CeCochain::pair(std::size_t i, std::size_t j) const {
  if (degree_ != 2) throw std::logic_error("pair() requires a degree-2 cochain");
  if (i == j) return 0;
  return i < j ? coefficient({i, j}) : Rational(-coefficient({j, i}));
}

CeCochain CeCochain::operator-() const {
  CeCochain out = *this;
  for (auto& [k, v] : out.coeffs_) v = -v;
  return out;
}

std::string to_string(const CeCochain& c, const std::vector<std::string>& names) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, v] : c.coefficients()) {
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    const Rational mag = abs(v);
    if (mag != 1 || idx.empty()) os << to_string(mag) << (idx.empty() ? "" : "*");
    for (std::size_t i = 0; i < idx.size(); ++i) {
      os << (i ? "^" : "") << names.at(idx[i]) << "*";
    }
  }
  return os.str();
}

SparseMatrix ce_differential_matrix(const StructureConstants& c, std::size_t k) {
  const std::size_t n = c.dim();
  if (k > n) throw std::out_of_range("CE degree out of range");
  const auto domain = k_subsets(n, k);
  const auto codomain = k_subsets(n, k + 1);
  const auto col_of = index_of(domain);

  SparseMatrixBuilder out(codomain.size(), domain.size());
  IndexTuple rest;
  rest.reserve(k);
  for (std::size_t row = 0; row < codomain.size(); ++row) {
    const IndexTuple& J = codomain[row];
    for (std::size_t p = 0; p < J.size(); ++p) {
      for (std::size_t q = p + 1; q < J.size(); ++q) {
        rest.clear();
        for (std::size_t s = 0; s < J.size(); ++s) {
          if (s != p && s != q) rest.push_back(J[s]);
        }
        const int outer = ((p + q) % 2 == 0) ? 1 : -1;
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& coef = c(J[p], J[q], m);
          if (coef == 0) continue;
          // c(e_m, rest...) = sign of moving m into sorted position.
          std::size_t before = 0;
          bool repeated = false;
          for (auto r : rest) {
            if (r == m) repeated = true;
            if (r < m) ++before;
          }
          if (repeated) continue;
          IndexTuple I = rest;
          I.insert(I.begin() + static_cast<std::ptrdiff_t>(before), m);
          const int sign = outer * ((before % 2 == 0) ? 1 : -1);
          out.add(row, col_of.at(I), sign > 0 ? coef : Rational(-coef));
        }
      }
    }
  }
  return out.build();
}

SparseMatrix ce_differential_matrix(const LieAlgebra& g, std::size_t k) {
  return ce_differential_matrix(g.constants(), k);
}

CeCochain ce_differential(const LieAlgebra& g, const CeCochain& c) {
  if (c.algebra_dim() != g.dim()) throw std::invalid_argument("cochain and algebra dimensions differ");
  if (c.degree() == g.dim()) return CeCochain(g.dim(), g.dim());
  const auto d = ce_differential_matrix(g, c.degree());
  return CeCochain::from_vector(g.dim(), c.degree() + 1, d.apply(c.to_vector()));
}

std::vector<Vector> cohomology_representatives(const SparseMatrix& outgoing,
                                               const SparseMatrix& incoming) {
  if (incoming.rows() != outgoing.cols()) {
    throw std::invalid_argument("incoming differential does not land in the outgoing domain");
  }
  RowSpace image(outgoing.cols());
  const SparseMatrix cols = incoming.transpose();
  for (std::size_t c = 0; c < cols.rows(); ++c) {
    Vector v(outgoing.cols());
    for (const auto& [r, x] : cols.row(c)) v[r] = x;
    image.insert(v);
  }
  RowSpace spanned = image;
  std::vector<Vector> reps;
  for (auto& z : nullspace_basis(outgoing)) {
    Vector r = image.reduce(std::move(z));
    if (spanned.insert(r)) reps.push_back(std::move(r));
  }
  return reps;
}

CeCohomology ce_cohomology(const LieAlgebra& g, std::size_t k) {
  const std::size_t n = g.dim();
  if (k > n) return {k, 0, {}};
  const SparseMatrix outgoing = ce_differential_matrix(g, k);
  const SparseMatrix incoming = k == 0 ? SparseMatrix(1, 0) : ce_differential_matrix(g, k - 1);

  CeCohomology h{k, 0, {}};
  for (const auto& v : cohomology_representatives(outgoing, incoming)) {
    h.representatives.push_back(CeCochain::from_vector(n, k, v));
  }
  h.dim = h.representatives.size();
  return h;
}

std::optional<CeCochain> coboundary_witness(const LieAlgebra& g, const CeCochain& c) {
  if (c.degree() != 2) throw std::invalid_argument("coboundary_witness expects a degree-2 cochain");
  if (c.algebra_dim() != g.dim()) throw std::invalid_argument("cochain and algebra dimensions differ");
  const auto x = solve(ce_differential_matrix(g, 1), c.to_vector());
  if (!x) return std::nullopt;
  return CeCochain::from_vector(g.dim(), 1, *x);
}

}  // namespace poissonkit
