#include "poissonkit/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace poissonkit {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

const Integer* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Scales a rational row (plus an optional trailing right-hand side) to a
// primitive integer row.
IntRow to_integer_row(const SparseMatrix::Row& row, const Rational* rhs, std::size_t rhs_col) {
  Integer common = 1;
  for (const auto& [c, v] : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
  if (rhs != nullptr) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), rhs->get_den_mpz_t());

  IntRow out;
  out.reserve(row.size() + 1);
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (common / v.get_den())));
  if (rhs != nullptr && *rhs != 0) {
    out.emplace_back(rhs_col, Integer(rhs->get_num() * (common / rhs->get_den())));
  }
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// target <- a * target - b * source, then made primitive. Fraction-free.
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  const Integer* b_ptr = find_entry(target, col);
  if (b_ptr == nullptr) return;
  const Integer a = *find_entry(source, col);
  const Integer b = *b_ptr;

  IntRow out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->first < s->first)) {
      out.emplace_back(t->first, Integer(a * t->second));
      ++t;
    } else if (t == target.end() || s->first < t->first) {
      out.emplace_back(s->first, Integer(-b * s->second));
      ++s;
    } else {
      Integer v = a * t->second - b * s->second;
      if (v != 0) out.emplace_back(t->first, std::move(v));
      ++t;
      ++s;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

struct Echelon {
  std::vector<IntRow> rows;          // fully reduced pivot rows, in pivot order
  std::vector<std::size_t> pivots;   // strictly increasing
};

// Columns are swept left to right; in each column the pivot is the
// smallest-index remaining row with a nonzero there.
Echelon reduce_fully(std::vector<IntRow> rows) {
  for (auto& r : rows) make_primitive(r);
  std::vector<bool> used(rows.size(), false);
  Echelon e;
  for (;;) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r].empty()) continue;
      if (best == rows.size() || rows[r].front().first < rows[best].front().first) best = r;
    }
    if (best == rows.size()) break;
    used[best] = true;
    const std::size_t col = rows[best].front().first;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && !rows[r].empty() && rows[r].front().first == col) {
        eliminate(rows[r], rows[best], col);
      }
    }
    e.rows.push_back(rows[best]);
    e.pivots.push_back(col);
  }
  for (std::size_t p = e.rows.size(); p-- > 0;) {
    for (std::size_t q = 0; q < p; ++q) eliminate(e.rows[q], e.rows[p], e.pivots[p]);
  }
  return e;
}

std::vector<IntRow> integer_rows(const SparseMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_integer_row(m.row(r), nullptr, 0));
  return rows;
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::span<const Triplet> entries)
    : SparseMatrix(rows, cols) {
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("matrix entry (" + std::to_string(t.row) + ", " +
                              std::to_string(t.col) + ") outside " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    }
    data_[t.row].emplace_back(t.col, t.value);
  }
  for (auto& row : data_) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first == row[i - 1].first) throw std::invalid_argument("duplicate matrix entry");
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, rows[r][c]);
    }
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  }
  return out;
}

Vector SparseMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

SparseMatrixBuilder::SparseMatrixBuilder(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

void SparseMatrixBuilder::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("builder entry outside matrix shape");
  if (value == 0) return;
  acc_[{row, col}] += value;
}

SparseMatrix SparseMatrixBuilder::build() const {
  SparseMatrix m(rows_, cols_);
  for (const auto& [pos, v] : acc_) {
    if (v != 0) m.data_[pos.first].emplace_back(pos.second, v);
  }
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrixBuilder out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, av] : a.row(r)) {
      for (const auto& [c, bv] : b.row(k)) out.add(r, c, av * bv);
    }
  }
  return out.build();
}

std::size_t rank(const SparseMatrix& m) { return reduce_fully(integer_rows(m)).pivots.size(); }

std::optional<Vector> solve(const SparseMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match rows");
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_integer_row(m.row(r), &b[r], m.cols()));

  const Echelon e = reduce_fully(std::move(rows));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;

  Vector x(m.cols());
  for (std::size_t p = 0; p < e.rows.size(); ++p) {
    const Integer* rhs = find_entry(e.rows[p], m.cols());
    if (rhs != nullptr) {
      x[e.pivots[p]] = Rational(*rhs, e.rows[p].front().second);
      x[e.pivots[p]].canonicalize();
    }
  }
  return x;
}

std::vector<Vector> nullspace_basis(const SparseMatrix& m) {
  const Echelon e = reduce_fully(integer_rows(m));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t p = 0; p < e.rows.size(); ++p) {
      if (const Integer* entry = find_entry(e.rows[p], f)) {
        v[e.pivots[p]] = Rational(-*entry, e.rows[p].front().second);
        v[e.pivots[p]].canonicalize();
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length does not match subspace ambient");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational factor = v[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = pivots_[r]; c < dim_; ++c) {
      if (rows_[r][c] != 0) v[c] -= factor * rows_[r][c];
    }
  }
  return v;
}

bool RowSpace::insert(const Vector& v) {
  Vector w = reduce(v);
  auto lead = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  const Rational scale = w[pivot];
  for (auto& x : w) x /= scale;

  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (factor == 0) continue;
    for (std::size_t c = pivot; c < dim_; ++c) {
      if (w[c] != 0) row[c] -= factor * w[c];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(w));
  return true;
}

}  // namespace poissonkit
