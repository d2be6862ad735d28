#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "poissonkit/rational.hpp"

namespace poissonkit {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Immutable sparse matrix over Q, stored row-wise with sorted column indices.
/// No zeros are stored and every position appears at most once.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Throws std::out_of_range for indices outside the shape and
  /// std::invalid_argument for a repeated (row, col). Zero values are dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::span<const Triplet> entries);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const Row& row(std::size_t r) const { return data_.at(r); }
  Rational at(std::size_t r, std::size_t c) const;
  std::vector<Triplet> triplets() const;

  Vector apply(std::span<const Rational> x) const;
  SparseMatrix transpose() const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  friend class SparseMatrixBuilder;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Accumulating builder: repeated add() calls at one position are summed.
class SparseMatrixBuilder {
 public:
  SparseMatrixBuilder(std::size_t rows, std::size_t cols);

  void add(std::size_t row, std::size_t col, const Rational& value);
  SparseMatrix build() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> acc_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Exact rank over Q.
std::size_t rank(const SparseMatrix& m);

/// One solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are zero; pivots are the leftmost independent columns.
std::optional<Vector> solve(const SparseMatrix& m, std::span<const Rational> b);

/// Kernel basis ordered by free column ascending; each vector has a 1 at its
/// own free column and 0 at every other free column.
std::vector<Vector> nullspace_basis(const SparseMatrix& m);

/// Incrementally grown subspace of Q^dim kept in reduced row echelon form.
/// reduce() returns the canonical representative of v modulo the span.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Adds v to the span. Returns false (and leaves the span unchanged) if v
  /// was already in it.
  bool insert(const Vector& v);

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;            // reduced, pivot entry 1
  std::vector<std::size_t> pivots_;     // parallel to rows_
};

}  // namespace poissonkit
