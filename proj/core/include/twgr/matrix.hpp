#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twgr/field.hpp"

namespace twgr {

using Vec = std::vector<Fq>;

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr field, std::size_t n);
  /// Every row must have exactly `cols` entries.
  static Matrix from_rows(FieldPtr field, std::span<const Vec> rows, std::size_t cols);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fq operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fq& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem at(std::size_t r, std::size_t c) const;

  std::span<const Fq> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fq> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Fq>& entries() const { return data_; }

  /// Matrix-vector product M x.
  Vec apply(std::span<const Fq> x) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Fq> data_;
};

/// Gauss-Jordan elimination built one row at a time. Rows are kept fully
/// reduced, so inserting a sparse row costs one subtraction per pivot column
/// it touches, plus one back-substitution pass when it adds a new pivot.
class RowEchelon {
 public:
  RowEchelon(FieldPtr field, std::size_t cols);

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(Vec row);
  bool insert(std::span<const Fq> row) { return insert(Vec(row.begin(), row.end())); }

  /// Residual of v after elimination against the current rows.
  Vec reduce(Vec v) const;
  bool contains(std::span<const Fq> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// The reduced rows ordered by pivot column (rank x cols).
  Matrix reduced() const;
  /// One vector per free column f: 1 at f, minus the f-entries of the pivot
  /// rows at their pivots, zero elsewhere.
  std::vector<Vec> kernel_basis() const;

 private:
  void check_width(std::size_t n) const;

  FieldPtr field_;
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::ptrdiff_t> col_row_;  // row index owning a pivot column, or -1
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::size_t rank(const Matrix& m);

/// True iff v is a linear combination of `basis`. Throws InvalidInput on a
/// length mismatch.
bool in_span(const FieldPtr& field, std::span<const Vec> basis, std::span<const Fq> v);

/// Rank of a list of vectors of length `dim`.
std::size_t rank_of(const FieldPtr& field, std::span<const Vec> vectors, std::size_t dim);

}  // namespace twgr
