#include "twgr/matrix.hpp"

#include <algorithm>
#include <string>

#include "twgr/error.hpp"

namespace twgr {

namespace {

// dst -= factor * src
void axpy_neg(const Field& f, Vec& dst, Fq factor, const Vec& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) {
    if (src[j].code != 0) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Fq{0}) {
  if (!field_) throw InvalidInput("matrix needs a field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fq{1};
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::span<const Vec> rows, std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FieldElem Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidInput("matrix index out of range");
  return FieldElem(field_, (*this)(r, c));
}

Vec Matrix::apply(std::span<const Fq> x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector dimension mismatch");
  const Field& f = *field_;
  Vec y(rows_, Fq{0});
  for (std::size_t r = 0; r < rows_; ++r) {
    Fq acc{0};
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul((*this)(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_as(*b.field_) &&
         a.data_ == b.data_;
}

RowEchelon::RowEchelon(FieldPtr field, std::size_t cols)
    : field_(std::move(field)), cols_(cols), col_row_(cols, -1) {}

void RowEchelon::check_width(std::size_t n) const {
  if (n != cols_) {
    throw InvalidInput("vector of length " + std::to_string(n) + " against " +
                       std::to_string(cols_) + " columns");
  }
}

Vec RowEchelon::reduce(Vec v) const {
  check_width(v.size());
  const Field& f = *field_;
  // Reduced rows vanish on every other pivot column, so one left-to-right
  // pass suffices.
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].code != 0 && col_row_[c] >= 0) {
      axpy_neg(f, v, v[c], rows_[static_cast<std::size_t>(col_row_[c])]);
    }
  }
  return v;
}

bool RowEchelon::contains(std::span<const Fq> v) const {
  const Vec r = reduce(Vec(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](Fq x) { return x.code == 0; });
}

bool RowEchelon::insert(Vec row) {
  Vec v = reduce(std::move(row));
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].code != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) return false;

  const Field& f = *field_;
  const Fq scale = f.inv(v[pivot]);
  for (auto& x : v) x = f.mul(scale, x);
  for (auto& r : rows_) {
    if (r[pivot].code != 0) axpy_neg(f, r, r[pivot], v);
  }
  col_row_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  row_pivot_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p = row_pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

Matrix RowEchelon::reduced() const {
  Matrix m(field_, rows_.size(), cols_);
  std::size_t out = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (col_row_[c] < 0) continue;
    const Vec& r = rows_[static_cast<std::size_t>(col_row_[c])];
    std::copy(r.begin(), r.end(), m.row(out++).begin());
  }
  return m;
}

std::vector<Vec> RowEchelon::kernel_basis() const {
  const Field& f = *field_;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (col_row_[free] >= 0) continue;
    Vec v(cols_, Fq{0});
    v[free] = Fq{1};
    for (std::size_t i = 0; i < rows_.size(); ++i) v[row_pivot_[i]] = f.neg(rows_[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

RrefResult rref(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  Matrix out(m.field(), m.rows(), m.cols());
  const Matrix red = ech.reduced();
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::copy(red.row(r).begin(), red.row(r).end(), out.row(r).begin());
  }
  return RrefResult{std::move(out), ech.rank(), ech.pivots()};
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.kernel_basis();
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

bool in_span(const FieldPtr& field, std::span<const Vec> basis, std::span<const Fq> v) {
  RowEchelon ech(field, v.size());
  for (const auto& b : basis) ech.insert(b);
  return ech.contains(v);
}

std::size_t rank_of(const FieldPtr& field, std::span<const Vec> vectors, std::size_t dim) {
  RowEchelon ech(field, dim);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

}  // namespace twgr
