#include "hfitt/poly_matrix.hpp"

#include "hfitt/errors.hpp"

namespace hfitt {

PolyMatrix::PolyMatrix(QuotientPtr base, std::size_t rows, std::size_t cols)
    : base_(std::move(base)), rows_(rows), cols_(cols), entries_(rows * cols, base_->zero()) {}

PolyMatrix::PolyMatrix(QuotientPtr base, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> entries)
    : base_(std::move(base)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InputError("matrix entry count does not match shape");
  for (auto& e : entries_) e = base_->reduce(e);
}

PolyMatrix PolyMatrix::identity(QuotientPtr base, std::size_t n) {
  PolyMatrix m(base, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = base->one();
  return m;
}

PolyMatrix PolyMatrix::from_columns(QuotientPtr base, std::size_t rows,
                                    const std::vector<std::vector<Polynomial>>& columns) {
  PolyMatrix m(base, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
  if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
  entries_[r * cols_ + c] = base_->reduce(value);
}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Polynomial> PolyMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  require_same_base(base_, other.base_);
  if (cols_ != other.rows_) throw InputError("matrix product shape mismatch");
  PolyMatrix out(base_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial acc = base_->zero();
      for (std::size_t l = 0; l < cols_; ++l) {
        const Polynomial& a = (*this)(i, l);
        const Polynomial& b = other(l, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      out.set(i, j, std::move(acc));
    }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  require_same_base(base_, other.base_);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum shape mismatch");
  PolyMatrix out(base_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = base_->reduce(entries_[i] + other.entries_[i]);
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(base_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = (*this)(i, j);
  return out;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(base_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[i * cols.size() + j] = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix PolyMatrix::over(QuotientPtr base) const {
  if (!same_ring(base->ring(), ring())) throw RingMismatch("cannot move matrix to another ring");
  return PolyMatrix(std::move(base), rows_, cols_, entries_);
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_base(a.base_, b.base_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_base(a.base(), b.base());
  if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
  PolyMatrix out(a.base(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_base(a.base(), b.base());
  if (a.cols() != b.cols()) throw InputError("vstack column mismatch");
  PolyMatrix out(a.base(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_base(a.base(), b.base());
  PolyMatrix out(a.base(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

PolyMatrix parse_matrix(const QuotientPtr& base, std::size_t rows, std::size_t cols,
                        const std::vector<std::vector<std::string>>& text) {
  if (text.size() != rows) throw InputError("matrix has wrong number of rows");
  std::vector<Polynomial> entries;
  entries.reserve(rows * cols);
  for (const auto& row : text) {
    if (row.size() != cols) throw InputError("matrix row has wrong number of entries");
    for (const auto& cell : row) entries.push_back(parse_polynomial(cell, base->ring()));
  }
  return PolyMatrix(base, rows, cols, std::move(entries));
}

}  // namespace hfitt
