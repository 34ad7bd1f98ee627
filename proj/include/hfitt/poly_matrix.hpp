#pragma once

#include <cstddef>
#include <vector>

#include "hfitt/quotient.hpp"

namespace hfitt {

/// Dense row-major matrix over R/I. Entries are kept in normal form; a
/// matrix with c columns represents a map R^c -> R^rows acting on columns.
class PolyMatrix {
 public:
  PolyMatrix(QuotientPtr base, std::size_t rows, std::size_t cols);
  PolyMatrix(QuotientPtr base, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  static PolyMatrix identity(QuotientPtr base, std::size_t n);
  /// Columns given as vectors of length rows.
  static PolyMatrix from_columns(QuotientPtr base, std::size_t rows,
                                 const std::vector<std::vector<Polynomial>>& columns);

  const QuotientPtr& base() const noexcept { return base_; }
  const RingPtr& ring() const noexcept { return base_->ring(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial value);
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  std::vector<Polynomial> column(std::size_t c) const;
  std::vector<Polynomial> row(std::size_t r) const;
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-() const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Reinterprets the entries over the same ring modulo other relations.
  PolyMatrix over(QuotientPtr base) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  QuotientPtr base_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// [a | b] with equal row counts.
PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
/// a stacked over b, equal column counts.
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
/// Block diagonal diag(a, b).
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

/// Parses a row-major list of polynomial strings.
PolyMatrix parse_matrix(const QuotientPtr& base, std::size_t rows, std::size_t cols,
                        const std::vector<std::vector<std::string>>& text);

}  // namespace hfitt
