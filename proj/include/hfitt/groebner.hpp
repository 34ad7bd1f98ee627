#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "hfitt/poly_matrix.hpp"

namespace hfitt {

/// Ideal of R/I, stored as its preimage in R (generators together with the
/// relations of I). The reduced monic Groebner basis is computed once, on
/// first use, and shared between copies.
class Ideal {
 public:
  Ideal(QuotientPtr base, std::vector<Polynomial> generators);
  static Ideal zero(QuotientPtr base) { return Ideal(std::move(base), {}); }
  static Ideal unit(QuotientPtr base);

  const QuotientPtr& base() const noexcept { return base_; }
  const RingPtr& ring() const noexcept { return base_->ring(); }
  /// Generators as supplied (normal forms), without the relations.
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Reduced monic Groebner basis of the preimage, descending leading terms.
  const std::vector<Polynomial>& groebner_basis() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  /// Zero in R/I: the preimage is I itself.
  bool is_zero() const;
  bool is_unit() const;
  /// dim R/(preimage); -1 for the unit ideal.
  int krull_dimension() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    std::unique_ptr<gb::Builder> reducer;
  };
  const Cache& cache() const;

  QuotientPtr base_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
/// a contains b.
bool ideal_contains(const Ideal& a, const Ideal& b);
bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool is_zero_ideal(const Ideal& ideal);
bool is_unit_ideal(const Ideal& ideal);
int krull_dimension(const Ideal& ideal);

/// Reduced monic Groebner basis of the ideal generated by the polynomials.
std::vector<Polynomial> groebner(const std::vector<Polynomial>& generators);

/// Submodule of (R/I)^rank generated by column vectors. Over a quotient the
/// basis is taken for the preimage in R^rank (generators plus I * e_j).
class SubmoduleBasis {
 public:
  SubmoduleBasis(QuotientPtr base, std::size_t ambient_rank,
                 std::vector<std::vector<Polynomial>> generators);
  static SubmoduleBasis column_span(const PolyMatrix& m);

  const QuotientPtr& base() const noexcept { return base_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<std::vector<Polynomial>>& generators() const noexcept { return generators_; }
  /// Reduced basis in position-over-term order.
  const std::vector<std::vector<Polynomial>>& groebner_basis() const;

  bool contains(const std::vector<Polynomial>& v) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<std::vector<Polynomial>> basis;
    std::unique_ptr<gb::Builder> builder;
  };
  const Cache& cache() const;

  QuotientPtr base_;
  std::size_t rank_;
  std::vector<std::vector<Polynomial>> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced basis of the submodule generated by the input's generators.
std::vector<std::vector<Polynomial>> groebner(const SubmoduleBasis& module);

/// Generators of {v : M v = 0} over M's base ring, as the columns of the
/// result (M.cols() rows). Redundant generators are pruned greedily.
PolyMatrix syzygies(const PolyMatrix& m);

}  // namespace hfitt
