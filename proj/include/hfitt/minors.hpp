#pragma once

#include <optional>
#include <vector>

#include "hfitt/groebner.hpp"

namespace hfitt {

/// Exact determinant by cofactor expansion memoized over column subsets.
/// The 0x0 determinant is 1.
Polynomial determinant(const PolyMatrix& m);

/// All k x k minors, row subsets outer and column subsets inner, both in
/// lexicographic order; reduced modulo the base relations.
std::vector<Polynomial> minors(const PolyMatrix& m, int k);

/// Ideal of k x k minors with I_k = (1) for k <= 0 and I_k = (0) for
/// k > min(rows, cols). Stops early once a minor is a nonzero constant.
Ideal minors_ideal(const PolyMatrix& m, int k);

/// Ring homomorphism from a polynomial ring into R/I, given by the images
/// of the source variables.
class RingMap {
 public:
  RingMap(RingPtr source, QuotientPtr target, std::vector<Polynomial> images);
  /// The identity of R/I lifted to its ambient ring.
  static RingMap identity(const QuotientPtr& base);
  /// Inclusion R -> R' where R' has the same field and order and its
  /// variables extend those of R.
  static RingMap inclusion(RingPtr source, QuotientPtr target);

  const RingPtr& source() const noexcept { return source_; }
  const QuotientPtr& target() const noexcept { return target_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }

  Polynomial operator()(const Polynomial& f) const;

 private:
  RingPtr source_;
  QuotientPtr target_;
  std::vector<Polynomial> images_;
};

/// Entrywise substitution.
PolyMatrix apply_ring_map(const PolyMatrix& m, const RingMap& f);
/// Ideal generated by the images of the preimage generators.
Ideal extend_ideal(const Ideal& ideal, const RingMap& f);

/// Rank over the field of the scalar matrix m(point). Over a quotient the
/// point must satisfy the relations.
std::size_t fiber_rank(const PolyMatrix& m, const std::vector<Scalar>& point);

/// Rank of a scalar matrix by Gaussian elimination (rows of equal length).
std::size_t scalar_rank(const FieldSpec& field, std::vector<std::vector<Scalar>> rows);

}  // namespace hfitt
