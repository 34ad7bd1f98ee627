#pragma once

#include <optional>

#include "hfitt/resolution.hpp"

namespace hfitt {

/// Closed subscheme V(f_1..f_m) of affine space over the ring's field.
class AffineScheme {
 public:
  /// Throws InputError when the equations generate the unit ideal.
  AffineScheme(RingPtr ring, std::vector<Polynomial> equations);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& equations() const noexcept { return equations_; }
  const QuotientPtr& coordinate_ring() const noexcept { return quotient_; }
  /// Defining ideal in the ambient ring.
  const Ideal& ideal() const noexcept { return ideal_; }
  int dimension() const noexcept { return dimension_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> equations_;
  Ideal ideal_;
  QuotientPtr quotient_;
  int dimension_;
};

/// Bounded cochain complex E^0 -> E^1 -> ... standing in for a derived
/// pushforward.
class PushforwardComplex {
 public:
  explicit PushforwardComplex(FreeComplex complex);
  const FreeComplex& complex() const noexcept { return complex_; }

 private:
  FreeComplex complex_;
};

/// Omega_X over R/I: one generator per ambient variable, presentation
/// P[i][j] = d f_j / d x_i.
FpModule kaehler_presentation(const AffineScheme& x);

/// Fitt_d(Omega_X) with d the Krull dimension unless overridden.
Ideal singular_locus(const AffineScheme& x, std::optional<int> dim_override = std::nullopt);

/// pd_locus(Omega_X, i + 1, d) computed from a resolution of the given
/// length, which must be at least i + 2.
Ideal higher_singular_locus(const AffineScheme& x, int i, int resolution_length,
                            std::optional<int> dim_override = std::nullopt);

/// X_k(M) = V(I_{k+1}(M)).
Ideal determinantal_scheme(const PolyMatrix& m, int k);

/// BN^k = underline-Fitt^0_k(E) = I_{r_0 - k}(delta^0).
Ideal brill_noether_ideal(const PushforwardComplex& e, int k);

struct LiftableRank {
  int k;
  /// Rank of the pushforward, k + 1.
  int locally_free_rank;
};

/// The k in [-1, r_0] with BN^k = 0 and BN^{k+1} = (1), if any.
std::optional<LiftableRank> liftable_sections_rank(const PushforwardComplex& e);

}  // namespace hfitt
