#pragma once

#include <optional>

#include "hfitt/complex.hpp"

namespace hfitt {

/// Cokernel of a presentation matrix; one generator per row.
class FpModule {
 public:
  explicit FpModule(PolyMatrix presentation) : presentation_(std::move(presentation)) {}
  /// Free module of the given rank.
  static FpModule free(QuotientPtr base, std::size_t rank) { return FpModule(PolyMatrix(std::move(base), rank, 0)); }

  const QuotientPtr& base() const noexcept { return presentation_.base(); }
  const PolyMatrix& presentation() const noexcept { return presentation_; }
  std::size_t generator_count() const noexcept { return presentation_.rows(); }

 private:
  PolyMatrix presentation_;
};

struct Resolution {
  FreeComplex complex;  // chain, lowest index 0
  FpModule target;
  int length = 0;
  /// The length cap was reached while the next syzygy module was nonzero.
  bool truncated = false;
};

/// F_length -> ... -> F_0 with d_1 the presentation and d_{i+1} the
/// syzygies of d_i; stops early when a syzygy module vanishes.
Resolution free_resolution(const FpModule& m, int length);

/// Cancels constant entries of the differentials until none remain.
Resolution minimalize(const Resolution& res);

/// Fitt_k(M) = I_{r-k}(presentation).
Ideal classical_fitting(const FpModule& m, int k);

/// r minus the largest j with I_j(presentation) nonzero in R/I. Meaningful
/// when R/I is a domain; that is not checked.
int generic_rank(const FpModule& m);

/// I_{chi_d - (-1)^(d-1) k}(d_d) for a module of rank k.
Ideal pd_locus(const Resolution& res, int d, int rank);
/// Resolves to length d first; rank defaults to generic_rank(m).
Ideal pd_locus(const FpModule& m, int d, std::optional<int> rank_override = std::nullopt);

}  // namespace hfitt
