#pragma once

#include <vector>

#include "hfitt/minors.hpp"

namespace hfitt {

enum class Orientation { Chain, Cochain };

/// Bounded complex of finite free modules over R/I.
///
/// Chain input: ranks r_N..r_T and differentials d_{N+1}..d_T, with d_i an
/// r_{i-1} x r_i matrix. Cochain input: ranks r^L..r^T and differentials
/// d^L..d^{T-1}, with d^i an r^{i+1} x r^i matrix. Internally everything is
/// a chain complex; cochain degree i is chain degree -i.
class FreeComplex {
 public:
  FreeComplex(QuotientPtr base, Orientation orientation, int lowest, std::vector<std::size_t> ranks,
              std::vector<PolyMatrix> differentials);

  /// Builds from chain data, then presents it with the given orientation.
  static FreeComplex from_chain(QuotientPtr base, Orientation orientation, int chain_lowest,
                                std::vector<std::size_t> chain_ranks, std::vector<PolyMatrix> chain_differentials);

  const QuotientPtr& base() const noexcept { return base_; }
  Orientation orientation() const noexcept { return orientation_; }
  /// Lowest and highest degrees in the complex's own indexing.
  int lowest() const noexcept;
  int highest() const noexcept;
  /// Rank of the term in degree i (own indexing), 0 outside the range.
  std::size_t rank(int i) const;
  /// d_i for chain, d^i for cochain; a zero matrix of the right shape when
  /// no differential is stored.
  PolyMatrix differential(int i) const;

  int chain_lowest() const noexcept { return lowest_; }
  int chain_highest() const noexcept { return lowest_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t chain_rank(int j) const;
  /// d_j : F_j -> F_{j-1}.
  PolyMatrix chain_differential(int j) const;

  /// Ranks in own indexing, lowest() first.
  std::vector<std::size_t> ranks() const;
  /// Stored differentials in own indexing order (d_{N+1}.. or d^L..).
  std::vector<PolyMatrix> differentials() const;

  /// Same modules and maps, presented with the other orientation.
  FreeComplex reoriented(Orientation orientation) const;

 private:
  FreeComplex() = default;
  void validate() const;
  int to_chain(int i) const noexcept { return orientation_ == Orientation::Chain ? i : -i; }

  QuotientPtr base_;
  Orientation orientation_ = Orientation::Chain;
  int lowest_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> differentials_;  // d_{lowest+1} .. d_{highest}
};

/// Morphism of complexes with one component per degree; degrees without a
/// supplied component are zero maps.
class ChainMap {
 public:
  /// components[t] is the map in degree lowest + t (own indexing), a
  /// target.rank x source.rank matrix.
  ChainMap(FreeComplex source, FreeComplex target, int lowest, std::vector<PolyMatrix> components);

  static ChainMap identity(const FreeComplex& c);
  static ChainMap zero(const FreeComplex& source, const FreeComplex& target);

  const FreeComplex& source() const noexcept { return source_; }
  const FreeComplex& target() const noexcept { return target_; }
  /// Component in degree i (own indexing).
  PolyMatrix component(int i) const;
  PolyMatrix chain_component(int j) const;

 private:
  FreeComplex source_;
  FreeComplex target_;
  std::vector<std::pair<int, PolyMatrix>> chain_components_;
};

/// Expected rank: chain chi_i = sum_{j=N}^{i-1} (-1)^(i-j-1) r_j. For a
/// cochain complex, chi_i is the chain value at -i, that is the alternating
/// sum of the ranks above degree i. Total in i.
int chi(const FreeComplex& c, int i);

/// Fitt^i_k = I_{chi_i - k}(d_i), taking d^i for a cochain complex.
Ideal fitting_ideal(const FreeComplex& c, int i, int k);

/// Cochain only: underline-chi_i = sum_{j=L}^{i} (-1)^(i-j) r^j.
int underline_chi(const FreeComplex& c, int i);
/// Cochain only: I_{underline-chi_i - k}(d^i).
Ideal underline_fitting_ideal(const FreeComplex& c, int i, int k);

/// sum_j (-1)^j rank F_j.
int euler_characteristic(const FreeComplex& c);

/// Direct sum with the two-term complex R^rank =id=> R^rank sitting in the
/// differential at `position` (d_position for chain, d^position for cochain).
FreeComplex pad_trivial(const FreeComplex& c, int position, std::size_t rank);
/// The inclusion c -> pad_trivial(c, position, rank).
ChainMap padding_inclusion(const FreeComplex& c, int position, std::size_t rank);

/// Cone_n = F_{n-1} + G_n with d = [[-d_F, 0], [f, d_G]] (chain indexing),
/// returned in the orientation of the inputs.
FreeComplex mapping_cone(const ChainMap& f);

/// ker d_i = im d_{i+1}, checked by submodule membership of the syzygies.
bool is_exact_at(const FreeComplex& c, int i);
/// Exact at every degree of the range.
bool is_exact(const FreeComplex& c);
/// The cone is exact everywhere.
bool is_quasi_iso(const ChainMap& f);

}  // namespace hfitt
