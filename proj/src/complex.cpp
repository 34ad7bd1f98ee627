#include "hfitt/complex.hpp"

#include <algorithm>

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {

int sign(int e) { return (e % 2 == 0) ? 1 : -1; }

PolyMatrix with_zero_rows(const PolyMatrix& m, std::size_t extra) {
  return vstack(m, PolyMatrix(m.base(), extra, m.cols()));
}

PolyMatrix with_zero_cols(const PolyMatrix& m, std::size_t extra) {
  return hstack(m, PolyMatrix(m.base(), m.rows(), extra));
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(QuotientPtr base, Orientation orientation, int lowest, std::vector<std::size_t> ranks,
                         std::vector<PolyMatrix> differentials)
    : base_(std::move(base)), orientation_(orientation) {
  if (ranks.empty()) throw InputError("complex needs at least one term");
  if (differentials.size() + 1 != ranks.size())
    throw InputError("complex needs exactly one differential per adjacent pair of terms");
  if (orientation == Orientation::Chain) {
    lowest_ = lowest;
    ranks_ = std::move(ranks);
    differentials_ = std::move(differentials);
  } else {
    // Cochain L..T becomes chain -T..-L; chain d_j = d^{-j} runs from d^{T-1} down to d^L.
    lowest_ = -(lowest + static_cast<int>(ranks.size()) - 1);
    ranks_.assign(ranks.rbegin(), ranks.rend());
    differentials_.assign(std::make_move_iterator(differentials.rbegin()),
                          std::make_move_iterator(differentials.rend()));
  }
  validate();
}

FreeComplex FreeComplex::from_chain(QuotientPtr base, Orientation orientation, int chain_lowest,
                                    std::vector<std::size_t> chain_ranks,
                                    std::vector<PolyMatrix> chain_differentials) {
  if (chain_ranks.empty()) throw InputError("complex needs at least one term");
  if (chain_differentials.size() + 1 != chain_ranks.size())
    throw InputError("complex needs exactly one differential per adjacent pair of terms");
  FreeComplex c;
  c.base_ = std::move(base);
  c.orientation_ = orientation;
  c.lowest_ = chain_lowest;
  c.ranks_ = std::move(chain_ranks);
  c.differentials_ = std::move(chain_differentials);
  c.validate();
  return c;
}

void FreeComplex::validate() const {
  for (std::size_t t = 0; t < differentials_.size(); ++t) {
    const PolyMatrix& d = differentials_[t];
    require_same_base(d.base(), base_);
    if (d.rows() != ranks_[t] || d.cols() != ranks_[t + 1])
      throw InputError("differential shape does not match the ranks of its terms");
  }
  for (std::size_t t = 0; t + 1 < differentials_.size(); ++t)
    if (!(differentials_[t] * differentials_[t + 1]).is_zero())
      throw InputError("consecutive differentials do not compose to zero");
}

int FreeComplex::lowest() const noexcept {
  return orientation_ == Orientation::Chain ? chain_lowest() : -chain_highest();
}

int FreeComplex::highest() const noexcept {
  return orientation_ == Orientation::Chain ? chain_highest() : -chain_lowest();
}

std::size_t FreeComplex::chain_rank(int j) const {
  if (j < lowest_ || j > chain_highest()) return 0;
  return ranks_[static_cast<std::size_t>(j - lowest_)];
}

PolyMatrix FreeComplex::chain_differential(int j) const {
  if (j > lowest_ && j <= chain_highest()) return differentials_[static_cast<std::size_t>(j - lowest_ - 1)];
  return PolyMatrix(base_, chain_rank(j - 1), chain_rank(j));
}

std::size_t FreeComplex::rank(int i) const { return chain_rank(to_chain(i)); }
PolyMatrix FreeComplex::differential(int i) const { return chain_differential(to_chain(i)); }

std::vector<std::size_t> FreeComplex::ranks() const {
  if (orientation_ == Orientation::Chain) return ranks_;
  return {ranks_.rbegin(), ranks_.rend()};
}

std::vector<PolyMatrix> FreeComplex::differentials() const {
  if (orientation_ == Orientation::Chain) return differentials_;
  return {differentials_.rbegin(), differentials_.rend()};
}

FreeComplex FreeComplex::reoriented(Orientation orientation) const {
  FreeComplex c = *this;
  c.orientation_ = orientation;
  return c;
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(FreeComplex source, FreeComplex target, int lowest, std::vector<PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.orientation() != target_.orientation())
    throw InputError("chain map between complexes of different orientation");
  require_same_base(source_.base(), target_.base());
  const bool chain = source_.orientation() == Orientation::Chain;
  for (std::size_t t = 0; t < components.size(); ++t) {
    int i = lowest + static_cast<int>(t);
    int j = chain ? i : -i;
    PolyMatrix& f = components[t];
    require_same_base(f.base(), source_.base());
    if (f.rows() != target_.chain_rank(j) || f.cols() != source_.chain_rank(j))
      throw InputError("chain map component has the wrong shape");
    if (!f.is_zero()) chain_components_.emplace_back(j, std::move(f));
  }
  std::sort(chain_components_.begin(), chain_components_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t t = 1; t < chain_components_.size(); ++t)
    if (chain_components_[t].first == chain_components_[t - 1].first)
      throw InputError("chain map has two components in one degree");

  int lo = std::min(source_.chain_lowest(), target_.chain_lowest());
  int hi = std::max(source_.chain_highest(), target_.chain_highest());
  for (int j = lo; j <= hi + 1; ++j) {
    PolyMatrix lhs = target_.chain_differential(j) * chain_component(j);
    PolyMatrix rhs = chain_component(j - 1) * source_.chain_differential(j);
    if (!(lhs == rhs)) throw InputError("chain map does not commute with the differentials");
  }
}

ChainMap ChainMap::identity(const FreeComplex& c) {
  std::vector<PolyMatrix> comps;
  for (int i = c.lowest(); i <= c.highest(); ++i) comps.push_back(PolyMatrix::identity(c.base(), c.rank(i)));
  return ChainMap(c, c, c.lowest(), std::move(comps));
}

ChainMap ChainMap::zero(const FreeComplex& source, const FreeComplex& target) {
  return ChainMap(source, target, 0, {});
}

PolyMatrix ChainMap::chain_component(int j) const {
  for (const auto& [deg, f] : chain_components_)
    if (deg == j) return f;
  return PolyMatrix(source_.base(), target_.chain_rank(j), source_.chain_rank(j));
}

PolyMatrix ChainMap::component(int i) const {
  return chain_component(source_.orientation() == Orientation::Chain ? i : -i);
}

// ---------------------------------------------------------------------------
// Expected ranks and Fitting ideals

namespace {

int chain_chi(const FreeComplex& c, int j) {
  int total = 0;
  for (int m = c.chain_lowest(); m <= j - 1; ++m)
    total += sign(j - m - 1) * static_cast<int>(c.chain_rank(m));
  return total;
}

void require_cochain(const FreeComplex& c) {
  if (c.orientation() != Orientation::Cochain)
    throw InputError("underline invariants are defined for cochain complexes");
}

}  // namespace

int chi(const FreeComplex& c, int i) {
  return chain_chi(c, c.orientation() == Orientation::Chain ? i : -i);
}

Ideal fitting_ideal(const FreeComplex& c, int i, int k) {
  return minors_ideal(c.differential(i), chi(c, i) - k);
}

int underline_chi(const FreeComplex& c, int i) {
  require_cochain(c);
  int total = 0;
  for (int j = c.lowest(); j <= i; ++j) total += sign(i - j) * static_cast<int>(c.rank(j));
  return total;
}

Ideal underline_fitting_ideal(const FreeComplex& c, int i, int k) {
  return minors_ideal(c.differential(i), underline_chi(c, i) - k);
}

int euler_characteristic(const FreeComplex& c) {
  int total = 0;
  for (int j = c.chain_lowest(); j <= c.chain_highest(); ++j) total += sign(j) * static_cast<int>(c.chain_rank(j));
  return total;
}

// ---------------------------------------------------------------------------
// Padding and cones

FreeComplex pad_trivial(const FreeComplex& c, int position, std::size_t rank) {
  if (rank == 0) return c;
  // Identity between chain degrees p and p-1.
  const int p = c.orientation() == Orientation::Chain ? position : -position;
  const int lo = std::min(c.chain_lowest(), p - 1);
  const int hi = std::max(c.chain_highest(), p);
  const QuotientPtr& base = c.base();
  std::vector<std::size_t> ranks;
  for (int j = lo; j <= hi; ++j) ranks.push_back(c.chain_rank(j) + ((j == p || j == p - 1) ? rank : 0));
  std::vector<PolyMatrix> diffs;
  for (int j = lo + 1; j <= hi; ++j) {
    PolyMatrix d = c.chain_differential(j);
    if (j == p) d = direct_sum(d, PolyMatrix::identity(base, rank));
    else if (j == p + 1) d = with_zero_rows(d, rank);
    else if (j == p - 1) d = with_zero_cols(d, rank);
    diffs.push_back(std::move(d));
  }
  return FreeComplex::from_chain(base, c.orientation(), lo, std::move(ranks), std::move(diffs));
}

ChainMap padding_inclusion(const FreeComplex& c, int position, std::size_t rank) {
  FreeComplex padded = pad_trivial(c, position, rank);
  std::vector<PolyMatrix> comps;
  for (int i = c.lowest(); i <= c.highest(); ++i) {
    PolyMatrix top = PolyMatrix::identity(c.base(), c.rank(i));
    comps.push_back(with_zero_rows(top, padded.rank(i) - c.rank(i)));
  }
  return ChainMap(c, std::move(padded), c.lowest(), std::move(comps));
}

FreeComplex mapping_cone(const ChainMap& f) {
  const FreeComplex& F = f.source();
  const FreeComplex& G = f.target();
  const QuotientPtr& base = F.base();
  const int lo = std::min(F.chain_lowest() + 1, G.chain_lowest());
  const int hi = std::max(F.chain_highest() + 1, G.chain_highest());
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(F.chain_rank(n - 1) + G.chain_rank(n));
  std::vector<PolyMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    PolyMatrix top = hstack(-F.chain_differential(n - 1), PolyMatrix(base, F.chain_rank(n - 2), G.chain_rank(n)));
    PolyMatrix bottom = hstack(f.chain_component(n - 1), G.chain_differential(n));
    diffs.push_back(vstack(top, bottom));
  }
  return FreeComplex::from_chain(base, F.orientation(), lo, std::move(ranks), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Exactness

namespace {

bool chain_exact_at(const FreeComplex& c, int j) {
  if (c.chain_rank(j) == 0) return true;
  PolyMatrix kernel = syzygies(c.chain_differential(j));
  if (kernel.cols() == 0) return true;
  SubmoduleBasis image = SubmoduleBasis::column_span(c.chain_differential(j + 1));
  for (std::size_t col = 0; col < kernel.cols(); ++col)
    if (!image.contains(kernel.column(col))) return false;
  return true;
}

}  // namespace

bool is_exact_at(const FreeComplex& c, int i) {
  return chain_exact_at(c, c.orientation() == Orientation::Chain ? i : -i);
}

bool is_exact(const FreeComplex& c) {
  for (int j = c.chain_lowest(); j <= c.chain_highest(); ++j)
    if (!chain_exact_at(c, j)) return false;
  return true;
}

bool is_quasi_iso(const ChainMap& f) { return is_exact(mapping_cone(f)); }

}  // namespace hfitt
