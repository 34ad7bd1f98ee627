#include "hfitt/minors.hpp"

#include <functional>
#include <unordered_map>

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {

/// Calls visit(subset) for every size-k subset of {0..n-1} in lexicographic
/// order; stops when visit returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t mask_of(const std::vector<std::size_t>& cols) {
  std::uint64_t m = 0;
  for (auto c : cols) m |= std::uint64_t{1} << c;
  return m;
}

/// Minors of the rows `rows` against every column subset of matching size,
/// in lexicographic column order. Expansion along the last row with memo
/// tables keyed on column bitmasks.
void minors_for_rows(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::function<bool(Polynomial)>& emit, bool& stopped) {
  const QuotientSpec& base = *m.base();
  const std::size_t n = m.cols();
  const std::size_t k = rows.size();
  std::unordered_map<std::uint64_t, Polynomial> prev, cur;
  prev.emplace(0, base.one());
  for (std::size_t level = 1; level <= k; ++level) {
    cur.clear();
    const std::size_t row = rows[level - 1];
    for_each_subset(n, level, [&](const std::vector<std::size_t>& cols) {
      Polynomial acc = base.zero();
      std::uint64_t full = mask_of(cols);
      for (std::size_t t = 0; t < level; ++t) {
        const Polynomial& entry = m(row, cols[t]);
        if (entry.is_zero()) continue;
        auto it = prev.find(full & ~(std::uint64_t{1} << cols[t]));
        if (it == prev.end() || it->second.is_zero()) continue;
        Polynomial term = entry * it->second;
        // Sign (-1)^(level + t + 1) for 0-based t in the expansion along row `level`.
        if ((level + t + 1) % 2 == 1) acc -= term;
        else acc += term;
      }
      cur.emplace(full, base.reduce(acc));
      return true;
    });
    std::swap(prev, cur);
  }
  for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
    if (!emit(prev.at(mask_of(cols)))) {
      stopped = true;
      return false;
    }
    return true;
  });
}

void visit_minors(const PolyMatrix& m, std::size_t k, const std::function<bool(Polynomial)>& emit) {
  if (m.cols() > 64) throw InputError("minors limited to matrices with at most 64 columns");
  bool stopped = false;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    minors_for_rows(m, rows, emit, stopped);
    return !stopped;
  });
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  if (m.rows() == 0) return m.base()->one();
  Polynomial det = m.base()->zero();
  visit_minors(m, m.rows(), [&](Polynomial p) {
    det = std::move(p);
    return false;
  });
  return det;
}

std::vector<Polynomial> minors(const PolyMatrix& m, int k) {
  if (k <= 0) return {m.base()->one()};
  std::vector<Polynomial> out;
  if (static_cast<std::size_t>(k) > std::min(m.rows(), m.cols())) return out;
  visit_minors(m, static_cast<std::size_t>(k), [&](Polynomial p) {
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

Ideal minors_ideal(const PolyMatrix& m, int k) {
  if (k <= 0) return Ideal::unit(m.base());
  if (static_cast<std::size_t>(k) > std::min(m.rows(), m.cols())) return Ideal::zero(m.base());
  std::vector<Polynomial> gens;
  bool unit = false;
  visit_minors(m, static_cast<std::size_t>(k), [&](Polynomial p) {
    if (p.is_zero()) return true;
    if (p.is_constant()) {
      unit = true;
      return false;
    }
    gens.push_back(p.monic());
    return true;
  });
  if (unit) return Ideal::unit(m.base());
  // Duplicate generators are common (padding, repeated blocks).
  std::vector<Polynomial> unique;
  for (auto& g : gens)
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  return Ideal(m.base(), std::move(unique));
}

// ---------------------------------------------------------------------------
// Ring maps

RingMap::RingMap(RingPtr source, QuotientPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_->variable_count())
    throw InputError("ring map needs one image per source variable");
  if (!(source_->field() == target_->ring()->field()))
    throw RingMismatch("ring map between different coefficient fields");
  for (auto& img : images) {
    if (!same_ring(img.ring(), target_->ring())) throw RingMismatch("ring map image outside the target");
    images_.push_back(target_->reduce(img));
  }
}

RingMap RingMap::identity(const QuotientPtr& base) {
  const RingPtr& ring = base->ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->variable_count(); ++i) images.push_back(Polynomial::variable(ring, i));
  return RingMap(ring, base, std::move(images));
}

RingMap RingMap::inclusion(RingPtr source, QuotientPtr target) {
  std::vector<Polynomial> images;
  for (const auto& name : source->variables()) {
    auto idx = target->ring()->index_of(name);
    if (!idx) throw RingMismatch("target ring lacks variable '" + name + "'");
    images.push_back(Polynomial::variable(target->ring(), *idx));
  }
  return RingMap(std::move(source), std::move(target), std::move(images));
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  if (!same_ring(f.ring(), source_)) throw RingMismatch("ring map applied outside its source");
  const RingPtr& tr = target_->ring();
  const FieldSpec& k = tr->field();
  std::vector<std::vector<Polynomial>> powers(images_.size());
  auto power = [&](std::size_t var, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(tr, 1));
    while (cache.size() <= e) cache.push_back(target_->reduce(cache.back() * images_[var]));
    return cache[e];
  };
  Polynomial result(tr);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(tr, k.one());
    for (std::size_t i = 0; i < images_.size() && !prod.is_zero(); ++i)
      if (t.monomial[i] > 0) prod = target_->reduce(prod * power(i, t.monomial[i]));
    result = add_scaled(result, t.coefficient, prod);
  }
  return target_->reduce(result);
}

PolyMatrix apply_ring_map(const PolyMatrix& m, const RingMap& f) {
  if (!same_ring(m.ring(), f.source())) throw RingMismatch("matrix is not over the map's source");
  std::vector<Polynomial> entries;
  entries.reserve(m.entries().size());
  for (const auto& e : m.entries()) entries.push_back(f(e));
  return PolyMatrix(f.target(), m.rows(), m.cols(), std::move(entries));
}

Ideal extend_ideal(const Ideal& ideal, const RingMap& f) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(f(g));
  for (const auto& r : ideal.base()->basis()) gens.push_back(f(r));
  return Ideal(f.target(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Fiber rank

std::size_t scalar_rank(const FieldSpec& k, std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && k.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Scalar inv = k.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (k.is_zero(rows[r][col])) continue;
      Scalar factor = k.mul(rows[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = k.sub(rows[r][c], k.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

std::size_t fiber_rank(const PolyMatrix& m, const std::vector<Scalar>& point) {
  const RingSpec& ring = *m.ring();
  if (point.size() != ring.variable_count()) throw InputError("point has wrong length");
  for (const auto& rel : m.base()->basis())
    if (!ring.field().is_zero(rel.evaluate(point))) throw InputError("point does not lie on the variety");
  std::vector<std::vector<Scalar>> values(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) values[r][c] = m(r, c).evaluate(point);
  return scalar_rank(ring.field(), std::move(values));
}

}  // namespace hfitt
