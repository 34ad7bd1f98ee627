#include "hfitt/groebner.hpp"

#include <algorithm>
#include <functional>

#include "hfitt/errors.hpp"

namespace hfitt {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(QuotientPtr base, std::vector<Polynomial> generators)
    : base_(std::move(base)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), base_->ring())) throw RingMismatch("ideal generator outside the ring");
    Polynomial r = base_->reduce(g);
    if (!r.is_zero()) generators_.push_back(std::move(r));
  }
}

Ideal Ideal::unit(QuotientPtr base) {
  Polynomial one = base->one();
  return Ideal(std::move(base), {std::move(one)});
}

const Ideal::Cache& Ideal::cache() const {
  std::call_once(cache_->once, [this] {
    std::vector<gb::SVec> gens;
    for (const auto& g : generators_) gens.push_back(gb::from_polynomial(g.monic()));
    for (const auto& r : base_->basis()) gens.push_back(gb::from_polynomial(r));
    auto reduced = gb::groebner(*ring(), 1, std::move(gens));
    for (const auto& v : reduced) cache_->basis.push_back(gb::to_polynomial(v, ring()));
    cache_->reducer = std::make_unique<gb::Builder>(*ring(), 1);
    cache_->reducer->adopt(std::move(reduced));
  });
  return *cache_;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const { return cache().basis; }

bool Ideal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring())) throw RingMismatch("membership test across rings");
  if (f.is_zero()) return true;
  return cache().reducer->reduces_to_zero(gb::from_polynomial(f));
}

bool Ideal::contains(const Ideal& other) const {
  require_same_base(base_, other.base_);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_zero() const { return groebner_basis() == base_->basis(); }

bool Ideal::is_unit() const {
  const auto& b = groebner_basis();
  return b.size() == 1 && b[0].is_constant();
}

int Ideal::krull_dimension() const {
  if (is_unit()) return -1;
  const std::size_t n = ring()->variable_count();
  std::vector<std::vector<bool>> supports;
  for (const auto& g : groebner_basis()) {
    const Monomial& m = g.leading_term().monomial;
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = m[i] != 0;
    supports.push_back(std::move(s));
  }
  // A variable set S is independent when no leading monomial lives in S.
  std::vector<bool> chosen(n, false);
  int best = 0;
  std::function<void(std::size_t, int)> search = [&](std::size_t next, int size) {
    if (size + static_cast<int>(n - next) <= best) return;
    if (next == n) {
      best = size;
      return;
    }
    chosen[next] = true;
    bool ok = std::none_of(supports.begin(), supports.end(), [&](const std::vector<bool>& s) {
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] && !chosen[i]) return false;
      return true;
    });
    if (ok) search(next + 1, size + 1);
    chosen[next] = false;
    search(next + 1, size);
  };
  search(0, 0);
  return best;
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_base(base_, other.base_);
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(base_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same_base(base_, other.base_);
  std::vector<Polynomial> gens;
  for (const auto& a : generators_)
    for (const auto& b : other.generators_) gens.push_back(a * b);
  return Ideal(base_, std::move(gens));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_base(a.base(), b.base());
  return a.groebner_basis() == b.groebner_basis();
}

bool ideal_contains(const Ideal& a, const Ideal& b) { return a.contains(b); }
bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }
bool is_zero_ideal(const Ideal& ideal) { return ideal.is_zero(); }
bool is_unit_ideal(const Ideal& ideal) { return ideal.is_unit(); }
int krull_dimension(const Ideal& ideal) { return ideal.krull_dimension(); }

std::vector<Polynomial> groebner(const std::vector<Polynomial>& generators) {
  if (generators.empty()) return {};
  Ideal ideal(ambient(generators.front().ring()), generators);
  return ideal.groebner_basis();
}

// ---------------------------------------------------------------------------
// Submodules

namespace {

/// Preimage generators of a submodule in R^rank: the columns plus I * e_j.
std::vector<gb::SVec> preimage_generators(const QuotientSpec& base, std::size_t rank,
                                          const std::vector<std::vector<Polynomial>>& columns) {
  std::vector<gb::SVec> gens;
  for (const auto& col : columns) gens.push_back(gb::from_column(col));
  for (std::size_t j = 0; j < rank; ++j)
    for (const auto& r : base.basis()) gens.push_back(gb::from_polynomial(r, static_cast<std::uint32_t>(j)));
  return gens;
}

}  // namespace

SubmoduleBasis::SubmoduleBasis(QuotientPtr base, std::size_t ambient_rank,
                               std::vector<std::vector<Polynomial>> generators)
    : base_(std::move(base)), rank_(ambient_rank), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.size() != rank_) throw InputError("submodule generator has wrong length");
    for (auto& e : g) e = base_->reduce(e);
    if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    generators_.push_back(std::move(g));
  }
}

SubmoduleBasis SubmoduleBasis::column_span(const PolyMatrix& m) {
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return SubmoduleBasis(m.base(), m.rows(), std::move(cols));
}

const SubmoduleBasis::Cache& SubmoduleBasis::cache() const {
  std::call_once(cache_->once, [this] {
    const RingPtr& ring = base_->ring();
    auto reduced = gb::groebner(*ring, rank_, preimage_generators(*base_, rank_, generators_));
    for (const auto& v : reduced) cache_->basis.push_back(gb::to_column(v, ring, rank_));
    cache_->builder = std::make_unique<gb::Builder>(*ring, rank_);
    cache_->builder->adopt(std::move(reduced));
  });
  return *cache_;
}

const std::vector<std::vector<Polynomial>>& SubmoduleBasis::groebner_basis() const {
  return cache().basis;
}

bool SubmoduleBasis::contains(const std::vector<Polynomial>& v) const {
  if (v.size() != rank_) throw InputError("vector has wrong length for submodule");
  for (const auto& e : v)
    if (!same_ring(e.ring(), base_->ring())) throw RingMismatch("vector outside the ring");
  return cache().builder->reduces_to_zero(gb::from_column(v));
}

std::vector<std::vector<Polynomial>> groebner(const SubmoduleBasis& module) {
  return module.groebner_basis();
}

// ---------------------------------------------------------------------------
// Syzygies

PolyMatrix syzygies(const PolyMatrix& m) {
  const QuotientPtr& base = m.base();
  const RingPtr& ring = base->ring();
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (c == 0) return PolyMatrix(base, 0, 0);
  if (r == 0) return PolyMatrix::identity(base, c);

  // Elimination: (m_j, e_j) in R^(r+c) plus (g e_i, 0) for relations g. With
  // position-over-term and the first r positions dominant, basis elements
  // leading in positions >= r generate {(0, v) : M v = 0 mod I}.
  std::vector<gb::SVec> gens;
  const Monomial unit(ring->variable_count());
  for (std::size_t j = 0; j < c; ++j) {
    gb::SVec v = gb::from_column(m.column(j));
    v.push_back({static_cast<std::uint32_t>(r + j), unit, ring->field().one()});
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : base->basis()) gens.push_back(gb::from_polynomial(g, static_cast<std::uint32_t>(i)));

  std::vector<std::vector<Polynomial>> candidates;
  for (auto& v : gb::groebner(*ring, r + c, std::move(gens))) {
    if (v.front().component < r) continue;
    for (auto& t : v) t.component -= static_cast<std::uint32_t>(r);
    auto col = gb::to_column(v, ring, c);
    bool zero = true;
    for (auto& e : col) {
      e = base->reduce(e);
      zero = zero && e.is_zero();
    }
    if (!zero) candidates.push_back(std::move(col));
  }

  // Greedy pruning: keep a candidate only if it is not already generated.
  auto degree = [](const std::vector<Polynomial>& col) {
    std::uint32_t d = 0;
    for (const auto& e : col)
      if (!e.is_zero()) d = std::max(d, e.total_degree());
    return d;
  };
  const MonomialOrder order = ring->order();
  std::vector<std::pair<std::uint32_t, gb::SVec>> keyed;
  for (const auto& col : candidates) keyed.emplace_back(degree(col), gb::from_column(col));
  std::stable_sort(keyed.begin(), keyed.end(), [order](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return gb::compare_pot(a.second.front().component, a.second.front().monomial,
                           b.second.front().component, b.second.front().monomial, order) < 0;
  });
  gb::Builder span(*ring, c);
  for (std::size_t j = 0; j < c; ++j)
    for (const auto& g : base->basis()) span.insert(gb::from_polynomial(g, static_cast<std::uint32_t>(j)));
  span.complete();
  std::vector<std::vector<Polynomial>> kept;
  for (auto& [deg, v] : keyed) {
    if (span.reduces_to_zero(v)) continue;
    kept.push_back(gb::to_column(v, ring, c));
    span.add(std::move(v));
  }
  return PolyMatrix::from_columns(base, c, kept);
}

}  // namespace hfitt
