#include "hfitt/groebner_core.hpp"

#include <algorithm>

#include "hfitt/errors.hpp"

namespace hfitt {

namespace {
thread_local std::size_t tl_step_budget = 10'000'000;
}

std::size_t step_budget() { return tl_step_budget; }
void set_step_budget(std::size_t steps) { tl_step_budget = steps; }

namespace gb {

int compare_pot(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b,
                MonomialOrder order) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return compare(a, b, order);
}

SVec from_polynomial(const Polynomial& f, std::uint32_t component) {
  SVec v;
  v.reserve(f.term_count());
  for (const auto& t : f.terms()) v.push_back({component, t.monomial, t.coefficient});
  return v;
}

SVec from_column(const std::vector<Polynomial>& column) {
  SVec v;
  for (std::uint32_t c = 0; c < column.size(); ++c)
    for (const auto& t : column[c].terms()) v.push_back({c, t.monomial, t.coefficient});
  return v;
}

Polynomial to_polynomial(const SVec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) {
    if (t.component != 0) throw InvariantError("module element is not an ideal element");
    terms.push_back({t.monomial, t.coefficient});
  }
  return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> to_column(const SVec& v, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.component >= rank) throw InvariantError("module element exceeds rank");
    parts[t.component].push_back({t.monomial, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

namespace {

/// a[a_from..] + cb * mb * b[b_from..], merged in POT order.
SVec combine(const SVec& a, std::size_t a_from, const Monomial* ma, const SVec& b,
             std::size_t b_from, const Scalar& cb, const Monomial& mb, const FieldSpec& k,
             MonomialOrder order) {
  SVec out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  auto a_mono = [&](std::size_t idx) { return ma ? a[idx].monomial * *ma : a[idx].monomial; };
  // Shifted monomials are computed once per visited term.
  Monomial am, bm;
  bool have_a = false, have_b = false;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && !have_a) {
      am = a_mono(i);
      have_a = true;
    }
    if (j < b.size() && !have_b) {
      bm = b[j].monomial * mb;
      have_b = true;
    }
    int cmp;
    if (i >= a.size()) cmp = -1;
    else if (j >= b.size()) cmp = 1;
    else cmp = compare_pot(a[i].component, am, b[j].component, bm, order);
    if (cmp > 0) {
      out.push_back({a[i].component, std::move(am), a[i].coefficient});
      ++i;
      have_a = false;
    } else if (cmp < 0) {
      out.push_back({b[j].component, std::move(bm), k.mul(cb, b[j].coefficient)});
      ++j;
      have_b = false;
    } else {
      Scalar s = k.add(a[i].coefficient, k.mul(cb, b[j].coefficient));
      if (!k.is_zero(s)) out.push_back({a[i].component, std::move(am), std::move(s)});
      ++i;
      ++j;
      have_a = have_b = false;
    }
  }
  return out;
}

}  // namespace

Builder::Builder(const RingSpec& ring, std::size_t rank) : ring_(&ring), ideal_case_(rank <= 1) {}

const Builder::Element* Builder::find_divisor(std::uint32_t component, const Monomial& m,
                                              std::size_t exclude) const {
  for (std::size_t idx : active_) {
    if (idx == exclude) continue;
    const VTerm& l = lead(idx);
    if (l.component == component && l.monomial.divides(m)) return &elements_[idx];
  }
  return nullptr;
}

SVec Builder::reduce_excluding(SVec f, std::size_t exclude) const {
  const FieldSpec& k = ring_->field();
  const MonomialOrder order = ring_->order();
  SVec result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const VTerm& t = f[pos];
    if (const Element* g = find_divisor(t.component, t.monomial, exclude)) {
      Monomial q = g->vec.front().monomial.cofactor_in(t.monomial);
      // g is monic, so subtracting t.coefficient * q * g cancels t.
      f = combine(f, pos + 1, nullptr, g->vec, 1, k.neg(t.coefficient), q, k, order);
      pos = 0;
    } else {
      result.push_back(std::move(f[pos]));
      ++pos;
    }
  }
  return result;
}

SVec Builder::reduce(SVec v) const { return reduce_excluding(std::move(v), elements_.size()); }

SVec Builder::make_monic(SVec v) const {
  const FieldSpec& k = ring_->field();
  if (v.empty() || k.is_one(v.front().coefficient)) return v;
  Scalar inv = k.inv(v.front().coefficient);
  for (auto& t : v) t.coefficient = k.mul(inv, t.coefficient);
  return v;
}

SVec Builder::spair(const Pair& p) const {
  const FieldSpec& k = ring_->field();
  const SVec& a = elements_[p.i].vec;
  const SVec& b = elements_[p.j].vec;
  Monomial ma = a.front().monomial.cofactor_in(p.lcm);
  Monomial mb = b.front().monomial.cofactor_in(p.lcm);
  return combine(a, 1, &ma, b, 1, k.neg(k.one()), mb, k, ring_->order());
}

bool Builder::insert(SVec v) {
  v = make_monic(reduce(std::move(v)));
  if (v.empty()) return false;
  elements_.push_back({std::move(v), true});
  update(elements_.size() - 1);
  return true;
}

void Builder::adopt(std::vector<SVec> basis) {
  if (!elements_.empty()) throw InvariantError("adopt() on a non-empty builder");
  for (auto& v : basis) {
    if (v.empty()) continue;
    elements_.push_back({make_monic(std::move(v)), true});
    active_.push_back(elements_.size() - 1);
  }
}

void Builder::update(std::size_t h) {
  const VTerm& lh = lead(h);
  struct Candidate {
    Pair pair;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t g : active_) {
    const VTerm& lg = lead(g);
    if (lg.component != lh.component) continue;
    bool coprime = ideal_case_ && lg.monomial.coprime(lh.monomial);
    fresh.push_back({{g, h, lh.component, lg.monomial.lcm(lh.monomial)}, coprime});
  }

  // Chain criterion among the new pairs.
  std::vector<Candidate> kept;
  for (std::size_t idx = 0; idx < fresh.size(); ++idx) {
    const Candidate& c = fresh[idx];
    if (!c.coprime) {
      bool dominated = false;
      for (std::size_t o = idx + 1; o < fresh.size() && !dominated; ++o)
        dominated = fresh[o].pair.lcm.divides(c.pair.lcm);
      for (std::size_t o = 0; o < kept.size() && !dominated; ++o)
        dominated = kept[o].pair.lcm.divides(c.pair.lcm);
      if (dominated) continue;
    }
    kept.push_back(c);
  }

  // Old pairs whose lcm is divisible by the new leading term.
  std::vector<Pair> next;
  next.reserve(pairs_.size() + kept.size());
  for (auto& p : pairs_) {
    if (p.component == lh.component && lh.monomial.divides(p.lcm)) {
      Monomial li = lead(p.i).monomial.lcm(lh.monomial);
      Monomial lj = lead(p.j).monomial.lcm(lh.monomial);
      if (!(li == p.lcm) && !(lj == p.lcm)) continue;
    }
    next.push_back(std::move(p));
  }
  for (auto& c : kept)
    if (!c.coprime) next.push_back(std::move(c.pair));
  pairs_ = std::move(next);

  std::vector<std::size_t> active;
  active.reserve(active_.size() + 1);
  for (std::size_t g : active_) {
    const VTerm& lg = lead(g);
    if (lg.component == lh.component && lh.monomial.divides(lg.monomial)) {
      elements_[g].active = false;
      continue;
    }
    active.push_back(g);
  }
  active.push_back(h);
  active_ = std::move(active);
}

void Builder::complete() {
  const MonomialOrder order = ring_->order();
  const std::size_t budget = step_budget();
  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < pairs_.size(); ++idx) {
      if (compare_pot(pairs_[idx].component, pairs_[idx].lcm, pairs_[best].component,
                      pairs_[best].lcm, order) < 0)
        best = idx;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    if (++steps_ > budget)
      throw ResourceError("Groebner step budget of " + std::to_string(budget) + " exhausted");
    insert(spair(p));
  }
}

std::vector<SVec> Builder::reduced_basis() const {
  std::vector<SVec> out;
  out.reserve(active_.size());
  for (std::size_t idx : active_) out.push_back(make_monic(reduce_excluding(elements_[idx].vec, idx)));
  const MonomialOrder order = ring_->order();
  std::sort(out.begin(), out.end(), [order](const SVec& a, const SVec& b) {
    return compare_pot(a.front().component, a.front().monomial, b.front().component,
                       b.front().monomial, order) > 0;
  });
  return out;
}

std::vector<SVec> groebner(const RingSpec& ring, std::size_t rank, std::vector<SVec> generators) {
  const MonomialOrder order = ring.order();
  std::erase_if(generators, [](const SVec& v) { return v.empty(); });
  // Smallest leading terms first keeps the intermediate bases small.
  std::sort(generators.begin(), generators.end(), [order](const SVec& a, const SVec& b) {
    return compare_pot(a.front().component, a.front().monomial, b.front().component,
                       b.front().monomial, order) < 0;
  });
  Builder builder(ring, rank);
  for (auto& g : generators) builder.insert(std::move(g));
  builder.complete();
  return builder.reduced_basis();
}

}  // namespace gb
}  // namespace hfitt
