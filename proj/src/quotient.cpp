#include "hfitt/quotient.hpp"

#include "hfitt/errors.hpp"
#include "hfitt/groebner_core.hpp"

namespace hfitt {

QuotientSpec::QuotientSpec(RingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)), reducer_(*ring_, 1) {
  std::vector<gb::SVec> gens;
  for (const auto& r : relations_) {
    if (!same_ring(r.ring(), ring_)) throw RingMismatch("relation outside the ambient ring");
    gens.push_back(gb::from_polynomial(r));
  }
  auto reduced = gb::groebner(*ring_, 1, std::move(gens));
  for (const auto& v : reduced) basis_.push_back(gb::to_polynomial(v, ring_));
  reducer_.adopt(std::move(reduced));
  if (basis_.size() == 1 && basis_[0].is_constant())
    throw InputError("quotient by the unit ideal");
}

Polynomial QuotientSpec::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("polynomial outside the ambient ring");
  if (basis_.empty() || f.is_zero()) return f;
  return gb::to_polynomial(reducer_.reduce(gb::from_polynomial(f)), ring_);
}

Polynomial QuotientSpec::parse(std::string_view text) const {
  return reduce(parse_polynomial(text, ring_));
}

QuotientPtr make_quotient(RingPtr ring, std::vector<Polynomial> relations) {
  return std::make_shared<const QuotientSpec>(std::move(ring), std::move(relations));
}

QuotientPtr ambient(RingPtr ring) { return make_quotient(std::move(ring)); }

bool same_base(const QuotientPtr& a, const QuotientPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_ring(a->ring(), b->ring()) && a->basis() == b->basis();
}

void require_same_base(const QuotientPtr& a, const QuotientPtr& b) {
  if (!same_base(a, b)) throw RingMismatch("operands over different quotient rings");
}

Polynomial normal_form_mod(const Polynomial& f, const QuotientSpec& q) { return q.reduce(f); }

}  // namespace hfitt
